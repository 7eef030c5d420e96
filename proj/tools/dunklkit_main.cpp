// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
//
// Command-line front end: evaluates kernels and transforms over grids, runs
// the monotonicity/positive-definiteness checkers, and emits CSV or JSON
// reports with a reproducibility header.
//
// Exit codes: 0 = success / verdict pass, 2 = a mathematical check failed,
// 1 = operational error (bad arguments, parse errors, I/O).

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dunklkit/kummer.hpp"
#include "dunklkit/reports_json.hpp"
#include "dunklkit/spec_parser.hpp"

namespace {

using namespace dunklkit;
using reports::Json;

constexpr const char* kVersion = "0.1.0";

struct GridSpec {
    double lo = 0.0, hi = 0.0;
    int count = 1;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::runtime_error("grid: expected lo:hi:count");
    try {
        g.lo = std::stod(text.substr(0, c1));
        g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::runtime_error("grid: expected lo:hi:count");
    }
    if (g.count < 1)
        throw std::runtime_error("grid: count must be >= 1");
    return g;
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> xs(g.count);
    if (g.count == 1) {
        xs[0] = g.lo;
        return xs;
    }
    for (int i = 0; i < g.count; ++i)
        xs[i] = g.lo + (g.hi - g.lo) * i / (g.count - 1.0);
    return xs;
}

std::vector<double> parse_points(const std::string& text) {
    std::vector<double> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        pts.push_back(std::stod(item));
    if (pts.empty())
        throw std::runtime_error("points: expected a comma-separated list");
    return pts;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// RFC 4180 table: every record has the same arity, CRLF line endings.
// Reproducibility metadata is carried as leading records tagged "meta".
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> meta;

    std::string render() const {
        const std::size_t width = std::max<std::size_t>(header.size(), 3);
        std::string out;
        auto emit = [&](std::vector<std::string> fields) {
            fields.resize(width);
            for (std::size_t i = 0; i < width; ++i) {
                if (i)
                    out += ',';
                out += csv_quote(fields[i]);
            }
            out += "\r\n";
        };
        for (const auto& [k, v] : meta)
            emit({"meta", k, v});
        emit(header);
        for (const auto& r : rows)
            emit(r);
        return out;
    }
};

std::string num(double v) { return cli::format_number(v); }

struct Output {
    std::string format = "json";
    std::string path;  // empty = stdout
    bool no_timestamp = false;
    Json config = Json::object();

    std::string timestamp() const {
        const auto now = std::chrono::system_clock::now();
        return std::to_string(std::chrono::duration_cast<std::chrono::seconds>(
                                  now.time_since_epoch())
                                  .count());
    }

    void write_json(const Json& result) const {
        Json j;
        j["tool"] = "dunklkit";
        j["version"] = kVersion;
        if (!no_timestamp)
            j["timestamp"] = timestamp();
        j["config"] = config;
        j["result"] = result;
        emit(j.dump(2) + "\n");
    }

    void write_csv(CsvTable table) const {
        std::vector<std::pair<std::string, std::string>> meta;
        meta.emplace_back("tool", "dunklkit");
        meta.emplace_back("version", kVersion);
        if (!no_timestamp)
            meta.emplace_back("timestamp", timestamp());
        for (const auto& [key, value] : config.items())
            meta.emplace_back("config." + key,
                              value.is_string() ? value.get<std::string>()
                                                : value.dump());
        table.meta.insert(table.meta.begin(), meta.begin(), meta.end());
        emit(table.render());
    }

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

cli::ParsedSpec parse_function_spec(const std::string& text, double k) {
    cli::ParsedSpec spec = cli::parse_spec(text);
    if (spec.kind != cli::ParsedSpec::Kind::function)
        throw std::runtime_error("spec '" + text +
                                 "' is a measure; a function spec is required");
    if (spec.declared_k && std::fabs(*spec.declared_k - k) > 1e-12)
        throw std::runtime_error("spec declares k=" + num(*spec.declared_k) +
                                 " but --k=" + num(k));
    return spec;
}

MeasureSpec parse_measure_spec(const std::string& text) {
    cli::ParsedSpec spec = cli::parse_spec(text);
    if (spec.kind != cli::ParsedSpec::Kind::measure)
        throw std::runtime_error("spec '" + text + "' is not a measure");
    return spec.measure;
}

int run_eval_kernel(const Output& out, double k, double y, const GridSpec& grid) {
    const auto xs = grid_points(grid);
    Json result;
    result["x"] = xs;
    Json kv = Json::array(), re = Json::array(), im = Json::array();
    CsvTable table;
    table.header = {"x", "kernel", "osc_re", "osc_im"};
    for (double x : xs) {
        const double v = core::dunkl_kernel(k, x, y);
        const std::complex<double> o = core::dunkl_kernel_osc(k, x, y);
        kv.push_back(v);
        re.push_back(o.real());
        im.push_back(o.imag());
        table.rows.push_back({num(x), num(v), num(o.real()), num(o.imag())});
    }
    result["kernel"] = kv;
    result["osc_re"] = re;
    result["osc_im"] = im;
    if (out.format == "csv")
        out.write_csv(table);
    else
        out.write_json(result);
    return 0;
}

int run_transform(const Output& out, double k, const std::string& spec_text,
                  const GridSpec& grid, const quad::QuadratureConfig& qcfg) {
    const cli::ParsedSpec spec = parse_function_spec(spec_text, k);
    const transform::TransformConfig tcfg =
        transform::TransformConfig::make(k, qcfg);
    const auto xs = grid_points(grid);
    Json result;
    result["xi"] = xs;
    Json re = Json::array(), im = Json::array();
    CsvTable table;
    table.header = {"xi", "re", "im"};
    for (double xi : xs) {
        const std::complex<double> v =
            transform::dunkl_transform(tcfg, spec.function, xi);
        re.push_back(v.real());
        im.push_back(v.imag());
        table.rows.push_back({num(xi), num(v.real()), num(v.imag())});
    }
    result["re"] = re;
    result["im"] = im;
    if (out.format == "csv")
        out.write_csv(table);
    else
        out.write_json(result);
    return 0;
}

int run_translate(const Output& out, double k, const std::string& spec_text,
                  double y, const GridSpec& grid,
                  const quad::QuadratureConfig& qcfg) {
    const cli::ParsedSpec spec = parse_function_spec(spec_text, k);
    const transform::TransformConfig tcfg =
        transform::TransformConfig::make(k, qcfg);
    const auto xs = grid_points(grid);
    Json result;
    result["x"] = xs;
    Json re = Json::array(), im = Json::array();
    CsvTable table;
    table.header = {"x", "re", "im"};
    for (double x : xs) {
        const std::complex<double> v =
            transform::dunkl_translate(tcfg, spec.function, y, x);
        re.push_back(v.real());
        im.push_back(v.imag());
        table.rows.push_back({num(x), num(v.real()), num(v.imag())});
    }
    result["re"] = re;
    result["im"] = im;
    if (out.format == "csv")
        out.write_csv(table);
    else
        out.write_json(result);
    return 0;
}

int run_check_cm(const Output& out, double k, const std::string& spec_text,
                 double sigma, int orders, int grid_size,
                 const quad::QuadratureConfig& qcfg) {
    const cli::ParsedSpec spec = cli::parse_spec(spec_text);
    FunctionSpec phi;
    if (spec.kind == cli::ParsedSpec::Kind::function) {
        if (spec.declared_k && std::fabs(*spec.declared_k - k) > 1e-12)
            throw std::runtime_error("spec declares k=" + num(*spec.declared_k) +
                                     " but --k=" + num(k));
        phi = spec.function;
    } else {
        phi = make_laplace_spec(spec.measure);
    }
    const mono::CMReport rep =
        mono::check_dunkl_cm(k, phi, sigma, orders, grid_size, qcfg);
    if (out.format == "csv") {
        CsvTable table;
        table.header = {"order", "min_value"};
        for (int n = 0; n <= rep.orders_checked; ++n)
            table.rows.push_back({std::to_string(n), num(rep.per_order_min[n])});
        table.meta.emplace_back("verdict", rep.pass ? "pass" : "fail");
        if (rep.first_violation)
            table.meta.emplace_back(
                "first_violation",
                "order=" + std::to_string(rep.first_violation->order) +
                    " x=" + num(rep.first_violation->x) +
                    " value=" + num(rep.first_violation->value));
        out.write_csv(table);
    } else {
        out.write_json(reports::to_json(rep));
    }
    return rep.pass ? 0 : 2;
}

int run_check_pd(const Output& out, double k, const std::string& spec_text,
                 const std::vector<double>& points,
                 const quad::QuadratureConfig& qcfg) {
    const cli::ParsedSpec spec = cli::parse_spec(spec_text);
    FunctionSpec phi;
    if (spec.kind == cli::ParsedSpec::Kind::function)
        phi = spec.function;
    else
        phi = make_radial_laplace_spec(spec.measure);
    const mono::GramReport rep = mono::check_dunkl_pd(k, phi, points, qcfg);
    if (out.format == "csv") {
        CsvTable table;
        table.header = {"j", "l", "gram_re", "gram_im"};
        const int n = (int)points.size();
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                table.rows.push_back({std::to_string(j), std::to_string(l),
                                      num(rep.gram[j * n + l].real()),
                                      num(rep.gram[j * n + l].imag())});
        table.meta.emplace_back("min_eigenvalue", num(rep.min_eigenvalue));
        table.meta.emplace_back("hermitian_defect", num(rep.hermitian_defect));
        table.meta.emplace_back("verdict", rep.psd ? "psd" : "indefinite");
        out.write_csv(table);
    } else {
        out.write_json(reports::to_json(rep));
    }
    return rep.psd ? 0 : 2;
}

int run_schoenberg(const Output& out, double k, const std::string& measure_text,
                   double sigma, int orders, const std::vector<double>& points,
                   const quad::QuadratureConfig& qcfg) {
    const MeasureSpec mu = parse_measure_spec(measure_text);
    const mono::SchoenbergReport rep =
        mono::check_schoenberg(k, mu, sigma, orders, points, qcfg);
    if (out.format == "csv") {
        CsvTable table;
        table.header = {"order", "cm_min_value"};
        for (int n = 0; n <= rep.cm.orders_checked; ++n)
            table.rows.push_back(
                {std::to_string(n), num(rep.cm.per_order_min[n])});
        table.meta.emplace_back("cm_verdict", rep.cm.pass ? "pass" : "fail");
        table.meta.emplace_back("pd_min_eigenvalue", num(rep.pd.min_eigenvalue));
        table.meta.emplace_back("pd_verdict", rep.pd.psd ? "psd" : "indefinite");
        table.meta.emplace_back("verdict", rep.pass ? "pass" : "fail");
        out.write_csv(table);
    } else {
        out.write_json(reports::to_json(rep));
    }
    return rep.pass ? 0 : 2;
}

int run_sonine(const Output& out, double k, double p, const GridSpec& grid,
               const quad::QuadratureConfig& qcfg) {
    const auto xs = grid_points(grid);
    Json result;
    Json rows = Json::array();
    CsvTable table;
    table.header = {"x", "closed", "quadrature", "rel_err"};
    bool ok = true;
    for (double x : xs) {
        const double closed = kummer::sonine_closed(k, p, x);
        const double viaq = kummer::sonine_quadrature(k, p, x, qcfg);
        const double rel =
            std::fabs(viaq - closed) / std::max(1e-30, std::fabs(closed));
        ok = ok && rel <= 1e-8;
        rows.push_back(Json{{"x", x},
                            {"closed", closed},
                            {"quadrature", viaq},
                            {"rel_err", rel}});
        table.rows.push_back({num(x), num(closed), num(viaq), num(rel)});
    }
    result["rows"] = rows;
    result["verdict"] = ok ? "pass" : "fail";
    table.meta.emplace_back("verdict", ok ? "pass" : "fail");
    if (out.format == "csv")
        out.write_csv(table);
    else
        out.write_json(result);
    return ok ? 0 : 2;
}

int run_theorem6(const Output& out, double k, double p, const GridSpec& grid,
                 const quad::QuadratureConfig& qcfg) {
    const kummer::AdjudicationRecord rec =
        kummer::adjudicate_theorem6({k}, {p}, grid_points(grid), qcfg);
    if (out.format == "csv") {
        CsvTable table;
        table.header = {"closed_form", "rho", "sign", "max_rel_err"};
        for (const auto& c : rec.combos)
            table.rows.push_back({c.uses_psi ? "psi" : "phi",
                                  c.rho_is_2k ? "2k" : "2k+1",
                                  std::to_string(c.sign), num(c.max_rel_err)});
        table.meta.emplace_back("matched_combo",
                                std::to_string(rec.matched_combo));
        table.meta.emplace_back("unique_match",
                                rec.unique_match ? "true" : "false");
        table.meta.emplace_back("cm_pass", rec.cm_pass ? "true" : "false");
        out.write_csv(table);
    } else {
        out.write_json(reports::to_json(rec));
    }
    return rec.unique_match && rec.cm_pass ? 0 : 2;
}

int run_convexity(const Output& out, double k, const std::string& spec_text,
                  const GridSpec& grid, const quad::QuadratureConfig& qcfg) {
    const cli::ParsedSpec spec = parse_function_spec(spec_text, k);
    const mono::ConvexityReport rep = mono::check_convexity_theorem(
        k, spec.function, grid.hi, std::max(grid.count, 5), qcfg);
    if (out.format == "csv") {
        CsvTable table;
        table.header = {"x", "phi_k"};
        for (std::size_t i = 0; i < rep.grid.size(); ++i)
            table.rows.push_back({num(rep.grid[i]), num(rep.phi_k_values[i])});
        table.meta.emplace_back(
            "verdict",
            rep.verdict == mono::ConvexityReport::Verdict::silent
                ? "theorem silent"
                : (rep.verdict == mono::ConvexityReport::Verdict::pass ? "pass"
                                                                       : "fail"));
        out.write_csv(table);
    } else {
        out.write_json(reports::to_json(rep));
    }
    return rep.verdict == mono::ConvexityReport::Verdict::fail ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-one Dunkl harmonic analysis toolkit"};
    app.require_subcommand(1);

    Output out;
    quad::QuadratureConfig qcfg;
    if (const char* env = std::getenv("DUNKLKIT_QUAD_TOL"))
        qcfg.abs_tol = std::atof(env);
    double abs_tol_flag = qcfg.abs_tol;

    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", out.path, "output path (default stdout)");
    app.add_flag("--no-timestamp", out.no_timestamp,
                 "omit the timestamp from reports");
    app.add_option("--abs-tol", abs_tol_flag,
                   "quadrature absolute tolerance (also DUNKLKIT_QUAD_TOL)");

    double k = 0.0, y = 0.0, p = 1.0, sigma = 1.0;
    double sb_sigma = 3.0;
    int orders = 4, sb_orders = 8, grid_size = 41;
    std::string spec_text, measure_text, grid_text = "-1:1:11", points_text;

    CLI::App* ek = app.add_subcommand("eval-kernel", "kernel values on a grid")->fallthrough();
    ek->add_option("--k", k)->required();
    ek->add_option("--y", y)->required();
    ek->add_option("--grid", grid_text);

    CLI::App* tr = app.add_subcommand("transform", "forward transform on a grid")->fallthrough();
    tr->add_option("--k", k)->required();
    tr->add_option("--spec", spec_text)->required();
    tr->add_option("--grid", grid_text);

    CLI::App* tl = app.add_subcommand("translate", "translation on a grid")->fallthrough();
    tl->add_option("--k", k)->required();
    tl->add_option("--spec", spec_text)->required();
    tl->add_option("--y", y)->required();
    tl->add_option("--grid", grid_text);

    CLI::App* cm = app.add_subcommand("check-cm", "sign-alternating operator test")->fallthrough();
    cm->add_option("--k", k)->required();
    cm->add_option("--spec", spec_text)->required();
    cm->add_option("--sigma", sigma);
    cm->add_option("--orders", orders);
    cm->add_option("--grid-size", grid_size);

    CLI::App* pd = app.add_subcommand("check-pd", "translation Gram PSD test")->fallthrough();
    pd->add_option("--k", k)->required();
    pd->add_option("--spec", spec_text)->required();
    pd->add_option("--points", points_text)->required();

    CLI::App* sb = app.add_subcommand("schoenberg", "joint CM/PD harness")->fallthrough();
    sb->add_option("--k", k)->required();
    sb->add_option("--measure", measure_text)->required();
    sb->add_option("--sigma", sb_sigma);
    sb->add_option("--orders", sb_orders);
    sb->add_option("--points", points_text)->required();

    CLI::App* so = app.add_subcommand("sonine", "closed form vs quadrature")->fallthrough();
    so->add_option("--k", k)->required();
    so->add_option("--p", p)->required();
    so->add_option("--grid", grid_text);

    CLI::App* t6 = app.add_subcommand("theorem6", "closed-form adjudication")->fallthrough();
    t6->add_option("--k", k)->required();
    t6->add_option("--p", p)->required();
    t6->add_option("--grid", grid_text);

    CLI::App* cx = app.add_subcommand("convexity", "hypothesis-gated convexity check")->fallthrough();
    cx->add_option("--k", k)->required();
    cx->add_option("--spec", spec_text)->required();
    cx->add_option("--grid", grid_text);

    CLI11_PARSE(app, argc, argv);
    qcfg.abs_tol = abs_tol_flag;

    out.config["format"] = out.format;
    out.config["abs_tol"] = qcfg.abs_tol;
    out.config["rel_tol"] = qcfg.rel_tol;
    out.config["legendre_order"] = qcfg.legendre_order;

    try {
        if (ek->parsed()) {
            out.config["subcommand"] = "eval-kernel";
            out.config["k"] = k;
            out.config["y"] = y;
            out.config["grid"] = grid_text;
            return run_eval_kernel(out, k, y, parse_grid(grid_text));
        }
        if (tr->parsed()) {
            out.config["subcommand"] = "transform";
            out.config["k"] = k;
            out.config["spec"] = spec_text;
            out.config["grid"] = grid_text;
            return run_transform(out, k, spec_text, parse_grid(grid_text), qcfg);
        }
        if (tl->parsed()) {
            out.config["subcommand"] = "translate";
            out.config["k"] = k;
            out.config["spec"] = spec_text;
            out.config["y"] = y;
            out.config["grid"] = grid_text;
            return run_translate(out, k, spec_text, y, parse_grid(grid_text), qcfg);
        }
        if (cm->parsed()) {
            out.config["subcommand"] = "check-cm";
            out.config["k"] = k;
            out.config["spec"] = spec_text;
            out.config["sigma"] = sigma;
            out.config["orders"] = orders;
            out.config["grid_size"] = grid_size;
            return run_check_cm(out, k, spec_text, sigma, orders, grid_size, qcfg);
        }
        if (pd->parsed()) {
            out.config["subcommand"] = "check-pd";
            out.config["k"] = k;
            out.config["spec"] = spec_text;
            out.config["points"] = points_text;
            return run_check_pd(out, k, spec_text, parse_points(points_text), qcfg);
        }
        if (sb->parsed()) {
            out.config["subcommand"] = "schoenberg";
            out.config["k"] = k;
            out.config["measure"] = measure_text;
            out.config["sigma"] = sb_sigma;
            out.config["orders"] = sb_orders;
            out.config["points"] = points_text;
            return run_schoenberg(out, k, measure_text, sb_sigma, sb_orders,
                                  parse_points(points_text), qcfg);
        }
        if (so->parsed()) {
            out.config["subcommand"] = "sonine";
            out.config["k"] = k;
            out.config["p"] = p;
            out.config["grid"] = grid_text;
            return run_sonine(out, k, p, parse_grid(grid_text), qcfg);
        }
        if (t6->parsed()) {
            out.config["subcommand"] = "theorem6";
            out.config["k"] = k;
            out.config["p"] = p;
            out.config["grid"] = grid_text;
            return run_theorem6(out, k, p, parse_grid(grid_text), qcfg);
        }
        if (cx->parsed()) {
            out.config["subcommand"] = "convexity";
            out.config["k"] = k;
            out.config["spec"] = spec_text;
            out.config["grid"] = grid_text;
            return run_convexity(out, k, spec_text, parse_grid(grid_text), qcfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "dunklkit: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "dunklkit: no subcommand\n";
    return 1;
}
