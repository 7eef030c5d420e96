// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace dunklkit::cli {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw SpecSyntaxError("syntax error at offset " + std::to_string(pos) +
                                  ": expected " + expected,
                              pos, expected);
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(what);
        ++pos;
    }
    std::string ident() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '-' ||
                text[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("identifier");
        return text.substr(start, pos - start);
    }
    double number() {
        skip_ws();
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            fail("number");
        pos += (std::size_t)(end - begin);
        return v;
    }
};

struct Value {
    bool is_number = true;
    double number = 0.0;
    std::vector<std::pair<double, double>> pairs;
};

Value parse_value(Cursor& c) {
    Value v;
    if (c.peek_is('[')) {
        v.is_number = false;
        c.expect('[', "'['");
        for (;;) {
            c.expect('(', "'('");
            const double a = c.number();
            c.expect(',', "','");
            const double b = c.number();
            c.expect(')', "')'");
            v.pairs.emplace_back(a, b);
            if (c.peek_is(',')) {
                c.expect(',', "','");
                continue;
            }
            break;
        }
        c.expect(']', "']'");
        return v;
    }
    v.number = c.number();
    return v;
}

using Args = std::vector<std::pair<std::string, Value>>;

const Value* find(const Args& args, const std::string& key) {
    for (const auto& [k, v] : args)
        if (k == key)
            return &v;
    return nullptr;
}

double require_number(const Args& args, const std::string& key,
                      const std::string& name) {
    const Value* v = find(args, key);
    if (!v || !v->is_number)
        throw SpecSyntaxError(name + " spec requires numeric key '" + key + "'",
                              0, key + "=<number>");
    return v->number;
}

std::string print_pairs(const std::vector<std::pair<double, double>>& pairs) {
    std::string out = "[";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i)
            out += ",";
        out += "(" + format_number(pairs[i].first) + "," +
               format_number(pairs[i].second) + ")";
    }
    return out + "]";
}

// Piecewise-linear interpolant with linear extrapolation off both ends.
std::function<double(double)> table_interpolant(
    std::vector<std::pair<double, double>> pts) {
    return [pts = std::move(pts)](double x) {
        std::size_t i = 0;
        if (x <= pts.front().first)
            i = 0;
        else if (x >= pts[pts.size() - 2].first)
            i = pts.size() - 2;
        else
            while (i + 2 < pts.size() && pts[i + 1].first <= x)
                ++i;
        const auto [x0, y0] = pts[i];
        const auto [x1, y1] = pts[i + 1];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    };
}

} // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char trial[40];
        std::snprintf(trial, sizeof trial, "%.*g", prec, v);
        if (std::strtod(trial, nullptr) == v)
            return trial;
    }
    return buf;
}

ParsedSpec parse_spec(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    const std::size_t name_pos = c.pos;
    const std::string name = c.ident();
    static const char* kNames[] = {"kernel", "gauss", "atom-measure",
                                   "density-measure", "raw-table"};
    if (std::find_if(std::begin(kNames), std::end(kNames), [&](const char* n) {
            return name == n;
        }) == std::end(kNames))
        throw SpecSyntaxError(
            "syntax error at offset " + std::to_string(name_pos) +
                ": expected one of kernel, gauss, atom-measure, "
                "density-measure, raw-table",
            name_pos, "spec name");
    c.expect('(', "'('");
    Args args;
    if (!c.peek_is(')')) {
        for (;;) {
            const std::string key = c.ident();
            c.expect('=', "'='");
            args.emplace_back(key, parse_value(c));
            if (c.peek_is(',')) {
                c.expect(',', "','");
                continue;
            }
            break;
        }
    }
    c.expect(')', "')'");
    c.skip_ws();
    if (c.pos != text.size())
        c.fail("end of input");

    ParsedSpec out;
    if (name == "kernel") {
        const double y = require_number(args, "y", name);
        out.kind = ParsedSpec::Kind::function;
        out.function = make_kernel_spec(y);
        if (const Value* kv = find(args, "k"); kv && kv->is_number)
            out.declared_k = kv->number;
        out.canonical = "kernel(";
        if (out.declared_k)
            out.canonical += "k=" + format_number(*out.declared_k) + ",";
        out.canonical += "y=" + format_number(y) + ")";
    } else if (name == "gauss") {
        const double p = require_number(args, "p", name);
        out.kind = ParsedSpec::Kind::function;
        out.function = make_gaussian_spec(p);
        out.canonical = "gauss(p=" + format_number(p) + ")";
    } else if (name == "atom-measure") {
        const Value* v = find(args, "atoms");
        if (!v || v->is_number || v->pairs.empty())
            throw SpecSyntaxError("atom-measure requires atoms=[(t,w),...]", 0,
                                  "atoms=[(t,w),...]");
        MeasureSpec mu;
        for (const auto& [t, w] : v->pairs)
            mu.atoms.push_back({t, w});
        mu.validate();
        out.kind = ParsedSpec::Kind::measure;
        out.measure = mu;
        out.canonical = "atom-measure(atoms=" + print_pairs(v->pairs) + ")";
    } else if (name == "density-measure") {
        const double p = require_number(args, "p", name);
        const Value* rv = find(args, "rho");
        const Value* sv = find(args, "scale");
        MeasureSpec mu;
        mu.density = MeasureSpec::Density{
            sv && sv->is_number ? sv->number : 1.0, p,
            rv && rv->is_number ? rv->number : 0.0};
        mu.validate();
        out.kind = ParsedSpec::Kind::measure;
        out.measure = mu;
        out.canonical = "density-measure(p=" + format_number(p) +
                        ",rho=" + format_number(mu.density->rho) +
                        ",scale=" + format_number(mu.density->scale) + ")";
    } else {  // raw-table
        const Value* v = find(args, "points");
        if (!v || v->is_number || v->pairs.size() < 2)
            throw SpecSyntaxError("raw-table requires points=[(x,y),...] with "
                                  ">= 2 points",
                                  0, "points=[(x,y),...]");
        for (std::size_t i = 1; i < v->pairs.size(); ++i)
            if (!(v->pairs[i].first > v->pairs[i - 1].first))
                throw SpecSyntaxError("raw-table points must have strictly "
                                      "increasing abscissae",
                                      0, "increasing x");
        out.kind = ParsedSpec::Kind::function;
        out.function = make_raw_spec(table_interpolant(v->pairs), Parity::none);
        out.canonical = "raw-table(points=" + print_pairs(v->pairs) + ")";
    }
    return out;
}

} // namespace dunklkit::cli
