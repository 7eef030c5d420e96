// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <optional>
#include <string>

#include "dunklkit/function_spec.hpp"

namespace dunklkit::cli {

//! Parse result of the textual spec grammar
//!   name '(' key '=' value {',' key '=' value} ')'
//! with names {kernel, gauss, atom-measure, density-measure, raw-table} and
//! bracketed pair lists for atoms/points.  Parsing is total on valid strings;
//! invalid input throws SpecSyntaxError with a byte offset and the expected
//! token set.
struct ParsedSpec {
    enum class Kind { function, measure };
    Kind kind = Kind::function;
    FunctionSpec function;
    MeasureSpec measure;
    std::optional<double> declared_k;  // kernel(k=...) annotation, if present
    std::string canonical;             // canonical printed form
};

ParsedSpec parse_spec(const std::string& text);

//! Canonical printer: fixed key order, shortest round-trip numerals.
//! parse_spec(canonical) == the same structure.
std::string format_number(double v);

} // namespace dunklkit::cli
