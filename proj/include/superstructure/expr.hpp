#pragma once

// Expression evaluator for the CLI: atoms x<i>/e<i>/z<i>/d<i>, dot products,
// rational scalar prefixes, + and -, [A, B], div(D), ham(f), pb(f, g).

#include <optional>
#include <string>

#include "superstructure/algebra.hpp"

namespace superstructure {

struct EvalContext {
    bool h_type = false;
    int n = 0;
    HSplit split;
    Coords coords() const { return Coords{n, h_type, split}; }
};

struct EvalValue {
    enum class Kind { Scalar, Function, Field };
    Kind kind = Kind::Scalar;
    Rational scalar;
    SuperPoly<Rational> fn;
    VectorField<Rational> field;
};

/// Determines the ambient from flags and/or the generators appearing in the
/// expression (the largest index of each kind).
EvalContext infer_context(const std::string& text, std::optional<Series> series, std::optional<int> n);

EvalValue eval_expression(const std::string& text, const EvalContext& ctx);
std::string value_str(const EvalContext& ctx, const EvalValue& v);

}  // namespace superstructure
