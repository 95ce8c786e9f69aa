#pragma once

// Textual element syntax and JSON (de)serialization.
//
// Monomials: dot-separated generators in canonical order ("x1.x2.e3"), unit
// "1"; generators x<i> (xi), e<i> (eta), z<i> (zeta), directions d<i>.
// A graded subalgebra serializes as
//   {series, n, field, split?, components: [{degree, basis: [element, ...]}]}
// where an element is a list of [coeff, monomial, direction] triples for the
// vector-field series and [coeff, monomial] pairs for the h series.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "superstructure/subalgebra.hpp"

namespace superstructure {

Mono parse_mono(const Coords& c, const std::string& text);
int parse_direction(const Coords& c, const std::string& text);  // "d2" -> 1 (0-based)

/// Parses a basis element in the serialized term-list form.
VectorField<Rational> parse_vf_terms(const Coords& c, const nlohmann::json& terms);
SuperPoly<Rational> parse_gf_terms(const Coords& c, const nlohmann::json& terms);

template <class K>
nlohmann::json sub_to_json(const GradedSub<K>& s);

struct ParsedSub {
    AlgebraPtr g;
    std::variant<GradedSub<Rational>, GradedSub<Zp>> sub;
};
ParsedSub sub_from_json(const nlohmann::json& j);

/// One classification-table row: a named graded solvable subalgebra.
struct TableRow {
    std::string name;
    GradedSub<Rational> sub;
};

/// Aligned text table in the classification layout
/// (name | basis per degree, lowest degree first).
std::string emit_table(const std::string& title, const std::vector<TableRow>& rows);

/// Basis of one component as readable element strings.
std::vector<std::string> component_names(const GradedSub<Rational>& s, int degree);

}  // namespace superstructure
