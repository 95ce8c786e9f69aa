#pragma once

// Shared test utilities: terse constructors for fields, generating functions
// and spans inside an ambient algebra.

#include <initializer_list>

#include "superstructure/prolong.hpp"
#include "superstructure/subalgebra.hpp"

namespace superstructure::testhelpers {

struct Term {
    Mono m;
    int dir;
    long c = 1;
};

inline VectorField<Rational> vf(int n, std::initializer_list<Term> terms) {
    VectorField<Rational> d(n);
    for (const auto& t : terms) d += field_monomial<Rational>(n, t.m, t.dir, Rational(t.c));
    return d;
}

inline SuperPoly<Rational> gf(std::initializer_list<std::pair<Mono, long>> terms) {
    SuperPoly<Rational> f;
    for (const auto& [m, c] : terms) f.add_term(m, Rational(c));
    return f;
}

inline GradedSub<Rational> span_of(const AlgebraOver<QField>& A, const std::vector<Element<Rational>>& els) {
    GradedSub<Rational> s(A.g);
    for (const auto& e : els) s.insert(e);
    return s;
}

/// Parses "x1.x2.d1" style monomial fields for vect-type ambients (1-based).
inline Element<Rational> field_el(const ModelExpresser& ex, std::initializer_list<Term> terms) {
    return ex.from_vf(vf(ex.algebra()->n, terms));
}

inline Element<Rational> fun_el(const ModelExpresser& ex, std::initializer_list<std::pair<Mono, long>> terms) {
    return ex.from_gf(gf(terms));
}

}  // namespace superstructure::testhelpers
