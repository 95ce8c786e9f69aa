#pragma once

// The Grassmann algebra Lambda(n) on anticommuting generators, n <= 16.
// Monomials are bitmasks over 0-based generator indices; the canonical order
// is graded, then lexicographic on the increasing index sequences.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superstructure/field.hpp"

namespace superstructure {

using Mono = std::uint32_t;

constexpr int kMaxVars = 16;

inline int mono_deg(Mono m) { return std::popcount(m); }

/// Graded-lex order: lower degree first; same degree compares the sorted
/// index lists lexicographically (smallest differing generator wins).
inline bool mono_less(Mono a, Mono b) {
    int da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

struct MonoLess {
    bool operator()(Mono a, Mono b) const { return mono_less(a, b); }
};

/// Product of canonical monomials: zero iff they share a generator, otherwise
/// the union with the Koszul sign of the interleaving permutation.
struct MonoProd {
    int sign;  // 0 means the product vanished
    Mono m;
};

inline MonoProd mono_mul(Mono a, Mono b) {
    if (a & b) return {0, 0};
    int inv = 0;
    for (Mono t = b; t; t &= t - 1) {
        int j = std::countr_zero(t);
        inv += std::popcount(a >> (j + 1));
    }
    return {(inv & 1) ? -1 : 1, a | b};
}

/// d/d xi_i on a monomial (i is 0-based): strips the generator with sign
/// (-1)^{# smaller generators present}; zero if absent.
inline MonoProd mono_partial(int i, Mono m) {
    Mono bit = Mono(1) << i;
    if (!(m & bit)) return {0, 0};
    int below = std::popcount(m & (bit - 1));
    return {(below & 1) ? -1 : 1, m & ~bit};
}

/// Sparse element of Lambda(n) over the scalar type K.
template <class K>
class SuperPoly {
public:
    using Terms = std::map<Mono, K, MonoLess>;

    SuperPoly() = default;
    static SuperPoly monomial(Mono m, K c) {
        SuperPoly f;
        f.add_term(m, std::move(c));
        return f;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(Mono m, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    SuperPoly& operator+=(const SuperPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    SuperPoly& operator-=(const SuperPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    SuperPoly operator-() const {
        SuperPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    friend SuperPoly operator*(const K& c, const SuperPoly& f) {
        SuperPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, x] : f.t_) r.add_term(m, c * x);
        return r;
    }
    friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.t_ == b.t_; }

    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                MonoProd p = mono_mul(ma, mb);
                if (p.sign == 0) continue;
                K c = ca * cb;
                if (p.sign < 0) c = -c;
                r.add_term(p.m, c);
            }
        return r;
    }

    /// Odd superderivation d/d xi_i, i 0-based.
    SuperPoly partial(int i) const {
        SuperPoly r;
        for (const auto& [m, c] : t_) {
            MonoProd p = mono_partial(i, m);
            if (p.sign == 0) continue;
            r.add_term(p.m, p.sign < 0 ? -c : c);
        }
        return r;
    }

    /// Lambda-degree of a homogeneous element; throws on mixed degrees.
    int degree() const {
        if (t_.empty()) throw std::logic_error("SuperPoly: degree of zero");
        int d = mono_deg(t_.begin()->first);
        for (const auto& [m, c] : t_)
            if (mono_deg(m) != d) throw std::logic_error("SuperPoly: not homogeneous");
        return d;
    }

    bool is_homogeneous() const {
        if (t_.empty()) return true;
        int d = mono_deg(t_.begin()->first);
        for (const auto& [m, c] : t_)
            if (mono_deg(m) != d) return false;
        return true;
    }

    /// Parity = Lambda-degree mod 2 of a homogeneous element.
    int parity() const { return degree() & 1; }

    /// Split into the even-degree and odd-degree parts.
    std::pair<SuperPoly, SuperPoly> parity_split() const {
        SuperPoly ev, od;
        for (const auto& [m, c] : t_) (mono_deg(m) & 1 ? od : ev).t_.emplace(m, c);
        return {ev, od};
    }

    /// Component of Lambda-degree d.
    SuperPoly component(int d) const {
        SuperPoly r;
        for (const auto& [m, c] : t_)
            if (mono_deg(m) == d) r.t_.emplace(m, c);
        return r;
    }

    K coeff(Mono m) const {
        auto it = t_.find(m);
        return it == t_.end() ? K{} : it->second;
    }

    /// Drops the constant term (used when passing to the quotient modulo
    /// constants).
    SuperPoly without_constant() const {
        SuperPoly r = *this;
        r.t_.erase(Mono(0));
        return r;
    }

    int max_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, mono_deg(m));
        return d;
    }

private:
    Terms t_;
};

/// All monomials on n generators of the given degree, in canonical order.
inline std::vector<Mono> monomials_of_degree(int n, int d) {
    std::vector<Mono> out;
    if (d < 0 || d > n) return out;
    for (Mono m = 0; m < (Mono(1) << n); ++m)
        if (mono_deg(m) == d) out.push_back(m);
    std::sort(out.begin(), out.end(), mono_less);
    return out;
}

}  // namespace superstructure
