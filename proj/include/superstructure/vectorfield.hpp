#pragma once

// Superderivations of Lambda(n): vector fields sum f_i d_i, their
// supercommutator and divergence, plus the odd Poisson bracket and the
// generating-function -> Hamiltonian-field map for the h/po series.

#include <utility>
#include <vector>

#include "superstructure/grassmann.hpp"

namespace superstructure {

template <class K>
struct VectorField {
    int n = 0;
    std::vector<SuperPoly<K>> comp;  // comp[i] = coefficient of d_i, i 0-based

    VectorField() = default;
    explicit VectorField(int n_) : n(n_), comp(n_) {}

    bool is_zero() const {
        for (const auto& f : comp)
            if (!f.is_zero()) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        check(o);
        for (int i = 0; i < n; ++i) comp[i] += o.comp[i];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check(o);
        for (int i = 0; i < n; ++i) comp[i] -= o.comp[i];
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField operator-() const {
        VectorField r(n);
        for (int i = 0; i < n; ++i) r.comp[i] = -comp[i];
        return r;
    }
    friend VectorField operator*(const K& c, const VectorField& d) {
        VectorField r(d.n);
        for (int i = 0; i < d.n; ++i) r.comp[i] = c * d.comp[i];
        return r;
    }
    friend VectorField operator*(const SuperPoly<K>& f, const VectorField& d) {
        VectorField r(d.n);
        for (int i = 0; i < d.n; ++i) r.comp[i] = f * d.comp[i];
        return r;
    }
    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.n == b.n && a.comp == b.comp;
    }

    /// Application to a function: D(g) = sum f_i d_i(g).
    SuperPoly<K> apply(const SuperPoly<K>& g) const {
        SuperPoly<K> r;
        for (int i = 0; i < n; ++i) {
            if (comp[i].is_zero()) continue;
            r += comp[i] * g.partial(i);
        }
        return r;
    }

    /// Splits into (even, odd) parts; the parity of f d_i is p(f) + 1.
    std::pair<VectorField, VectorField> parity_split() const {
        VectorField ev(n), od(n);
        for (int i = 0; i < n; ++i) {
            auto [fe, fo] = comp[i].parity_split();
            ev.comp[i] = std::move(fo);  // odd coefficient -> even field
            od.comp[i] = std::move(fe);
        }
        return {ev, od};
    }

    bool is_homogeneous_weisfeiler(int d) const {
        for (const auto& f : comp)
            for (const auto& [m, c] : f.terms())
                if (mono_deg(m) != d + 1) return false;
        return true;
    }

private:
    void check(const VectorField& o) const {
        if (n != o.n) throw std::invalid_argument("VectorField: mismatched number of indeterminates");
    }
};

template <class K>
VectorField<K> field_monomial(int n, Mono m, int dir, K c) {
    VectorField<K> d(n);
    d.comp[dir] = SuperPoly<K>::monomial(m, std::move(c));
    return d;
}

namespace detail {

// supercommutator of parity-homogeneous fields
template <class K>
VectorField<K> bracket_hom(const VectorField<K>& a, int pa, const VectorField<K>& b, int pb) {
    VectorField<K> r(a.n);
    for (int j = 0; j < a.n; ++j) {
        if (!b.comp[j].is_zero()) r.comp[j] += a.apply(b.comp[j]);
        if (!a.comp[j].is_zero()) {
            SuperPoly<K> t = b.apply(a.comp[j]);
            if ((pa & pb & 1) == 0) t = -t;  // subtract unless both odd
            r.comp[j] += t;
        }
    }
    return r;
}

}  // namespace detail

/// [D1, D2] = D1 D2 - (-1)^{p(D1)p(D2)} D2 D1, extended bilinearly to
/// non-homogeneous inputs.
template <class K>
VectorField<K> bracket(const VectorField<K>& a, const VectorField<K>& b) {
    if (a.n != b.n) throw std::invalid_argument("bracket: mismatched ambient");
    auto [ae, ao] = a.parity_split();
    auto [be, bo] = b.parity_split();
    VectorField<K> r(a.n);
    if (!ae.is_zero() && !be.is_zero()) r += detail::bracket_hom(ae, 0, be, 0);
    if (!ae.is_zero() && !bo.is_zero()) r += detail::bracket_hom(ae, 0, bo, 1);
    if (!ao.is_zero() && !be.is_zero()) r += detail::bracket_hom(ao, 1, be, 0);
    if (!ao.is_zero() && !bo.is_zero()) r += detail::bracket_hom(ao, 1, bo, 1);
    return r;
}

/// Div(sum f_i d_i) = sum (-1)^{p(f_i)} d_i(f_i); its kernel is svect.
template <class K>
SuperPoly<K> divergence(const VectorField<K>& d) {
    SuperPoly<K> r;
    for (int i = 0; i < d.n; ++i) {
        auto [fe, fo] = d.comp[i].parity_split();
        r += fe.partial(i);
        r -= fo.partial(i);
    }
    return r;
}

/// Coordinate split for the Poisson/Hamiltonian series: generators ordered
/// xi_1..xi_k, eta_1..eta_k, zeta_1..zeta_l with n = 2k + l.
struct HSplit {
    int pairs = 0;
    int zetas = 0;
    int n() const { return 2 * pairs + zetas; }
    int xi(int i) const { return i; }               // 0-based position of xi_{i+1}
    int eta(int i) const { return pairs + i; }
    int zeta(int j) const { return 2 * pairs + j; }
};

namespace detail {

template <class K>
SuperPoly<K> poisson_hom(const HSplit& s, const SuperPoly<K>& f, int pf, const SuperPoly<K>& g) {
    SuperPoly<K> r;
    for (int i = 0; i < s.pairs; ++i) {
        r += f.partial(s.xi(i)) * g.partial(s.eta(i));
        r += f.partial(s.eta(i)) * g.partial(s.xi(i));
    }
    for (int j = 0; j < s.zetas; ++j) r += f.partial(s.zeta(j)) * g.partial(s.zeta(j));
    return (pf & 1) ? -r : r;
}

template <class K>
VectorField<K> hamiltonian_hom(const HSplit& s, const SuperPoly<K>& f, int pf) {
    VectorField<K> d(s.n());
    for (int i = 0; i < s.pairs; ++i) {
        d.comp[s.eta(i)] += f.partial(s.xi(i));
        d.comp[s.xi(i)] += f.partial(s.eta(i));
    }
    for (int j = 0; j < s.zetas; ++j) d.comp[s.zeta(j)] += f.partial(s.zeta(j));
    return (pf & 1) ? -d : d;
}

}  // namespace detail

/// {f, g} = (-1)^{p(f)} (sum_i df/dxi_i dg/deta_i + df/deta_i dg/dxi_i
///                       + sum_j df/dzeta_j dg/dzeta_j).
template <class K>
SuperPoly<K> poisson(const HSplit& s, const SuperPoly<K>& f, const SuperPoly<K>& g) {
    auto [fe, fo] = f.parity_split();
    SuperPoly<K> r = detail::poisson_hom(s, fe, 0, g);
    r += detail::poisson_hom(s, fo, 1, g);
    return r;
}

/// The Hamiltonian field H_f; ker H = constants and H_{{f,g}} = [H_f, H_g].
template <class K>
VectorField<K> hamiltonian(const HSplit& s, const SuperPoly<K>& f) {
    auto [fe, fo] = f.parity_split();
    VectorField<K> d = detail::hamiltonian_hom(s, fe, 0);
    d += detail::hamiltonian_hom(s, fo, 1);
    return d;
}

}  // namespace superstructure
