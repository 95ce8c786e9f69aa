#pragma once

// Graded-subalgebra linear algebra over an ambient AlgebraDesc: spans,
// bracket closure, derived series, solvability, transitivity, ideals.
// Everything is exact and deterministic; K is Rational or Zp.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superstructure/algebra.hpp"
#include "superstructure/linalg.hpp"

namespace superstructure {

/// An ambient algebra materialized over a field: the structure-constant
/// table converted once so bracket evaluation stays in K.
template <class F>
struct AlgebraOver {
    using K = typename F::Elem;

    AlgebraPtr g;
    F field;
    std::vector<std::vector<std::vector<std::pair<int, K>>>> tab;

    AlgebraOver(AlgebraPtr g_, F f) : g(std::move(g_)), field(f) {
        int d = g->dim();
        tab.resize(d);
        for (int a = 0; a < d; ++a) {
            tab[a].resize(d);
            for (int b = 0; b < d; ++b) {
                tab[a][b].reserve(g->table[a][b].size());
                for (const auto& t : g->table[a][b]) {
                    K c = field.from_rational(t.c);
                    if (!c.is_zero()) tab[a][b].emplace_back(t.idx, c);
                }
            }
        }
    }

    Element<K> basis_element(int idx) const {
        int d = g->degree_of(idx);
        Element<K> e{d, Vec<K>(g->dim_at(d))};
        e.coords[idx - g->offset_at(d)] = field(1);
        return e;
    }

    /// Accumulates [a, b] into out (out sized for the target degree).
    void bracket_acc(int da, const Vec<K>& a, int db, const Vec<K>& b, Vec<K>& out) const {
        int oa = g->offset_at(da), ob = g->offset_at(db);
        int dc = g->canon_degree(da + db);
        int oc = g->has_degree(dc) ? g->offset_at(dc) : 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            const auto& row = tab[oa + static_cast<int>(i)];
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                K f = a[i] * b[j];
                for (const auto& [idx, c] : row[ob + static_cast<int>(j)]) out[idx - oc] += f * c;
            }
        }
    }

    Element<K> bracket(const Element<K>& a, const Element<K>& b) const {
        int dc = g->canon_degree(a.degree + b.degree);
        Element<K> r{dc, Vec<K>(g->has_degree(dc) ? g->dim_at(dc) : 0)};
        if (!r.coords.empty()) bracket_acc(a.degree, a.coords, b.degree, b.coords, r.coords);
        return r;
    }
};

template <class K>
struct GradedSub {
    AlgebraPtr g;
    std::map<int, Echelon<K>> comp;  // zero components are absent

    explicit GradedSub(AlgebraPtr g_ = nullptr) : g(std::move(g_)) {}

    int dim() const {
        int t = 0;
        for (const auto& [d, e] : comp) t += e.rank();
        return t;
    }
    std::map<int, int> dims() const {
        std::map<int, int> m;
        for (const auto& [d, e] : comp) m[d] = e.rank();
        return m;
    }
    int dim_at(int d) const {
        auto it = comp.find(d);
        return it == comp.end() ? 0 : it->second.rank();
    }

    bool insert(const Element<K>& e) {
        if (e.is_zero()) return false;
        auto it = comp.find(e.degree);
        if (it == comp.end()) it = comp.emplace(e.degree, Echelon<K>(static_cast<int>(e.coords.size()))).first;
        bool grew = it->second.insert(e.coords);
        if (it->second.rank() == 0) comp.erase(it);
        return grew;
    }

    bool contains(const Element<K>& e) const {
        if (e.is_zero()) return true;
        auto it = comp.find(e.degree);
        return it != comp.end() && it->second.contains(e.coords);
    }

    bool contains_sub(const GradedSub& o) const {
        for (const auto& [d, e] : o.comp) {
            auto it = comp.find(d);
            if (it == comp.end() || !e.is_subspace_of(it->second)) return false;
        }
        return true;
    }

    friend bool operator==(const GradedSub& a, const GradedSub& b) { return a.comp == b.comp; }

    std::vector<Element<K>> elements() const {
        std::vector<Element<K>> out;
        for (const auto& [d, e] : comp)
            for (const auto& r : e.rows()) out.push_back(Element<K>{d, r});
        return out;
    }
};

template <class F>
GradedSub<typename F::Elem> full_sub(const AlgebraOver<F>& A) {
    GradedSub<typename F::Elem> s(A.g);
    for (int i = 0; i < A.g->dim(); ++i) s.insert(A.basis_element(i));
    return s;
}

struct ClosureOpts {
    // Sound early exits: a subalgebra containing a non-solvable subalgebra is
    // itself non-solvable, so the closure may stop as soon as it swallows the
    // (non-solvable) ambient or the full (non-solvable) degree-0 component.
    bool abort_when_nonsolvable = false;
};

template <class K>
struct ClosureResult {
    GradedSub<K> sub;
    bool aborted_nonsolvable = false;
};

template <class F>
ClosureResult<typename F::Elem> closure(const AlgebraOver<F>& A,
                                        const std::vector<Element<typename F::Elem>>& gens,
                                        const ClosureOpts& opts = {}) {
    using K = typename F::Elem;
    const AlgebraDesc& g = *A.g;
    ClosureResult<K> res{GradedSub<K>(A.g), false};
    std::vector<Element<K>> members;
    std::vector<Element<K>> pending = gens;

    auto aborts = [&]() -> bool {
        if (!opts.abort_when_nonsolvable) return false;
        if (g.nonsolvable && res.sub.dim() == g.dim()) return true;
        if (g.deg0_nonsolvable && g.has_degree(0) && res.sub.dim_at(0) == g.dim_at(0)) return true;
        return false;
    };

    std::size_t next = 0;
    while (next < pending.size()) {
        Element<K> e = std::move(pending[next++]);
        if (e.is_zero()) continue;
        auto it = res.sub.comp.find(e.degree);
        if (it != res.sub.comp.end()) it->second.reduce(e.coords);
        if (e.is_zero()) continue;
        res.sub.insert(e);
        if (aborts()) {
            res.aborted_nonsolvable = true;
            return res;
        }
        members.push_back(e);
        const Element<K>& x = members.back();
        for (const auto& m : members) {
            Element<K> r = A.bracket(x, m);
            if (!r.is_zero() && !res.sub.contains(r)) pending.push_back(std::move(r));
            if (&m != &x) {
                Element<K> r2 = A.bracket(m, x);
                if (!r2.is_zero() && !res.sub.contains(r2)) pending.push_back(std::move(r2));
            }
        }
    }
    return res;
}

/// Span of [a, b]; with check_in = a, also validates that a is bracket-closed.
template <class F>
GradedSub<typename F::Elem> bracket_span(const AlgebraOver<F>& A,
                                         const GradedSub<typename F::Elem>& a,
                                         const GradedSub<typename F::Elem>& b,
                                         int rank_cap = -1,
                                         const GradedSub<typename F::Elem>* check_in = nullptr) {
    using K = typename F::Elem;
    GradedSub<K> out(A.g);
    auto ea = a.elements();
    auto eb = b.elements();
    for (const auto& x : ea) {
        for (const auto& y : eb) {
            Element<K> r = A.bracket(x, y);
            if (r.is_zero()) continue;
            if (check_in && !check_in->contains(r))
                throw std::invalid_argument("bracket_span: input is not bracket-closed");
            out.insert(r);
            // the cap is only a shortcut; never skip pairs while validating
            if (!check_in && rank_cap >= 0 && out.dim() >= rank_cap) return out;
        }
    }
    return out;
}

/// Derived series h, [h,h], ... until zero or stabilization.  Throws if h is
/// not bracket-closed.
template <class F>
std::vector<GradedSub<typename F::Elem>> derived_series(const AlgebraOver<F>& A,
                                                        const GradedSub<typename F::Elem>& h) {
    using K = typename F::Elem;
    std::vector<GradedSub<K>> out{h};
    bool first = true;
    while (true) {
        const GradedSub<K>& cur = out.back();
        if (cur.dim() == 0) break;
        GradedSub<K> next = bracket_span(A, cur, cur, cur.dim(), first ? &cur : nullptr);
        first = false;
        if (next.dim() == cur.dim()) break;  // stabilized (next <= cur always)
        out.push_back(std::move(next));
    }
    return out;
}

struct SolvabilityInfo {
    bool solvable = false;
    int steps = 0;  // index of the final member of the computed series
    std::vector<std::pair<int, int>> sdims;  // (even|odd) dims along the series
};

template <class F>
SolvabilityInfo solvability(const AlgebraOver<F>& A, const GradedSub<typename F::Elem>& h) {
    auto series = derived_series(A, h);
    SolvabilityInfo info;
    info.steps = static_cast<int>(series.size()) - 1;
    info.solvable = series.back().dim() == 0;
    for (const auto& s : series) {
        int ev = 0, od = 0;
        for (const auto& [d, e] : s.comp) (A.g->parity_of_degree(d) ? od : ev) += e.rank();
        info.sdims.emplace_back(ev, od);
    }
    return info;
}

template <class F>
bool is_solvable(const AlgebraOver<F>& A, const GradedSub<typename F::Elem>& h) {
    return solvability(A, h).solvable;
}

/// Transitivity: no nonzero element of degree >= 0 annihilates the negative
/// part.  A subalgebra with trivial negative part and nonzero nonnegative
/// part is not transitive.
template <class F>
bool is_transitive(const AlgebraOver<F>& A, const GradedSub<typename F::Elem>& h) {
    using K = typename F::Elem;
    std::vector<Element<K>> neg;
    bool has_nonneg = false;
    for (const auto& [d, e] : h.comp) {
        if (d < 0)
            for (const auto& r : e.rows()) neg.push_back(Element<K>{d, r});
        else if (e.rank() > 0)
            has_nonneg = true;
    }
    if (neg.empty()) return !has_nonneg;
    for (const auto& [d, e] : h.comp) {
        if (d < 0) continue;
        // kernel of x -> ([x, v]) over the component's own coordinates
        Mat<K> rows;
        for (const auto& r : e.rows()) {
            Vec<K> img;
            for (const auto& v : neg) {
                Element<K> br = A.bracket(Element<K>{d, r}, v);
                img.insert(img.end(), br.coords.begin(), br.coords.end());
            }
            rows.push_back(std::move(img));
        }
        if (rows.empty()) continue;
        auto ker = left_kernel(rows, static_cast<int>(rows[0].size()), A.field);
        if (!ker.empty()) return false;
    }
    return true;
}

/// [h, a] <= a; requires a <= h.
template <class F>
bool is_ideal(const AlgebraOver<F>& A, const GradedSub<typename F::Elem>& a,
              const GradedSub<typename F::Elem>& h) {
    if (!h.contains_sub(a)) throw std::invalid_argument("is_ideal: first argument is not contained in the second");
    for (const auto& x : h.elements())
        for (const auto& y : a.elements())
            if (!a.contains(A.bracket(x, y))) return false;
    return true;
}

/// Reduction of a rational subalgebra modulo p (entries must be p-integral).
inline GradedSub<Zp> reduce_mod_p(const AlgebraOver<PField>& Ap, const GradedSub<Rational>& s) {
    GradedSub<Zp> out(Ap.g);
    for (const auto& [d, e] : s.comp)
        for (const auto& row : e.rows()) {
            Vec<Zp> v(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) v[j] = Ap.field.from_rational(row[j]);
            out.insert(Element<Zp>{d, std::move(v)});
        }
    return out;
}

/// Builds a standalone AlgebraDesc from a bracket-closed graded subalgebra
/// (used to re-run the whole toolchain inside V_* or inside a degree-0
/// component).  Basis and structure constants are re-expressed exactly.
AlgebraPtr subalgebra_desc(const AlgebraOver<QField>& A, const GradedSub<Rational>& s,
                           const std::string& label);

}  // namespace superstructure
