#pragma once

// Cartan prolongation: stabilizers of subspaces of g_{-1}, the prolong of a
// pair (b_{-1}, b_0) computed degree by degree as exact kernels, and the
// maximal prolong V_* with the full stabilizer.

#include "superstructure/subalgebra.hpp"

namespace superstructure {

/// {X in g_0 : [X, V] <= V} for V <= g_{-1}.
template <class F>
Echelon<typename F::Elem> stabilizer(const AlgebraOver<F>& A, const Echelon<typename F::Elem>& V) {
    using K = typename F::Elem;
    const AlgebraDesc& g = *A.g;
    if (!g.has_degree(0) || !g.has_degree(-1)) throw std::invalid_argument("stabilizer: ambient lacks degrees -1 or 0");
    int m0 = g.dim_at(0), m1 = g.dim_at(-1);
    Mat<K> rows(m0);
    for (int i = 0; i < m0; ++i) {
        Vec<K> x(m0);
        x[i] = A.field(1);
        Vec<K> img;
        for (const auto& v : V.rows()) {
            Vec<K> br(m1);
            A.bracket_acc(0, x, -1, v, br);
            V.reduce(br);
            img.insert(img.end(), br.begin(), br.end());
        }
        rows[i] = std::move(img);
    }
    Mat<K> ker = left_kernel(rows, V.rank() * m1, A.field);
    Echelon<K> out(m0);
    for (auto& r : ker) out.insert(r);
    return out;
}

/// Prolong of (b_{-1}, b_0): degree-(-1) part V, degree-0 part B0, and each
/// higher component the exact solution of [D, V] <= previous.  The result is
/// bracket-closed whenever the ambient makes the prolong a subalgebra; this
/// is asserted, not assumed (`require_closed`).
template <class F>
GradedSub<typename F::Elem> cartan_prolong(const AlgebraOver<F>& A,
                                           const Echelon<typename F::Elem>& V,
                                           const Echelon<typename F::Elem>& B0,
                                           bool require_closed = true) {
    using K = typename F::Elem;
    const AlgebraDesc& g = *A.g;
    if (V.rank() == 0) throw std::invalid_argument("cartan_prolong: b_{-1} must be nonzero");
    // b_0 must preserve b_{-1}
    for (const auto& x : B0.rows())
        for (const auto& v : V.rows()) {
            Vec<K> br(g.dim_at(-1));
            A.bracket_acc(0, x, -1, v, br);
            if (!V.contains(br)) throw std::invalid_argument("cartan_prolong: b_0 does not preserve b_{-1}");
        }

    GradedSub<K> s(A.g);
    for (const auto& r : V.rows()) s.insert(Element<K>{-1, r});
    for (const auto& r : B0.rows()) s.insert(Element<K>{0, r});

    for (int d = 1; d <= g.max_deg; ++d) {
        int md = g.dim_at(d);
        if (md == 0) continue;
        int prev_deg = d - 1;
        int mprev = g.dim_at(prev_deg);
        const Echelon<K>* prev = nullptr;
        auto it = s.comp.find(prev_deg);
        if (it != s.comp.end()) prev = &it->second;
        Mat<K> rows(md);
        for (int i = 0; i < md; ++i) {
            Vec<K> x(md);
            x[i] = A.field(1);
            Vec<K> img;
            for (const auto& v : V.rows()) {
                Vec<K> br(mprev);
                A.bracket_acc(d, x, -1, v, br);
                if (prev) prev->reduce(br);
                img.insert(img.end(), br.begin(), br.end());
            }
            rows[i] = std::move(img);
        }
        Mat<K> ker = left_kernel(rows, V.rank() * mprev, A.field);
        for (auto& r : ker) s.insert(Element<K>{d, std::move(r)});
    }

    if (require_closed) {
        auto elems = s.elements();
        for (const auto& x : elems)
            for (const auto& y : elems)
                if (!s.contains(A.bracket(x, y)))
                    throw std::runtime_error("cartan_prolong: prolong is not bracket-closed");
    }
    return s;
}

/// V_* = the prolong with b_0 = the full stabilizer of V: the maximal graded
/// subalgebra with negative component V.
template <class F>
GradedSub<typename F::Elem> v_star(const AlgebraOver<F>& A, const Echelon<typename F::Elem>& V,
                                   bool require_closed = true) {
    return cartan_prolong(A, V, stabilizer(A, V), require_closed);
}

/// Convenience: the span of ambient basis elements of the given degree,
/// selected by local indices.
template <class F>
Echelon<typename F::Elem> coordinate_span(const AlgebraOver<F>& A, int degree, const std::vector<int>& locals) {
    using K = typename F::Elem;
    Echelon<K> e(A.g->dim_at(degree));
    for (int i : locals) {
        Vec<K> v(A.g->dim_at(degree));
        v[i] = A.field(1);
        e.insert(v);
    }
    return e;
}

}  // namespace superstructure
