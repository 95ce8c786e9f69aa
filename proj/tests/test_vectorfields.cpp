#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "superstructure/subalgebra.hpp"

using namespace superstructure;

namespace {

using VF = VectorField<Rational>;
using SP = SuperPoly<Rational>;

SP mono_q(Mono m, long c = 1) { return SP::monomial(m, Rational(c)); }
VF fm(int n, Mono m, int dir, long c = 1) { return field_monomial<Rational>(n, m, dir, Rational(c)); }

// super-Jacobi on structure constants: [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)}[b,[a,c]]
void check_jacobi_triple(const AlgebraOver<QField>& A, int a, int b, int c) {
    auto ea = A.basis_element(a), eb = A.basis_element(b), ec = A.basis_element(c);
    auto lhs = A.bracket(ea, A.bracket(eb, ec));
    auto r1 = A.bracket(A.bracket(ea, eb), ec);
    auto r2 = A.bracket(eb, A.bracket(ea, ec));
    int pa = A.g->parity_of_degree(A.g->degree_of(a));
    int pb = A.g->parity_of_degree(A.g->degree_of(b));
    Vec<Rational> want(lhs.coords.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        want[i] = r1.coords[i];
        want[i] += (pa && pb) ? -r2.coords[i] : r2.coords[i];
    }
    CHECK(lhs.coords == want);
}

void check_antisymmetry(const AlgebraOver<QField>& A) {
    int dim = A.g->dim();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            auto ab = A.bracket(A.basis_element(a), A.basis_element(b));
            auto ba = A.bracket(A.basis_element(b), A.basis_element(a));
            int pa = A.g->parity_of_degree(A.g->degree_of(a));
            int pb = A.g->parity_of_degree(A.g->degree_of(b));
            int sign = (pa && pb) ? 1 : -1;  // [x,y] = -(-1)^{p p}[y,x]
            for (std::size_t i = 0; i < ab.coords.size(); ++i)
                CHECK(ab.coords[i] == (sign < 0 ? -ba.coords[i] : ba.coords[i]));
        }
}

}  // namespace

TEST_CASE("bracket examples") {
    int n = 2;
    // [d1, x1 d2] = d2
    CHECK(bracket(fm(n, 0, 0), fm(n, 0b01, 1)) == fm(n, 0, 1));
    // [x1 d2, x2 d1] = x1 d1 - x2 d2
    CHECK(bracket(fm(n, 0b01, 1), fm(n, 0b10, 0)) == fm(n, 0b01, 0) - fm(n, 0b10, 1));
    // even D: [D, D] = 0
    CHECK(bracket(fm(n, 0b01, 0), fm(n, 0b01, 0)).is_zero());
}

TEST_CASE("divergence examples") {
    int n = 2;
    CHECK(divergence(fm(n, 0b01, 0)) == mono_q(0, -1));                      // Div(x1 d1) = -1
    CHECK(divergence(fm(n, 0b01, 0) - fm(n, 0b10, 1)).is_zero());            // h_1 is divergence-free
    CHECK(divergence(fm(n, 0b11, 0)) == mono_q(0b10));                       // Div(x1x2 d1) = x2
    // Div is linear and kills brackets of divergence-free fields
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(0, 3);
    int m = 3;
    std::vector<VF> df = {fm(m, 0b001, 0) - fm(m, 0b010, 1), fm(m, 0b011, 2), fm(m, 0b101, 1), fm(m, 0, 0)};
    for (int t = 0; t < 20; ++t) {
        VF a = df[pick(rng)], b = df[pick(rng)];
        CHECK(divergence(bracket(a, b)).is_zero());
    }
}

TEST_CASE("poisson and hamiltonian examples") {
    HSplit s{1, 1};  // x1, e1, z1
    Mono x1 = 0b001, e1 = 0b010, z1 = 0b100;
    CHECK(poisson(s, mono_q(x1), mono_q(e1)) == mono_q(0, -1));  // {x1, e1} = -1
    CHECK(poisson(s, mono_q(z1), mono_q(z1)) == mono_q(0, -1));  // {z1, z1} = -1
    CHECK(poisson(s, mono_q(0), mono_q(x1 | e1)).is_zero());     // constants central

    // H_{x1} = -d_{e1}; H_{x1 e1} = e1 d_{e1} - x1 d_{x1}; H_1 = 0
    CHECK(hamiltonian(s, mono_q(x1)) == -fm(3, 0, 1));
    CHECK(hamiltonian(s, mono_q(x1 | e1)) == fm(3, e1, 1) - fm(3, x1, 0));
    CHECK(hamiltonian(s, mono_q(0)).is_zero());
}

TEST_CASE("H is a morphism: H_{{f,g}} = [H_f, H_g], exhaustive n <= 6") {
    for (int n : {4, 5, 6}) {
        HSplit s{n / 2, n % 2};
        for (Mono a = 0; a < (Mono(1) << n); ++a)
            for (Mono b = 0; b < (Mono(1) << n); ++b) {
                auto lhs = hamiltonian(s, poisson(s, mono_q(a), mono_q(b)));
                auto rhs = bracket(hamiltonian(s, mono_q(a)), hamiltonian(s, mono_q(b)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("build_algebra dimensions") {
    auto v2 = build_algebra(Series::Vect, 2);
    CHECK(v2->dim() == 8);
    CHECK(v2->dim_at(-1) == 2);
    CHECK(v2->dim_at(0) == 4);
    CHECK(v2->dim_at(1) == 2);

    auto hp4 = build_algebra(Series::HPrime, 4);
    CHECK(hp4->dim() == 14);

    auto s3 = build_algebra(Series::Svect, 3);
    CHECK(s3->dim() == 17);
    CHECK(s3->dim_at(-1) == 3);
    CHECK(s3->dim_at(0) == 8);
    CHECK(s3->dim_at(1) == 6);
    CHECK(s3->dim_at(2) == 0);

    auto h5 = build_algebra(Series::H, 5);
    CHECK(h5->dim() == 31);
    auto po3 = build_algebra(Series::Po, 3);
    CHECK(po3->dim() == 8);
    CHECK(po3->dim_at(-2) == 1);

    auto t4 = build_algebra(Series::TildeSvect, 4);
    CHECK(t4->dim() == 49);
    CHECK(t4->zmod);
    CHECK(t4->dim_at(-1) == 4);
    CHECK(t4->dim_at(0) == 15);

    CHECK_THROWS(build_algebra(Series::Vect, 1));
    CHECK_THROWS(build_algebra(Series::Svect, 2));
    CHECK_THROWS(build_algebra(Series::TildeSvect, 5));
}

TEST_CASE("gradings are compatible with parity and brackets add degrees") {
    for (auto spec : std::vector<std::pair<Series, int>>{{Series::Vect, 3},
                                                         {Series::Svect, 3},
                                                         {Series::H, 5},
                                                         {Series::HPrime, 4},
                                                         {Series::Po, 4},
                                                         {Series::TildeSvect, 4}}) {
        auto g = build_algebra(spec.first, spec.second);
        for (const auto& e : g->basis) {
            if (is_h_type(spec.first))
                CHECK(e.gf.degree() % 2 == g->parity_of_degree(e.degree));
            else if (spec.first != Series::TildeSvect)
                CHECK(e.vf.is_homogeneous_weisfeiler(e.degree));
        }
        // table entries stay in the canonical target degree
        for (int a = 0; a < g->dim(); ++a)
            for (int b = 0; b < g->dim(); ++b) {
                int dc = g->canon_degree(g->degree_of(a) + g->degree_of(b));
                for (const auto& t : g->table[a][b]) CHECK(g->degree_of(t.idx) == dc);
            }
    }
}

TEST_CASE("super anti-symmetry and Jacobi, exhaustive for n <= 5") {
    std::vector<AlgebraPtr> algebras;
    for (int n = 2; n <= 5; ++n) algebras.push_back(build_algebra(Series::Vect, n));
    for (int n = 3; n <= 5; ++n) algebras.push_back(build_algebra(Series::Svect, n));
    algebras.push_back(build_algebra(Series::TildeSvect, 4));
    algebras.push_back(build_algebra(Series::H, 5));
    algebras.push_back(build_algebra(Series::H, 4));
    algebras.push_back(build_algebra(Series::HPrime, 4));
    algebras.push_back(build_algebra(Series::Po, 4));
    for (const auto& g : algebras) {
        AlgebraOver<QField> A(g, QField{});
        check_antisymmetry(A);
        int dim = g->dim();
        if (dim <= 50) {
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b)
                    for (int c = 0; c < dim; ++c) check_jacobi_triple(A, a, b, c);
        } else {
            // large ambients: exhaustive over a stratified subset plus random triples
            std::mt19937_64 rng(5);
            std::uniform_int_distribution<int> pick(0, dim - 1);
            for (int t = 0; t < 20000; ++t) check_jacobi_triple(A, pick(rng), pick(rng), pick(rng));
        }
    }
}

TEST_CASE("Jacobi on random triples for n = 6 ambients") {
    std::mt19937_64 rng(6);
    for (auto g : {build_algebra(Series::H, 6), build_algebra(Series::Vect, 6)}) {
        AlgebraOver<QField> A(g, QField{});
        std::uniform_int_distribution<int> pick(0, g->dim() - 1);
        for (int t = 0; t < 5000; ++t) check_jacobi_triple(A, pick(rng), pick(rng), pick(rng));
    }
}

TEST_CASE("tilde-svect closes with Z/n degree arithmetic") {
    auto t4 = build_algebra(Series::TildeSvect, 4);
    AlgebraOver<QField> A(t4, QField{});
    // wraparound: [deg -1, deg -1] lands in degree n-2 = 2
    bool saw_wrap = false;
    for (int a = 0; a < t4->dim_at(-1); ++a)
        for (int b = 0; b < t4->dim_at(-1); ++b) {
            auto r = A.bracket(A.basis_element(a), A.basis_element(b));
            CHECK(r.degree == 2);
            if (!r.is_zero()) saw_wrap = true;
        }
    CHECK(saw_wrap);
    // deformed degree -1 really carries the (1 + Xi) tail
    const auto& e = t4->basis[0];
    CHECK(e.vf.comp[0].coeff(0) == Rational(1));
    CHECK(e.vf.comp[0].coeff((Mono(1) << 4) - 1) == Rational(1));
}

TEST_CASE("exhaustive Jacobi for the tilde series uses wrapped degrees") {
    auto t4 = build_algebra(Series::TildeSvect, 4);
    AlgebraOver<QField> A(t4, QField{});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, t4->dim() - 1);
    for (int t = 0; t < 20000; ++t) check_jacobi_triple(A, pick(rng), pick(rng), pick(rng));
}

TEST_CASE("solvability flags of ambients") {
    CHECK(build_algebra(Series::Vect, 2)->nonsolvable);
    CHECK(build_algebra(Series::Vect, 2)->deg0_nonsolvable);
    CHECK(build_algebra(Series::H, 5)->nonsolvable);
    CHECK(build_algebra(Series::HPrime, 4)->nonsolvable);
}
