#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"

using namespace superstructure;
using namespace superstructure::testhelpers;

namespace {

Echelon<Rational> span_rows(const AlgebraOver<QField>& A, int degree,
                            const std::vector<Element<Rational>>& els) {
    Echelon<Rational> e(A.g->dim_at(degree));
    for (const auto& el : els) {
        REQUIRE(el.degree == degree);
        e.insert(el.coords);
    }
    return e;
}

Echelon<Rational> full_component(const AlgebraOver<QField>& A, int degree) {
    Echelon<Rational> e(A.g->dim_at(degree));
    for (int i = 0; i < A.g->dim_at(degree); ++i) {
        Vec<Rational> v(A.g->dim_at(degree));
        v[i] = Rational(1);
        e.insert(v);
    }
    return e;
}

}  // namespace

TEST_CASE("stabilizer of <d1> in vect(0|3) is the 7-dim span") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = span_rows(A, -1, {field_el(ex, {{0, 0}})});
    auto st = stabilizer(A, V);
    CHECK(st.rank() == 7);
    // x1d1 preserves it; x1d2 does not
    CHECK(st.contains(field_el(ex, {{0b001, 0}}).coords));
    CHECK_FALSE(st.contains(field_el(ex, {{0b001, 1}}).coords));
    for (int i : {1, 2})
        for (int j : {0, 1, 2}) CHECK(st.contains(field_el(ex, {{Mono(1) << i, j}}).coords));
}

TEST_CASE("stabilizer of the full component is all of g_0") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    CHECK(stabilizer(A, full_component(A, -1)).rank() == g->dim_at(0));
}

TEST_CASE("stabilizer of <x1> in h'(0|4) is the Table-3 degree-0 span") {
    auto g = build_algebra(Series::HPrime, 4);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    Mono x1 = 0b0001, x2 = 0b0010, e1 = 0b0100, e2 = 0b1000;
    auto V = span_rows(A, -1, {fun_el(ex, {{x1, 1}})});
    auto st = stabilizer(A, V);
    CHECK(st.rank() == 4);
    for (Mono m : {x1 | e1, x1 | x2, x1 | e2, x2 | e2}) CHECK(st.contains(fun_el(ex, {{m, 1}}).coords));
}

TEST_CASE("cartan prolong of (g_{-1}, lower triangular) in vect(0|2): Table-2 msc") {
    auto g = build_algebra(Series::Vect, 2);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = full_component(A, -1);
    auto B0 = span_rows(A, 0, {field_el(ex, {{0b01, 0}}), field_el(ex, {{0b10, 0}}), field_el(ex, {{0b10, 1}})});
    auto s = cartan_prolong(A, V, B0);
    CHECK(s.dims() == std::map<int, int>{{-1, 2}, {0, 3}, {1, 1}});
    CHECK(s.contains(field_el(ex, {{0b11, 0}})));  // degree-1 part = <x1.x2.d1>
}

TEST_CASE("cartan prolong with full gl(n) recovers vect(0|3)") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    auto s = cartan_prolong(A, full_component(A, -1), full_component(A, 0));
    CHECK(s.dim() == g->dim());
    CHECK(is_transitive(A, s));
}

TEST_CASE("cartan prolong validates that b_0 preserves b_{-1}") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = span_rows(A, -1, {field_el(ex, {{0, 0}})});
    auto bad = span_rows(A, 0, {field_el(ex, {{0b001, 1}})});  // x1d2 moves d1 off the line
    CHECK_THROWS(cartan_prolong(A, V, bad));
}

TEST_CASE("prolong inside h'(0|4): stabilizer of <x1> gives a 4-dim degree-1 part") {
    auto g = build_algebra(Series::HPrime, 4);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = span_rows(A, -1, {fun_el(ex, {{0b0001, 1}})});
    auto s = cartan_prolong(A, V, stabilizer(A, V));
    CHECK(s.dim_at(-1) == 1);
    CHECK(s.dim_at(0) == 4);
    CHECK(s.dim_at(1) == 4);
}

TEST_CASE("v_star(g_{-1}) is the whole algebra") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    CHECK(v_star(A, full_component(A, -1)).dim() == g->dim());
}

TEST_CASE("v_star(<d1>, vect(0|3)) matches the two-summand enumeration") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = span_rows(A, -1, {field_el(ex, {{0, 0}})});
    auto vs = v_star(A, V);

    // independent oracle: Lambda(x2,x3) (x) vect(x1)  +  Lambda(x1) (x) vect_{>=0}(x2,x3),
    // enumerated monomial by monomial
    std::vector<std::pair<Mono, int>> members;
    for (Mono tail = 0; tail < 8; ++tail) {
        if (tail & 0b001) continue;
        for (Mono head = 0; head < 2; ++head)
            for (int j = 0; j < 3; ++j) {
                Mono m = tail | head;
                if (j == 0)
                    members.emplace_back(m, j);  // any Lambda(x2,x3) factor times vect(x1)
                else if (mono_deg(tail) >= 1)
                    members.emplace_back(m, j);  // vect_{>=0}(x2,x3) needs tail degree >= 1
            }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::map<int, int> expected;
    for (auto [m, j] : members) {
        expected[mono_deg(m) - 1]++;
        CHECK(vs.contains(field_el(ex, {{m, j}})));
    }
    CHECK(static_cast<int>(members.size()) == 20);
    CHECK(vs.dim() == 20);
    CHECK(vs.dims() == expected);
}

TEST_CASE("monotonicity: enlarging b_0 never shrinks the prolong") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = full_component(A, -1);
    std::vector<Element<Rational>> borel, diag;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) {
            auto e = field_el(ex, {{Mono(1) << i, j}});
            borel.push_back(e);
            if (i == j) diag.push_back(e);
        }
    auto s_small = cartan_prolong(A, V, span_rows(A, 0, diag));
    auto s_big = cartan_prolong(A, V, span_rows(A, 0, borel));
    for (const auto& [d, e] : s_small.comp) {
        (void)e;
        CHECK(s_big.dim_at(d) >= s_small.dim_at(d));
    }
    auto vs = v_star(A, full_component(A, -1));
    CHECK(vs.contains_sub(s_big));
    CHECK(vs.contains_sub(s_small));
}

TEST_CASE("prolongs are bracket-closed and reproduce their own closure") {
    auto g = build_algebra(Series::Vect, 3);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    auto V = span_rows(A, -1, {field_el(ex, {{0, 0}})});
    auto vs = v_star(A, V);
    auto cl = closure(A, vs.elements()).sub;
    CHECK(cl == vs);
}

TEST_CASE("v_star(<x1>, h(0|6)) contains the W ideal") {
    auto g = build_algebra(Series::H, 6);
    AlgebraOver<QField> A(g, QField{});
    ModelExpresser ex(g);
    Mono x1 = 1;  // V = <xi_1>: isotropic line, the complement pairs form the beta block
    auto V = span_rows(A, -1, {fun_el(ex, {{x1, 1}})});
    auto vs = v_star(A, V);
    // W = monomials with deg_{xi_1} + deg_beta >= 2; sample both mixed types
    Mono x3 = 0b100, e3 = 0b100 << 3;
    CHECK(vs.contains(fun_el(ex, {{x3 | e3 | (Mono(0b010) << 3), 1}})));  // x3.e3.e2 in W^{0,2}
    CHECK(vs.contains(fun_el(ex, {{x1 | x3, 1}})));                       // x1.x3 in W^{1,1}
    // eta_1 does not preserve V
    CHECK_FALSE(vs.contains(fun_el(ex, {{Mono(1) << 3, 1}})));
}
