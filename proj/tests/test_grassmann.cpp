#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "superstructure/grassmann.hpp"

using namespace superstructure;

namespace {

SuperPoly<Rational> mono_q(Mono m, long c = 1) { return SuperPoly<Rational>::monomial(m, Rational(c)); }

template <class F>
SuperPoly<typename F::Elem> random_poly(const F& field, int n, std::mt19937_64& rng) {
    SuperPoly<typename F::Elem> f;
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<Mono> mono(0, (Mono(1) << n) - 1);
    for (int t = 0; t < 5; ++t) f.add_term(mono(rng), field(coef(rng)));
    return f;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    Rational a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - a).is_zero());
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational::from_string("7/21").str() == "1/3");
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational(1, 2).inverse() == Rational(2));
    CHECK_THROWS(Rational().inverse());

    PField f5(5);
    Zp x = f5(7), y = f5(-1);
    CHECK(x.v == 2);
    CHECK(y.v == 4);
    CHECK((x * y).v == 3);
    CHECK((x * x.inverse()).v == 1);
    CHECK(f5.from_rational(Rational(1, 2)).v == 3);  // 2^{-1} = 3 mod 5
    CHECK_THROWS(PField(2));
    CHECK_THROWS(PField(9));
    CHECK_THROWS(f5.from_rational(Rational(1, 5)));
    CHECK(PField(3).prime() == 3);  // allowed, discouraged
    CHECK(FieldSpec::parse("f7").p == 7);
    CHECK(FieldSpec::parse("q").is_q());
}

TEST_CASE("monomial product signs") {
    // x1 * x2 -> +x1x2 ; x2 * x1 -> -x1x2 ; x1 * x1 -> 0
    auto p = mono_mul(0b01, 0b10);
    CHECK(p.sign == 1);
    CHECK(p.m == 0b11);
    p = mono_mul(0b10, 0b01);
    CHECK(p.sign == -1);
    CHECK(p.m == 0b11);
    CHECK(mono_mul(0b01, 0b01).sign == 0);
}

TEST_CASE("canonical monomial order is graded lex") {
    // x1.x4 before x2.x3 (lex on index lists), despite bitmask order
    CHECK(mono_less(0b1001, 0b0110));
    CHECK(mono_less(0b011, 0b101));   // x1x2 < x1x3
    CHECK(mono_less(0b100, 0b011));   // degree first
}

TEST_CASE("partial derivatives") {
    SuperPoly<Rational> f = mono_q(0b11);  // x1x2
    CHECK(f.partial(0) == mono_q(0b10));   // d1(x1x2) = x2
    CHECK(f.partial(1) == -mono_q(0b01));  // d2(x1x2) = -x1
    CHECK(mono_q(0b10).partial(0).is_zero());

    // cross-check the d2 sign by the Leibniz rule on x1 * x2
    auto lhs = f.partial(1);
    auto rhs = mono_q(0b01).partial(1) * mono_q(0b10) - mono_q(0b01) * mono_q(0b10).partial(1);
    CHECK(lhs == rhs);
}

TEST_CASE("poly_mul examples") {
    auto f = mono_q(0b01) + mono_q(0b10);  // x1 + x2
    CHECK(f * mono_q(0b10) == mono_q(0b11));
    CHECK(mono_q(0) * f == f);
    CHECK((mono_q(0b11) * mono_q(0b10)).is_zero());
}

TEST_CASE("supercommutativity, exhaustive over monomials for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (Mono a = 0; a < (Mono(1) << n); ++a)
            for (Mono b = 0; b < (Mono(1) << n); ++b) {
                auto fg = mono_q(a) * mono_q(b);
                auto gf = mono_q(b) * mono_q(a);
                int sign = (mono_deg(a) & mono_deg(b) & 1) ? -1 : 1;
                CHECK(fg == (sign < 0 ? -gf : gf));
            }
    }
}

TEST_CASE("partials anticommute and square to zero, n <= 6") {
    int n = 6;
    for (Mono m = 0; m < (Mono(1) << n); ++m) {
        auto f = mono_q(m);
        for (int i = 0; i < n; ++i) {
            CHECK(f.partial(i).partial(i).is_zero());
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(f.partial(i).partial(j) == -f.partial(j).partial(i));
            }
        }
    }
}

TEST_CASE("Leibniz rule on random polynomials over Q and F_p") {
    std::mt19937_64 rng(20240611);
    QField q;
    PField f7(7);
    auto check_field = [&](const auto& field) {
        using K = typename std::decay_t<decltype(field)>::Elem;
        for (int trial = 0; trial < 40; ++trial) {
            int n = 5;
            auto f = random_poly(field, n, rng);
            auto g = random_poly(field, n, rng);
            auto [fe, fo] = f.parity_split();
            for (int i = 0; i < n; ++i) {
                SuperPoly<K> lhs = (f * g).partial(i);
                SuperPoly<K> rhs = f.partial(i) * g + fe * g.partial(i) - fo * g.partial(i);
                CHECK(lhs == rhs);
            }
        }
    };
    check_field(q);
    check_field(f7);
}

TEST_CASE("degree additivity when the product is nonzero") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Mono> mono(0, (Mono(1) << 6) - 1);
    for (int t = 0; t < 200; ++t) {
        Mono a = mono(rng), b = mono(rng);
        auto p = mono_mul(a, b);
        if (p.sign != 0) CHECK(mono_deg(p.m) == mono_deg(a) + mono_deg(b));
    }
}

TEST_CASE("homogeneous components and parity") {
    auto f = mono_q(0b1) + mono_q(0b111);
    CHECK(f.is_homogeneous() == false);
    CHECK(f.component(1) == mono_q(0b1));
    CHECK(f.component(3).parity() == 1);
    CHECK(mono_q(0b11).parity() == 0);
}
