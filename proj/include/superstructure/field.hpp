#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace superstructure {

/// Exact rational number (arbitrary precision, GMP-backed).  Always canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    static Rational from_string(const std::string& s) {
        Rational r;
        if (r.v_.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    /// Numerator as machine integer; throws if it does not fit.
    long num_long() const {
        if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: numerator too large");
        return v_.get_num().get_si();
    }
    long den_long() const {
        if (!v_.get_den().fits_slong_p()) throw std::overflow_error("Rational: denominator too large");
        return v_.get_den().get_si();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Residue modulo an odd prime.  p == 0 marks the zero of an unspecified
/// modulus so that default-constructed values combine with anything.
struct Zp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    bool is_zero() const { return v == 0; }

    static std::uint32_t unify(std::uint32_t a, std::uint32_t b) {
        if (a == 0) return b;
        if (b == 0 || a == b) return a;
        throw std::invalid_argument("Zp: mixed moduli");
    }

    Zp operator-() const { return {v == 0 ? 0u : p - v, p}; }
    friend Zp operator+(const Zp& a, const Zp& b) {
        std::uint32_t m = unify(a.p, b.p);
        if (m == 0) return {};
        return {(a.v + b.v) % m, m};
    }
    friend Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }
    friend Zp operator*(const Zp& a, const Zp& b) {
        std::uint32_t m = unify(a.p, b.p);
        if (m == 0) return {};
        return {static_cast<std::uint32_t>((std::uint64_t)a.v * b.v % m), m};
    }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }
    friend bool operator==(const Zp& a, const Zp& b) {
        unify(a.p, b.p);
        return a.v == b.v;
    }
    friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

    Zp inverse() const {
        if (v == 0) throw std::domain_error("Zp: inverse of zero");
        // extended Euclid
        std::int64_t a = v, m = p, x0 = 0, x1 = 1;
        std::int64_t b = m;
        while (a > 1) {
            std::int64_t q = a / b;
            std::int64_t t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        std::int64_t r = x1 % m;
        if (r < 0) r += m;
        return {static_cast<std::uint32_t>(r), p};
    }

    std::string str() const { return std::to_string(v); }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The rationals as a field context.
struct QField {
    using Elem = Rational;
    static constexpr bool modular = false;
    std::uint32_t prime() const { return 0; }
    Rational operator()(long n) const { return Rational(n); }
    Rational from_rational(const Rational& r) const { return r; }
};

/// F_p as a field context; p an odd prime (p = 2 rejected, p = 3 discouraged).
struct PField {
    using Elem = Zp;
    static constexpr bool modular = true;
    std::uint32_t p;

    explicit PField(std::uint32_t prime_) : p(prime_) {
        if (p == 2) throw std::invalid_argument("PField: characteristic 2 not supported");
        if (!is_prime_u32(p) || p < 3) throw std::invalid_argument("PField: modulus must be an odd prime >= 3");
    }
    std::uint32_t prime() const { return p; }
    Zp operator()(long n) const {
        long r = n % (long)p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r), p};
    }
    Zp from_rational(const Rational& r) const {
        Zp num = from_mpz(r.num());
        Zp den = from_mpz(r.den());
        if (den.is_zero())
            throw std::domain_error("PField: denominator divisible by " + std::to_string(p));
        return num * den.inverse();
    }

private:
    Zp from_mpz(const mpz_class& z) const {
        mpz_class r = z % p;
        long v = r.get_si();
        if (v < 0) v += p;
        return {static_cast<std::uint32_t>(v), p};
    }
};

/// Runtime tag for the coefficient field: p == 0 means Q, otherwise F_p.
struct FieldSpec {
    std::uint32_t p = 0;
    bool is_q() const { return p == 0; }
    std::string str() const { return p == 0 ? "q" : "f" + std::to_string(p); }

    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return {};
        if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F')) {
            std::uint32_t p = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
            PField check(p);  // validates
            return {p};
        }
        throw std::invalid_argument("field must be 'q' or 'f<p>' for an odd prime p, got '" + s + "'");
    }
};

}  // namespace superstructure
