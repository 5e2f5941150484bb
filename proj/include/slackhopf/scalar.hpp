// Exact field scalars: arbitrary-precision rationals (GMP-backed) and prime
// fields GF(p) with a runtime modulus. Both plug into Eigen dense matrices.
//
// Conventions enforced here:
//   - rationals are kept in lowest terms with positive denominator;
//   - GF(p) values are canonical residues in [0, p).
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <ostream>
#include <tuple>

#include <gmpxx.h>
#include <Eigen/Core>

#include "slackhopf/errors.hpp"

namespace slackhopf {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {} // NOLINT: implicit by design (Scalar(0), Scalar(1))
    Rational(long num, long den) {
        if (den == 0) throw ZeroInverse();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "n" or "n/d" with optional sign.
    static Rational parse(const std::string& text) {
        try {
            mpq_class q(text, 10);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw Error("malformed rational literal: '" + text + "'");
        }
    }

    bool is_zero() const { return q_ == 0; }

    Rational inverse() const {
        if (is_zero()) throw ZeroInverse();
        return Rational(mpq_class(1) / q_);
    }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroInverse();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

private:
    mpq_class q_;
};

// Prime-field element with the modulus carried by the value. Modulus 0 marks
// a plain integer literal (Eigen and generic code construct Scalar(0) and
// Scalar(1) without field context); it adopts the other operand's modulus on
// first contact.
class Fp {
public:
    Fp() = default;
    Fp(long n) : v_(n) {} // NOLINT: implicit by design, untagged literal
    Fp(long long n, std::uint32_t p) : p_(p) { v_ = reduce(n, p); }

    std::uint32_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }

    bool is_zero() const { return p_ ? v_ % static_cast<std::int64_t>(p_) == 0 : v_ == 0; }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            if (v_ == 0) throw ZeroInverse();
            throw Error("untagged integer has no inverse");
        }
        if (is_zero()) throw ZeroInverse();
        // extended Euclid on (v, p)
        std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m; a = m; m = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }

    std::string str() const { return std::to_string(canonical()); }

    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(-v_); }
    Fp& operator+=(const Fp& o) { auto [a, b, p] = align(*this, o); p_ = p; v_ = reduce(a + b, p); return *this; }
    Fp& operator-=(const Fp& o) { auto [a, b, p] = align(*this, o); p_ = p; v_ = reduce(a - b, p); return *this; }
    Fp& operator*=(const Fp& o) { auto [a, b, p] = align(*this, o); p_ = p; v_ = reduce(a * b, p); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        (void)p;
        return x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.canonical(); }

private:
    std::int64_t canonical() const { return reduce(v_, p_); }

    static std::int64_t reduce(std::int64_t n, std::uint32_t p) {
        if (p == 0) return n;
        std::int64_t r = n % static_cast<std::int64_t>(p);
        return r < 0 ? r + p : r;
    }

    // Returns reduced operands under the common modulus.
    static std::tuple<std::int64_t, std::int64_t, std::uint32_t> align(const Fp& a, const Fp& b) {
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw DimensionMismatch("GF(p) operands with different moduli");
        return {reduce(a.v_, p), reduce(b.v_, p), p};
    }

    std::uint32_t p_ = 0;
    std::int64_t v_ = 0;
};

// Field descriptor: factory for scalars plus the enumeration/sampling hooks
// used by exhaustive and randomized searches.
template <class K>
struct Field;

template <>
struct Field<Rational> {
    static constexpr bool finite = false;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_long(long n) const { return Rational(n); }
    Rational parse(const std::string& s) const { return Rational::parse(s); }

    std::size_t order() const { throw BoundExceeded("field of rationals is infinite"); }
    Rational nth(std::size_t) const { throw BoundExceeded("field of rationals is infinite"); }

    // Random search draws small integers; invertibility is Zariski-open, so
    // generic draws succeed whenever any slack structure exists.
    Rational random(std::mt19937_64& rng) const {
        return Rational(static_cast<long>(rng() % 7) - 3);
    }

    std::string name() const { return "QQ"; }
};

template <>
struct Field<Fp> {
    std::uint32_t p = 2;

    static constexpr bool finite = true;

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_long(long n) const { return Fp(n, p); }
    Fp parse(const std::string& s) const {
        try {
            return Fp(std::stoll(s), p);
        } catch (const std::exception&) {
            throw Error("malformed GF(p) literal: '" + s + "'");
        }
    }

    std::size_t order() const { return p; }
    Fp nth(std::size_t i) const { return Fp(static_cast<long long>(i), p); }

    Fp random(std::mt19937_64& rng) const { return Fp(static_cast<long long>(rng() % p), p); }

    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

} // namespace slackhopf

namespace Eigen {

template <>
struct NumTraits<slackhopf::Rational> : GenericNumTraits<slackhopf::Rational> {
    typedef slackhopf::Rational Real;
    typedef slackhopf::Rational NonInteger;
    typedef slackhopf::Rational Nested;
    typedef slackhopf::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<slackhopf::Fp> : GenericNumTraits<slackhopf::Fp> {
    typedef slackhopf::Fp Real;
    typedef slackhopf::Fp NonInteger;
    typedef slackhopf::Fp Nested;
    typedef slackhopf::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
