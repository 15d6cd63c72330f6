#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace maxdicut {

// Exact arbitrary-precision rational. Canonical invariant: denominator > 0
// and gcd(|numerator|, denominator) = 1 after every operation. All core
// arithmetic in the library runs on this type; floating point appears only
// in report rendering (to_double).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    // Accepts "p", "p/q" and plain decimal literals ("2.75", "-.5", "4.").
    // Returns nullopt on malformed input or a zero denominator.
    static std::optional<Rational> parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // "p" when the denominator is 1, otherwise "p/q"; bit-exact round-trip
    // through parse.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    friend Rational abs(const Rational& a);
    friend Rational sqrt_lower_bound(const Rational& x);
    friend Rational cbrt_upper_bound(const Rational& x);
    friend Rational pow35_lower_bound(const Rational& x);

    // a^e for small non-negative integer exponents (certificate checks).
    Rational pow(unsigned e) const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// Largest r = m/2^64 with r*r <= x; exact dyadic lower bound on sqrt(x).
Rational sqrt_lower_bound(const Rational& x);
// Smallest r = m/2^64 with r^3 >= x; exact dyadic upper bound on cbrt(x).
Rational cbrt_upper_bound(const Rational& x);
// Largest r = m/2^64 with r^5 <= x^3, i.e. a certified rational lower bound
// on x^(3/5); requires x >= 0.
Rational pow35_lower_bound(const Rational& x);

}  // namespace maxdicut
