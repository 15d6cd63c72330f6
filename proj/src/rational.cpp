#include "maxdicut/rational.hpp"

#include <cctype>

namespace maxdicut {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational abs(const Rational& a) {
    Rational r;
    r.v_ = abs(a.v_);
    return r;
}

Rational Rational::pow(unsigned e) const {
    Rational acc(1);
    Rational base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s = text.substr(b, e - b);
    if (s.empty()) return std::nullopt;

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) return std::nullopt;

    mpq_class v;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return std::nullopt;
        mpz_class den(q);
        if (den == 0) return std::nullopt;
        v = mpq_class(mpz_class(p), den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if (!ip.empty() && !all_digits(ip)) return std::nullopt;
        if (!fp.empty() && !all_digits(fp)) return std::nullopt;
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class num = (ip.empty() ? mpz_class(0) : mpz_class(ip)) * scale +
                        (fp.empty() ? mpz_class(0) : mpz_class(fp));
        v = mpq_class(num, scale);
    } else {
        if (!all_digits(s)) return std::nullopt;
        v = mpq_class(mpz_class(s));
    }
    v.canonicalize();
    if (neg) v = -v;
    Rational r;
    r.v_ = v;
    return r;
}

namespace {

// Largest integer m with m^k <= t; requires t >= 0.
mpz_class root_floor(const mpz_class& t, unsigned k) {
    mpz_class r;
    mpz_root(r.get_mpz_t(), t.get_mpz_t(), k);
    return r;
}

mpz_class floor_of(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

mpq_class shifted(const mpq_class& q, unsigned long bits) {
    mpq_class r;
    mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), bits);
    return r;
}

mpq_class dyadic64(const mpz_class& m) {
    mpq_class r;
    mpq_div_2exp(r.get_mpq_t(), mpq_class(m).get_mpq_t(), 64);
    return r;
}

}  // namespace

Rational sqrt_lower_bound(const Rational& x) {
    if (x.is_negative()) throw std::domain_error("sqrt_lower_bound: negative input");
    // (m/2^64)^2 <= x iff m^2 <= x*2^128 iff m^2 <= floor(x*2^128), so the
    // integer floor square root is exactly the largest admissible m.
    Rational r;
    r.v_ = dyadic64(root_floor(floor_of(shifted(x.v_, 128)), 2));
    return r;
}

Rational cbrt_upper_bound(const Rational& x) {
    if (x.is_negative()) throw std::domain_error("cbrt_upper_bound: negative input");
    // Smallest m with m^3 >= x*2^192: the floor root, bumped unless exact.
    const mpq_class scaled = shifted(x.v_, 192);
    mpz_class m = root_floor(floor_of(scaled), 3);
    const mpz_class cube = m * m * m;
    if (cmp(mpq_class(cube), scaled) < 0) ++m;
    Rational r;
    r.v_ = dyadic64(m);
    return r;
}

Rational pow35_lower_bound(const Rational& x) {
    if (x.is_negative()) throw std::domain_error("pow35_lower_bound: negative input");
    // (m/2^64)^5 <= x^3 iff m^5 <= floor(x^3 * 2^320).
    const mpq_class x3 = x.v_ * x.v_ * x.v_;
    Rational r;
    r.v_ = dyadic64(root_floor(floor_of(shifted(x3, 320)), 5));
    return r;
}

}  // namespace maxdicut
