#include "ratint/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace ratint {

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw ScalarError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(FieldMode::Exact, std::move(q), 0.0);
}

Scalar Scalar::exact(mpq_class v) {
    v.canonicalize();
    return Scalar(FieldMode::Exact, std::move(v), 0.0);
}

Scalar Scalar::fp(double v) {
    if (!std::isfinite(v)) throw ScalarError("non-finite float value");
    return Scalar(FieldMode::Float64, mpq_class(), v);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// "p/q", integer, or plain decimal -> exact rational
mpq_class parse_exact(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto bad = [&] { return ScalarError("cannot parse exact scalar '" + text + "'"); };
    mpq_class q;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        mpz_class d(den);
        if (d == 0) throw ScalarError("zero denominator in '" + text + "'");
        q = mpq_class(mpz_class(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw bad();
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        q = mpq_class(mpz_class(ip) * scale + mpz_class(fp.empty() ? "0" : fp), scale);
    } else {
        if (!all_digits(s)) throw bad();
        q = mpq_class(mpz_class(s));
    }
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, FieldMode m) {
    if (text.empty()) throw ScalarError("empty scalar literal");
    if (m == FieldMode::Exact) return exact(parse_exact(text));
    if (text.find('/') != std::string::npos) {
        mpq_class q = parse_exact(text);
        return fp(q.get_d());
    }
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + text.size()) throw ScalarError("cannot parse float scalar '" + text + "'");
    return fp(v);
}

bool Scalar::is_zero() const {
    return mode_ == FieldMode::Exact ? q_ == 0 : d_ == 0.0;
}

void Scalar::require_same_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw ScalarError("mixed-mode scalar arithmetic");
}

int Scalar::cmp(const Scalar& o) const {
    require_same_mode(o);
    if (mode_ == FieldMode::Exact) return ::cmp(q_, o.q_);
    if (d_ < o.d_) return -1;
    return d_ > o.d_ ? 1 : 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_mode(o);
    return mode_ == FieldMode::Exact ? exact(mpq_class(q_ + o.q_)) : fp(d_ + o.d_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_mode(o);
    return mode_ == FieldMode::Exact ? exact(mpq_class(q_ - o.q_)) : fp(d_ - o.d_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_mode(o);
    return mode_ == FieldMode::Exact ? exact(mpq_class(q_ * o.q_)) : fp(d_ * o.d_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_mode(o);
    if (o.is_zero()) throw ScalarError("scalar division by zero");
    return mode_ == FieldMode::Exact ? exact(mpq_class(q_ / o.q_)) : fp(d_ / o.d_);
}

Scalar Scalar::operator-() const {
    return mode_ == FieldMode::Exact ? exact(mpq_class(-q_)) : fp(-d_);
}

Scalar Scalar::abs() const {
    return mode_ == FieldMode::Exact ? exact(mpq_class(::abs(q_))) : fp(std::fabs(d_));
}

int Scalar::sgn() const {
    if (mode_ == FieldMode::Exact) return ::sgn(q_) >= 0 ? 1 : -1;
    return d_ >= 0.0 ? 1 : -1;
}

double Scalar::to_double() const {
    return mode_ == FieldMode::Exact ? q_.get_d() : d_;
}

const mpq_class& Scalar::rat() const {
    if (mode_ != FieldMode::Exact) throw ScalarError("rat() on a float scalar");
    return q_;
}

std::string Scalar::str() const {
    if (mode_ == FieldMode::Exact) {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d_);
    (void)ec;
    return std::string(buf, p);
}

bool scalar_is_zero(const Scalar& s, double scale, const ZeroTest& zt) {
    if (s.mode() == FieldMode::Exact) return s.is_zero();
    return std::fabs(s.to_double()) <= zt.threshold(scale);
}

}  // namespace ratint
