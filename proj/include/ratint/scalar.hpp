#ifndef RATINT_SCALAR_HPP
#define RATINT_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ratint {

enum class FieldMode { Exact, Float64 };

/// Thresholds for deciding "numerically zero" in Float64 mode.
/// Exact mode ignores both: zero means identically zero.
struct ZeroTest {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;

    double threshold(double scale) const { return abs_tol + rel_tol * scale; }
};

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient-field element: exact rational (lowest terms, positive
/// denominator) or a finite binary64. Both operands of any arithmetic
/// operation must carry the same mode.
class Scalar {
public:
    Scalar() : mode_(FieldMode::Exact), q_(0), d_(0.0) {}

    static Scalar exact(long num, long den = 1);
    static Scalar exact(mpq_class v);
    static Scalar fp(double v);  // rejects NaN and infinities
    static Scalar zero(FieldMode m) { return m == FieldMode::Exact ? exact(0) : fp(0.0); }
    static Scalar one(FieldMode m) { return m == FieldMode::Exact ? exact(1) : fp(1.0); }

    /// Parses "p/q", integer, or plain decimal literals. Exact mode keeps
    /// decimals exact (e.g. "1.75" -> 7/4); float mode accepts anything
    /// strtod does, plus "p/q".
    static Scalar parse(const std::string& text, FieldMode m);

    FieldMode mode() const { return mode_; }
    bool is_zero() const;  // structural zero (float: == 0.0)
    int cmp(const Scalar& o) const;

    bool operator==(const Scalar& o) const { return cmp(o) == 0; }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by structural zero
    Scalar operator-() const;
    Scalar abs() const;

    /// +1 iff the value is >= 0, else -1. Zero maps to +1.
    int sgn() const;

    double to_double() const;
    const mpq_class& rat() const;

    /// Exact: "p" or "p/q". Float: shortest round-trip decimal.
    std::string str() const;

private:
    Scalar(FieldMode m, mpq_class q, double d) : mode_(m), q_(std::move(q)), d_(d) {}
    void require_same_mode(const Scalar& o) const;

    FieldMode mode_;
    mpq_class q_;  // valid when mode_ == Exact
    double d_;     // valid when mode_ == Float64
};

/// Exact mode: true iff s = 0. Float mode: |s| <= abs_tol + rel_tol * scale.
bool scalar_is_zero(const Scalar& s, double scale, const ZeroTest& zt);

}  // namespace ratint

#endif
