#ifndef RATINT_POLY_HPP
#define RATINT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ratint/monomial.hpp"
#include "ratint/scalar.hpp"

namespace ratint {

using Point = std::vector<Scalar>;

/// Sparse multivariate polynomial. Terms are stored unordered (a canonical
/// map order keeps iteration deterministic); semantic term orders are applied
/// externally. No stored coefficient is a structural zero.
class Poly {
public:
    Poly(std::size_t arity, FieldMode mode) : arity_(arity), mode_(mode) {}

    static Poly zero(std::size_t arity, FieldMode mode) { return Poly(arity, mode); }
    static Poly constant(std::size_t arity, const Scalar& c);
    static Poly var(std::size_t arity, std::size_t i, FieldMode mode);
    /// x_var + c
    static Poly linear(std::size_t arity, std::size_t var, const Scalar& c);

    std::size_t arity() const { return arity_; }
    FieldMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// -1 for the zero polynomial.
    int total_deg() const;

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    /// Coefficient of m (zero Scalar of the right mode if absent).
    Scalar coeff(const Monomial& m) const;

    /// Adds c*m, accumulating and dropping structural zeros.
    void add_term(const Monomial& m, const Scalar& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;

    Scalar eval(const Point& y) const;
    /// Sum of |c| * |y|^m — the magnitude entering eval; float mode only.
    double eval_abs(const Point& y) const;

    /// q with q(X) = p(X + y).
    Poly shift(const Point& y) const;

    /// Coefficient of X^alpha in shift(y): the alpha-th normalized Taylor
    /// coefficient of p at y, i.e. (1/alpha!) * d^alpha p (y).
    Scalar taylor_coeff(const Point& y, const Monomial& alpha) const;
    /// Magnitude of the contributions accumulated into that coefficient
    /// (conditioning scale for zero tests); float mode only.
    double taylor_scale(const Point& y, const Monomial& alpha) const;

    /// Drops coefficients passing the zero test against scale 0.
    Poly normalized(const ZeroTest& zt) const;

    bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    /// Terms joined by " + ", each "coef*x^i*y^j" with zero exponents elided.
    std::string str(const std::vector<std::string>& varnames) const;

private:
    void require_same_shape(const Poly& o) const;

    std::size_t arity_;
    FieldMode mode_;
    std::map<Monomial, Scalar> terms_;
};

}  // namespace ratint

#endif
