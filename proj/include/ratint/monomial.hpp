#ifndef RATINT_MONOMIAL_HPP
#define RATINT_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace ratint {

/// Exponent vector in N^n. Ordering semantics (graded lex, chain order, ...)
/// live in the order module; operator< below is only a storage order for maps.
class Monomial {
public:
    Monomial() = default;  // arity 0
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    Monomial(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    static Monomial unit(std::size_t arity, std::size_t var) {
        Monomial m(arity);
        m.e_[var] = 1;
        return m;
    }

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t deg() const { return std::accumulate(e_.begin(), e_.end(), 0u); }
    bool is_constant() const { return deg() == 0; }

    bool divides(const Monomial& o) const {
        if (arity() != o.arity()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Monomial times_var(std::size_t var) const {
        Monomial r = *this;
        ++r.e_[var];
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    // storage order: degree, then exponent vector; not a semantic term order
    bool operator<(const Monomial& o) const {
        if (deg() != o.deg()) return deg() < o.deg();
        return e_ < o.e_;
    }

    const std::vector<std::uint32_t>& exps() const { return e_; }

private:
    std::vector<std::uint32_t> e_;
};

}  // namespace ratint

#endif
