#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

// Integer polynomial, coefficients ascending. The zero polynomial is the
// empty coefficient list (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(IntVec coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial constant(const Int& v) { return IntPolynomial(IntVec{v}); }
    static IntPolynomial x_power(std::size_t k) {
        IntVec c(k + 1, Int(0));
        c[k] = 1;
        return IntPolynomial(std::move(c));
    }

    const IntVec& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    IntPolynomial operator-() const;

    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned long k) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Int content() const;
    // this / content, leading sign preserved.
    IntPolynomial primitive_part() const;

    std::string to_string() const;  // "x^4 - 2x^3 - 2x + 1"

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    IntVec c_;
};

// Exact characteristic polynomial (Faddeev-LeVerrier, exact divisions only).
IntPolynomial charpoly(const IntMatrix& m);

// n-th cyclotomic polynomial, by recursive exact division of x^n - 1.
IntPolynomial cyclotomic(unsigned long n);

// Euler phi, matching the cyclotomic generator's degree.
unsigned long euler_phi(unsigned long n);

bool is_reciprocal(const IntPolynomial& p);

// q with p(x) = x^{d/2} q(x + 1/x); throws unless p is reciprocal of even
// degree.
IntPolynomial trace_poly(const IntPolynomial& p);

// Quotient p/q when the division is exact over the integers.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& q);

// Primitive positive-leading gcd.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Distinct roots of the squarefree part of p counted per squarefree factor's
// multiplicity: pairs (factor, multiplicity) with product of factor^mult
// equal to p up to the (positive) content and leading sign.
std::vector<std::pair<IntPolynomial, long>> squarefree_decomposition(const IntPolynomial& p);

struct SturmBound {
    enum class Kind { minus_inf, finite, plus_inf };
    Kind kind = Kind::finite;
    Rat value;

    static SturmBound minus_inf() { return {Kind::minus_inf, Rat(0)}; }
    static SturmBound plus_inf() { return {Kind::plus_inf, Rat(0)}; }
    static SturmBound at(const Rat& v) { return {Kind::finite, v}; }
};

// Content-normalized signed remainder chain of the squarefree part.
struct SturmChain {
    std::vector<IntPolynomial> seq;

    static SturmChain build(const IntPolynomial& p);
    long variations(const SturmBound& b) const;
};

// Number of distinct real roots of p in (a, b].
long sturm_count(const IntPolynomial& p, const SturmBound& a, const SturmBound& b);

}  // namespace hyperlat
