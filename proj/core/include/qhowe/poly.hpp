#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qhowe/laurent.hpp"

namespace qhowe {

/**
 * IntPoly: dense polynomial in q with arbitrary-precision integer
 * coefficients. Normal form strips leading zeros; the zero polynomial has an
 * empty coefficient vector and degree -1.
 *
 * Supplies exactly what RatFunc needs: ring arithmetic, exact division, and
 * a primitive-PRS gcd that keeps intermediate coefficients bounded.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long value);
    explicit IntPoly(const BigInt& value);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly q(int exp = 1);  // q^exp, exp >= 0

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const;
    const BigInt& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    /// gcd of all coefficients (positive); 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitivePart() const;
    IntPoly scaled(const BigInt& k) const;
    /// Divide every coefficient by k exactly; throws if not divisible.
    IntPoly divideCoeffs(const BigInt& k) const;

    /// Exact polynomial division; throws if the remainder is nonzero.
    IntPoly divideExact(const IntPoly& divisor) const;

    /// Positive-content primitive gcd via the subresultant PRS.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    BigInt eval(const BigInt& x) const;
    mpq_class evalRational(const mpq_class& x) const;

    /// True if the polynomial is c*q^k for some k (single term).
    bool isMonomial() const;

    std::string str() const;

    /// Laurent -> (poly, shift) with laurent = poly * q^{shift}, shift <= 0
    /// exactly when the Laurent has negative exponents.
    static IntPoly fromLaurent(const Laurent& x, int& shiftOut);
    Laurent toLaurent(int shift = 0) const;

private:
    std::vector<BigInt> c_;  // c_[k] multiplies q^k; invariant: back() != 0
    void trim();
};

}  // namespace qhowe
