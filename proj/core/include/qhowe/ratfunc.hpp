#pragma once

#include <string>

#include "qhowe/poly.hpp"

namespace qhowe {

/**
 * RatFunc: element of the rational-function field Q(q), stored as a reduced
 * fraction of integer polynomials. Normal form: gcd(num, den) = 1 as
 * polynomials, gcd of the two contents is 1, and the leading coefficient of
 * the denominator is positive. The form is unique, so operator== is
 * structural. Embeds Laurent losslessly (denominator a power of q).
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long value) : num_(value), den_(1) {}
    RatFunc(const Laurent& x);
    RatFunc(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool zero() const { return num_.zero(); }
    bool isOne() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// True when the value lies in Z[q, q^-1].
    bool isLaurent() const;
    Laurent toLaurent() const;  // throws when !isLaurent()

    /// Evaluate at q = 1; throws if the denominator vanishes there.
    mpq_class evalOne() const;

    std::string str() const;

private:
    IntPoly num_, den_;
    void reduce();
};

}  // namespace qhowe
