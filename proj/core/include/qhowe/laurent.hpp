#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace qhowe {

using BigInt = mpz_class;

/**
 * Laurent: sparse integer Laurent polynomial in the quantum parameter q.
 *
 * The canonical representation maps exponents to nonzero arbitrary-precision
 * coefficients; a value has exactly one representation, so operator== is
 * structural. All arithmetic is exact. Values are immutable-in-spirit:
 * operations return fresh values and never expose internal storage for
 * mutation.
 */
class Laurent {
public:
    Laurent() = default;
    Laurent(long value) { if (value != 0) terms_[0] = BigInt(value); }
    explicit Laurent(const BigInt& value) { if (value != 0) terms_[0] = value; }

    /// q^exp with unit coefficient.
    static Laurent q(int exp = 1) { return monomial(exp, BigInt(1)); }

    static Laurent monomial(int exp, BigInt coeff) {
        Laurent r;
        if (coeff != 0) r.terms_[exp] = std::move(coeff);
        return r;
    }

    bool zero() const { return terms_.empty(); }
    bool isOne() const;

    const std::map<int, BigInt>& terms() const { return terms_; }

    /// Coefficient of q^exp (zero if absent).
    BigInt coeff(int exp) const;

    int lowestExp() const;   // throws on zero
    int highestExp() const;  // throws on zero

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    Laurent pow(unsigned k) const;

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// The bar involution q -> q^{-1}.
    Laurent bar() const;

    /// Shift every exponent by delta (multiplication by q^delta).
    Laurent shifted(int delta) const;

    /// Evaluate at q = 1.
    BigInt evalOne() const;

    /// [n] = (q^n - q^{-n})/(q - q^{-1}); [0] = 0, [-n] = -[n].
    static Laurent quantumInteger(long n);
    /// [n]! ; rejects negative n.
    static Laurent quantumFactorial(long n);
    /// [n]!! = [n][n-2]...[2] for even n >= 0; rejects odd or negative n.
    static Laurent quantumDoubleFactorial(long n);

    /// Canonical text form: terms in increasing exponent, e.g. "q^-2 + 1 + q^2".
    std::string str() const;
    /// Parses the same grammar str() produces (signs, optional "c*" factors).
    static Laurent parse(const std::string& text);

private:
    std::map<int, BigInt> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& x);

}  // namespace qhowe
