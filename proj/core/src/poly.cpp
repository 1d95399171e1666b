#include "qhowe/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qhowe {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(long value) {
    if (value != 0) c_.push_back(BigInt(value));
}

IntPoly::IntPoly(const BigInt& value) {
    if (value != 0) c_.push_back(value);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::q(int exp) {
    if (exp < 0) throw std::invalid_argument("IntPoly::q: negative exponent");
    std::vector<BigInt> v(static_cast<std::size_t>(exp) + 1, BigInt(0));
    v.back() = 1;
    return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::leading() const {
    if (zero()) throw std::domain_error("IntPoly: leading of zero");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (zero() || o.zero()) return IntPoly();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitivePart() const {
    if (zero()) return IntPoly();
    return divideCoeffs(content());
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    std::vector<BigInt> v(c_);
    for (auto& x : v) x *= k;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divideCoeffs(const BigInt& k) const {
    if (k == 0) throw std::domain_error("IntPoly::divideCoeffs: zero divisor");
    std::vector<BigInt> v(c_);
    for (auto& x : v) {
        BigInt qv, r;
        mpz_tdiv_qr(qv.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        if (r != 0) throw std::domain_error("IntPoly::divideCoeffs: not divisible");
        x = qv;
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divideExact(const IntPoly& divisor) const {
    if (divisor.zero()) throw std::domain_error("IntPoly::divideExact: zero divisor");
    if (zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw std::domain_error("IntPoly::divideExact: not divisible (degree)");
    std::vector<BigInt> rem(c_);
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1, BigInt(0));
    const auto& lead = divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + divisor.degree())];
        if (top == 0) continue;
        BigInt qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::domain_error("IntPoly::divideExact: not divisible (coeff)");
        quot[static_cast<std::size_t>(k)] = qc;
        for (int i = 0; i <= divisor.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= qc * divisor.coeff(i);
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("IntPoly::divideExact: nonzero remainder");
    return IntPoly(std::move(quot));
}

namespace {

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, computed in Z[q].
IntPoly pseudoRem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        IntPoly t = IntPoly::q(shift).scaled(a.leading());
        a = a.scaled(b.leading()) - t * b;
    }
    return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.zero() && b.zero()) return IntPoly();
    if (a.zero()) return b.primitivePart().leading() < 0 ? -b.primitivePart() : b.primitivePart();
    if (b.zero()) return a.primitivePart().leading() < 0 ? -a.primitivePart() : a.primitivePart();
    IntPoly f = a.primitivePart();
    IntPoly g = b.primitivePart();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.zero()) {
        IntPoly r = pseudoRem(f, g).primitivePart();
        f = g;
        g = r;
    }
    if (f.leading() < 0) f = -f;
    return f;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::evalRational(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

bool IntPoly::isMonomial() const {
    if (zero()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::string IntPoly::str() const { return toLaurent().str(); }

IntPoly IntPoly::fromLaurent(const Laurent& x, int& shiftOut) {
    if (x.zero()) {
        shiftOut = 0;
        return IntPoly();
    }
    shiftOut = std::min(0, x.lowestExp());
    std::vector<BigInt> v(static_cast<std::size_t>(x.highestExp() - shiftOut) + 1, BigInt(0));
    for (const auto& [e, c] : x.terms()) v[static_cast<std::size_t>(e - shiftOut)] = c;
    return IntPoly(std::move(v));
}

Laurent IntPoly::toLaurent(int shift) const {
    Laurent r;
    for (int k = 0; k <= degree(); ++k)
        if (coeff(k) != 0) r += Laurent::monomial(k + shift, coeff(k));
    return r;
}

}  // namespace qhowe
