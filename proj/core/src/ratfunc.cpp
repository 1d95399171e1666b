#include "qhowe/ratfunc.hpp"

#include <stdexcept>

namespace qhowe {

RatFunc::RatFunc(const Laurent& x) {
    int shift = 0;
    num_ = IntPoly::fromLaurent(x, shift);
    den_ = IntPoly::q(-shift);
    reduce();
}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0 || g != IntPoly(1)) {
        num_ = num_.divideExact(g);
        den_ = den_.divideExact(g);
    }
    BigInt cn = num_.content(), cd = den_.content();
    BigInt c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        num_ = num_.divideCoeffs(c);
        den_ = den_.divideCoeffs(c);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

bool RatFunc::isLaurent() const {
    return den_.isMonomial() && den_.leading() == 1;
}

Laurent RatFunc::toLaurent() const {
    if (!isLaurent()) throw std::domain_error("RatFunc::toLaurent: value not in Z[q,q^-1]");
    return num_.toLaurent(-den_.degree());
}

mpq_class RatFunc::evalOne() const {
    BigInt d = den_.eval(BigInt(1));
    if (d == 0) throw std::domain_error("RatFunc::evalOne: denominator vanishes at q=1");
    mpq_class r(num_.eval(BigInt(1)), d);
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_ == IntPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qhowe
