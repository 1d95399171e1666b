#include "qhowe/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qhowe {

bool Laurent::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

BigInt Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent::lowestExp() const {
    if (zero()) throw std::domain_error("Laurent: lowestExp of zero");
    return terms_.begin()->first;
}

int Laurent::highestExp() const {
    if (zero()) throw std::domain_error("Laurent: highestExp of zero");
    return terms_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            BigInt prod = c1 * c2;
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e1 + e2, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::pow(unsigned k) const {
    Laurent r(1);
    Laurent base = *this;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Laurent Laurent::shifted(int delta) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + delta, c);
    return r;
}

BigInt Laurent::evalOne() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Laurent Laurent::quantumInteger(long n) {
    if (n < 0) return -quantumInteger(-n);
    Laurent r;
    for (long k = 0; k < n; ++k) r.terms_[static_cast<int>(n - 1 - 2 * k)] = 1;
    return r;
}

Laurent Laurent::quantumFactorial(long n) {
    if (n < 0) throw std::invalid_argument("quantumFactorial: negative argument");
    Laurent r(1);
    for (long k = 2; k <= n; ++k) r *= quantumInteger(k);
    return r;
}

Laurent Laurent::quantumDoubleFactorial(long n) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("quantumDoubleFactorial: argument must be even and nonnegative");
    Laurent r(1);
    for (long k = 2; k <= n; k += 2) r *= quantumInteger(k);
    return r;
}

std::string Laurent::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

void skipSpace(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

Laurent Laurent::parse(const std::string& text) {
    Laurent result;
    std::size_t i = 0;
    skipSpace(text, i);
    if (i == text.size()) throw std::invalid_argument("Laurent::parse: empty input");
    bool firstTerm = true;
    while (i < text.size()) {
        int sign = 1;
        skipSpace(text, i);
        if (!firstTerm) {
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw std::invalid_argument("Laurent::parse: expected '+' or '-'");
            }
            skipSpace(text, i);
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
            skipSpace(text, i);
        }
        // term: [digits] ['*'] ['q' ['^' int]]
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        skipSpace(text, i);
        if (i < text.size() && text[i] == '*') {
            ++i;
            skipSpace(text, i);
        }
        int exp = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool negExp = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    negExp = text[i] == '-';
                    ++i;
                }
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw std::invalid_argument("Laurent::parse: malformed exponent");
                exp = std::stoi(ed);
                if (negExp) exp = -exp;
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("Laurent::parse: malformed term");
        }
        result += monomial(exp, sign * coeff);
        firstTerm = false;
        skipSpace(text, i);
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.str(); }

}  // namespace qhowe
