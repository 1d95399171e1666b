#include "qhowe/module_vector.hpp"

#include <sstream>

namespace qhowe {

std::string SpaceDesc::str() const {
    std::ostringstream os;
    os << "T(" << flavor.str() << "," << m << "|" << n << "," << d << ")";
    return os.str();
}

std::vector<IndexMatrix> spaceBasis(const SpaceDesc& space, std::size_t cap) {
    return enumerateMatrices(space.flavor, space.m, space.n, space.d, cap);
}

std::string formatTerm(const std::string& coeff, const std::string& label) {
    if (coeff == "1") return label;
    bool simple = coeff.find_first_of("+-") == std::string::npos ||
                  (coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos);
    if (simple) return coeff + " * " + label;
    return "(" + coeff + ") * " + label;
}

template <>
std::string FormalSum<Laurent>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        os << formatTerm(c.str(), l.rowsStr());
        first = false;
    }
    return os.str();
}

template <>
std::string FormalSum<RatFunc>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        os << formatTerm(c.str(), l.rowsStr());
        first = false;
    }
    return os.str();
}

RatVector toRational(const ModuleVector& v) {
    RatVector r(v.space());
    for (const auto& [l, c] : v.terms()) r.add(l, RatFunc(c));
    return r;
}

ModuleVector toLaurentVector(const RatVector& v) {
    ModuleVector r(v.space());
    for (const auto& [l, c] : v.terms()) r.add(l, c.toLaurent());
    return r;
}

}  // namespace qhowe
