#pragma once

#include <map>
#include <string>

#include "qhowe/indexsets.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/ratfunc.hpp"

namespace qhowe {

/// Identifies one finite bimodule: family/flavors plus (m, n, d).
struct SpaceDesc {
    Flavor flavor;
    int m = 1, n = 1, d = 0;

    bool operator==(const SpaceDesc&) const = default;
    std::string str() const;
};

/// Basis labels of the space, in the canonical enumeration order.
std::vector<IndexMatrix> spaceBasis(const SpaceDesc& space, std::size_t cap = 200000);

/**
 * FormalSum: finite formal combination of IndexMatrix labels with exact
 * scalar coefficients. Zero coefficients are never stored.
 */
template <class Scalar>
class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(SpaceDesc space) : space_(std::move(space)) {}

    static FormalSum basisVector(SpaceDesc space, const IndexMatrix& label) {
        FormalSum v(std::move(space));
        v.add(label, Scalar(1));
        return v;
    }

    const SpaceDesc& space() const { return space_; }
    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<IndexMatrix, Scalar>& terms() const { return terms_; }

    Scalar coeff(const IndexMatrix& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(const IndexMatrix& label, const Scalar& c) {
        if (c == Scalar(0)) return;
        auto it = terms_.find(label);
        if (it == terms_.end()) {
            terms_.emplace(label, c);
        } else {
            it->second += c;
            if (it->second == Scalar(0)) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [l, c] : o.terms_) add(l, Scalar(0) - c);
        return *this;
    }
    FormalSum operator+(const FormalSum& o) const { FormalSum r = *this; r += o; return r; }
    FormalSum operator-(const FormalSum& o) const { FormalSum r = *this; r -= o; return r; }

    FormalSum scaled(const Scalar& k) const {
        FormalSum r(space_);
        if (k == Scalar(0)) return r;
        for (const auto& [l, c] : terms_) r.add(l, c * k);
        return r;
    }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const FormalSum& o) const { return !(*this == o); }

    std::string str() const;

private:
    SpaceDesc space_;
    std::map<IndexMatrix, Scalar> terms_;
};

using ModuleVector = FormalSum<Laurent>;
using RatVector = FormalSum<RatFunc>;

RatVector toRational(const ModuleVector& v);
/// Throws if any coefficient fails to be Laurent.
ModuleVector toLaurentVector(const RatVector& v);

std::string formatTerm(const std::string& coeff, const std::string& label);

}  // namespace qhowe
