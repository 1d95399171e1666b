#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qhowe/module_vector.hpp"

namespace qhowe {

/// Dense matrix over the prime field F_p (p fits a machine word).
class FpMatrix {
public:
    FpMatrix(int rows, int cols, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint32_t v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v % p_; }

    /// In-place reduced row echelon form; returns the rank.
    int rref();
    FpMatrix transposed() const;
    static FpMatrix stacked(const FpMatrix& top, const FpMatrix& bottom);
    FpMatrix multiply(const FpMatrix& o) const;
    /// Basis of the right kernel, one row per basis vector.
    FpMatrix kernel() const;

    bool operator==(const FpMatrix&) const = default;

private:
    int rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

/// Subspace of F_p^n held in canonical RREF basis form (unique per subspace).
class Subspace {
public:
    Subspace(FpMatrix basis);  // canonicalizes
    static Subspace zero(std::uint32_t p, int ambient);
    static Subspace full(std::uint32_t p, int ambient);

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    std::uint32_t p() const { return basis_.p(); }
    const FpMatrix& basis() const { return basis_; }

    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const;

private:
    FpMatrix basis_;
};

Subspace sumSpace(const Subspace& u, const Subspace& w);
Subspace intersection(const Subspace& u, const Subspace& w);
/// Orthogonal complement with respect to the bilinear form given by gram.
Subspace perp(const Subspace& u, const FpMatrix& gram);
bool isIsotropic(const Subspace& u, const FpMatrix& gram);

/// Gram matrix of the family's fixed form on the ambient space of size
/// 2d+1 (B, symmetric) or 2d (C, skew).
FpMatrix gramMatrix(Family family, int d, std::uint32_t p);

/**
 * Flag: increasing chain of subspaces.
 * Family A: steps V_0 .. V_n with V_0 = 0, V_n = full.
 * Families B/C: steps V_{-n-1/2} .. V_{n+1/2} stored as 2n+2 entries with
 * the perpendicularity condition built in at enumeration time.
 */
struct Flag {
    Family family = Family::A;
    SideFlavor flavor = SideFlavor::Jay;
    int n = 1;
    int d = 0;
    std::vector<Subspace> steps;

    Composition jumps() const;
    bool operator<(const Flag& o) const { return steps < o.steps; }
    bool operator==(const Flag&) const = default;
};

/// All subspaces X with lower <= X <= upper and dim(X) = dim.
std::vector<Subspace> subspacesBetween(const Subspace& lower, const Subspace& upper, int dim);

std::vector<Flag> enumerateFlags(Family family, SideFlavor flavor, int n, int d, std::uint32_t p,
                                 std::size_t cap = 500000);

/// Standard flag with the given jump composition (basis-prefix spans).
Flag standardFlag(const Composition& gamma, std::uint32_t p);

/// Relative-position matrix of a flag pair; lands in the label set named by
/// the two flavors.
IndexMatrix orbitInvariant(const Flag& f, const Flag& g);

struct FlagTable {
    std::vector<Flag> flags;
};

/// Cache of enumerated flag lists keyed by (family, flavor, n, d, p), plus
/// memoized orbit representatives.
class FlagCache {
public:
    const FlagTable& get(Family family, SideFlavor flavor, int n, int d, std::uint32_t p);
    const std::pair<Flag, Flag>& representative(const IndexMatrix& cMat, std::uint32_t p);

private:
    std::map<std::tuple<int, int, int, int, std::uint32_t>, FlagTable> tables_;
    std::map<std::pair<IndexMatrix, std::uint32_t>, std::pair<Flag, Flag>> reps_;
};

/// Fiber count kappa_{A,B,C;p}: fixes a pair with invariant cMat and counts
/// middle flags f with inv(f1,f)=aMat and inv(f,f2)=bMat.
long convolveCount(const IndexMatrix& aMat, const IndexMatrix& bMat, const IndexMatrix& cMat,
                   std::uint32_t p, FlagCache& cache);

/// Same count from an explicitly chosen representative pair (for the
/// representative-independence property).
long convolveCountFromPair(const IndexMatrix& aMat, const IndexMatrix& bMat, const Flag& f1,
                           const Flag& f2, FlagCache& cache);

/// Representative pairs of the orbit with the given invariant, up to limit.
std::vector<std::pair<Flag, Flag>> orbitRepresentatives(const IndexMatrix& cMat, std::uint32_t p,
                                                        FlagCache& cache, std::size_t limit);

/// Lagrange interpolation through (p, count) samples in the abstract
/// field-size variable; the last sample verifies the fit. Coefficients must
/// be integers. Throws when the degree bound is too small.
std::vector<BigInt> interpolateStructureConstant(
    const std::vector<std::pair<std::uint32_t, long>>& samples, int degreeBound);

struct OracleOptions {
    std::vector<std::uint32_t> primes = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    int degreeBound = -1;   // default: d*d
    int orientation = -1;   // substitution x -> q^{2*orientation}
};

/// Full convolution product [A]*[B] in the normalized basis, assembled from
/// finite-field counts, interpolation, and the normalization exponents.
ModuleVector oracleProduct(const IndexMatrix& aMat, const IndexMatrix& bMat,
                           const OracleOptions& opts, FlagCache& cache);

/// Laurent value of an interpolated polynomial under x -> q^{2*orientation}.
Laurent substituteOrientation(const std::vector<BigInt>& poly, int orientation);

}  // namespace qhowe
