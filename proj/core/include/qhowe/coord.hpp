#pragma once

#include <string>
#include <vector>

#include "qhowe/fock.hpp"
#include "qhowe/module_vector.hpp"

namespace qhowe {

struct CoordLetter {
    int i = 1, j = 1;
    bool operator==(const CoordLetter&) const = default;
    std::string str() const;
};

enum class CoordFlavor : std::uint8_t { A, BJay, BIota };

/// Word in matrix-coefficient letters t_{ij}. Family A uses indices 1..n,
/// B uses -n..n; the iota variant forbids letters with exactly one zero
/// index.
struct CoordWord {
    CoordFlavor flavor = CoordFlavor::A;
    int n = 1;
    std::vector<CoordLetter> letters;

    std::string str() const;
    /// Parses "t[1,2] t[2,1]" style literals.
    static CoordWord parse(CoordFlavor flavor, int n, const std::string& text);
};

enum class ReduceStrategy : std::uint8_t { LeftmostInversion, RightmostInversion };

/// Straightens a type-A word into the lexicographic monomial basis.
/// The result is independent of the strategy (confluence).
ModuleVector normalOrder(const CoordWord& w,
                         ReduceStrategy strategy = ReduceStrategy::LeftmostInversion);

/// Expresses the cyclic-vector image of a B-family word in the restricted
/// monomial basis, by the left-to-right recursion of the basis theorem.
ModuleVector reduceB(const CoordWord& w);

/// One letter times a basis monomial, in the restricted basis. Exposed for
/// tests of the recursion.
ModuleVector reduceBStep(const IndexMatrix& label, const CoordLetter& letter);

/**
 * Coordinate-side generator action on monomial-basis vectors.
 * Left symbols act through the column indices (the rank-n side), right
 * symbols through the row indices (the rank-m side), matching the
 * bimodule convention of the coordinate (co)algebras.
 */
ModuleVector actCoord(const GeneratorSymbol& g, const ModuleVector& v);
ModuleVector actCoordOnLabel(const GeneratorSymbol& g, const SpaceDesc& space,
                             const IndexMatrix& a);
RatVector actCoord(const GeneratorSymbol& g, const RatVector& v);

/// Conversion factor between the rescaled and monomial bases:
/// rescaled = q^exponent / denom * monomial.
struct RescaleFactor {
    long exponent = 0;
    Laurent denom = Laurent(1);
    RatFunc value() const;
};
RescaleFactor rescaleFactor(const IndexMatrix& a);

}  // namespace qhowe
