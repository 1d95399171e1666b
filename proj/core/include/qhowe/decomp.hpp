#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhowe/coord.hpp"
#include "qhowe/fock.hpp"
#include "qhowe/linalg.hpp"

namespace qhowe {

/// Dense exact matrix of an operator in the enumerated basis order;
/// column j holds the expansion of the j-th basis vector's image.
struct OperatorMatrix {
    SpaceDesc space;
    std::vector<IndexMatrix> basis;
    RatMatrix mat;
};

OperatorMatrix operatorMatrix(const GeneratorSymbol& g, const SpaceDesc& space,
                              bool coordModel = false);
OperatorMatrix operatorMatrixOfWords(const WordSum& ws, const SpaceDesc& space,
                                     bool coordModel = false);

/// Braid substitution applied symbol-wise to every word.
WordSum braidApply(SideFlavor flavor, int j, const WordSum& ws);

/// The Cartan-type elements t_i as evaluable words: for iota t_0 is the
/// generator itself, for jay it is the bracket expression; higher t_i arise
/// from the braid substitutions.
WordSum tElement(SideFlavor flavor, int i, Side side);

struct HighestWeightLine {
    std::vector<RatFunc> coords;      // over the space basis order
    std::vector<long> leftWeights;    // exponents of the left diagonal scalars
    std::vector<long> rightWeights;
    /// (i, eigenvalue) for each t_i of the report side that acts as a scalar
    /// on this line.
    std::vector<std::pair<int, RatFunc>> tEigen;
    std::string lambda;               // filled by verifyDecomposition
    std::string evidence;
};

/// Lines annihilated by the left raising and right lowering generators,
/// refined into joint diagonal eigenvectors. `reportSide` selects which
/// side's t-eigenvalues are attached.
std::vector<HighestWeightLine> jointHighestWeightVectors(const SpaceDesc& space, Side reportSide);

struct SpectrumReport {
    bool pass = false;
    bool annihilates = false;
    std::vector<long> spectrum;  // the k with [k+1] in the actual spectrum
    std::string detail;
};

/// Exact annihilation of prod_{k=-d..d} (t0 - [k+1]) and the squarefree
/// minimal factor within it. coordModel switches to the coordinate action.
SpectrumReport verifyT0Spectrum(const SpaceDesc& space, Side side, bool coordModel = false);

/// Dimension of the commutant of the given side's action, by exact
/// elimination over Q(q).
long centralizerDimension(const SpaceDesc& space, Side side);

/// Weyl dimension formula for a gl_rank highest weight (padded partition).
long weylDimension(const Partition& lambda, int rank);
long classicalDimensionA(const Partition& lambda, int rank);
/// Product over the two gl factors of the flavor's classical limit.
long classicalDimension(const BiPartition& lambda, SideFlavor flavor, int rank);

/// Dimension of the subbimodule generated by a vector (closure under all
/// generators of both sides).
long closureDimension(const SpaceDesc& space, const std::vector<RatFunc>& coords);

struct SummandInfo {
    std::string lambda;
    long leftDim = 0, rightDim = 0;
    std::string evidence;
};

struct DecompReport {
    SpaceDesc space;
    bool pass = false;
    bool countsOk = false, dimsOk = false, weightsOk = false, centralizerOk = true;
    long lineCount = 0, lambdaCount = 0, spaceDim = 0, dimSum = 0;
    long rightCommutant = -1, leftCommutant = -1, leftDimSqSum = 0, rightDimSqSum = 0;
    std::vector<SummandInfo> summands;
    std::vector<std::string> notes;
};

/// Multiplicity-free decomposition checks: line counts, dimension
/// accounting, weight prescriptions, and (optionally) both commutant
/// dimensions against the square-sum accounting.
DecompReport verifyDecomposition(const SpaceDesc& space, bool withCentralizer = true);

/// The label set of the decomposition: partitions for family A,
/// intersected bipartition sets for B/C.
std::vector<BiPartition> decompositionLabels(const SpaceDesc& space);

std::vector<long> prescribedSideWeights(Family family, SideFlavor flavor, int rank,
                                        const BiPartition& lambda);

}  // namespace qhowe
