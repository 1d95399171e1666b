#pragma once

#include <vector>

#include "qhowe/ratfunc.hpp"

namespace qhowe {

using RatMatrix = std::vector<std::vector<RatFunc>>;

struct LinearSolution {
    bool solvable = false;
    int rank = 0;
    std::vector<RatFunc> particular;            // empty unless solvable
    std::vector<std::vector<RatFunc>> kernel;   // basis of the homogeneous solutions
};

/// Exact Gaussian elimination over Q(q). rhs may be empty for a homogeneous
/// system. Throws on dimension mismatch.
LinearSolution solveLinear(RatMatrix a, std::vector<RatFunc> rhs);

int matrixRank(RatMatrix a);

std::vector<std::vector<RatFunc>> kernelBasis(const RatMatrix& a);

}  // namespace qhowe
