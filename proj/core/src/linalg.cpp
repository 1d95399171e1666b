#include "qhowe/linalg.hpp"

#include <stdexcept>

namespace qhowe {

namespace {

// Pivot preference: fewer total polynomial coefficients keeps later
// eliminations cheap. Smaller is better.
long pivotCost(const RatFunc& x) {
    return static_cast<long>(x.num().degree() + 1) + static_cast<long>(x.den().degree() + 1);
}

}  // namespace

LinearSolution solveLinear(RatMatrix a, std::vector<RatFunc> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("solveLinear: ragged matrix");
    const bool homogeneous = rhs.empty();
    if (!homogeneous && rhs.size() != rows)
        throw std::invalid_argument("solveLinear: rhs size mismatch");
    if (homogeneous) rhs.assign(rows, RatFunc());

    std::vector<int> pivotColOfRow;
    std::vector<int> pivotRowOfCol(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = rows;
        long bestCost = 0;
        for (std::size_t r = row; r < rows; ++r) {
            if (a[r][col].zero()) continue;
            long c = pivotCost(a[r][col]);
            if (best == rows || c < bestCost) {
                best = r;
                bestCost = c;
            }
        }
        if (best == rows) continue;
        std::swap(a[row], a[best]);
        std::swap(rhs[row], rhs[best]);
        RatFunc inv = a[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!a[row][c].zero()) a[row][c] *= inv;
        rhs[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].zero()) continue;
            RatFunc factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!a[row][c].zero()) a[r][c] -= factor * a[row][c];
            if (!rhs[row].zero()) rhs[r] -= factor * rhs[row];
        }
        pivotColOfRow.push_back(static_cast<int>(col));
        pivotRowOfCol[col] = static_cast<int>(row);
        ++row;
    }

    LinearSolution sol;
    sol.rank = static_cast<int>(row);
    sol.solvable = true;
    for (std::size_t r = row; r < rows; ++r)
        if (!rhs[r].zero()) sol.solvable = false;

    if (sol.solvable) {
        sol.particular.assign(cols, RatFunc());
        for (std::size_t r = 0; r < row; ++r)
            sol.particular[static_cast<std::size_t>(pivotColOfRow[r])] = rhs[r];
    }

    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (pivotRowOfCol[freeCol] != -1) continue;
        std::vector<RatFunc> v(cols, RatFunc());
        v[freeCol] = RatFunc(1);
        for (std::size_t r = 0; r < row; ++r) {
            const auto pc = static_cast<std::size_t>(pivotColOfRow[r]);
            v[pc] = -a[r][freeCol];
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

int matrixRank(RatMatrix a) {
    return solveLinear(std::move(a), {}).rank;
}

std::vector<std::vector<RatFunc>> kernelBasis(const RatMatrix& a) {
    return solveLinear(a, {}).kernel;
}

}  // namespace qhowe
