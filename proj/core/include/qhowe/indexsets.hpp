#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qhowe {

enum class Family : std::uint8_t { A, B, C };
enum class SideFlavor : std::uint8_t { Jay, Iota };  // the two coideal flavors

/// Flavor of a basis-label matrix: matrix family plus the row-side and
/// column-side coideal flavors (ignored for family A).
struct Flavor {
    Family family = Family::A;
    SideFlavor row = SideFlavor::Jay;
    SideFlavor col = SideFlavor::Jay;

    bool operator==(const Flavor&) const = default;
    auto operator<=>(const Flavor&) const = default;

    std::string str() const;                     // "A", "Bji", "Cii", ...
    static Flavor parse(const std::string& s);   // inverse of str()
};

struct Composition;

/**
 * IndexMatrix: nonnegative integer matrix labelling a basis element.
 *
 * Family A: rows 1..m, columns 1..n, total d.
 * Family B: rows -m..m, columns -n..n, theta-symmetric (a_{ij} = a_{-i,-j}),
 *           total 2d+1, center odd; a side with flavor iota zeroes its
 *           0-line off center and forces the center to 1.
 * Family C: as B with total 2d, center even; iota zeroes the whole 0-line.
 */
class IndexMatrix {
public:
    IndexMatrix(Flavor flavor, int m, int n);  // zero matrix
    static IndexMatrix fromRows(Flavor flavor, int m, int n,
                                const std::vector<std::vector<int>>& rows);

    Flavor flavor() const { return flavor_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int rowLo() const { return flavor_.family == Family::A ? 1 : -m_; }
    int rowHi() const { return m_; }
    int colLo() const { return flavor_.family == Family::A ? 1 : -n_; }
    int colHi() const { return n_; }

    int at(int i, int j) const;
    /// Entry with the center read as (a00 - 1)/2 (B) or a00/2 (C).
    int sharpAt(int i, int j) const;

    int total() const;
    int d() const;

    Composition rowSums() const;
    Composition colSums() const;
    int rowSum(int i) const;
    int colSum(int j) const;

    /// A-family: this + delta * E_{ij}.
    IndexMatrix plusEntry(int i, int j, int delta) const;
    /// B/C: this + delta * E^theta_{ij} (center gets 2*delta).
    IndexMatrix plusTheta(int i, int j, int delta) const;

    IndexMatrix transposed() const;
    /// C -> B bijection: adds 1 at the center.
    IndexMatrix cShifted() const;

    /// nullopt when every structural invariant holds, else a message.
    std::optional<std::string> validate() const;

    bool operator==(const IndexMatrix& o) const;
    bool operator<(const IndexMatrix& o) const;

    std::string rowsStr() const;     // "[[0,1],[1,0]]", rows from lowest index
    std::string compactStr() const;  // "E[0,0] + 2*E[1,1]^th" style
    std::vector<std::vector<int>> rowsVec() const;

private:
    Flavor flavor_;
    int m_, n_;
    std::vector<int> e_;  // row-major

    int rows() const { return flavor_.family == Family::A ? m_ : 2 * m_ + 1; }
    int cols() const { return flavor_.family == Family::A ? n_ : 2 * n_ + 1; }
    std::size_t idx(int i, int j) const;
    friend std::vector<IndexMatrix> enumerateMatrices(Flavor, int, int, int, std::size_t);
};

/// Complete, duplicate-free, lexicographic (row-major) enumeration.
/// Throws std::length_error when the count would exceed cap.
std::vector<IndexMatrix> enumerateMatrices(Flavor flavor, int m, int n, int d,
                                           std::size_t cap = 200000);

/// Number of B/C "free" positions is implied; this counts |Theta_{m|n,d}|
/// without enumerating (multiset coefficient), used as a cross-check.
// (binomial(mn + d - 1, d))
unsigned long long thetaCount(int m, int n, int d);

/**
 * Composition: literal vector of row/column sums with its index range.
 * Family A: rank parts, sum d. Family B: symmetric, center odd (jay) or
 * exactly 1 (iota). Family C: center even (jay) or 0 (iota).
 */
struct Composition {
    Family family = Family::A;
    SideFlavor flavor = SideFlavor::Jay;
    int lo = 1;
    std::vector<int> parts;

    int rank() const;
    int at(int i) const { return parts.at(static_cast<std::size_t>(i - lo)); }
    int sum() const;
    int d() const;
    std::optional<std::string> validate() const;
    bool operator==(const Composition&) const = default;
    std::string str() const;
};

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros

std::vector<Partition> enumeratePartitions(int maxParts, int d);

/// Bipartition label (lambda_plus, lambda_minus) with flavor-dependent part
/// bounds: jay allows n+1 plus-parts, iota allows n.
struct BiPartition {
    Partition plus, minus;

    bool operator==(const BiPartition&) const = default;
    bool operator<(const BiPartition& o) const;
    std::string str() const;
};

std::vector<BiPartition> enumerateBiPartitions(SideFlavor flavor, int n, int d);

std::string familyStr(Family f);
std::string sideFlavorStr(SideFlavor f);

}  // namespace qhowe
