#include "qhowe/indexsets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhowe {

std::string familyStr(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
    }
    return "?";
}

std::string sideFlavorStr(SideFlavor f) { return f == SideFlavor::Jay ? "j" : "i"; }

std::string Flavor::str() const {
    if (family == Family::A) return "A";
    return familyStr(family) + sideFlavorStr(row) + sideFlavorStr(col);
}

Flavor Flavor::parse(const std::string& s) {
    if (s == "A") return Flavor{Family::A, SideFlavor::Jay, SideFlavor::Jay};
    if (s.size() != 3 || (s[0] != 'B' && s[0] != 'C'))
        throw std::invalid_argument("Flavor::parse: expected A, B??, or C?? with ? in {j,i}: " + s);
    auto side = [&](char c) {
        if (c == 'j') return SideFlavor::Jay;
        if (c == 'i') return SideFlavor::Iota;
        throw std::invalid_argument("Flavor::parse: bad side flavor in " + s);
    };
    return Flavor{s[0] == 'B' ? Family::B : Family::C, side(s[1]), side(s[2])};
}

IndexMatrix::IndexMatrix(Flavor flavor, int m, int n) : flavor_(flavor), m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("IndexMatrix: negative size");
    if (flavor_.family == Family::A && (m < 1 || n < 1))
        throw std::invalid_argument("IndexMatrix: A-family needs m, n >= 1");
    e_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()), 0);
}

IndexMatrix IndexMatrix::fromRows(Flavor flavor, int m, int n,
                                  const std::vector<std::vector<int>>& rowsIn) {
    IndexMatrix a(flavor, m, n);
    if (static_cast<int>(rowsIn.size()) != a.rows())
        throw std::invalid_argument("IndexMatrix::fromRows: row count mismatch");
    for (int r = 0; r < a.rows(); ++r) {
        if (static_cast<int>(rowsIn[static_cast<std::size_t>(r)].size()) != a.cols())
            throw std::invalid_argument("IndexMatrix::fromRows: column count mismatch");
        for (int c = 0; c < a.cols(); ++c)
            a.e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(a.cols()) +
                 static_cast<std::size_t>(c)] = rowsIn[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    if (auto err = a.validate()) throw std::invalid_argument("IndexMatrix::fromRows: " + *err);
    return a;
}

std::size_t IndexMatrix::idx(int i, int j) const {
    if (i < rowLo() || i > rowHi() || j < colLo() || j > colHi())
        throw std::out_of_range("IndexMatrix: index out of range");
    return static_cast<std::size_t>(i - rowLo()) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(j - colLo());
}

int IndexMatrix::at(int i, int j) const { return e_[idx(i, j)]; }

int IndexMatrix::sharpAt(int i, int j) const {
    int v = at(i, j);
    if (flavor_.family != Family::A && i == 0 && j == 0) {
        if (flavor_.family == Family::B) {
            if (v % 2 == 0) throw std::domain_error("sharpAt: even center in B-family matrix");
            return (v - 1) / 2;
        }
        if (v % 2 != 0) throw std::domain_error("sharpAt: odd center in C-family matrix");
        return v / 2;
    }
    return v;
}

int IndexMatrix::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int IndexMatrix::d() const {
    int t = total();
    switch (flavor_.family) {
        case Family::A: return t;
        case Family::B: return (t - 1) / 2;
        case Family::C: return t / 2;
    }
    return 0;
}

int IndexMatrix::rowSum(int i) const {
    int s = 0;
    for (int j = colLo(); j <= colHi(); ++j) s += at(i, j);
    return s;
}

int IndexMatrix::colSum(int j) const {
    int s = 0;
    for (int i = rowLo(); i <= rowHi(); ++i) s += at(i, j);
    return s;
}

Composition IndexMatrix::rowSums() const {
    Composition c;
    c.family = flavor_.family;
    c.flavor = flavor_.row;
    c.lo = rowLo();
    for (int i = rowLo(); i <= rowHi(); ++i) c.parts.push_back(rowSum(i));
    return c;
}

Composition IndexMatrix::colSums() const {
    Composition c;
    c.family = flavor_.family;
    c.flavor = flavor_.col;
    c.lo = colLo();
    for (int j = colLo(); j <= colHi(); ++j) c.parts.push_back(colSum(j));
    return c;
}

IndexMatrix IndexMatrix::plusEntry(int i, int j, int delta) const {
    if (flavor_.family != Family::A)
        throw std::logic_error("plusEntry: use plusTheta for B/C families");
    IndexMatrix r = *this;
    r.e_[idx(i, j)] += delta;
    if (r.e_[idx(i, j)] < 0) throw std::domain_error("plusEntry: negative entry");
    return r;
}

IndexMatrix IndexMatrix::plusTheta(int i, int j, int delta) const {
    if (flavor_.family == Family::A)
        throw std::logic_error("plusTheta: use plusEntry for the A family");
    IndexMatrix r = *this;
    if (i == 0 && j == 0) {
        r.e_[idx(0, 0)] += 2 * delta;
    } else {
        r.e_[idx(i, j)] += delta;
        r.e_[idx(-i, -j)] += delta;
    }
    if (r.e_[idx(i, j)] < 0 || r.e_[idx(-i, -j)] < 0)
        throw std::domain_error("plusTheta: negative entry");
    return r;
}

IndexMatrix IndexMatrix::transposed() const {
    Flavor f = flavor_;
    std::swap(f.row, f.col);
    IndexMatrix r(f, n_, m_);
    for (int i = rowLo(); i <= rowHi(); ++i)
        for (int j = colLo(); j <= colHi(); ++j) r.e_[r.idx(j, i)] = at(i, j);
    return r;
}

IndexMatrix IndexMatrix::cShifted() const {
    if (flavor_.family != Family::C) throw std::logic_error("cShifted: C-family input required");
    Flavor f = flavor_;
    f.family = Family::B;
    IndexMatrix r(f, m_, n_);
    r.e_ = e_;
    r.e_[r.idx(0, 0)] += 1;
    if (auto err = r.validate()) throw std::domain_error("cShifted: image invalid: " + *err);
    return r;
}

std::optional<std::string> IndexMatrix::validate() const {
    for (int v : e_)
        if (v < 0) return "negative entry";
    if (flavor_.family == Family::A) return std::nullopt;

    for (int i = rowLo(); i <= rowHi(); ++i)
        for (int j = colLo(); j <= colHi(); ++j)
            if (at(i, j) != at(-i, -j)) return "theta symmetry broken";

    const int center = at(0, 0);
    if (flavor_.family == Family::B) {
        if (total() % 2 == 0) return "B-family total must be odd";
        if (center % 2 == 0) return "B-family center must be odd";
    } else {
        if (total() % 2 != 0) return "C-family total must be even";
        if (center % 2 != 0) return "C-family center must be even";
    }

    const bool rowIota = flavor_.row == SideFlavor::Iota;
    const bool colIota = flavor_.col == SideFlavor::Iota;
    if (rowIota) {
        for (int j = colLo(); j <= colHi(); ++j)
            if (j != 0 && at(0, j) != 0) return "iota row flavor requires zero 0-row off center";
    }
    if (colIota) {
        for (int i = rowLo(); i <= rowHi(); ++i)
            if (i != 0 && at(i, 0) != 0) return "iota column flavor requires zero 0-column off center";
    }
    if (rowIota || colIota) {
        const int want = flavor_.family == Family::B ? 1 : 0;
        if (center != want)
            return "iota flavor requires center " + std::to_string(want);
    }
    return std::nullopt;
}

bool IndexMatrix::operator==(const IndexMatrix& o) const {
    return flavor_ == o.flavor_ && m_ == o.m_ && n_ == o.n_ && e_ == o.e_;
}

bool IndexMatrix::operator<(const IndexMatrix& o) const {
    if (flavor_ != o.flavor_) return flavor_ < o.flavor_;
    if (m_ != o.m_) return m_ < o.m_;
    if (n_ != o.n_) return n_ < o.n_;
    return e_ < o.e_;
}

std::string IndexMatrix::rowsStr() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows(); ++r) {
        if (r) os << ",";
        os << "[";
        for (int c = 0; c < cols(); ++c) {
            if (c) os << ",";
            os << e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols()) +
                     static_cast<std::size_t>(c)];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string IndexMatrix::compactStr() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int i, int j, int v, bool theta) {
        if (!first) os << " + ";
        if (v != 1) os << v << "*";
        os << "E[" << i << "," << j << "]";
        if (theta) os << "^th";
        first = false;
    };
    if (flavor_.family == Family::A) {
        for (int i = rowLo(); i <= rowHi(); ++i)
            for (int j = colLo(); j <= colHi(); ++j)
                if (at(i, j) != 0) emit(i, j, at(i, j), false);
    } else {
        if (at(0, 0) != 0) emit(0, 0, at(0, 0), false);
        for (int i = rowLo(); i <= rowHi(); ++i)
            for (int j = colLo(); j <= colHi(); ++j) {
                if (i < 0 || (i == 0 && j <= 0)) continue;  // domain half only
                if (at(i, j) != 0) emit(i, j, at(i, j), true);
            }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::vector<int>> IndexMatrix::rowsVec() const {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < rows(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < cols(); ++c)
            row.push_back(e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols()) +
                             static_cast<std::size_t>(c)]);
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

void enumerateA(Flavor flavor, int m, int n, int d, std::size_t cap,
                std::vector<IndexMatrix>& out) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    const std::size_t cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (pos + 1 == cells) {
            rows[pos / n][pos % n] = remaining;
            if (out.size() >= cap) throw std::length_error("enumerateMatrices: cap exceeded");
            out.push_back(IndexMatrix::fromRows(flavor, m, n, rows));
            rows[pos / n][pos % n] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            rows[pos / n][pos % n] = v;
            rec(pos + 1, remaining - v);
        }
        rows[pos / n][pos % n] = 0;
    };
    rec(0, d);
}

void enumerateBC(Flavor flavor, int m, int n, int d, std::size_t cap,
                 std::vector<IndexMatrix>& out) {
    if ((flavor.row == SideFlavor::Iota || flavor.col == SideFlavor::Iota) && (m < 1 || n < 1))
        throw std::invalid_argument("enumerateMatrices: iota flavors need m, n >= 1");
    const int totalWanted = flavor.family == Family::B ? 2 * d + 1 : 2 * d;
    // Free positions: row-major strictly before the center. The center value
    // and the mirrored half are then forced, so filling the free half in lex
    // order yields full-entry-vector lex order.
    std::vector<std::pair<int, int>> half;
    for (int i = -m; i <= 0; ++i)
        for (int j = -n; j <= n; ++j) {
            if (i == 0 && j >= 0) break;
            half.emplace_back(i, j);
        }
    auto forcedZero = [&](int i, int j) {
        if (flavor.row == SideFlavor::Iota && i == 0 && j != 0) return true;
        if (flavor.col == SideFlavor::Iota && j == 0 && i != 0) return true;
        return false;
    };
    IndexMatrix base(flavor, m, n);
    std::function<void(std::size_t, int, IndexMatrix&)> rec =
        [&](std::size_t pos, int remaining, IndexMatrix& cur) {
            if (pos == half.size()) {
                const int center = remaining;
                if (center < 0) return;
                if (flavor.family == Family::B && center % 2 == 0) return;
                if (flavor.family == Family::C && center % 2 != 0) return;
                if ((flavor.row == SideFlavor::Iota || flavor.col == SideFlavor::Iota) &&
                    center != (flavor.family == Family::B ? 1 : 0))
                    return;
                IndexMatrix done = cur;
                done.e_[done.idx(0, 0)] = center;
                if (out.size() >= cap) throw std::length_error("enumerateMatrices: cap exceeded");
                out.push_back(done);
                return;
            }
            auto [i, j] = half[pos];
            if (forcedZero(i, j)) {
                rec(pos + 1, remaining, cur);
                return;
            }
            for (int v = 0; 2 * v <= remaining; ++v) {
                IndexMatrix next = cur.plusTheta(i, j, v);
                rec(pos + 1, remaining - 2 * v, next);
            }
        };
    rec(0, totalWanted, base);
}

}  // namespace

std::vector<IndexMatrix> enumerateMatrices(Flavor flavor, int m, int n, int d, std::size_t cap) {
    if (d < 0) throw std::invalid_argument("enumerateMatrices: negative d");
    std::vector<IndexMatrix> out;
    if (flavor.family == Family::A)
        enumerateA(flavor, m, n, d, cap, out);
    else
        enumerateBC(flavor, m, n, d, cap, out);
    return out;
}

unsigned long long thetaCount(int m, int n, int d) {
    // binomial(mn + d - 1, d)
    unsigned long long num = 1;
    for (int k = 1; k <= d; ++k) {
        num = num * static_cast<unsigned long long>(m * n + d - k);
        num /= static_cast<unsigned long long>(k);
    }
    return d == 0 ? 1 : num;
}

int Composition::rank() const {
    if (family == Family::A) return static_cast<int>(parts.size());
    return (static_cast<int>(parts.size()) - 1) / 2;
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::d() const {
    if (family == Family::A) return sum();
    return family == Family::B ? (sum() - 1) / 2 : sum() / 2;
}

std::optional<std::string> Composition::validate() const {
    for (int v : parts)
        if (v < 0) return "negative part";
    if (family == Family::A) return std::nullopt;
    const int r = rank();
    if (static_cast<int>(parts.size()) != 2 * r + 1) return "B/C parts must have odd length";
    for (int i = 1; i <= r; ++i)
        if (at(i) != at(-i)) return "B/C composition must be symmetric";
    const int center = at(0);
    if (family == Family::B) {
        if (center % 2 == 0) return "B center must be odd";
        if (flavor == SideFlavor::Iota && center != 1) return "B iota center must be 1";
    } else {
        if (center % 2 != 0) return "C center must be even";
        if (flavor == SideFlavor::Iota && center != 0) return "C iota center must be 0";
    }
    return std::nullopt;
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) os << ",";
        os << parts[k];
    }
    os << ")";
    return os.str();
}

namespace {

void partitionsRec(int remaining, int maxPart, int partsLeft, Partition& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (partsLeft == 0) return;
    for (int v = std::min(remaining, maxPart); v >= 1; --v) {
        cur.push_back(v);
        partitionsRec(remaining - v, v, partsLeft - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumeratePartitions(int maxParts, int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    Partition cur;
    partitionsRec(d, d, maxParts, cur, out);
    if (d == 0) out = {Partition{}};
    return out;
}

bool BiPartition::operator<(const BiPartition& o) const {
    if (plus != o.plus) return plus < o.plus;
    return minus < o.minus;
}

std::string BiPartition::str() const {
    auto p = [](const Partition& x) {
        std::ostringstream os;
        os << "(";
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (k) os << ",";
            os << x[k];
        }
        os << ")";
        return os.str();
    };
    return "(" + p(plus) + "," + p(minus) + ")";
}

std::vector<BiPartition> enumerateBiPartitions(SideFlavor flavor, int n, int d) {
    const int plusParts = flavor == SideFlavor::Jay ? n + 1 : n;
    std::vector<BiPartition> out;
    for (int l = 0; l <= d; ++l) {
        auto pluses = enumeratePartitions(plusParts, d - l);
        auto minuses = enumeratePartitions(n, l);
        for (const auto& p : pluses)
            for (const auto& q : minuses) out.push_back(BiPartition{p, q});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qhowe
