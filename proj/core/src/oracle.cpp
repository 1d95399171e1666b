#include "qhowe/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qhowe {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1u) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1u;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a % p, p - 2, p); }

}  // namespace

FpMatrix::FpMatrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

int FpMatrix::rref() {
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r)
            if (at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(a_[static_cast<std::size_t>(pivot) * cols_ + c],
                                                  a_[static_cast<std::size_t>(lead) * cols_ + c]);
        std::uint32_t inv = invmod(at(lead, col), p_);
        for (int c = 0; c < cols_; ++c) set(lead, c, mulmod(at(lead, c), inv, p_));
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || at(r, col) == 0) continue;
            std::uint32_t f = at(r, col);
            for (int c = 0; c < cols_; ++c)
                set(r, c, (at(r, c) + p_ - mulmod(f, at(lead, c), p_)) % p_);
        }
        ++lead;
    }
    return lead;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols_, rows_, p_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FpMatrix FpMatrix::stacked(const FpMatrix& top, const FpMatrix& bottom) {
    if (top.cols_ != bottom.cols_ || top.p_ != bottom.p_)
        throw std::invalid_argument("FpMatrix::stacked: shape mismatch");
    FpMatrix s(top.rows_ + bottom.rows_, top.cols_, top.p_);
    for (int r = 0; r < top.rows_; ++r)
        for (int c = 0; c < top.cols_; ++c) s.set(r, c, top.at(r, c));
    for (int r = 0; r < bottom.rows_; ++r)
        for (int c = 0; c < bottom.cols_; ++c) s.set(top.rows_ + r, c, bottom.at(r, c));
    return s;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FpMatrix::multiply: shape mismatch");
    FpMatrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.set(i, j, (r.at(i, j) + mulmod(v, o.at(k, j), p_)) % p_);
        }
    return r;
}

FpMatrix FpMatrix::kernel() const {
    FpMatrix m = *this;
    m.rref();
    std::vector<int> pivotCol;
    std::vector<bool> isPivot(static_cast<std::size_t>(cols_), false);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        if (m.at(r, c) == 1) {
            bool pivot = true;
            for (int rr = 0; rr < rows_; ++rr)
                if (rr != r && m.at(rr, c) != 0) { pivot = false; break; }
            if (pivot) {
                pivotCol.push_back(c);
                isPivot[static_cast<std::size_t>(c)] = true;
                ++r;
            }
        }
    }
    int rank = static_cast<int>(pivotCol.size());
    FpMatrix ker(cols_ - rank, cols_, p_);
    int kr = 0;
    for (int c = 0; c < cols_; ++c) {
        if (isPivot[static_cast<std::size_t>(c)]) continue;
        ker.set(kr, c, 1);
        for (int pr = 0; pr < rank; ++pr)
            ker.set(kr, pivotCol[static_cast<std::size_t>(pr)], (p_ - m.at(pr, c)) % p_);
        ++kr;
    }
    return ker;
}

Subspace::Subspace(FpMatrix basis) : basis_(0, basis.cols(), basis.p()) {
    int rank = basis.rref();
    FpMatrix canon(rank, basis.cols(), basis.p());
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < basis.cols(); ++c) canon.set(r, c, basis.at(r, c));
    basis_ = canon;
}

Subspace Subspace::zero(std::uint32_t p, int ambient) { return Subspace(FpMatrix(0, ambient, p)); }

Subspace Subspace::full(std::uint32_t p, int ambient) {
    FpMatrix id(ambient, ambient, p);
    for (int i = 0; i < ambient; ++i) id.set(i, i, 1);
    return Subspace(id);
}

bool Subspace::contains(const Subspace& other) const {
    return sumSpace(*this, other).dim() == dim();
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient(); ++c) {
            if (basis_.at(r, c) != o.basis_.at(r, c)) return basis_.at(r, c) < o.basis_.at(r, c);
        }
    return false;
}

Subspace sumSpace(const Subspace& u, const Subspace& w) {
    return Subspace(FpMatrix::stacked(u.basis(), w.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& w) {
    // v lies in a row space iff v kills that space's kernel vectors.
    FpMatrix ku = u.basis().kernel();
    FpMatrix kw = w.basis().kernel();
    FpMatrix conditions = FpMatrix::stacked(ku, kw);
    return Subspace(conditions.kernel());
}

Subspace perp(const Subspace& u, const FpMatrix& gram) {
    FpMatrix m = u.basis().multiply(gram);
    return Subspace(m.kernel());
}

bool isIsotropic(const Subspace& u, const FpMatrix& gram) {
    FpMatrix g = u.basis().multiply(gram).multiply(u.basis().transposed());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c)
            if (g.at(r, c) != 0) return false;
    return true;
}

FpMatrix gramMatrix(Family family, int d, std::uint32_t p) {
    if (family == Family::B) {
        const int dim = 2 * d + 1;
        FpMatrix g(dim, dim, p);
        for (int i = 0; i < dim; ++i) g.set(i, dim - 1 - i, 1);
        return g;
    }
    if (family == Family::C) {
        const int dim = 2 * d;
        FpMatrix g(dim, dim, p);
        for (int i = 0; i < dim; ++i) {
            // index i encodes v_{i-d+1/2}; negative half-signs below the middle
            std::uint32_t sign = i < d ? p - 1 : 1;
            g.set(i, dim - 1 - i, sign);
        }
        return g;
    }
    throw std::invalid_argument("gramMatrix: B or C family only");
}

Composition Flag::jumps() const {
    Composition c;
    c.family = family;
    c.flavor = flavor;
    c.lo = family == Family::A ? 1 : -n;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k)
        c.parts.push_back(steps[k + 1].dim() - steps[k].dim());
    return c;
}

std::vector<Subspace> subspacesBetween(const Subspace& lower, const Subspace& upper, int dim) {
    std::vector<Subspace> out;
    if (dim < lower.dim() || dim > upper.dim()) return out;
    if (dim == lower.dim()) {
        out.push_back(lower);
        return out;
    }
    const std::uint32_t p = lower.p();
    // complement coordinates of lower inside upper
    std::vector<FpMatrix> quotientBasis;
    Subspace grow = lower;
    for (int r = 0; r < upper.dim(); ++r) {
        FpMatrix row(1, upper.ambient(), p);
        for (int c = 0; c < upper.ambient(); ++c) row.set(0, c, upper.basis().at(r, c));
        Subspace bigger = sumSpace(grow, Subspace(row));
        if (bigger.dim() > grow.dim()) {
            quotientBasis.push_back(row);
            grow = bigger;
        }
    }
    const int qd = static_cast<int>(quotientBasis.size());
    const int r = dim - lower.dim();
    // enumerate RREF shapes of r x qd matrices over F_p
    std::vector<int> pivots(static_cast<std::size_t>(r));
    std::function<void(int, int)> choosePivots = [&](int row, int from) {
        if (row == r) {
            std::vector<std::pair<int, int>> freePos;
            for (int s = 0; s < r; ++s)
                for (int c = pivots[static_cast<std::size_t>(s)] + 1; c < qd; ++c) {
                    bool isPivotCol = false;
                    for (int s2 = 0; s2 < r; ++s2)
                        if (pivots[static_cast<std::size_t>(s2)] == c) isPivotCol = true;
                    if (!isPivotCol) freePos.emplace_back(s, c);
                }
            std::vector<std::uint32_t> vals(freePos.size(), 0);
            while (true) {
                FpMatrix rows(r + lower.dim(), lower.ambient(), p);
                for (int lr = 0; lr < lower.dim(); ++lr)
                    for (int c = 0; c < lower.ambient(); ++c)
                        rows.set(lr, c, lower.basis().at(lr, c));
                for (int s = 0; s < r; ++s) {
                    // row s = quotient pivot + free entries mapped back
                    std::vector<std::uint32_t> q(static_cast<std::size_t>(qd), 0);
                    q[static_cast<std::size_t>(pivots[static_cast<std::size_t>(s)])] = 1;
                    for (std::size_t fp = 0; fp < freePos.size(); ++fp)
                        if (freePos[fp].first == s)
                            q[static_cast<std::size_t>(freePos[fp].second)] = vals[fp];
                    for (int t = 0; t < qd; ++t) {
                        if (q[static_cast<std::size_t>(t)] == 0) continue;
                        for (int c = 0; c < lower.ambient(); ++c) {
                            std::uint32_t add =
                                mulmod(q[static_cast<std::size_t>(t)],
                                       quotientBasis[static_cast<std::size_t>(t)].at(0, c), p);
                            rows.set(lower.dim() + s, c,
                                     (rows.at(lower.dim() + s, c) + add) % p);
                        }
                    }
                }
                out.push_back(Subspace(rows));
                // advance odometer
                std::size_t k = 0;
                while (k < vals.size()) {
                    if (++vals[k] < p) break;
                    vals[k] = 0;
                    ++k;
                }
                if (k == vals.size()) break;
                if (vals.empty()) break;
            }
            return;
        }
        for (int c = from; c <= qd - (r - row); ++c) {
            pivots[static_cast<std::size_t>(row)] = c;
            choosePivots(row + 1, c + 1);
        }
    };
    if (r <= qd) choosePivots(0, 0);
    return out;
}

namespace {

void enumerateFlagsA(int n, int d, std::uint32_t p, std::size_t cap, std::vector<Flag>& out) {
    Subspace zero = Subspace::zero(p, d);
    Subspace full = Subspace::full(p, d);
    std::vector<Subspace> chain{zero};
    std::function<void(int)> rec = [&](int step) {
        if (step == n) {
            if (chain.back().dim() != d) return;
            Flag f;
            f.family = Family::A;
            f.n = n;
            f.d = d;
            f.steps = chain;
            if (out.size() >= cap) throw std::length_error("enumerateFlags: cap exceeded");
            out.push_back(std::move(f));
            return;
        }
        const int loDim = chain.back().dim();
        const int hiDim = step == n - 1 ? d : d;  // last step must land on full
        for (int dim = loDim; dim <= hiDim; ++dim) {
            if (step == n - 1 && dim != d) continue;
            for (auto& x : subspacesBetween(chain.back(), full, dim)) {
                chain.push_back(x);
                rec(step + 1);
                chain.pop_back();
            }
        }
    };
    rec(0);
}

void enumerateFlagsBC(Family family, SideFlavor flavor, int n, int d, std::uint32_t p,
                      std::size_t cap, std::vector<Flag>& out) {
    const int ambient = family == Family::B ? 2 * d + 1 : 2 * d;
    FpMatrix gram = gramMatrix(family, d, p);
    Subspace zero = Subspace::zero(p, ambient);
    std::vector<Subspace> half{zero};
    std::function<void(int)> rec = [&](int step) {
        if (step == n) {
            if (flavor == SideFlavor::Iota && half.back().dim() != d) return;
            Flag f;
            f.family = family;
            f.flavor = flavor;
            f.n = n;
            f.d = d;
            f.steps = half;
            for (int k = n; k >= 0; --k) f.steps.push_back(perp(half[static_cast<std::size_t>(k)], gram));
            if (out.size() >= cap) throw std::length_error("enumerateFlags: cap exceeded");
            out.push_back(std::move(f));
            return;
        }
        const Subspace& prev = half.back();
        Subspace bound = perp(prev, gram);
        for (int dim = prev.dim(); dim <= d; ++dim) {
            for (auto& x : subspacesBetween(prev, bound, dim)) {
                if (!isIsotropic(x, gram)) continue;
                half.push_back(x);
                rec(step + 1);
                half.pop_back();
            }
        }
    };
    rec(0);
}

}  // namespace

std::vector<Flag> enumerateFlags(Family family, SideFlavor flavor, int n, int d, std::uint32_t p,
                                 std::size_t cap) {
    if (p <= 5) throw std::invalid_argument("enumerateFlags: prime must exceed 5");
    std::vector<Flag> out;
    if (family == Family::A)
        enumerateFlagsA(n, d, p, cap, out);
    else
        enumerateFlagsBC(family, flavor, n, d, p, cap, out);
    std::sort(out.begin(), out.end());
    return out;
}

Flag standardFlag(const Composition& gamma, std::uint32_t p) {
    const int d = gamma.d();
    Flag f;
    f.family = gamma.family;
    f.flavor = gamma.flavor;
    const int ambient = gamma.family == Family::A   ? d
                        : gamma.family == Family::B ? 2 * d + 1
                                                    : 2 * d;
    f.n = gamma.rank();
    f.d = d;
    int cum = 0;
    auto prefix = [&](int k) {
        FpMatrix rows(k, ambient, p);
        for (int i = 0; i < k; ++i) rows.set(i, i, 1);
        return Subspace(rows);
    };
    f.steps.push_back(prefix(0));
    for (int part : gamma.parts) {
        cum += part;
        f.steps.push_back(prefix(cum));
    }
    return f;
}

IndexMatrix orbitInvariant(const Flag& f, const Flag& g) {
    if (f.family != g.family) throw std::invalid_argument("orbitInvariant: family mismatch");
    if (!f.steps.empty() && !g.steps.empty() &&
        f.steps[0].ambient() != g.steps[0].ambient())
        throw std::invalid_argument("orbitInvariant: ambient mismatch");
    const int sm = static_cast<int>(f.steps.size()) - 1;
    const int sn = static_cast<int>(g.steps.size()) - 1;
    std::vector<std::vector<Subspace>> inter;
    for (int s = 0; s <= sm; ++s) {
        std::vector<Subspace> row;
        for (int t = 0; t <= sn; ++t) row.push_back(intersection(f.steps[static_cast<std::size_t>(s)],
                                                                 g.steps[static_cast<std::size_t>(t)]));
        inter.push_back(std::move(row));
    }
    std::vector<std::vector<int>> rows;
    for (int s = 1; s <= sm; ++s) {
        std::vector<int> row;
        for (int t = 1; t <= sn; ++t) {
            int v = inter[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].dim() -
                    sumSpace(inter[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)],
                             inter[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - 1)])
                        .dim();
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    Flavor flavor{f.family, f.flavor, g.flavor};
    return IndexMatrix::fromRows(flavor, f.n, g.n, rows);
}

const FlagTable& FlagCache::get(Family family, SideFlavor flavor, int n, int d, std::uint32_t p) {
    auto key = std::make_tuple(static_cast<int>(family), static_cast<int>(flavor), n, d, p);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    FlagTable t;
    t.flags = enumerateFlags(family, flavor, n, d, p);
    return tables_.emplace(key, std::move(t)).first->second;
}

std::vector<std::pair<Flag, Flag>> orbitRepresentatives(const IndexMatrix& cMat, std::uint32_t p,
                                                        FlagCache& cache, std::size_t limit) {
    const Family fam = cMat.flavor().family;
    const int d = cMat.d();
    const auto& left = cache.get(fam, cMat.flavor().row, cMat.m(), d, p);
    const auto& right = cache.get(fam, cMat.flavor().col, cMat.n(), d, p);
    Composition ro = cMat.rowSums(), co = cMat.colSums();
    std::vector<std::pair<Flag, Flag>> reps;
    for (const auto& f1 : left.flags) {
        if (!(f1.jumps().parts == ro.parts)) continue;
        for (const auto& f2 : right.flags) {
            if (!(f2.jumps().parts == co.parts)) continue;
            if (orbitInvariant(f1, f2) == cMat) {
                reps.emplace_back(f1, f2);
                if (reps.size() >= limit) return reps;
            }
        }
    }
    return reps;
}

long convolveCountFromPair(const IndexMatrix& aMat, const IndexMatrix& bMat, const Flag& f1,
                           const Flag& f2, FlagCache& cache) {
    if (!(aMat.colSums().parts == bMat.rowSums().parts))
        throw std::invalid_argument("convolveCount: middle compositions disagree");
    const std::uint32_t p = f1.steps[0].p();
    const auto& middle = cache.get(bMat.flavor().family, bMat.flavor().row, bMat.m(), bMat.d(), p);
    long count = 0;
    for (const auto& f : middle.flags) {
        if (!(f.jumps().parts == aMat.colSums().parts)) continue;
        if (orbitInvariant(f1, f) == aMat && orbitInvariant(f, f2) == bMat) ++count;
    }
    return count;
}

const std::pair<Flag, Flag>& FlagCache::representative(const IndexMatrix& cMat, std::uint32_t p) {
    auto key = std::make_pair(cMat, p);
    auto it = reps_.find(key);
    if (it != reps_.end()) return it->second;
    auto reps = orbitRepresentatives(cMat, p, *this, 1);
    if (reps.empty())
        throw std::domain_error("convolveCount: empty orbit for the output label " + cMat.rowsStr());
    return reps_.emplace(key, reps[0]).first->second;
}

long convolveCount(const IndexMatrix& aMat, const IndexMatrix& bMat, const IndexMatrix& cMat,
                   std::uint32_t p, FlagCache& cache) {
    const auto& rep = cache.representative(cMat, p);
    return convolveCountFromPair(aMat, bMat, rep.first, rep.second, cache);
}

std::vector<BigInt> interpolateStructureConstant(
    const std::vector<std::pair<std::uint32_t, long>>& samples, int degreeBound) {
    const std::size_t k = static_cast<std::size_t>(degreeBound) + 1;
    if (samples.size() < k + 1)
        throw std::invalid_argument("interpolateStructureConstant: need degreeBound+2 samples");
    // Lagrange through the first k points, exact rational arithmetic.
    std::vector<mpq_class> coeffs(k, mpq_class(0));
    for (std::size_t i = 0; i < k; ++i) {
        // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j), times y_i
        std::vector<mpq_class> basis{mpq_class(1)};
        mpq_class denom(1);
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * static_cast<long>(samples[j].first);
            }
            basis = std::move(next);
            denom *= mpq_class(static_cast<long>(samples[i].first) -
                               static_cast<long>(samples[j].first));
        }
        mpq_class scale = mpq_class(samples[i].second) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * scale;
    }
    std::vector<BigInt> out(k);
    for (std::size_t t = 0; t < k; ++t) {
        coeffs[t].canonicalize();
        if (coeffs[t].get_den() != 1)
            throw std::domain_error("interpolateStructureConstant: non-integral coefficient");
        out[t] = coeffs[t].get_num();
    }
    // every unused sample verifies the fit
    for (std::size_t s = k; s < samples.size(); ++s) {
        BigInt x(static_cast<long>(samples[s].first));
        BigInt acc = 0;
        for (std::size_t t = out.size(); t-- > 0;) acc = acc * x + out[t];
        if (acc != samples[s].second)
            throw std::domain_error("interpolateStructureConstant: verification sample mismatch");
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Laurent substituteOrientation(const std::vector<BigInt>& poly, int orientation) {
    Laurent r;
    for (std::size_t i = 0; i < poly.size(); ++i)
        r += Laurent::monomial(2 * orientation * static_cast<int>(i), poly[i]);
    return r;
}

ModuleVector oracleProduct(const IndexMatrix& aMat, const IndexMatrix& bMat,
                           const OracleOptions& opts, FlagCache& cache) {
    if (aMat.flavor().family != bMat.flavor().family)
        throw std::invalid_argument("oracleProduct: family mismatch");
    if (aMat.flavor().col != bMat.flavor().row)
        throw std::invalid_argument("oracleProduct: inner flavor mismatch");
    if (!(aMat.colSums().parts == bMat.rowSums().parts))
        throw std::invalid_argument("oracleProduct: col(A) must equal row(B)");
    const int d = aMat.d();
    Flavor outFlavor{aMat.flavor().family, aMat.flavor().row, bMat.flavor().col};
    SpaceDesc space{outFlavor, aMat.m(), bMat.n(), d};
    ModuleVector result(space);

    std::vector<IndexMatrix> candidates;
    for (const auto& c : spaceBasis(space)) {
        if (c.rowSums().parts == aMat.rowSums().parts &&
            c.colSums().parts == bMat.colSums().parts)
            candidates.push_back(c);
    }
    const long eA = normalizationExponent(aMat);
    const long eB = normalizationExponent(bMat);

    int bound = opts.degreeBound >= 0 ? opts.degreeBound : d * d;
    while (true) {
        const std::size_t need = static_cast<std::size_t>(bound) + 2;
        if (opts.primes.size() < need)
            throw std::domain_error("oracleProduct: not enough primes for degree bound " +
                                    std::to_string(bound));
        try {
            for (const auto& c : candidates) {
                std::vector<std::pair<std::uint32_t, long>> samples;
                for (std::size_t s = 0; s < need; ++s) {
                    std::uint32_t p = opts.primes[s];
                    samples.emplace_back(p, convolveCount(aMat, bMat, c, p, cache));
                }
                auto poly = interpolateStructureConstant(samples, bound);
                if (poly.empty()) continue;
                Laurent kappa = substituteOrientation(poly, opts.orientation);
                Laurent coeff = Laurent::q(static_cast<int>(eA + eB - normalizationExponent(c))) * kappa;
                result.add(c, coeff);
            }
            return result;
        } catch (const std::domain_error&) {
            result = ModuleVector(space);
            bound *= 2;
            if (static_cast<std::size_t>(bound) + 2 > opts.primes.size()) throw;
        }
    }
}

}  // namespace qhowe
