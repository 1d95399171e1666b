#include "qhowe/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhowe {

namespace {

RatVector applyModel(const GeneratorSymbol& g, const RatVector& v, bool coordModel) {
    return coordModel ? actCoord(g, v) : applyGenerator(g, v);
}

std::map<IndexMatrix, std::size_t> basisIndex(const std::vector<IndexMatrix>& basis) {
    std::map<IndexMatrix, std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
    return idx;
}

}  // namespace

OperatorMatrix operatorMatrix(const GeneratorSymbol& g, const SpaceDesc& space, bool coordModel) {
    OperatorMatrix om;
    om.space = space;
    om.basis = spaceBasis(space);
    const std::size_t n = om.basis.size();
    auto idx = basisIndex(om.basis);
    om.mat.assign(n, std::vector<RatFunc>(n, RatFunc()));
    for (std::size_t j = 0; j < n; ++j) {
        RatVector col = applyModel(g, RatVector::basisVector(space, om.basis[j]), coordModel);
        for (const auto& [label, c] : col.terms()) om.mat[idx.at(label)][j] = c;
    }
    return om;
}

OperatorMatrix operatorMatrixOfWords(const WordSum& ws, const SpaceDesc& space, bool coordModel) {
    OperatorMatrix om;
    om.space = space;
    om.basis = spaceBasis(space);
    const std::size_t n = om.basis.size();
    auto idx = basisIndex(om.basis);
    om.mat.assign(n, std::vector<RatFunc>(n, RatFunc()));
    for (std::size_t j = 0; j < n; ++j) {
        RatVector v = RatVector::basisVector(space, om.basis[j]);
        RatVector img(space);
        for (const auto& w : ws) {
            RatVector cur = v;
            if (coordModel) {
                if (w.side == Side::Left) {
                    for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it)
                        cur = actCoord(*it, cur);
                } else {
                    for (const auto& s : w.symbols) cur = actCoord(s, cur);
                }
                img += cur.scaled(w.prefactor);
            } else {
                img += applyWord(w, v);
            }
        }
        for (const auto& [label, c] : img.terms()) om.mat[idx.at(label)][j] = c;
    }
    return om;
}

namespace {

WordSum braidSymbol(SideFlavor flavor, int j, const GeneratorSymbol& s) {
    const Side side = s.side;
    const RatFunc one(1);
    const RatFunc qq(Laurent::q(1));
    const RatFunc qinv(Laurent::q(-1));
    auto word = [&](RatFunc pre, std::vector<GenKind> kinds, std::vector<int> idxs) {
        GeneratorWord w;
        w.side = side;
        w.prefactor = std::move(pre);
        for (std::size_t t = 0; t < kinds.size(); ++t)
            w.symbols.push_back(GeneratorSymbol{side, kinds[t], idxs[t]});
        return w;
    };
    switch (s.kind) {
        case GenKind::e:
            if (s.index == j)
                return {word(RatFunc(-1), {GenKind::f, GenKind::d, GenKind::dinv}, {j, j, j + 1})};
            if (std::abs(s.index - j) == 1)
                return {word(one, {GenKind::e, GenKind::e}, {j, s.index}),
                        word(RatFunc() - qinv, {GenKind::e, GenKind::e}, {s.index, j})};
            return {word(one, {GenKind::e}, {s.index})};
        case GenKind::f:
            if (s.index == j)
                return {word(RatFunc(-1), {GenKind::dinv, GenKind::d, GenKind::e}, {j, j + 1, j})};
            if (std::abs(s.index - j) == 1)
                return {word(one, {GenKind::f, GenKind::f}, {s.index, j}),
                        word(RatFunc() - qq, {GenKind::f, GenKind::f}, {j, s.index})};
            return {word(one, {GenKind::f}, {s.index})};
        case GenKind::d:
        case GenKind::dinv: {
            int i = s.index;
            int si = i == j ? j + 1 : (i == j + 1 ? j : i);
            return {word(one, {s.kind}, {si})};
        }
        case GenKind::t0:
            if (flavor == SideFlavor::Iota && j == 1) {
                return {word(one, {GenKind::e, GenKind::t0, GenKind::f}, {1, 0, 1}),
                        word(RatFunc() - qq, {GenKind::e, GenKind::f, GenKind::t0}, {1, 1, 0}),
                        word(RatFunc() - qinv, {GenKind::t0, GenKind::f, GenKind::e}, {0, 1, 1}),
                        word(one, {GenKind::f, GenKind::t0, GenKind::e}, {1, 0, 1}),
                        word(one, {GenKind::t0, GenKind::d, GenKind::dinv}, {0, 1, 2})};
            }
            return {word(one, {GenKind::t0}, {0})};
        default:
            throw std::invalid_argument("braidApply: unsupported symbol " + s.str());
    }
}

}  // namespace

WordSum braidApply(SideFlavor flavor, int j, const WordSum& ws) {
    WordSum out;
    for (const auto& w : ws) {
        WordSum partial{GeneratorWord{w.side, {}, w.prefactor}};
        for (const auto& s : w.symbols) {
            WordSum expanded = braidSymbol(flavor, j, s);
            WordSum next;
            for (const auto& left : partial)
                for (const auto& right : expanded) {
                    GeneratorWord joined;
                    joined.side = w.side;
                    joined.prefactor = left.prefactor * right.prefactor;
                    joined.symbols = left.symbols;
                    joined.symbols.insert(joined.symbols.end(), right.symbols.begin(),
                                          right.symbols.end());
                    next.push_back(std::move(joined));
                }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

WordSum tElement(SideFlavor flavor, int i, Side side) {
    if (i < 0) throw std::invalid_argument("tElement: negative index");
    WordSum base;
    if (flavor == SideFlavor::Iota) {
        base = {GeneratorWord{side, {GeneratorSymbol{side, GenKind::t0, 0}}, RatFunc(1)}};
    } else {
        const RatFunc straightInv =
            RatFunc(1) / RatFunc(Laurent::q(1) - Laurent::q(-1));
        GeneratorWord ef{side,
                         {GeneratorSymbol{side, GenKind::e, 0}, GeneratorSymbol{side, GenKind::f, 0}},
                         RatFunc(1)};
        GeneratorWord fe{side,
                         {GeneratorSymbol{side, GenKind::f, 0}, GeneratorSymbol{side, GenKind::e, 0}},
                         RatFunc() - RatFunc(Laurent::q(1))};
        // k0 = d0^2 d1^{-1}
        GeneratorWord k0{side,
                         {GeneratorSymbol{side, GenKind::d, 0}, GeneratorSymbol{side, GenKind::d, 0},
                          GeneratorSymbol{side, GenKind::dinv, 1}},
                         RatFunc() - straightInv};
        GeneratorWord k0inv{side,
                            {GeneratorSymbol{side, GenKind::dinv, 0},
                             GeneratorSymbol{side, GenKind::dinv, 0},
                             GeneratorSymbol{side, GenKind::d, 1}},
                            straightInv};
        base = {ef, fe, k0, k0inv};
    }
    WordSum cur = base;
    for (int j = 1; j <= i; ++j) cur = braidApply(flavor, j, cur);
    return cur;
}

namespace {

std::vector<GeneratorSymbol> diagonalGenerators(const SpaceDesc& space, Side side) {
    std::vector<GeneratorSymbol> ds;
    for (const auto& g : sideGenerators(space, side, true))
        if (g.kind == GenKind::D || g.kind == GenKind::d) ds.push_back(g);
    return ds;
}

std::vector<long> measuredWeights(const SpaceDesc& space, Side side, const IndexMatrix& label) {
    std::vector<long> w;
    for (const auto& g : diagonalGenerators(space, side))
        w.push_back(diagonalExponent(g, space, label));
    return w;
}

std::optional<RatFunc> eigenvalueOn(const SpaceDesc& space, const WordSum& ws,
                                    const std::vector<IndexMatrix>& basis,
                                    const std::vector<RatFunc>& coords) {
    RatVector v(space);
    for (std::size_t k = 0; k < basis.size(); ++k) v.add(basis[k], coords[k]);
    RatVector image = applyWordSum(ws, v);
    // locate a nonzero coordinate of v
    std::optional<RatFunc> eigen;
    for (const auto& [label, c] : v.terms()) {
        RatFunc ic = image.coeff(label);
        eigen = ic / c;
        break;
    }
    if (!eigen) return std::nullopt;
    if (image != v.scaled(*eigen)) return std::nullopt;
    return eigen;
}

}  // namespace

std::vector<HighestWeightLine> jointHighestWeightVectors(const SpaceDesc& space, Side reportSide) {
    const auto basis = spaceBasis(space);
    const std::size_t n = basis.size();
    auto idx = basisIndex(basis);

    std::vector<GeneratorSymbol> ops = raisingGenerators(space, Side::Left);
    for (const auto& g : loweringGenerators(space, Side::Right)) ops.push_back(g);
    std::vector<OperatorMatrix> mats;
    for (const auto& g : ops) mats.push_back(operatorMatrix(g, space));

    // group basis labels by the joint diagonal grading
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::size_t>> blocks;
    for (std::size_t k = 0; k < n; ++k)
        blocks[{basis[k].rowSums().parts, basis[k].colSums().parts}].push_back(k);

    std::vector<HighestWeightLine> lines;
    for (const auto& [key, colIdx] : blocks) {
        RatMatrix sys;
        for (const auto& om : mats)
            for (std::size_t r = 0; r < n; ++r) {
                std::vector<RatFunc> row;
                row.reserve(colIdx.size());
                for (std::size_t c : colIdx) row.push_back(om.mat[r][c]);
                sys.push_back(std::move(row));
            }
        auto kernel = kernelBasis(sys);
        for (const auto& kv : kernel) {
            HighestWeightLine line;
            line.coords.assign(n, RatFunc());
            for (std::size_t t = 0; t < colIdx.size(); ++t) line.coords[colIdx[t]] = kv[t];
            const IndexMatrix& rep = basis[colIdx[0]];
            line.leftWeights = measuredWeights(space, Side::Left, rep);
            line.rightWeights = measuredWeights(space, Side::Right, rep);
            if (space.flavor.family != Family::A &&
                sideFlavorOf(space, reportSide) != SideFlavor::Jay) {
                // iota side: t_0 .. t_{rank-1} where constructible
                const int rank = sideRank(space, reportSide);
                for (int i = 0; i < rank; ++i) {
                    if (i >= 1 && rank < i + 2) break;  // t_i needs d_{i+1}
                    auto ev = eigenvalueOn(space, tElement(SideFlavor::Iota, i, reportSide), basis,
                                           line.coords);
                    if (ev) line.tEigen.emplace_back(i, *ev);
                }
            } else if (space.flavor.family != Family::A) {
                const int rank = sideRank(space, reportSide);
                for (int i = 0; i < rank; ++i) {
                    if (i >= 1 && rank < i + 2) break;
                    auto ev = eigenvalueOn(space, tElement(SideFlavor::Jay, i, reportSide), basis,
                                           line.coords);
                    if (ev) line.tEigen.emplace_back(i, *ev);
                }
            }
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

SpectrumReport verifyT0Spectrum(const SpaceDesc& space, Side side, bool coordModel) {
    SpectrumReport rep;
    if (sideFlavorOf(space, side) != SideFlavor::Iota) {
        rep.detail = "side is not iota-flavored";
        return rep;
    }
    const GeneratorSymbol t0{side, GenKind::t0, 0};
    OperatorMatrix om = operatorMatrix(t0, space, coordModel);
    const std::size_t n = om.basis.size();
    const int d = space.d;

    auto matMul = [&](const RatMatrix& x, const RatMatrix& y) {
        RatMatrix r(n, std::vector<RatFunc>(n, RatFunc()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i][k].zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!y[k][j].zero()) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    };
    auto factor = [&](long k) {
        RatMatrix f = om.mat;
        RatFunc ev(Laurent::quantumInteger(k + 1));
        for (std::size_t i = 0; i < n; ++i) f[i][i] -= ev;
        return f;
    };
    auto isZero = [&](const RatMatrix& x) {
        for (const auto& row : x)
            for (const auto& v : row)
                if (!v.zero()) return false;
        return true;
    };
    auto productOver = [&](const std::vector<long>& ks) {
        RatMatrix acc(n, std::vector<RatFunc>(n, RatFunc()));
        for (std::size_t i = 0; i < n; ++i) acc[i][i] = RatFunc(1);
        for (long k : ks) acc = matMul(acc, factor(k));
        return acc;
    };

    std::vector<long> all;
    for (long k = -d; k <= d; ++k) all.push_back(k);
    rep.annihilates = isZero(productOver(all));
    if (!rep.annihilates) {
        rep.detail = "full spectral product is nonzero";
        return rep;
    }
    // minimal squarefree factor: drop each root that is not needed
    std::vector<long> needed = all;
    for (long k : all) {
        std::vector<long> trial;
        for (long t : needed)
            if (t != k) trial.push_back(t);
        if (isZero(productOver(trial))) needed = trial;
    }
    rep.spectrum = needed;
    rep.pass = true;
    std::ostringstream os;
    os << "spectrum {";
    for (std::size_t i = 0; i < needed.size(); ++i)
        os << (i ? "," : "") << "[" << needed[i] + 1 << "]";
    os << "}";
    rep.detail = os.str();
    return rep;
}

long centralizerDimension(const SpaceDesc& space, Side side) {
    const auto basis = spaceBasis(space);
    const std::size_t n = basis.size();
    std::vector<OperatorMatrix> mats;
    for (const auto& g : sideGenerators(space, side, true))
        mats.push_back(operatorMatrix(g, space));
    // unknowns: X[r][c] flattened; constraints: X*M - M*X = 0 per generator
    RatMatrix sys;
    for (const auto& om : mats) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<RatFunc> row(n * n, RatFunc());
                for (std::size_t k = 0; k < n; ++k) {
                    if (!om.mat[k][c].zero()) row[r * n + k] += om.mat[k][c];
                    if (!om.mat[r][k].zero()) row[k * n + c] -= om.mat[r][k];
                }
                bool nonzero = false;
                for (const auto& v : row)
                    if (!v.zero()) { nonzero = true; break; }
                if (nonzero) sys.push_back(std::move(row));
            }
    }
    if (sys.empty()) return static_cast<long>(n * n);
    auto sol = solveLinear(std::move(sys), {});
    return static_cast<long>(n * n) - sol.rank;
}

long weylDimension(const Partition& lambda, int rank) {
    if (static_cast<int>(lambda.size()) > rank)
        throw std::invalid_argument("weylDimension: too many parts for the rank");
    auto part = [&](int i) {
        return i <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i - 1)] : 0;
    };
    long num = 1, den = 1;
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) {
            num *= part(i) - part(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

long classicalDimensionA(const Partition& lambda, int rank) { return weylDimension(lambda, rank); }

long classicalDimension(const BiPartition& lambda, SideFlavor flavor, int rank) {
    const int plusRank = flavor == SideFlavor::Jay ? rank + 1 : rank;
    return weylDimension(lambda.plus, plusRank) * weylDimension(lambda.minus, rank);
}

long closureDimension(const SpaceDesc& space, const std::vector<RatFunc>& coords) {
    const auto basis = spaceBasis(space);
    const std::size_t n = basis.size();
    auto idx = basisIndex(basis);
    std::vector<GeneratorSymbol> gens = sideGenerators(space, Side::Left, false);
    for (const auto& g : sideGenerators(space, Side::Right, false)) gens.push_back(g);

    // reduced row collection
    RatMatrix rows;
    auto insert = [&](std::vector<RatFunc> v) {
        for (const auto& row : rows) {
            // eliminate with pivot = first nonzero of row
            std::size_t p = 0;
            while (p < n && row[p].zero()) ++p;
            if (p == n) continue;
            if (!v[p].zero()) {
                RatFunc f = v[p] / row[p];
                for (std::size_t c = p; c < n; ++c)
                    if (!row[c].zero()) v[c] -= f * row[c];
            }
        }
        for (std::size_t p = 0; p < n; ++p)
            if (!v[p].zero()) {
                rows.push_back(std::move(v));
                return true;
            }
        return false;
    };

    insert(coords);
    std::vector<std::vector<RatFunc>> frontier{coords};
    while (!frontier.empty()) {
        std::vector<std::vector<RatFunc>> next;
        for (const auto& vecCoords : frontier) {
            RatVector v(space);
            for (std::size_t k = 0; k < n; ++k) v.add(basis[k], vecCoords[k]);
            for (const auto& g : gens) {
                RatVector img = applyGenerator(g, v);
                std::vector<RatFunc> ic(n, RatFunc());
                for (const auto& [label, c] : img.terms()) ic[idx.at(label)] = c;
                if (insert(ic)) next.push_back(std::move(ic));
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long>(rows.size());
}

std::vector<BiPartition> decompositionLabels(const SpaceDesc& space) {
    if (space.flavor.family == Family::A) {
        std::vector<BiPartition> out;
        for (const auto& p : enumeratePartitions(std::min(space.m, space.n), space.d))
            out.push_back(BiPartition{p, {}});
        std::sort(out.begin(), out.end());
        return out;
    }
    auto left = enumerateBiPartitions(space.flavor.row, space.m, space.d);
    auto right = enumerateBiPartitions(space.flavor.col, space.n, space.d);
    std::set<BiPartition> rightSet(right.begin(), right.end());
    std::vector<BiPartition> out;
    for (const auto& l : left)
        if (rightSet.count(l)) out.push_back(l);
    return out;
}

std::vector<long> prescribedSideWeights(Family family, SideFlavor flavor, int rank,
                                        const BiPartition& lambda) {
    auto plus = [&](int i) {
        return i >= 1 && i <= static_cast<int>(lambda.plus.size())
                   ? lambda.plus[static_cast<std::size_t>(i - 1)]
                   : 0;
    };
    auto minus = [&](int i) {
        return i >= 1 && i <= static_cast<int>(lambda.minus.size())
                   ? lambda.minus[static_cast<std::size_t>(i - 1)]
                   : 0;
    };
    std::vector<long> w;
    if (family == Family::A) {
        for (int i = 1; i <= rank; ++i) w.push_back(plus(i));
        return w;
    }
    if (flavor == SideFlavor::Jay) {
        w.push_back(plus(1));
        for (int i = 1; i <= rank; ++i) w.push_back(plus(i + 1) + minus(i));
        return w;
    }
    for (int i = 1; i <= rank; ++i) w.push_back(plus(i) + minus(i));
    return w;
}

namespace {

std::string weightsKey(const std::vector<long>& l, const std::vector<long>& r) {
    std::ostringstream os;
    for (long v : l) os << v << ",";
    os << "|";
    for (long v : r) os << v << ",";
    return os.str();
}

}  // namespace

DecompReport verifyDecomposition(const SpaceDesc& space, bool withCentralizer) {
    DecompReport rep;
    rep.space = space;
    const auto basis = spaceBasis(space);
    rep.spaceDim = static_cast<long>(basis.size());

    auto lambdas = decompositionLabels(space);
    rep.lambdaCount = static_cast<long>(lambdas.size());

    auto lines = jointHighestWeightVectors(space, Side::Left);
    auto linesRight = jointHighestWeightVectors(space, Side::Right);
    rep.lineCount = static_cast<long>(lines.size());
    rep.countsOk = rep.lineCount == rep.lambdaCount;

    // dimension accounting
    const bool isA = space.flavor.family == Family::A;
    auto leftDim = [&](const BiPartition& l) {
        return isA ? classicalDimensionA(l.plus, space.m)
                   : classicalDimension(l, space.flavor.row, space.m);
    };
    auto rightDim = [&](const BiPartition& l) {
        return isA ? classicalDimensionA(l.plus, space.n)
                   : classicalDimension(l, space.flavor.col, space.n);
    };
    rep.dimSum = 0;
    for (const auto& l : lambdas) {
        rep.dimSum += leftDim(l) * rightDim(l);
        rep.leftDimSqSum += leftDim(l) * leftDim(l);
        rep.rightDimSqSum += rightDim(l) * rightDim(l);
    }
    rep.dimsOk = rep.dimSum == rep.spaceDim;

    // weight matching with per-group disambiguation
    std::map<std::string, std::vector<std::size_t>> lambdaByKey, lineByKey;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        auto lw = prescribedSideWeights(space.flavor.family, space.flavor.row, space.m, lambdas[k]);
        auto rw = prescribedSideWeights(space.flavor.family, space.flavor.col, space.n, lambdas[k]);
        lambdaByKey[weightsKey(lw, rw)].push_back(k);
    }
    for (std::size_t k = 0; k < lines.size(); ++k)
        lineByKey[weightsKey(lines[k].leftWeights, lines[k].rightWeights)].push_back(k);

    rep.weightsOk = true;
    if (lambdaByKey.size() != lineByKey.size()) rep.weightsOk = false;
    for (const auto& [key, lamIdx] : lambdaByKey) {
        auto it = lineByKey.find(key);
        if (it == lineByKey.end() || it->second.size() != lamIdx.size()) {
            rep.weightsOk = false;
            rep.notes.push_back("weight mismatch at key " + key);
            continue;
        }
        const auto& lineIdx = it->second;
        if (lamIdx.size() == 1) {
            lines[lineIdx[0]].lambda = lambdas[lamIdx[0]].str();
            lines[lineIdx[0]].evidence = "d-weights";
            continue;
        }
        // ambiguous weight block: use t-eigenvalues, then closure dimension
        bool resolved = false;
        const SideFlavor reportFlavor = sideFlavorOf(space, Side::Left);
        if (!isA && reportFlavor == SideFlavor::Iota) {
            std::map<std::string, std::vector<std::size_t>> byEigen, byPrescribed;
            for (std::size_t li : lineIdx)
                if (!lines[li].tEigen.empty())
                    byEigen[lines[li].tEigen[0].second.str()].push_back(li);
            for (std::size_t lk : lamIdx) {
                long val = space.d + (lambdas[lk].plus.empty() ? 0 : lambdas[lk].plus[0]) -
                           (lambdas[lk].minus.empty() ? 0 : lambdas[lk].minus[0]);
                byPrescribed[RatFunc(Laurent::quantumInteger(val)).str()].push_back(lk);
            }
            bool match = byEigen.size() == lineIdx.size() && byPrescribed.size() == lamIdx.size();
            if (match) {
                for (const auto& [ev, lis] : byEigen) {
                    auto pit = byPrescribed.find(ev);
                    if (pit == byPrescribed.end()) { match = false; break; }
                    lines[lis[0]].lambda = lambdas[pit->second[0]].str();
                    lines[lis[0]].evidence = "t-eigenvalue";
                }
            }
            resolved = match;
            if (!match)
                rep.notes.push_back("iota t-eigenvalue resolution failed at key " + key);
        }
        if (!resolved) {
            // closure dimensions decide
            std::map<long, std::vector<std::size_t>> byDim, byLamDim;
            for (std::size_t li : lineIdx)
                byDim[closureDimension(space, lines[li].coords)].push_back(li);
            for (std::size_t lk : lamIdx)
                byLamDim[leftDim(lambdas[lk]) * rightDim(lambdas[lk])].push_back(lk);
            bool match = true;
            for (const auto& [dim, lis] : byDim) {
                auto pit = byLamDim.find(dim);
                if (pit == byLamDim.end() || pit->second.size() != lis.size()) {
                    match = false;
                    break;
                }
                for (std::size_t t = 0; t < lis.size(); ++t) {
                    lines[lis[t]].lambda = lambdas[pit->second[t]].str();
                    lines[lis[t]].evidence =
                        lis.size() == 1 ? "closure-dimension" : "counting";
                }
            }
            if (!match) {
                rep.weightsOk = false;
                rep.notes.push_back("closure-dimension resolution failed at key " + key);
            }
        }
    }

    // summand table, in line order
    for (std::size_t k = 0; k < lines.size(); ++k) {
        SummandInfo s;
        s.lambda = lines[k].lambda;
        s.evidence = lines[k].evidence;
        if (!lines[k].tEigen.empty() && k < linesRight.size() &&
            !linesRight[k].tEigen.empty())
            s.evidence += "+right-t";
        for (const auto& l : lambdas)
            if (l.str() == lines[k].lambda) {
                s.leftDim = leftDim(l);
                s.rightDim = rightDim(l);
            }
        rep.summands.push_back(std::move(s));
    }

    rep.centralizerOk = true;
    if (withCentralizer) {
        rep.rightCommutant = centralizerDimension(space, Side::Right);
        rep.leftCommutant = centralizerDimension(space, Side::Left);
        rep.centralizerOk =
            rep.rightCommutant == rep.leftDimSqSum && rep.leftCommutant == rep.rightDimSqSum;
    }

    rep.pass = rep.countsOk && rep.dimsOk && rep.weightsOk && rep.centralizerOk;
    return rep;
}

}  // namespace qhowe
