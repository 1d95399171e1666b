#include "qhowe/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace qhowe {

std::string sideStr(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

const char* kindName(GenKind k) {
    switch (k) {
        case GenKind::E: return "E";
        case GenKind::F: return "F";
        case GenKind::D: return "D";
        case GenKind::Dinv: return "Dinv";
        case GenKind::e: return "e";
        case GenKind::f: return "f";
        case GenKind::d: return "d";
        case GenKind::dinv: return "dinv";
        case GenKind::t0: return "t0";
        case GenKind::k: return "k";
        case GenKind::kinv: return "kinv";
    }
    return "?";
}

}  // namespace

std::string GeneratorSymbol::str() const {
    if (kind == GenKind::t0) return "t0";
    return std::string(kindName(kind)) + std::to_string(index);
}

GeneratorSymbol GeneratorSymbol::parse(Side side, const std::string& text) {
    static const std::vector<std::pair<std::string, GenKind>> prefixes = {
        {"Dinv", GenKind::Dinv}, {"dinv", GenKind::dinv}, {"kinv", GenKind::kinv},
        {"t0", GenKind::t0},     {"E", GenKind::E},       {"F", GenKind::F},
        {"D", GenKind::D},       {"e", GenKind::e},       {"f", GenKind::f},
        {"d", GenKind::d},       {"k", GenKind::k}};
    for (const auto& [p, kind] : prefixes) {
        if (text.rfind(p, 0) != 0) continue;
        if (kind == GenKind::t0) {
            if (text == "t0") return GeneratorSymbol{side, kind, 0};
            continue;
        }
        std::string rest = text.substr(p.size());
        if (rest.empty()) continue;
        try {
            return GeneratorSymbol{side, kind, std::stoi(rest)};
        } catch (...) {
            continue;
        }
    }
    throw std::invalid_argument("GeneratorSymbol::parse: cannot parse '" + text + "'");
}

std::string wordStr(const GeneratorWord& w) {
    std::ostringstream os;
    if (!w.prefactor.isOne()) os << "(" << w.prefactor.str() << ")*";
    if (w.symbols.empty()) os << "1";
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i) os << ".";
        os << w.symbols[i].str();
    }
    return os.str();
}

std::string wordSumStr(const WordSum& ws) {
    if (ws.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) os << " + ";
        os << wordStr(ws[i]);
    }
    return os.str();
}

long normalizationExponent(const IndexMatrix& a) {
    long s1 = 0;
    for (int i = a.rowLo(); i <= a.rowHi(); ++i)
        for (int j = a.colLo(); j <= a.colHi(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = a.rowLo(); k <= i; ++k)
                for (int l = j + 1; l <= a.colHi(); ++l)
                    s1 += static_cast<long>(a.at(i, j)) * a.at(k, l);
        }
    if (a.flavor().family == Family::A) return s1;
    long s2 = 0;
    for (int i = 0; i <= a.rowHi(); ++i)
        for (int j = a.colLo(); j < 0; ++j) s2 += a.at(i, j);
    long twice = a.flavor().family == Family::B ? s1 - s2 : s1 + s2;
    if (twice % 2 != 0)
        throw std::domain_error("normalizationExponent: non-integral exponent for " + a.rowsStr());
    return twice / 2;
}

int sideRank(const SpaceDesc& space, Side side) { return side == Side::Left ? space.m : space.n; }

SideFlavor sideFlavorOf(const SpaceDesc& space, Side side) {
    return side == Side::Left ? space.flavor.row : space.flavor.col;
}

namespace {

void checkSymbol(const GeneratorSymbol& g, const SpaceDesc& space) {
    const int rank = sideRank(space, g.side);
    const Family fam = space.flavor.family;
    const SideFlavor sf = sideFlavorOf(space, g.side);
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("generator " + g.str() + " invalid on " + space.str() + ": " + why);
    };
    switch (g.kind) {
        case GenKind::E:
        case GenKind::F:
            if (fam != Family::A) fail("A-family generator on B/C space");
            if (g.index < 1 || g.index >= rank) fail("index out of range");
            return;
        case GenKind::D:
        case GenKind::Dinv:
            if (fam != Family::A) fail("A-family generator on B/C space");
            if (g.index < 1 || g.index > rank) fail("index out of range");
            return;
        case GenKind::e:
        case GenKind::f:
            if (fam == Family::A) fail("coideal generator on A space");
            if (sf == SideFlavor::Jay) {
                if (g.index < 0 || g.index >= rank) fail("index out of range");
            } else {
                if (g.index < 1 || g.index >= rank) fail("index out of range");
            }
            return;
        case GenKind::d:
        case GenKind::dinv:
            if (fam == Family::A) fail("coideal generator on A space");
            if (sf == SideFlavor::Jay) {
                if (g.index < 0 || g.index > rank) fail("index out of range");
            } else {
                if (g.index < 1 || g.index > rank) fail("index out of range");
            }
            return;
        case GenKind::k:
        case GenKind::kinv:
            if (fam == Family::A) fail("coideal generator on A space");
            if (sf == SideFlavor::Jay) {
                if (g.index < 0 || g.index >= rank) fail("index out of range");
            } else {
                if (g.index < 1 || g.index >= rank) fail("index out of range");
            }
            return;
        case GenKind::t0:
            if (fam == Family::A || sf != SideFlavor::Iota) fail("t0 needs an iota-flavored side");
            if (rank < 1) fail("t0 needs rank >= 1");
            return;
    }
}

long lineSum(const IndexMatrix& a, Side side, int i) {
    return side == Side::Left ? a.rowSum(i) : a.colSum(i);
}

// Exponent of the q-scalar for one d_j / D_a on one label.
long dExponent(const SpaceDesc& space, Side side, int j, const IndexMatrix& a) {
    if (space.flavor.family == Family::A) return lineSum(a, side, j);
    if (j > 0) return lineSum(a, side, j);
    // j == 0 exists only on a jay side; center sharp of the diagonal weight.
    long c = lineSum(a, side, 0);
    return space.flavor.family == Family::B ? (c - 1) / 2 : c / 2;
}

}  // namespace

long diagonalExponent(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    switch (g.kind) {
        case GenKind::D:
        case GenKind::d:
            return dExponent(space, g.side, g.index, a);
        case GenKind::Dinv:
        case GenKind::dinv:
            return -dExponent(space, g.side, g.index, a);
        case GenKind::k:
        case GenKind::kinv: {
            long e;
            if (g.index == 0)
                e = 2 * dExponent(space, g.side, 0, a) - dExponent(space, g.side, 1, a);
            else
                e = dExponent(space, g.side, g.index, a) - dExponent(space, g.side, g.index + 1, a);
            return g.kind == GenKind::k ? e : -e;
        }
        default:
            throw std::invalid_argument("diagonalExponent: not a diagonal generator");
    }
}

namespace {

ModuleVector applyA(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    ModuleVector out(space);
    const int i = g.index;
    switch (g.kind) {
        case GenKind::E:
            if (g.side == Side::Left) {
                for (int j = 1; j <= space.n; ++j) {
                    if (a.at(i + 1, j) <= 0) continue;
                    long exp = 0;
                    for (int k = j + 1; k <= space.n; ++k) exp += a.at(i + 1, k) - a.at(i, k);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(i, j) + 1);
                    out.add(a.plusEntry(i, j, 1).plusEntry(i + 1, j, -1), c);
                }
            } else {
                for (int j = 1; j <= space.m; ++j) {
                    if (a.at(j, i) <= 0) continue;
                    long exp = 0;
                    for (int k = 1; k < j; ++k) exp += a.at(k, i) - a.at(k, i + 1);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(j, i + 1) + 1);
                    out.add(a.plusEntry(j, i + 1, 1).plusEntry(j, i, -1), c);
                }
            }
            return out;
        case GenKind::F:
            if (g.side == Side::Left) {
                for (int j = 1; j <= space.n; ++j) {
                    if (a.at(i, j) <= 0) continue;
                    long exp = 0;
                    for (int k = 1; k < j; ++k) exp += a.at(i, k) - a.at(i + 1, k);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(i + 1, j) + 1);
                    out.add(a.plusEntry(i + 1, j, 1).plusEntry(i, j, -1), c);
                }
            } else {
                for (int j = 1; j <= space.m; ++j) {
                    if (a.at(j, i + 1) <= 0) continue;
                    long exp = 0;
                    for (int k = j + 1; k <= space.m; ++k) exp += a.at(k, i + 1) - a.at(k, i);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(j, i) + 1);
                    out.add(a.plusEntry(j, i, 1).plusEntry(j, i + 1, -1), c);
                }
            }
            return out;
        default:
            out.add(a, Laurent::q(static_cast<int>(diagonalExponent(g, space, a))));
            return out;
    }
}

ModuleVector applyBC(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    ModuleVector out(space);
    const int i = g.index;
    const bool left = g.side == Side::Left;
    const int oppLo = left ? a.colLo() : a.rowLo();
    const int oppHi = left ? a.colHi() : a.rowHi();
    // Entry accessors oriented so the acting side indexes the first slot.
    auto ent = [&](int r, int c) { return left ? a.at(r, c) : a.at(c, r); };
    auto sharp = [&](int r, int c) { return left ? a.sharpAt(r, c) : a.sharpAt(c, r); };
    auto move = [&](int rTo, int cAt, int rFrom) {
        return left ? a.plusTheta(rTo, cAt, 1).plusTheta(rFrom, cAt, -1)
                    : a.plusTheta(cAt, rTo, 1).plusTheta(cAt, rFrom, -1);
    };
    switch (g.kind) {
        case GenKind::e: {
            for (int j = oppLo; j <= oppHi; ++j) {
                if (ent(i + 1, j) <= 0) continue;
                long exp = 0;
                for (int k = j + 1; k <= oppHi; ++k) exp += ent(i + 1, k) - ent(i, k);
                Laurent c = Laurent::q(static_cast<int>(exp)) *
                            Laurent::quantumInteger(ent(i, j) + 1);
                out.add(move(i, j, i + 1), c);
            }
            return out;
        }
        case GenKind::f: {
            for (int j = oppLo; j <= 0; ++j) {
                if (sharp(i, j) <= 0) continue;
                long exp = 0;
                for (int k = oppLo; k < j; ++k) exp += ent(i, k) - ent(i + 1, k);
                Laurent c = Laurent::q(static_cast<int>(exp)) *
                            Laurent::quantumInteger(ent(i + 1, j) + 1);
                out.add(move(i + 1, j, i), c);
            }
            for (int j = 1; j <= oppHi; ++j) {
                if (ent(i, j) <= 0) continue;
                long exp = i == 0 ? -1 : 0;
                for (int k = oppLo; k < j; ++k) exp += ent(i, k) - ent(i + 1, k);
                Laurent c = Laurent::q(static_cast<int>(exp)) *
                            Laurent::quantumInteger(ent(i + 1, j) + 1);
                out.add(move(i + 1, j, i), c);
            }
            return out;
        }
        case GenKind::t0: {
            long diag = 0;
            for (int j = 0; j <= oppHi; ++j) diag += ent(1, j);
            for (int j = oppLo; j < 0; ++j) diag -= ent(1, j);
            out.add(a, Laurent::q(static_cast<int>(diag)));
            for (int j = oppLo; j <= oppHi; ++j) {
                if (ent(1, j) <= 0) continue;
                long exp = -ent(0, j) + (j < 0 ? 1 : 0);
                for (int k = j + 1; k <= oppHi; ++k) exp += ent(1, k) - ent(-1, k);
                Laurent c = Laurent::q(static_cast<int>(exp)) *
                            Laurent::quantumInteger(ent(-1, j) + 1 - (j == 0 ? 1 : 0));
                out.add(move(-1, j, 1), c);
            }
            return out;
        }
        default:
            out.add(a, Laurent::q(static_cast<int>(diagonalExponent(g, space, a))));
            return out;
    }
}

}  // namespace

ModuleVector applyGeneratorToLabel(const GeneratorSymbol& g, const SpaceDesc& space,
                                   const IndexMatrix& a) {
    checkSymbol(g, space);
    return space.flavor.family == Family::A ? applyA(g, space, a) : applyBC(g, space, a);
}

ModuleVector applyGenerator(const GeneratorSymbol& g, const ModuleVector& v) {
    ModuleVector out(v.space());
    for (const auto& [label, coeff] : v.terms()) {
        ModuleVector part = applyGeneratorToLabel(g, v.space(), label);
        for (const auto& [l2, c2] : part.terms()) out.add(l2, coeff * c2);
    }
    return out;
}

RatVector applyGenerator(const GeneratorSymbol& g, const RatVector& v) {
    RatVector out(v.space());
    for (const auto& [label, coeff] : v.terms()) {
        ModuleVector part = applyGeneratorToLabel(g, v.space(), label);
        for (const auto& [l2, c2] : part.terms()) out.add(l2, coeff * RatFunc(c2));
    }
    return out;
}

RatVector applyWord(const GeneratorWord& w, const RatVector& v) {
    RatVector cur = v;
    if (w.side == Side::Left) {
        for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it)
            cur = applyGenerator(*it, cur);
    } else {
        for (const auto& s : w.symbols) cur = applyGenerator(s, cur);
    }
    return cur.scaled(w.prefactor);
}

RatVector applyWordSum(const WordSum& ws, const RatVector& v) {
    RatVector out(v.space());
    for (const auto& w : ws) out += applyWord(w, v);
    return out;
}

std::vector<GeneratorSymbol> sideGenerators(const SpaceDesc& space, Side side,
                                            bool includeDiagonal) {
    std::vector<GeneratorSymbol> gens;
    const int rank = sideRank(space, side);
    if (space.flavor.family == Family::A) {
        for (int i = 1; i < rank; ++i) {
            gens.push_back({side, GenKind::E, i});
            gens.push_back({side, GenKind::F, i});
        }
        if (includeDiagonal)
            for (int a = 1; a <= rank; ++a) gens.push_back({side, GenKind::D, a});
        return gens;
    }
    const SideFlavor sf = sideFlavorOf(space, side);
    const int lo = sf == SideFlavor::Jay ? 0 : 1;
    for (int i = lo; i < rank; ++i) {
        gens.push_back({side, GenKind::e, i});
        gens.push_back({side, GenKind::f, i});
    }
    if (sf == SideFlavor::Iota) gens.push_back({side, GenKind::t0, 0});
    if (includeDiagonal)
        for (int j = lo; j <= rank; ++j) gens.push_back({side, GenKind::d, j});
    return gens;
}

std::vector<GeneratorSymbol> raisingGenerators(const SpaceDesc& space, Side side) {
    std::vector<GeneratorSymbol> gens;
    for (const auto& g : sideGenerators(space, side, false))
        if (g.kind == GenKind::E || g.kind == GenKind::e) gens.push_back(g);
    return gens;
}

std::vector<GeneratorSymbol> loweringGenerators(const SpaceDesc& space, Side side) {
    std::vector<GeneratorSymbol> gens;
    for (const auto& g : sideGenerators(space, side, false))
        if (g.kind == GenKind::F || g.kind == GenKind::f) gens.push_back(g);
    return gens;
}

CommuteReport checkCommutingActions(const SpaceDesc& space) {
    CommuteReport rep;
    const auto basis = spaceBasis(space);
    const auto leftGens = sideGenerators(space, Side::Left);
    const auto rightGens = sideGenerators(space, Side::Right);
    for (const auto& g : leftGens)
        for (const auto& h : rightGens) {
            for (const auto& a : basis) {
                ModuleVector va = ModuleVector::basisVector(space, a);
                ModuleVector gh = applyGenerator(g, applyGenerator(h, va));
                ModuleVector hg = applyGenerator(h, applyGenerator(g, va));
                if (gh != hg) {
                    rep.pass = false;
                    rep.failures.push_back(g.str() + " vs " + h.str() + " on " + a.rowsStr());
                }
            }
            ++rep.pairsChecked;
        }
    return rep;
}

}  // namespace qhowe
