#include "qhowe/coord.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhowe {

std::string CoordLetter::str() const {
    return "t[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string CoordWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) os << " ";
        os << letters[k].str();
    }
    return os.str();
}

CoordWord CoordWord::parse(CoordFlavor flavor, int n, const std::string& text) {
    CoordWord w;
    w.flavor = flavor;
    w.n = n;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != 't' || pos + 1 >= text.size() || text[pos + 1] != '[')
            throw std::invalid_argument("CoordWord::parse: expected t[i,j] at '" +
                                        text.substr(pos) + "'");
        pos += 2;
        auto comma = text.find(',', pos);
        auto close = text.find(']', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("CoordWord::parse: malformed letter");
        CoordLetter l;
        l.i = std::stoi(text.substr(pos, comma - pos));
        l.j = std::stoi(text.substr(comma + 1, close - comma - 1));
        w.letters.push_back(l);
        pos = close + 1;
        skip();
    }
    const int lo = flavor == CoordFlavor::A ? 1 : -n;
    for (const auto& l : w.letters) {
        if (l.i < lo || l.i > n || l.j < lo || l.j > n)
            throw std::invalid_argument("CoordWord: letter index out of range: " + l.str());
        if (flavor == CoordFlavor::BIota && (l.i == 0 || l.j == 0))
            throw std::invalid_argument("CoordWord: zero-index letter invalid for the iota variant: " +
                                        l.str());
    }
    return w;
}

namespace {

bool lexLess(const CoordLetter& a, const CoordLetter& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
}

IndexMatrix wordLabelA(int n, const std::vector<CoordLetter>& letters) {
    IndexMatrix m(Flavor{Family::A, SideFlavor::Jay, SideFlavor::Jay}, n, n);
    for (const auto& l : letters) m = m.plusEntry(l.i, l.j, 1);
    return m;
}

}  // namespace

ModuleVector normalOrder(const CoordWord& w, ReduceStrategy strategy) {
    if (w.flavor != CoordFlavor::A)
        throw std::invalid_argument("normalOrder: A-family words only (use reduceB for B)");
    SpaceDesc space{Flavor{Family::A, SideFlavor::Jay, SideFlavor::Jay}, w.n, w.n,
                    static_cast<int>(w.letters.size())};
    ModuleVector out(space);
    const Laurent straight = Laurent::q(1) - Laurent::q(-1);

    std::vector<std::pair<Laurent, std::vector<CoordLetter>>> work;
    work.emplace_back(Laurent(1), w.letters);
    long steps = 0;
    while (!work.empty()) {
        auto [coeff, word] = std::move(work.back());
        work.pop_back();
        // locate an inversion per the strategy
        long invPos = -1;
        if (strategy == ReduceStrategy::LeftmostInversion) {
            for (std::size_t p = 0; p + 1 < word.size(); ++p)
                if (lexLess(word[p + 1], word[p])) { invPos = static_cast<long>(p); break; }
        } else {
            for (std::size_t p = word.size(); p >= 2; --p)
                if (lexLess(word[p - 1], word[p - 2])) { invPos = static_cast<long>(p - 2); break; }
        }
        if (invPos < 0) {
            out.add(wordLabelA(w.n, word), coeff);
            continue;
        }
        if (++steps > 5'000'000)
            throw std::runtime_error("normalOrder: rewrite step cap exceeded");
        auto p = static_cast<std::size_t>(invPos);
        CoordLetter x = word[p], y = word[p + 1];  // x > y lexicographically
        if (x.i == y.i || x.j == y.j) {
            // same row or same column: q-commute
            std::swap(word[p], word[p + 1]);
            work.emplace_back(coeff * Laurent::q(-1), std::move(word));
        } else if (y.i < x.i && y.j > x.j) {
            // anti-diagonal pair: plain commute
            std::swap(word[p], word[p + 1]);
            work.emplace_back(coeff, std::move(word));
        } else {
            // y.i < x.i, y.j < x.j: straightening relation
            auto branch = word;
            branch[p] = CoordLetter{y.i, x.j};
            branch[p + 1] = CoordLetter{x.i, y.j};
            work.emplace_back(coeff * (Laurent(0) - straight), std::move(branch));
            std::swap(word[p], word[p + 1]);
            work.emplace_back(coeff, std::move(word));
        }
    }
    return out;
}

namespace {

bool inDomain(const CoordLetter& l) { return l.i > 0 || (l.i == 0 && l.j >= 0); }

// Largest lex position of the restricted monomial, or nullopt when trivial.
std::optional<CoordLetter> maxDomainPosition(const IndexMatrix& b) {
    for (int i = b.rowHi(); i >= 0; --i)
        for (int j = b.colHi(); j >= (i == 0 ? 0 : b.colLo()); --j)
            if (b.sharpAt(i, j) > 0) return CoordLetter{i, j};
    return std::nullopt;
}

ModuleVector mulLetter(const SpaceDesc& space, const IndexMatrix& b, const CoordLetter& x);

ModuleVector mulVector(const SpaceDesc& space, const ModuleVector& v, const CoordLetter& x) {
    ModuleVector out(space);
    for (const auto& [label, c] : v.terms()) {
        ModuleVector part = mulLetter(space, label, x);
        for (const auto& [l2, c2] : part.terms()) out.add(l2, c * c2);
    }
    return out;
}

ModuleVector mulLetter(const SpaceDesc& space, const IndexMatrix& b, const CoordLetter& x) {
    ModuleVector out(space);
    const Laurent straight = Laurent::q(1) - Laurent::q(-1);
    const auto top = maxDomainPosition(b);
    if (!top) {
        // epsilon-boundary: out-of-domain letters rewrite by the quotient
        // relations, domain letters extend the monomial.
        if (inDomain(x)) {
            out.add(b.plusTheta(x.i, x.j, 1), Laurent(1));
        } else if (x.i < 0 && x.j < 0) {
            out.add(b.plusTheta(-x.i, -x.j, 1), Laurent(1));
            out.add(b.plusTheta(-x.i, x.j, 1), Laurent(0) - straight);
        } else if (x.i < 0 && x.j > 0) {
            out.add(b.plusTheta(-x.i, -x.j, 1), Laurent(1));
        } else if (x.i < 0 && x.j == 0) {
            out.add(b.plusTheta(-x.i, 0, 1), Laurent::q(-1));
        } else {  // x.i == 0, x.j < 0
            out.add(b.plusTheta(0, -x.j, 1), Laurent::q(-1));
        }
        return out;
    }
    const CoordLetter kl = *top;
    if (inDomain(x) && !lexLess(x, kl)) {
        out.add(b.plusTheta(x.i, x.j, 1), Laurent(1));
        return out;
    }
    // Peel the maximal letter and commute x leftward through it.
    IndexMatrix bPrev = b.plusTheta(kl.i, kl.j, -1);
    if (x.i == kl.i || x.j == kl.j) {
        ModuleVector inner = mulLetter(space, bPrev, x);
        out += mulVector(space, inner, kl).scaled(Laurent::q(-1));
    } else if (x.i < kl.i && x.j > kl.j) {
        ModuleVector inner = mulLetter(space, bPrev, x);
        out += mulVector(space, inner, kl);
    } else {
        ModuleVector inner = mulLetter(space, bPrev, x);
        out += mulVector(space, inner, kl);
        ModuleVector innerMix = mulLetter(space, bPrev, CoordLetter{x.i, kl.j});
        out -= mulVector(space, innerMix, CoordLetter{kl.i, x.j}).scaled(straight);
    }
    return out;
}

}  // namespace

ModuleVector reduceBStep(const IndexMatrix& label, const CoordLetter& letter) {
    SpaceDesc space{label.flavor(), label.m(), label.n(), label.d() + 1};
    return mulLetter(space, label, letter);
}

ModuleVector reduceB(const CoordWord& w) {
    if (w.flavor == CoordFlavor::A)
        throw std::invalid_argument("reduceB: B-family words only");
    const Flavor jay{Family::B, SideFlavor::Jay, SideFlavor::Jay};
    // center 1 = the degree-0 restricted monomial
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(2 * w.n + 1),
                                       std::vector<int>(static_cast<std::size_t>(2 * w.n + 1), 0));
    rows[static_cast<std::size_t>(w.n)][static_cast<std::size_t>(w.n)] = 1;
    IndexMatrix unit = IndexMatrix::fromRows(jay, w.n, w.n, rows);
    ModuleVector cur(SpaceDesc{jay, w.n, w.n, 0});
    cur.add(unit, Laurent(1));
    int deg = 0;
    for (const auto& letter : w.letters) {
        if (w.flavor == CoordFlavor::BIota && (letter.i == 0 || letter.j == 0))
            throw std::invalid_argument("reduceB: zero-index letter invalid for the iota variant");
        ++deg;
        SpaceDesc space{jay, w.n, w.n, deg};
        ModuleVector next(space);
        for (const auto& [label, c] : cur.terms()) {
            ModuleVector part = mulLetter(space, label, letter);
            for (const auto& [l2, c2] : part.terms()) next.add(l2, c * c2);
        }
        cur = next;
    }
    if (w.flavor == CoordFlavor::BIota) {
        const Flavor iot{Family::B, SideFlavor::Iota, SideFlavor::Iota};
        ModuleVector retagged(SpaceDesc{iot, w.n, w.n, deg});
        for (const auto& [label, c] : cur.terms()) {
            IndexMatrix relab = IndexMatrix::fromRows(iot, w.n, w.n, label.rowsVec());
            retagged.add(relab, c);
        }
        return retagged;
    }
    return cur;
}

namespace {

void checkCoordSymbol(const GeneratorSymbol& g, const SpaceDesc& space) {
    if (space.flavor.family == Family::C)
        throw std::invalid_argument("actCoord: no coordinate model for the C family");
    const bool left = g.side == Side::Left;
    const int rank = left ? space.n : space.m;
    const SideFlavor sf = left ? space.flavor.col : space.flavor.row;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("coord generator " + g.str() + " invalid on " + space.str() +
                                    ": " + why);
    };
    switch (g.kind) {
        case GenKind::E:
        case GenKind::F:
            if (space.flavor.family != Family::A) fail("A generator on B space");
            if (g.index < 1 || g.index >= rank) fail("index out of range");
            return;
        case GenKind::D:
        case GenKind::Dinv:
            if (space.flavor.family != Family::A) fail("A generator on B space");
            if (g.index < 1 || g.index > rank) fail("index out of range");
            return;
        case GenKind::e:
        case GenKind::f:
        case GenKind::k:
        case GenKind::kinv: {
            if (space.flavor.family != Family::B) fail("coideal generator on A space");
            const int lo = sf == SideFlavor::Jay ? 0 : 1;
            if (g.index < lo || g.index >= rank) fail("index out of range");
            return;
        }
        case GenKind::d:
        case GenKind::dinv: {
            if (space.flavor.family != Family::B) fail("coideal generator on A space");
            const int lo = sf == SideFlavor::Jay ? 0 : 1;
            if (g.index < lo || g.index > rank) fail("index out of range");
            return;
        }
        case GenKind::t0:
            if (space.flavor.family != Family::B || sf != SideFlavor::Iota)
                fail("t0 needs an iota-flavored side");
            return;
    }
}

long coordDExponent(const SpaceDesc& space, Side side, int j, const IndexMatrix& a) {
    const long line = side == Side::Left ? a.colSum(j) : a.rowSum(j);
    if (space.flavor.family == Family::A || j > 0) return line;
    return (line - 1) / 2;  // jay center (B family only here)
}

long coordDiagonalExponent(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    switch (g.kind) {
        case GenKind::D:
        case GenKind::d:
            return coordDExponent(space, g.side, g.index, a);
        case GenKind::Dinv:
        case GenKind::dinv:
            return -coordDExponent(space, g.side, g.index, a);
        case GenKind::k:
        case GenKind::kinv: {
            long e;
            if (g.index == 0)
                e = 2 * coordDExponent(space, g.side, 0, a) - coordDExponent(space, g.side, 1, a);
            else
                e = coordDExponent(space, g.side, g.index, a) -
                    coordDExponent(space, g.side, g.index + 1, a);
            return g.kind == GenKind::k ? e : -e;
        }
        default:
            throw std::invalid_argument("coordDiagonalExponent: not diagonal");
    }
}

ModuleVector actCoordA(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    ModuleVector out(space);
    const int i = g.index;
    switch (g.kind) {
        case GenKind::E:
            if (g.side == Side::Left) {
                for (int j = a.rowLo(); j <= a.rowHi(); ++j) {
                    if (a.at(j, i + 1) <= 0) continue;
                    long exp = 0;
                    for (int k = j + 1; k <= a.rowHi(); ++k) exp += a.at(k, i + 1) - a.at(k, i);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(j, i + 1));
                    out.add(a.plusEntry(j, i, 1).plusEntry(j, i + 1, -1), c);
                }
            } else {
                for (int j = a.colLo(); j <= a.colHi(); ++j) {
                    if (a.at(i, j) <= 0) continue;
                    long exp = 1;
                    for (int k = j; k <= a.colHi(); ++k) exp += a.at(i + 1, k) - a.at(i, k);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(i, j));
                    out.add(a.plusEntry(i + 1, j, 1).plusEntry(i, j, -1), c);
                }
            }
            return out;
        case GenKind::F:
            if (g.side == Side::Left) {
                for (int j = a.rowLo(); j <= a.rowHi(); ++j) {
                    if (a.at(j, i) <= 0) continue;
                    long exp = 0;
                    for (int k = a.rowLo(); k < j; ++k) exp += a.at(k, i) - a.at(k, i + 1);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(j, i));
                    out.add(a.plusEntry(j, i + 1, 1).plusEntry(j, i, -1), c);
                }
            } else {
                for (int j = a.colLo(); j <= a.colHi(); ++j) {
                    if (a.at(i + 1, j) <= 0) continue;
                    long exp = 1;
                    for (int k = a.colLo(); k <= j; ++k) exp += a.at(i, k) - a.at(i + 1, k);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(a.at(i + 1, j));
                    out.add(a.plusEntry(i, j, 1).plusEntry(i + 1, j, -1), c);
                }
            }
            return out;
        default:
            out.add(a, Laurent::q(static_cast<int>(coordDiagonalExponent(g, space, a))));
            return out;
    }
}

ModuleVector actCoordB(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a) {
    ModuleVector out(space);
    const int i = g.index;
    const bool left = g.side == Side::Left;
    // For a left symbol the moving index is the column, and the summation
    // index j runs over rows; mirrored for right symbols.
    const int jLo = left ? a.rowLo() : a.colLo();
    const int jHi = left ? a.rowHi() : a.colHi();
    auto ent = [&](int j, int c) { return left ? a.at(j, c) : a.at(c, j); };
    auto sharp = [&](int j, int c) { return left ? a.sharpAt(j, c) : a.sharpAt(c, j); };
    auto move = [&](int j, int cTo, int cFrom) {
        return left ? a.plusTheta(j, cTo, 1).plusTheta(j, cFrom, -1)
                    : a.plusTheta(cTo, j, 1).plusTheta(cFrom, j, -1);
    };
    switch (g.kind) {
        case GenKind::e:
            if (left) {
                for (int j = jLo; j <= jHi; ++j) {
                    if (ent(j, i + 1) <= 0) continue;
                    long exp = 0;
                    for (int k = j + 1; k <= jHi; ++k) exp += ent(k, i + 1) - ent(k, i);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i + 1));
                    out.add(move(j, i, i + 1), c);
                }
            } else {
                for (int j = jLo; j <= 0; ++j) {
                    if (sharp(j, i) <= 0) continue;
                    long exp = 1 + (i == 0 ? 1 : 0);
                    for (int k = j; k <= jHi; ++k) exp += ent(k, i + 1) - ent(k, i);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i) - (i == 0 && j == 0 ? 1 : 0));
                    out.add(move(j, i + 1, i), c);
                }
                for (int j = 1; j <= jHi; ++j) {
                    if (ent(j, i) <= 0) continue;
                    long exp = 1;
                    for (int k = j; k <= jHi; ++k) exp += ent(k, i + 1) - ent(k, i);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i));
                    out.add(move(j, i + 1, i), c);
                }
            }
            return out;
        case GenKind::f:
            if (left) {
                for (int j = jLo; j <= 0; ++j) {
                    if (sharp(j, i) <= 0) continue;
                    long exp = 0;
                    for (int k = jLo; k < j; ++k) exp += ent(k, i) - ent(k, i + 1);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i) - (i == 0 && j == 0 ? 1 : 0));
                    out.add(move(j, i + 1, i), c);
                }
                for (int j = 1; j <= jHi; ++j) {
                    if (ent(j, i) <= 0) continue;
                    long exp = i == 0 ? -1 : 0;
                    for (int k = jLo; k < j; ++k) exp += ent(k, i) - ent(k, i + 1);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i));
                    out.add(move(j, i + 1, i), c);
                }
            } else {
                for (int j = jLo; j <= jHi; ++j) {
                    if (ent(j, i + 1) <= 0) continue;
                    long exp = 1;
                    for (int k = jLo; k <= j; ++k) exp += ent(k, i) - ent(k, i + 1);
                    Laurent c = Laurent::q(static_cast<int>(exp)) *
                                Laurent::quantumInteger(ent(j, i + 1));
                    out.add(move(j, i, i + 1), c);
                }
            }
            return out;
        case GenKind::t0: {
            long diag = 0;
            for (int j = 1; j <= jHi; ++j) diag += ent(j, 1) - ent(j, -1);
            diag += ent(0, 1);
            out.add(a, Laurent::q(static_cast<int>(diag)));
            for (int j = jLo; j <= jHi; ++j) {
                if (ent(j, 1) <= 0) continue;
                long exp = -ent(j, 0) + (j < 0 ? 1 : 0);
                for (int k = j + 1; k <= jHi; ++k) exp += ent(k, 1) - ent(k, -1);
                Laurent c = Laurent::q(static_cast<int>(exp)) *
                            Laurent::quantumInteger(ent(j, 1));
                out.add(move(j, -1, 1), c);
            }
            return out;
        }
        default:
            out.add(a, Laurent::q(static_cast<int>(coordDiagonalExponent(g, space, a))));
            return out;
    }
}

}  // namespace

ModuleVector actCoordOnLabel(const GeneratorSymbol& g, const SpaceDesc& space,
                             const IndexMatrix& a) {
    checkCoordSymbol(g, space);
    return space.flavor.family == Family::A ? actCoordA(g, space, a) : actCoordB(g, space, a);
}

ModuleVector actCoord(const GeneratorSymbol& g, const ModuleVector& v) {
    ModuleVector out(v.space());
    for (const auto& [label, coeff] : v.terms()) {
        ModuleVector part = actCoordOnLabel(g, v.space(), label);
        for (const auto& [l2, c2] : part.terms()) out.add(l2, coeff * c2);
    }
    return out;
}

RatVector actCoord(const GeneratorSymbol& g, const RatVector& v) {
    RatVector out(v.space());
    for (const auto& [label, coeff] : v.terms()) {
        ModuleVector part = actCoordOnLabel(g, v.space(), label);
        for (const auto& [l2, c2] : part.terms()) out.add(l2, coeff * RatFunc(c2));
    }
    return out;
}

RatFunc RescaleFactor::value() const {
    return RatFunc(Laurent::q(static_cast<int>(exponent))) / RatFunc(denom);
}

RescaleFactor rescaleFactor(const IndexMatrix& a) {
    RescaleFactor r;
    if (a.flavor().family == Family::A) {
        long e = 0;
        for (int i = 1; i <= a.rowHi(); ++i) {
            long ro = a.rowSum(i);
            e += ro * (ro + 1) / 2;
        }
        r.exponent = e;
        Laurent denom(1);
        for (int i = a.rowLo(); i <= a.rowHi(); ++i)
            for (int j = a.colLo(); j <= a.colHi(); ++j)
                denom *= Laurent::quantumFactorial(a.at(i, j));
        r.denom = denom;
        return r;
    }
    if (a.flavor().family != Family::B)
        throw std::invalid_argument("rescaleFactor: A or B family labels only");
    long ro0 = a.rowSum(0);
    if (((ro0 - 1) * (ro0 + 1)) % 4 != 0)
        throw std::domain_error("rescaleFactor: non-integral center exponent");
    long e = (ro0 - 1) * (ro0 + 1) / 4;
    for (int i = 1; i <= a.rowHi(); ++i) {
        long ro = a.rowSum(i);
        e += ro * (ro + 1) / 2;
    }
    r.exponent = e;
    Laurent denom = Laurent::quantumDoubleFactorial(a.at(0, 0) - 1);
    for (int i = a.rowLo(); i <= a.rowHi(); ++i)
        for (int j = a.colLo(); j <= a.colHi(); ++j) {
            if (i < 0 || (i == 0 && j <= 0)) continue;
            denom *= Laurent::quantumFactorial(a.at(i, j));
        }
    r.denom = denom;
    return r;
}

}  // namespace qhowe
