#pragma once

#include <string>
#include <vector>

#include "qhowe/module_vector.hpp"

namespace qhowe {

enum class Side : std::uint8_t { Left, Right };

/// Generator alphabet. E/F/D/Dinv serve the A family; e/f/d/dinv/t0/k/kinv
/// serve the B/C families (k is the derived diagonal ratio).
enum class GenKind : std::uint8_t { E, F, D, Dinv, e, f, d, dinv, t0, k, kinv };

struct GeneratorSymbol {
    Side side = Side::Left;
    GenKind kind = GenKind::E;
    int index = 0;

    bool operator==(const GeneratorSymbol&) const = default;
    std::string str() const;
    static GeneratorSymbol parse(Side side, const std::string& text);
};

/// Word in same-side generator symbols with an exact scalar prefactor.
/// A left word acts as the algebra element (symbols composed right-to-left on
/// vectors); a right word acts left-to-right.
struct GeneratorWord {
    Side side = Side::Left;
    std::vector<GeneratorSymbol> symbols;
    RatFunc prefactor = RatFunc(1);
};

using WordSum = std::vector<GeneratorWord>;

std::string sideStr(Side s);
std::string wordStr(const GeneratorWord& w);
std::string wordSumStr(const WordSum& ws);

/// q-power exponent relating the normalized basis element to the orbit
/// characteristic function; integral by construction (throws otherwise).
long normalizationExponent(const IndexMatrix& a);

int sideRank(const SpaceDesc& space, Side side);
SideFlavor sideFlavorOf(const SpaceDesc& space, Side side);

/// Exponent of the q-scalar by which a diagonal generator acts on [A];
/// throws if the symbol is not diagonal.
long diagonalExponent(const GeneratorSymbol& g, const SpaceDesc& space, const IndexMatrix& a);

/// Action of one generator on one basis label, per the closed formulas.
ModuleVector applyGeneratorToLabel(const GeneratorSymbol& g, const SpaceDesc& space,
                                   const IndexMatrix& a);

ModuleVector applyGenerator(const GeneratorSymbol& g, const ModuleVector& v);
RatVector applyGenerator(const GeneratorSymbol& g, const RatVector& v);

RatVector applyWord(const GeneratorWord& w, const RatVector& v);
RatVector applyWordSum(const WordSum& ws, const RatVector& v);

/// Full generator lists for a side of the space.
std::vector<GeneratorSymbol> sideGenerators(const SpaceDesc& space, Side side,
                                            bool includeDiagonal = true);
std::vector<GeneratorSymbol> raisingGenerators(const SpaceDesc& space, Side side);
std::vector<GeneratorSymbol> loweringGenerators(const SpaceDesc& space, Side side);

struct CommuteReport {
    bool pass = true;
    long pairsChecked = 0;
    std::vector<std::string> failures;
};

/// Exhaustive left-x-right commutation check over the whole basis.
CommuteReport checkCommutingActions(const SpaceDesc& space);

}  // namespace qhowe
