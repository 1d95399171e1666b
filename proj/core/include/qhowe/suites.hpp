#pragma once

#include <string>
#include <vector>

#include "qhowe/decomp.hpp"
#include "qhowe/oracle.hpp"

namespace qhowe::suites {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    bool pass = true;
    std::vector<CheckLine> lines;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    std::string summary() const;
};

/// The defining relation families of the quantum general linear group as
/// exact operator identities on a type-A space, both sides.
Report relationSuite(const SpaceDesc& space);

/// Left-times-right commutation on any space.
Report commutingSuite(const SpaceDesc& space);

/// Coordinate-model vs geometric-model intertwiner through the rescaled
/// basis and transposition (families A and B); for a C-family space this
/// verifies the center-shift identification onto the B model instead.
Report intertwinerSuite(const SpaceDesc& space);

/// Center-shift identification for all four flavor pairs at (m, n, d).
Report cshiftSuite(int m, int n, int d);

/// t0 spectral product and semisimplicity on every iota-sided space with
/// the given sizes, in both the geometric and coordinate models.
Report spectrumSuite(int m, int n, int d);

/// Multiplicity-free decomposition checks (counts, dimension accounting,
/// weight prescriptions) plus the double-centralizer accounting.
Report decompositionSuite(const SpaceDesc& space, bool withCentralizer = true);

/// Finite-field convolution vs the closed generator-action formulas on one
/// space, including identity products; for family A at (2,2,2) also the
/// coarsening identity instance.
Report oracleSuite(const SpaceDesc& space, const OracleOptions& opts, FlagCache& cache);

/// Determines the field-size-to-q substitution orientation by matching the
/// full generator-product set on Theta_{2|2,2}. Returns +1 or -1.
int calibrateOrientation(const std::vector<std::uint32_t>& primes, FlagCache& cache);

}  // namespace qhowe::suites
