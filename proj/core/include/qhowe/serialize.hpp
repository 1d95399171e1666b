#pragma once

#include <json.hpp>

#include "qhowe/suites.hpp"

namespace qhowe {

using Json = nlohmann::ordered_json;

/// Machine form of a Laurent value: list of [exponent, coefficient-string]
/// pairs in increasing exponent order.
Json laurentMachine(const Laurent& x);
Laurent laurentFromMachine(const Json& j);

Json indexMatrixJson(const IndexMatrix& a);
IndexMatrix indexMatrixFromJson(const Json& j);

Json moduleVectorJson(const ModuleVector& v);
ModuleVector moduleVectorFromJson(const Json& j);

Json reportJson(const suites::Report& rep);

/// Oracle golden-file payload.
struct OracleFixture {
    SpaceDesc space;
    std::vector<std::uint32_t> primes;
    int orientation = -1;
    struct Product {
        IndexMatrix a, b;
        ModuleVector result;
    };
    std::vector<Product> products;
};

Json oracleFixtureJson(const OracleFixture& f);
OracleFixture oracleFixtureFromJson(const Json& j);

Json spaceDescJson(const SpaceDesc& s);
SpaceDesc spaceDescFromJson(const Json& j);

}  // namespace qhowe
