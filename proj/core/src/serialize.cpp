#include "qhowe/serialize.hpp"

namespace qhowe {

Json laurentMachine(const Laurent& x) {
    Json terms = Json::array();
    for (const auto& [e, c] : x.terms()) terms.push_back(Json::array({e, c.get_str()}));
    return terms;
}

Laurent laurentFromMachine(const Json& j) {
    Laurent r;
    for (const auto& t : j)
        r += Laurent::monomial(t.at(0).get<int>(), BigInt(t.at(1).get<std::string>()));
    return r;
}

Json indexMatrixJson(const IndexMatrix& a) {
    Json j;
    j["flavor"] = a.flavor().str();
    j["m"] = a.m();
    j["n"] = a.n();
    j["d"] = a.d();
    j["rows"] = a.rowsVec();
    return j;
}

IndexMatrix indexMatrixFromJson(const Json& j) {
    return IndexMatrix::fromRows(Flavor::parse(j.at("flavor").get<std::string>()),
                                 j.at("m").get<int>(), j.at("n").get<int>(),
                                 j.at("rows").get<std::vector<std::vector<int>>>());
}

Json spaceDescJson(const SpaceDesc& s) {
    Json j;
    j["flavor"] = s.flavor.str();
    j["m"] = s.m;
    j["n"] = s.n;
    j["d"] = s.d;
    return j;
}

SpaceDesc spaceDescFromJson(const Json& j) {
    return SpaceDesc{Flavor::parse(j.at("flavor").get<std::string>()), j.at("m").get<int>(),
                     j.at("n").get<int>(), j.at("d").get<int>()};
}

Json moduleVectorJson(const ModuleVector& v) {
    Json j;
    j["space"] = spaceDescJson(v.space());
    Json terms = Json::array();
    for (const auto& [label, coeff] : v.terms()) {
        Json t;
        t["matrix"] = label.rowsVec();
        t["coeff"] = coeff.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

ModuleVector moduleVectorFromJson(const Json& j) {
    SpaceDesc space = spaceDescFromJson(j.at("space"));
    ModuleVector v(space);
    for (const auto& t : j.at("terms")) {
        IndexMatrix label = IndexMatrix::fromRows(
            space.flavor, space.m, space.n, t.at("matrix").get<std::vector<std::vector<int>>>());
        v.add(label, Laurent::parse(t.at("coeff").get<std::string>()));
    }
    return v;
}

Json reportJson(const suites::Report& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.pass;
    Json lines = Json::array();
    for (const auto& l : rep.lines) {
        Json lj;
        lj["name"] = l.name;
        lj["pass"] = l.pass;
        lj["detail"] = l.detail;
        lines.push_back(std::move(lj));
    }
    j["checks"] = std::move(lines);
    return j;
}

Json oracleFixtureJson(const OracleFixture& f) {
    Json j;
    j["space"] = spaceDescJson(f.space);
    j["primes"] = f.primes;
    j["orientation"] = f.orientation;
    Json products = Json::array();
    for (const auto& p : f.products) {
        Json pj;
        pj["A"] = p.a.rowsVec();
        pj["B"] = p.b.rowsVec();
        pj["result"] = moduleVectorJson(p.result);
        products.push_back(std::move(pj));
    }
    j["products"] = std::move(products);
    return j;
}

OracleFixture oracleFixtureFromJson(const Json& j) {
    OracleFixture f;
    f.space = spaceDescFromJson(j.at("space"));
    f.primes = j.at("primes").get<std::vector<std::uint32_t>>();
    f.orientation = j.at("orientation").get<int>();
    for (const auto& pj : j.at("products")) {
        OracleFixture::Product p{
            IndexMatrix::fromRows(f.space.flavor, f.space.m, f.space.m,
                                  pj.at("A").get<std::vector<std::vector<int>>>()),
            IndexMatrix::fromRows(f.space.flavor, f.space.m, f.space.n,
                                  pj.at("B").get<std::vector<std::vector<int>>>()),
            moduleVectorFromJson(pj.at("result"))};
        f.products.push_back(std::move(p));
    }
    return f;
}

}  // namespace qhowe
