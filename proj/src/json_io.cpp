#include "hopfinv/json_io.hpp"

#include <stdexcept>

namespace hopfinv {

using nlohmann::json;

json algebra_to_json(const HopfAlgebraData& H) {
    json j;
    j["dim"] = H.dim;
    j["conductor"] = H.conductor;
    j["labels"] = H.labels;
    json mult = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (long jj = 0; jj < H.dim; ++jj)
            for (const auto& [k, c] : H.mult[i][jj])
                if (!c.is_zero()) mult.push_back({i, jj, k, c.to_string()});
    j["mult"] = std::move(mult);
    json comult = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (const auto& t : H.comult[i])
            if (!t.c.is_zero()) comult.push_back({i, t.left, t.right, t.c.to_string()});
    j["comult"] = std::move(comult);
    json counit = json::array(), unit = json::array();
    for (long i = 0; i < H.dim; ++i) {
        counit.push_back(H.counit[i].to_string());
        unit.push_back(H.unit[i].to_string());
    }
    j["counit"] = std::move(counit);
    j["unit"] = std::move(unit);
    json anti = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (const auto& [k, c] : H.antipode[i])
            if (!c.is_zero()) anti.push_back({i, k, c.to_string()});
    j["antipode"] = std::move(anti);
    return j;
}

HopfAlgebraData algebra_from_json(const json& j) {
    HopfAlgebraData H;
    H.dim = j.at("dim").get<long>();
    H.conductor = j.at("conductor").get<long>();
    if (H.dim < 1) throw std::invalid_argument("algebra_from_json: dim must be >= 1");
    if (H.conductor < 1) throw std::invalid_argument("algebra_from_json: conductor must be >= 1");
    H.name = j.value("name", std::string("json algebra"));
    if (j.contains("labels")) H.labels = j.at("labels").get<std::vector<std::string>>();
    auto ck = [&](long i) {
        if (i < 0 || i >= H.dim) throw std::invalid_argument("algebra_from_json: index out of range");
        return i;
    };
    auto coef = [&](const json& e) { return CycNumber::parse(e.get<std::string>(), H.conductor); };
    H.mult.assign(H.dim, std::vector<SparseElem>(H.dim));
    for (const auto& e : j.at("mult"))
        H.mult[ck(e.at(0))][ck(e.at(1))].push_back({ck(e.at(2)), coef(e.at(3))});
    H.comult.assign(H.dim, {});
    for (const auto& e : j.at("comult"))
        H.comult[ck(e.at(0))].push_back({coef(e.at(3)), ck(e.at(1)), ck(e.at(2))});
    H.counit.clear();
    for (const auto& e : j.at("counit")) H.counit.push_back(coef(e));
    H.unit.clear();
    for (const auto& e : j.at("unit")) H.unit.push_back(coef(e));
    if (static_cast<long>(H.counit.size()) != H.dim ||
        static_cast<long>(H.unit.size()) != H.dim)
        throw std::invalid_argument("algebra_from_json: counit/unit length mismatch");
    H.antipode.assign(H.dim, {});
    for (const auto& e : j.at("antipode"))
        H.antipode[ck(e.at(0))].push_back({ck(e.at(1)), coef(e.at(2))});
    return H;
}

json invariant_to_json(const InvariantResult& r) {
    json j;
    j["algebra"] = r.algebra;
    j["degree"] = r.degree;
    j["path"] = r.path == Path::Generic ? "generic" : r.path == Path::Closed ? "closed" : "both";
    if (r.of_dual) j["of_dual"] = true;
    j["conductor"] = r.roots.conductor;
    json roots = json::array();
    for (const auto& [k, e] : r.roots.counts) roots.push_back({{"exp", k}, {"mult", e}});
    j["roots"] = std::move(roots);
    if (const auto* f = std::get_if<CycloFactorization>(&r.factorization)) {
        json phi = json::array();
        for (auto it = f->factors.rbegin(); it != f->factors.rend(); ++it)
            phi.push_back({{"h", it->first}, {"e", it->second}});
        j["phi"] = std::move(phi);
        ExpandedPoly p = expand(r.roots);
        json coeffs = json::array();
        for (const auto& c : p.rational_coeffs) coeffs.push_back(rat_to_string(c));
        j["coeffs"] = std::move(coeffs);
    } else {
        j["factor_failure"] = std::get<FactorFailure>(r.factorization).describe();
    }
    return j;
}

json fusion_to_json(const FusionRing& f) {
    json j;
    j["labels"] = f.labels;
    j["dims"] = f.dims;
    j["unit"] = f.unit;
    j["star"] = f.star;
    json n = json::array();
    for (long i = 0; i < f.rank; ++i)
        for (long jj = 0; jj < f.rank; ++jj)
            for (long k = 0; k < f.rank; ++k)
                if (f.nmat[i][jj][k] != 0) n.push_back({i, jj, k, f.nmat[i][jj][k]});
    j["N"] = std::move(n);
    return j;
}

} // namespace hopfinv
