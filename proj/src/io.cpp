#include "svmc/io.hpp"

#include <fstream>

namespace svmc {

Json to_json(const Vector& v) { return Json(v.values()); }

Json to_json(const SymbolicVector& sv) {
    Json inc = Json::array(), exc = Json::array();
    for (const Vector& a : sv.include()) inc.push_back(to_json(a));
    for (const Vector& b : sv.exclude()) exc.push_back(to_json(b));
    return Json{{"include", inc}, {"exclude", exc}};
}

Json to_json(const SymbolicVectorSet& svs) {
    Json out = Json::array();
    for (const SymbolicVector& sv : svs) out.push_back(to_json(sv));
    return out;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
    std::vector<Count> values;
    for (const Json& x : j) {
        if (!x.is_number_unsigned()) throw std::invalid_argument("vector components must be natural numbers");
        values.push_back(x.get<Count>());
    }
    return Vector(std::move(values));
}

SymbolicVector sv_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("include") || !j.contains("exclude"))
        throw std::invalid_argument("symbolic vector needs include and exclude arrays");
    std::vector<Vector> inc, exc;
    for (const Json& a : j.at("include")) inc.push_back(vector_from_json(a));
    for (const Json& b : j.at("exclude")) exc.push_back(vector_from_json(b));
    if (inc.empty()) throw std::invalid_argument("symbolic vector needs at least one include bound");
    std::size_t dim = inc.front().dim();
    return SymbolicVector(dim, std::move(inc), std::move(exc));
}

SymbolicVectorSet svs_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw std::invalid_argument("symbolic vector set must be a JSON array");
    std::vector<SymbolicVector> members;
    for (const Json& m : j) members.push_back(sv_from_json(m));
    return canonicalize(SymbolicVectorSet(dim, std::move(members)));
}

std::map<std::string, Count> parse_capacity_sidecar(const Json& j) {
    if (!j.is_object() || !j.contains("capacities") || !j.at("capacities").is_object())
        throw std::invalid_argument("capacity file needs a \"capacities\" object");
    std::map<std::string, Count> out;
    for (const auto& [place, k] : j.at("capacities").items()) {
        if (!k.is_number_unsigned()) throw std::invalid_argument("capacity of " + place + " must be a natural number");
        out[place] = k.get<Count>();
    }
    return out;
}

std::map<std::string, Count> load_capacity_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed capacity file " + path + ": " + e.what());
    }
    return parse_capacity_sidecar(j);
}

}  // namespace svmc
