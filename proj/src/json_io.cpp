#include "uinv/json_io.hpp"

namespace uinv {

nlohmann::json map_to_json(const UnipotentAffineMap& map) {
    nlohmann::json j;
    j["n"] = map.variable_count();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : map.matrix()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    nlohmann::json t = nlohmann::json::array();
    for (const auto& v : map.translation()) t.push_back(v.str());
    j["translation"] = std::move(t);
    return j;
}

UnipotentAffineMap map_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<Rational>> m;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(Rational::from_string(v.get<std::string>()));
        m.push_back(std::move(r));
    }
    std::vector<Rational> t;
    for (const auto& v : j.at("translation")) t.push_back(Rational::from_string(v.get<std::string>()));
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument("map_from_json: matrix size disagrees with n");
    return UnipotentAffineMap(std::move(m), std::move(t));
}

nlohmann::json report_to_json(const Report& rep) {
    nlohmann::json j;
    j["n_max"] = rep.n_max;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : rep.results)
        results.push_back({{"id", r.id}, {"params", r.params}, {"status", r.status}, {"claim", r.claim}});
    j["results"] = std::move(results);
    j["passed"] = rep.count("pass");
    j["failed"] = rep.count("fail");
    j["skipped"] = rep.count("skip");
    return j;
}

}  // namespace uinv
