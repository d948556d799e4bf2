#include "toric/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace toric {

namespace {

long long to_ll(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::invalid_argument("json: integer too large for the file format");
    return x.convert_to<long long>();
}

Json intvec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_ll(x));
    return a;
}

IntVec intvec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expected an integer array");
    IntVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("json: expected an integer");
        v.push_back(Int(x.get<long long>()));
    }
    return v;
}

}  // namespace

Json fan_to_json(const Fan& fan) {
    Json j;
    j["rank"] = fan.rank;
    Json rays = Json::array();
    for (const auto& v : fan.rays) rays.push_back(intvec_to_json(v));
    j["rays"] = std::move(rays);
    Json cones = Json::array();
    for (const auto& mc : fan.max_cones) {
        Json c = Json::array();
        for (auto i : mc) c.push_back(i);
        cones.push_back(std::move(c));
    }
    j["max_cones"] = std::move(cones);
    return j;
}

Fan fan_from_json(const Json& j) {
    Fan fan;
    if (!j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw std::invalid_argument("fan json: need rank, rays, max_cones");
    fan.rank = j.at("rank").get<std::size_t>();
    for (const auto& r : j.at("rays")) fan.rays.push_back(intvec_from_json(r));
    for (const auto& c : j.at("max_cones")) {
        std::vector<std::size_t> mc;
        for (const auto& i : c) mc.push_back(i.get<std::size_t>());
        fan.max_cones.push_back(std::move(mc));
    }
    return fan;
}

Json divisor_to_json(const TDivisor& d) { return intvec_to_json(d.coeffs); }

TDivisor divisor_from_json(const Json& j) { return TDivisor(intvec_from_json(j)); }

Json collection_to_json(const Fan& fan, const PicardLattice& lat, const Collection& coll) {
    (void)fan;
    Json j;
    Json divs = Json::array();
    for (const auto& c : coll.items) divs.push_back(intvec_to_json(lat.representative(c).coeffs));
    j["divisors"] = std::move(divs);
    if (!coll.block_bounds.empty()) {
        Json b = Json::array();
        for (auto x : coll.block_bounds) b.push_back(x);
        j["blocks"] = std::move(b);
    }
    return j;
}

Collection collection_from_json(const PicardLattice& lat, const Json& j) {
    Collection coll;
    if (!j.contains("divisors")) throw std::invalid_argument("collection json: need divisors");
    for (const auto& d : j.at("divisors"))
        coll.items.push_back(lat.class_of(TDivisor(intvec_from_json(d))));
    if (j.contains("blocks"))
        for (const auto& b : j.at("blocks")) coll.block_bounds.push_back(b.get<std::size_t>());
    return coll;
}

Json group_to_json(const FanAutGroup& g, const Fan& fan) {
    Json j;
    j["order"] = g.order();
    Json orders = Json::array();
    Json perms = Json::array();
    for (const auto& e : g.elements) {
        orders.push_back(element_order(e, fan));
        Json p = Json::array();
        for (auto i : e.ray_perm) p.push_back(i);
        perms.push_back(std::move(p));
    }
    j["element_orders"] = std::move(orders);
    j["abelian"] = is_abelian(g);
    j["ray_permutations"] = std::move(perms);
    return j;
}

std::vector<IntMatrix> matrices_from_json(const Json& j) {
    if (!j.contains("matrices")) throw std::invalid_argument("group json: need matrices");
    std::vector<IntMatrix> out;
    for (const auto& m : j.at("matrices")) {
        std::vector<IntVec> rows;
        for (const auto& r : m) rows.push_back(intvec_from_json(r));
        out.push_back(mat_from_rows(rows));
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace toric
