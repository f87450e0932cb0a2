#include "unimod/io.hpp"

#include <fstream>

#include "unimod/errors.hpp"

namespace unimod {
namespace {

Integer int_from_json(const Json& v) {
    if (v.is_number_integer()) return Integer(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return Integer(v.get<std::string>());
    throw InvalidInput("expected an integer or integer string");
}

Json int_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

}  // namespace

Json graph_to_json(const Graph& X) {
    Json edges = Json::array();
    for (auto [u, v] : X.edge_list()) edges.push_back({u, v});
    return {{"delta", X.delta_cap()}, {"vertices", X.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InvalidInput("graph object needs \"vertices\" and \"edges\"");
    int delta = j.value("delta", kDefaultDelta);
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges), delta);
}

Json family_spec_to_json(const FamilySpec& spec) {
    Json j{{"family", spec.family}, {"n", spec.n}};
    if (spec.delta != kDefaultDelta) j["delta"] = spec.delta;
    if (!spec.table.empty()) j["table"] = spec.table;
    if (!spec.gens.empty()) j["gens"] = spec.gens;
    return j;
}

FamilySpec family_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw InvalidInput("family spec needs \"family\"");
    FamilySpec spec;
    spec.family = j.at("family").get<std::string>();
    spec.n = j.value("n", std::int64_t(0));
    spec.delta = j.value("delta", kDefaultDelta);
    if (j.contains("table")) spec.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("gens")) spec.gens = j.at("gens").get<std::vector<int>>();
    return spec;
}

Generated host_from_json(const Json& j) {
    if (j.is_object() && j.contains("family")) return generate(family_spec_from_json(j));
    return {graph_from_json(j), std::nullopt};
}

Json measure_to_json(const SustainedMeasure& m, const Json& host) {
    Json mass = Json::array();
    for (int k = 0; k < m.classes().count(); ++k) {
        Json entry{{"class_rep_vertex", m.classes().rep(k)}};
        rat_to_json_fields(m.mass_at(k), entry);
        mass.push_back(std::move(entry));
    }
    return {{"host", host}, {"mass", mass}};
}

SustainedMeasure measure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("host") || !j.contains("mass"))
        throw InvalidInput("measure object needs \"host\" and \"mass\"");
    Graph host = host_from_json(j.at("host")).graph;
    std::vector<std::pair<Vertex, Rational>> mass;
    for (const auto& entry : j.at("mass"))
        mass.emplace_back(entry.at("class_rep_vertex").get<int>(), rat_from_json_fields(entry));
    return measure_from_vertex_masses(host, mass);
}

Json quotient_to_json(const LabeledQuotient& Q) {
    Json edges = Json::array();
    for (const auto& e : Q.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"m_ab", e.m_ab}, {"m_ba", e.m_ba}});
    return {{"orbits", Q.orbits}, {"edges", edges}, {"ray_tail", nullptr}};
}

Json quotient_to_json(const RayQuotient& Q) {
    Json orbits = Json::array();
    for (size_t i = 0; i <= Q.prefix.size(); ++i) orbits.push_back(std::to_string(i));
    Json edges = Json::array();
    for (size_t i = 0; i < Q.prefix.size(); ++i)
        edges.push_back({{"a", std::to_string(i)},
                         {"b", std::to_string(i + 1)},
                         {"m_ab", Q.prefix[i].first},
                         {"m_ba", Q.prefix[i].second}});
    return {{"orbits", orbits},
            {"edges", edges},
            {"ray_tail", {{"m_fwd", Q.tail.first}, {"m_bwd", Q.tail.second}}}};
}

QuotientInput quotient_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("orbits") || !j.contains("edges"))
        throw InvalidInput("quotient object needs \"orbits\" and \"edges\"");
    std::vector<std::string> orbits = j.at("orbits").get<std::vector<std::string>>();
    std::vector<QuotientEdge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(),
                         e.at("m_ab").get<long>(), e.at("m_ba").get<long>()});
    QuotientInput out;
    if (!j.contains("ray_tail") || j.at("ray_tail").is_null()) {
        out.finite = LabeledQuotient{std::move(orbits), std::move(edges)};
        return out;
    }
    // ray form: orbits are the prefix in order, edges join consecutive positions
    RayQuotient ray;
    ray.tail = {j.at("ray_tail").at("m_fwd").get<long>(),
                j.at("ray_tail").at("m_bwd").get<long>()};
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < orbits.size(); ++i) pos[orbits[i]] = i;
    ray.prefix.resize(orbits.empty() ? 0 : orbits.size() - 1, {0, 0});
    if (edges.size() != ray.prefix.size())
        throw InvalidInput("ray quotient must chain consecutive orbits");
    for (const auto& e : edges) {
        if (!pos.count(e.a) || !pos.count(e.b)) throw InvalidInput("edge references unknown orbit");
        size_t ia = pos.at(e.a), ib = pos.at(e.b);
        if (ia + 1 == ib)
            ray.prefix[ia] = {e.m_ab, e.m_ba};
        else if (ib + 1 == ia)
            ray.prefix[ib] = {e.m_ba, e.m_ab};
        else
            throw InvalidInput("ray quotient must chain consecutive orbits");
    }
    for (auto [f, b] : ray.prefix)
        if (f == 0 || b == 0) throw InvalidInput("ray quotient must chain consecutive orbits");
    out.ray = std::move(ray);
    return out;
}

Json distribution_to_json(const BallDistribution& d) {
    Json freq = Json::array();
    for (const auto& [key, q] : d.freq) {  // std::map: sorted by key bytes
        Json entry{{"key", hex_encode(key)}};
        rat_to_json_fields(q, entry);
        freq.push_back(std::move(entry));
    }
    return {{"radius", d.radius}, {"freq", freq}};
}

BallDistribution distribution_from_json(const Json& j) {
    BallDistribution d;
    d.radius = j.at("radius").get<int>();
    for (const auto& entry : j.at("freq"))
        d.freq[hex_decode(entry.at("key").get<std::string>())] = rat_from_json_fields(entry);
    return d;
}

std::string hex_encode(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::string hex_decode(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw InvalidInput("invalid hex digit");
    };
    if (hex.size() % 2) throw InvalidInput("odd-length hex string");
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return out;
}

void rat_to_json_fields(const Rational& q, Json& obj) {
    obj["num"] = int_to_json(Integer(q.get_num()));
    obj["den"] = int_to_json(Integer(q.get_den()));
}

Rational rat_from_json_fields(const Json& obj) {
    Integer den = int_from_json(obj.at("den"));
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(int_from_json(obj.at("num")), den);
    q.canonicalize();
    return q;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace unimod
