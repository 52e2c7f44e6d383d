#pragma once

#include <json.hpp>

#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/cyclic_covers.hpp"
#include "hurwitz/floor_diagrams.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/invariants.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

using json = nlohmann::json;

// exact integers: JSON number while it fits in int64, decimal string beyond
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline json partition_to_json(const Partition& p) {
    json a = json::array();
    for (int part : p.parts()) a.push_back(part);
    return a;
}

inline Partition partition_from_json(const json& a) {
    std::vector<int> parts;
    for (const auto& x : a) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

inline json partitions_to_json(const std::vector<Partition>& ps) {
    json a = json::array();
    for (const Partition& p : ps) a.push_back(partition_to_json(p));
    return a;
}

inline json character_table_to_json(const CharacterTable& t) {
    json rows = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const Int& v : row) r.push_back(int_to_json(v));
        rows.push_back(std::move(r));
    }
    return json{{"d", t.d},
                {"irreps", partitions_to_json(t.irreps)},
                {"classes", partitions_to_json(t.classes)},
                {"values", std::move(rows)}};
}

// sparse map "3,1,1" -> "p/q"
inline json class_algebra_element_to_json(const ClassAlgebraElement& e) {
    json o = json::object();
    for (const auto& [eta, c] : e.coeffs) o[eta.to_string()] = rat_to_string(c);
    return o;
}

inline json hurwitz_result_to_json(const CoveringProblem& p, const Rat& disconnected,
                                   const Rat& connected) {
    Rat g = p.genus();
    json genus = denominator(g) == 1 ? json(static_cast<long long>(numerator(g))) : json();
    return json{{"d", p.d},
                {"profiles", partitions_to_json(p.profiles)},
                {"genus", std::move(genus)},
                {"disconnected", rat_to_string(disconnected)},
                {"connected", rat_to_string(connected)}};
}

inline json floor_diagram_to_json(const FloorDiagram& D) {
    json edges = json::array();
    for (const auto& e : D.edges) edges.push_back(json::array({e.u, e.v, e.w}));
    return json{{"d", D.d},
                {"g", D.genus()},
                {"edges", std::move(edges)},
                {"mu", int_to_json(mu_multiplicity(D))},
                {"nu", int_to_json(nu_markings(D))}};
}

inline json triangle_class_to_json(const TriangleClass& t) {
    const char* geo = t.geometry == TriangleGeometry::spherical    ? "spherical"
                      : t.geometry == TriangleGeometry::euclidean ? "euclidean"
                                                                  : "hyperbolic";
    json o{{"geometry", geo}, {"group", t.group}};
    if (t.order > 0) o["order"] = t.order;
    return o;
}

// {"n":..., "s":..., "generators":[{"perm":[...], "exponents":[...]}]}
// perm entries are 0-based variable indices.
inline MonomialAction monomial_action_from_json(const json& cfg) {
    MonomialAction a;
    a.n = cfg.at("n").get<int>();
    a.s = cfg.value("s", 1);
    for (const auto& g : cfg.at("generators")) {
        MonomialElement e = monomial_identity(a.n);
        if (g.contains("perm")) {
            auto perm = g.at("perm").get<std::vector<int>>();
            if (static_cast<int>(perm.size()) != a.n)
                throw std::domain_error("action config: perm length != n");
            e.perm = std::move(perm);
        }
        if (g.contains("exponents")) {
            auto ex = g.at("exponents").get<std::vector<int>>();
            if (static_cast<int>(ex.size()) != a.n)
                throw std::domain_error("action config: exponents length != n");
            for (int& v : ex) v = ((v % a.s) + a.s) % a.s;
            e.exps = std::move(ex);
        }
        a.generators.push_back(std::move(e));
    }
    return a;
}

inline SparsePoly sparse_poly_from_json(const json& cfg) {
    SparsePoly f;
    f.n = cfg.at("n").get<int>();
    f.s = cfg.value("s", 1);
    for (const auto& t : cfg.at("terms")) {
        auto exps = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != f.n)
            throw std::domain_error("poly config: exps length != n");
        std::string coeff = t.value("coeff", std::string("1"));
        Rat c(coeff);
        f.add_term(std::move(exps), Cyclotomic(f.s, c));
    }
    return f;
}

}  // namespace hurwitz
