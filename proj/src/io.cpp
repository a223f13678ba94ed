#include "switchdim/io.hpp"

#include <stdexcept>

namespace switchdim::io {

json to_json(const Signature& s) { return {{"p", s.positive}, {"q", s.negative}, {"zero", s.zero}}; }

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    json out{{"n", g.order()}, {"edges", edges}};
    if (g.label_kind() != LabelKind::none) {
        json labels = json::array();
        for (const auto& l : g.labels()) labels.push_back({l[0], l[1]});
        out["labels"] = labels;
        out["label_kind"] = g.label_kind() == LabelKind::subset2 ? "subset2" : "pair";
    }
    return out;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    const auto n = j.at("n").get<std::size_t>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be [i, j]");
        const auto u = e[0].get<std::size_t>();
        const auto v = e[1].get<std::size_t>();
        if (u >= n || v >= n || u == v) throw std::invalid_argument("edge [" + std::to_string(u) + "," + std::to_string(v) + "] is invalid");
        g.add_edge(u, v);
    }
    if (j.contains("labels")) {
        std::vector<std::array<int, 2>> labels;
        for (const auto& l : j.at("labels")) labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
        const std::string kind = j.value("label_kind", "pair");
        g.set_labels(kind == "subset2" ? LabelKind::subset2 : LabelKind::pair, std::move(labels));
    }
    return g;
}

json to_json(const SpectralReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json item{{"mu", e.mu.to_string()}, {"main", e.main}, {"angle_sq", e.angle_sq.to_string()}};
        if (r.complete_spectrum) item["multiplicity"] = e.multiplicity;
        entries.push_back(item);
    }
    json out{{"path", r.path}, {"eigenvalues", entries}, {"complete_spectrum", r.complete_spectrum}};
    if (r.signature_of_big) out["signature_of_big"] = to_json(*r.signature_of_big);
    if (r.signature_of_f) out["signature_of_f"] = to_json(*r.signature_of_f);
    return out;
}

std::string vertex_list(const Graph& g, const VertexSet& u) {
    std::string s;
    for (std::size_t v : u.members()) {
        if (!s.empty()) s += " ";
        s += g.label(v);
    }
    return s;
}

json to_json(const SwitchReport& r, const Graph& g) {
    json verts = json::array();
    for (std::size_t v : r.u.members()) verts.push_back(v);
    json out{{"switching_set", {{"size", r.u.count()}, {"vertices", verts}, {"labels", vertex_list(g, r.u)}}},
             {"a", r.a.to_string()},
             {"b", r.b.to_string()},
             {"signature_of_big", to_json(r.signature_of_big)},
             {"signature_of_f", to_json(r.signature_of_f)},
             {"dimensionality", r.dimensionality},
             {"realizable", r.realizable}};
    out["spectral"] = r.spectral ? to_json(*r.spectral) : json(nullptr);
    return out;
}

json to_json(const AdmissibleFamily& f, const Graph& g) {
    json sets = json::array();
    for (const auto& s : f.sets) {
        json verts = json::array();
        for (std::size_t v : s.set.members()) verts.push_back(v);
        sets.push_back({{"size", s.set.count()}, {"vertices", verts}, {"labels", vertex_list(g, s.set)}, {"rule", s.provenance}});
    }
    return {{"subspace", to_string(f.subspace)}, {"n", f.graph_order}, {"count", f.sets.size()}, {"sets", sets}};
}

json to_json(const TableRow& row) {
    json sigs = json::array();
    for (std::size_t i = 0; i < row.signatures.size(); ++i) {
        const auto& w = row.witnesses[i];
        sigs.push_back({{"p", row.signatures[i].first},
                        {"q", row.signatures[i].second},
                        {"witness", {{"switching_set", w.description}, {"a", w.a.to_string()}, {"b", w.b.to_string()}}}});
    }
    return {{"family", to_string(row.family)}, {"m", row.m}, {"n", row.n}, {"d", row.min_dim}, {"signatures", sigs}};
}

json to_json(const DistanceSetReport& r) {
    json values = json::array();
    for (const auto& v : r.values) values.push_back({{"value", v.value}, {"multiplicity", v.multiplicity}});
    json out{{"values", values},   {"s", r.s},
             {"contains_zero", r.contains_zero}, {"points", r.points},
             {"duplicates", r.duplicates},       {"attains_bound", r.attains_bound},
             {"antipodal", r.antipodal}};
    out["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    if (r.sphere) out["sphere"] = {{"center", r.sphere->center}, {"radius_sq", r.sphere->radius_sq}, {"max_residual", r.sphere->max_residual}};
    else out["sphere"] = nullptr;
    return out;
}

json to_json(const PointConfiguration& x, const DistanceSetReport* report) {
    json out{{"p", x.p}, {"q", x.q}, {"points", x.points}, {"labels", x.labels}, {"max_deviation", x.max_deviation}};
    json dup = json::array();
    for (std::size_t i = 0; i < x.duplicate_of.size(); ++i)
        if (x.duplicate_of[i] != i) dup.push_back({i, x.duplicate_of[i]});
    out["duplicates"] = dup;
    if (report) out["distances"] = to_json(*report);
    return out;
}

PointConfiguration configuration_from_json(const json& j, double tol) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("points"))
        throw std::invalid_argument("coordinates JSON needs \"p\", \"q\" and \"points\"");
    PointConfiguration x;
    x.p = j.at("p").get<std::size_t>();
    x.q = j.at("q").get<std::size_t>();
    x.tolerance = tol;
    x.points = j.at("points").get<std::vector<std::vector<double>>>();
    for (const auto& pt : x.points)
        if (pt.size() != x.p + x.q) throw std::invalid_argument("every point needs p+q coordinates");
    if (j.contains("labels")) x.labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < x.points.size(); ++i) x.labels.push_back(std::to_string(i));
    mark_duplicates(x);
    return x;
}

}  // namespace switchdim::io
