#ifndef SPLITROOT_SERIALIZE_HPP
#define SPLITROOT_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "classes.hpp"
#include "cliques.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "roots.hpp"

namespace splitroot {

using json = nlohmann::ordered_json;

inline json edges_json(const graph& g) {
	json out = json::array();
	for (auto [u, v] : g.edges()) out.push_back({u, v});
	return out;
}

inline json set_json(const vertex_set& s) { return s.members(); }

inline json to_json(const clique_family& fam) {
	json cliques = json::array();
	for (const auto& q : fam.cliques) cliques.push_back(set_json(q));
	return {{"cliques", std::move(cliques)},
	        {"intersection", fam.intersection ? set_json(*fam.intersection) : json(nullptr)},
	        {"complete", fam.complete}};
}

inline std::string_view to_string(class_witness::kind k) {
	switch (k) {
	case class_witness::kind::pattern: return "pattern";
	case class_witness::kind::cycle: return "cycle";
	case class_witness::kind::no_simple_vertex: return "no-simple-vertex";
	case class_witness::kind::not_split: return "not-split";
	}
	return "?";
}

inline json to_json(const class_witness& w) {
	json out = {{"kind", to_string(w.what)}};
	switch (w.what) {
	case class_witness::kind::pattern:
		out["pattern"] = w.pattern_name;
		out["embedding"] = w.vertices;
		break;
	case class_witness::kind::cycle: out["cycle"] = w.vertices; break;
	case class_witness::kind::no_simple_vertex: out["remaining"] = w.vertices; break;
	case class_witness::kind::not_split: break;
	}
	return out;
}

inline json to_json(const recognition& r) {
	return {{"member", r.member}, {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
}

/// Trunk vertex -> what it stands for in G: {"clique": [...]} or {"vertex": v}.
inline json trunk_origin(const trunk& t, vertex x) {
	if (x < t.clique_map.size()) return {{"clique", set_json(t.cliques[t.clique_map[x]])}};
	return {{"vertex", t.vertex_map[x - t.clique_map.size()]}};
}

inline json to_json(const root_certificate& cert) {
	json witness = nullptr;
	if (cert.gate_witness) {
		witness = {{"kind", "gate"},
		           {"q", cert.gate_witness->q},
		           {"p", cert.gate_witness->p},
		           {"complete", cert.gate_witness->complete}};
	} else if (cert.class_failure) {
		witness = to_json(*cert.class_failure);
		witness["in"] = "trunk";
		if (cert.trunk_graph) {
			json origin = json::array();
			for (vertex x : cert.class_failure->vertices) origin.push_back(trunk_origin(*cert.trunk_graph, x));
			witness["trunk_vertices"] = std::move(origin);
		}
	}
	return {{"class", to_string(cert.cls)},
	        {"decision", cert.decision},
	        {"q", cert.q},
	        {"p", cert.p},
	        {"r", cert.r},
	        {"root_edges", cert.root ? edges_json(cert.root->g) : json::array()},
	        {"clique_side", cert.root ? set_json(cert.root->partition.clique_side) : json::array()},
	        {"witness", std::move(witness)},
	        {"verified", cert.verified}};
}

inline json to_json(const oracle::obstruction_report& rep) {
	json list = json::array();
	for (const auto& g : rep.obstructions)
		list.push_back({{"n", g.order()}, {"edges", edges_json(g)}, {"graph6", io::to_graph6(g)}});
	return {{"class", to_string(rep.cls)}, {"max_n", rep.max_n}, {"obstructions", std::move(list)}};
}

} // namespace splitroot

#endif
