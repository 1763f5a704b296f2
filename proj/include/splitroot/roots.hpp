#ifndef SPLITROOT_ROOTS_HPP
#define SPLITROOT_ROOTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "classes.hpp"
#include "cliques.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace splitroot {

/// Split graph with one clique-vertex per maximal clique of G (labels
/// 0..q-1, in family order) and one independent vertex per non-universal
/// vertex of G (labels q.., ascending original label), joined by incidence.
struct trunk {
	graph g;
	split_partition partition;
	std::vector<std::size_t> clique_map; // trunk label i < q -> clique index
	std::vector<vertex> vertex_map;      // trunk label q + j -> vertex of G
	std::vector<vertex_set> cliques;     // the family the trunk was built from
};

inline trunk build_trunk(const graph& g, const clique_family& fam) {
	if (!fam.complete || !fam.intersection) throw precondition_error("trunk needs a complete clique family");
	if (!is_connected(g)) throw precondition_error("trunk requires a connected graph");
	const std::size_t q = fam.cliques.size();
	trunk t;
	t.vertex_map = (g.all() - *fam.intersection).members();
	const std::size_t n = q + t.vertex_map.size();
	graph_builder b(n);
	t.partition = {vertex_set(n), vertex_set(n)};
	for (vertex i = 0; i < q; ++i) {
		t.clique_map.push_back(i);
		t.partition.clique_side.insert(i);
		for (vertex j = i + 1; j < q; ++j) b.add_edge(i, j);
	}
	for (std::size_t j = 0; j < t.vertex_map.size(); ++j) {
		const auto x = static_cast<vertex>(q + j);
		t.partition.independent_side.insert(x);
		for (vertex i = 0; i < q; ++i)
			if (fam.cliques[i].contains(t.vertex_map[j])) b.add_edge(i, x);
	}
	t.g = std::move(b).build();
	t.cliques = fam.cliques;
	return t;
}

struct split_graph {
	graph g;
	split_partition partition;
};

/// Explicit root on V(G): C is the intersection of all maximal cliques, the
/// i-th smallest member of C is paired with the i-th clique Q_i, and an
/// independent vertex x is joined to c_i iff x lies in Q_i.
inline split_graph prop1_root(const graph& g, const clique_family& fam) {
	if (!fam.complete || !fam.intersection) throw precondition_error("root construction needs a complete clique family");
	if (!is_connected(g)) throw precondition_error("root construction requires a connected graph");
	const vertex_set& core = *fam.intersection;
	if (core.count() < fam.cliques.size())
		throw precondition_error("gate violated: " + std::to_string(core.count()) + " < " +
		                         std::to_string(fam.cliques.size()));
	const auto c = core.members();
	const vertex_set independent = g.all() - core;
	graph_builder b(g.order());
	for (std::size_t i = 0; i < c.size(); ++i)
		for (std::size_t j = i + 1; j < c.size(); ++j) b.add_edge(c[i], c[j]);
	for (std::size_t i = 0; i < fam.cliques.size(); ++i)
		(fam.cliques[i] & independent).for_each([&](vertex x) { b.add_edge(x, c[i]); });
	return {std::move(b).build(), {core, independent}};
}

/// One new vertex adjacent to exactly the clique side; it joins the independent side.
inline split_graph augment(const graph& h, const split_partition& part) {
	if (!is_valid_partition(h, part)) throw precondition_error("invalid split partition");
	const std::size_t n = h.order();
	graph_builder b(n + 1);
	for (auto [u, v] : h.edges()) b.add_edge(u, v);
	part.clique_side.for_each([&](vertex c) { b.add_edge(static_cast<vertex>(n), c); });
	split_partition out{vertex_set(n + 1), vertex_set(n + 1)};
	part.clique_side.for_each([&](vertex v) { out.clique_side.insert(v); });
	part.independent_side.for_each([&](vertex v) { out.independent_side.insert(v); });
	out.independent_side.insert(static_cast<vertex>(n));
	return {std::move(b).build(), std::move(out)};
}

inline bool verify_root(const graph& h, const graph& g) {
	if (h.order() != g.order())
		throw precondition_error("root has " + std::to_string(h.order()) + " vertices, graph has " +
		                         std::to_string(g.order()));
	return square(h) == g;
}

struct gate_failure {
	std::size_t q = 0;
	std::size_t p = 0;
	bool complete = true;
};

struct root_certificate {
	class_id cls = class_id::sun3_free;
	bool decision = false;
	std::size_t q = 0;
	std::size_t p = 0;
	long long r = 0;
	std::optional<split_graph> root;
	std::optional<gate_failure> gate_witness;
	std::optional<class_witness> class_failure; // labels refer to `trunk_graph`
	std::optional<trunk> trunk_graph;
	bool verified = false;
};

/// Decides whether g = H^2 for a connected split graph H in class cls.
/// Gate first, then trunk membership; on success the explicit root is built
/// and re-verified.
inline root_certificate find_root(const graph& g, class_id cls, const recognize_options& opts = {}) {
	if (g.order() == 0) throw precondition_error("empty graph");
	if (!is_connected(g)) throw precondition_error("graph is disconnected");
	root_certificate cert;
	cert.cls = cls;
	auto gr = gate(g);
	cert.q = gr.q;
	cert.p = gr.p;
	cert.r = static_cast<long long>(gr.p) - static_cast<long long>(gr.q);
	if (!gr.holds) {
		cert.gate_witness = gate_failure{gr.q, gr.p, gr.family.complete};
		return cert;
	}
	trunk t = build_trunk(g, gr.family);
	auto rec = recognize(t.g, t.partition, cls, opts);
	if (!rec.member) {
		cert.class_failure = std::move(rec.witness);
		cert.trunk_graph = std::move(t);
		return cert;
	}
	cert.trunk_graph = std::move(t);
	split_graph root = prop1_root(g, gr.family);
	if (!verify_root(root.g, g)) throw internal_error("constructed root does not square to the input");
	if (!recognize(root.g, root.partition, cls, opts).member)
		throw internal_error("constructed root left the class");
	cert.root = std::move(root);
	cert.verified = true;
	cert.decision = true;
	return cert;
}

/// Every induced subgraph of g has Helly maximal cliques: no induced G1..G4.
inline bool is_hereditary_clique_helly(const graph& g) {
	for (auto id : {pattern_id::g1, pattern_id::g2, pattern_id::g3, pattern_id::g4})
		if (has_induced(g, catalog(id))) return false;
	return true;
}

/// Vertex-to-maximal-clique incidence graph: vertices of G keep their labels,
/// clique Q_i becomes vertex order() + i.
inline graph clique_incidence_graph(const graph& g, const clique_family& fam) {
	const std::size_t n = g.order();
	graph_builder b(n + fam.cliques.size());
	for (std::size_t i = 0; i < fam.cliques.size(); ++i)
		fam.cliques[i].for_each([&](vertex v) { b.add_edge(v, static_cast<vertex>(n + i)); });
	return std::move(b).build();
}

/// Maximal-clique hypergraph is balanced: no induced cycle of length 2 mod 4
/// in the incidence graph.
inline bool has_balanced_clique_hypergraph(const graph& g, const clique_family& fam,
                                           const cycle_search_options& opts = {}) {
	if (!fam.complete) throw precondition_error("balance test needs a complete clique family");
	const graph b = clique_incidence_graph(g, fam);
	vertex_set left(b.order()), right(b.order());
	for (vertex v = 0; v < b.order(); ++v) (v < g.order() ? left : right).insert(v);
	return !find_induced_cycle_2mod4(b, {left, right}, opts);
}

} // namespace splitroot

#endif
