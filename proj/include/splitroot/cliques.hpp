#ifndef SPLITROOT_CLIQUES_HPP
#define SPLITROOT_CLIQUES_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace splitroot {

struct clique_family {
	std::vector<vertex_set> cliques;         // ascending lexicographic order
	std::optional<vertex_set> intersection;  // only when complete
	bool complete = true;
};

namespace detail {

// Vertex-by-vertex extension of maximal cliques (Tsukiyama et al.): every
// maximal clique K of G[0..i) has a child K in G[0..i]. When v = i splits K,
// the second child (K & N(v)) + v exists iff it is maximal there and K is
// the greedy lexicographically-first maximal clique of G[0..i) containing
// K & N(v). Every node has a child, so the delay between outputs is polynomial.
class clique_extender {
public:
	clique_extender(const graph& g, std::size_t cap) : g_(g), cap_(cap) {}

	std::vector<vertex_set> run() {
		extend(0, vertex_set(g_.order()));
		return std::move(out_);
	}
	bool aborted() const { return aborted_; }

private:
	void extend(vertex i, vertex_set k) {
		if (aborted_) return;
		if (i == g_.order()) {
			out_.push_back(std::move(k));
			if (out_.size() > cap_) aborted_ = true;
			return;
		}
		const vertex_set& nv = g_.neighbors(i);
		if (k.subset_of(nv)) {
			k.insert(i);
			extend(i + 1, std::move(k));
			return;
		}
		vertex_set s = k & nv;
		if (keeps_parent(i, k, s)) {
			extend(i + 1, k);
			s.insert(i);
			extend(i + 1, std::move(s));
		} else {
			extend(i + 1, std::move(k));
		}
	}

	// Common neighbors of s among 0..i-1 (s itself drops out: no loops).
	vertex_set common_below(vertex i, const vertex_set& s) const {
		vertex_set common = vertex_set::prefix(g_.order(), i);
		for (vertex u = s.first(); u < g_.order() && !common.empty(); u = s.next(u + 1)) common &= g_.neighbors(u);
		return common;
	}

	bool keeps_parent(vertex i, const vertex_set& k, const vertex_set& s) const {
		vertex_set common = common_below(i, s);
		if (common.intersects(g_.neighbors(i))) return false; // (s + i) not maximal
		for (vertex u = common.first(); u < g_.order(); u = common.first()) {
			if (!k.contains(u)) return false;
			common &= g_.neighbors(u);
		}
		return true;
	}

	const graph& g_;
	std::size_t cap_;
	bool aborted_ = false;
	std::vector<vertex_set> out_;
};

} // namespace detail

/// All maximal cliques of g, or the first cap+1 found (complete = false).
/// Vertices are processed by ascending degree; the result is sorted.
inline clique_family maximal_cliques(const graph& g, std::size_t cap) {
	if (cap < 1) throw precondition_error("clique cap must be at least 1");
	clique_family fam;
	const std::size_t n = g.order();
	if (n == 0) {
		fam.intersection = vertex_set(0);
		return fam;
	}
	std::vector<vertex> order(n);
	std::iota(order.begin(), order.end(), vertex{0});
	std::stable_sort(order.begin(), order.end(),
	                 [&](vertex a, vertex b) { return g.degree(a) < g.degree(b); });
	std::vector<vertex> position(n);
	for (vertex i = 0; i < n; ++i) position[order[i]] = i;

	const graph ranked = relabel(g, position);
	detail::clique_extender ext(ranked, cap);
	auto found = ext.run();
	fam.complete = !ext.aborted();
	fam.cliques.reserve(found.size());
	for (const auto& k : found) {
		vertex_set orig(n);
		k.for_each([&](vertex v) { orig.insert(order[v]); });
		fam.cliques.push_back(std::move(orig));
	}
	std::sort(fam.cliques.begin(), fam.cliques.end(),
	          [](const vertex_set& a, const vertex_set& b) { return lex_less(a, b); });
	if (fam.complete) {
		vertex_set meet = vertex_set::full(n);
		for (const auto& q : fam.cliques) meet &= q;
		fam.intersection = std::move(meet);
	}
	return fam;
}

struct gate_result {
	bool holds = false;
	std::size_t q = 0; // |C(G)|, or cap+1 when enumeration aborted
	std::size_t p = 0; // |intersection of C(G)|, or |universal| when aborted
	clique_family family;
};

/// Necessary condition for a 3-sun-free split root: at most |V| maximal
/// cliques and |intersection| >= |cliques|.
inline gate_result gate(const graph& g) {
	if (!is_connected(g)) throw precondition_error("gate requires a connected graph");
	gate_result r;
	r.family = maximal_cliques(g, std::max<std::size_t>(g.order(), 1));
	if (!r.family.complete) {
		r.q = r.family.cliques.size();
		r.p = universal_vertices(g).count();
		r.holds = false;
	} else {
		r.q = r.family.cliques.size();
		r.p = r.family.intersection->count();
		r.holds = r.p >= r.q;
	}
	return r;
}

} // namespace splitroot

#endif
