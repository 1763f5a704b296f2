#ifndef SPLITROOT_CLASSES_HPP
#define SPLITROOT_CLASSES_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "patterns.hpp"

namespace splitroot {

struct split_partition {
	vertex_set clique_side;
	vertex_set independent_side;
	friend bool operator==(const split_partition&, const split_partition&) = default;
};

enum class class_id {
	sun3_free,
	sun3_net_free,
	strongly_chordal,
	odd_sun_free,
	interval,
	permutation,
	comparability,
	probe_threshold,
};

inline constexpr std::array<class_id, 8> all_classes = {
    class_id::sun3_free,   class_id::sun3_net_free, class_id::strongly_chordal, class_id::odd_sun_free,
    class_id::interval,    class_id::permutation,   class_id::comparability,    class_id::probe_threshold,
};

inline std::string_view to_string(class_id c) {
	switch (c) {
	case class_id::sun3_free: return "3-sun-free-split";
	case class_id::sun3_net_free: return "3-sun-net-free-split";
	case class_id::strongly_chordal: return "strongly-chordal-split";
	case class_id::odd_sun_free: return "odd-sun-free-split";
	case class_id::interval: return "interval-split";
	case class_id::permutation: return "permutation-split";
	case class_id::comparability: return "comparability-split";
	case class_id::probe_threshold: return "probe-threshold-split";
	}
	return "?";
}

inline class_id parse_class(std::string_view name) {
	for (class_id c : all_classes)
		if (to_string(c) == name) return c;
	throw parse_error("unknown class: " + std::string(name));
}

/// Split partition by the Hammer-Simeone degree criterion, or nullopt.
/// The clique side is the m highest-degree vertices (ties by label), where
/// m = max{i : d_i >= i - 1} over the non-increasing degree sequence.
inline std::optional<split_partition> find_split_partition(const graph& g) {
	const std::size_t n = g.order();
	std::vector<vertex> order(n);
	std::iota(order.begin(), order.end(), vertex{0});
	std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
	std::size_t m = 0;
	for (std::size_t i = 0; i < n; ++i)
		if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
	std::size_t head = 0, tail = 0;
	for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
	if (head != m * (m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;
	split_partition part{vertex_set(n), vertex_set(n)};
	for (std::size_t i = 0; i < n; ++i) (i < m ? part.clique_side : part.independent_side).insert(order[i]);
	return part;
}

inline bool is_valid_partition(const graph& g, const split_partition& part) {
	return part.clique_side.universe() == g.order() && part.independent_side.universe() == g.order() &&
	       !part.clique_side.intersects(part.independent_side) &&
	       (part.clique_side | part.independent_side).count() == g.order() && g.is_clique(part.clique_side) &&
	       g.is_independent(part.independent_side);
}

/// Lexicographic breadth-first search order (by partition refinement).
inline std::vector<vertex> lex_bfs(const graph& g) {
	std::vector<vertex_set> classes;
	if (g.order()) classes.push_back(g.all());
	std::vector<vertex> order;
	order.reserve(g.order());
	while (!classes.empty()) {
		vertex v = classes.front().first();
		classes.front().erase(v);
		order.push_back(v);
		std::vector<vertex_set> refined;
		refined.reserve(classes.size() + 4);
		for (auto& c : classes) {
			vertex_set in = c & g.neighbors(v);
			vertex_set out = c - g.neighbors(v);
			if (!in.empty()) refined.push_back(std::move(in));
			if (!out.empty()) refined.push_back(std::move(out));
		}
		classes = std::move(refined);
	}
	return order;
}

inline bool is_chordal(const graph& g) {
	const auto order = lex_bfs(g);
	vertex_set earlier(g.order());
	for (vertex v : order) {
		vertex_set back = g.neighbors(v) & earlier;
		if (!back.empty()) {
			// latest-visited earlier neighbour must see all the others
			vertex latest = 0;
			for (auto it = std::find(order.begin(), order.end(), v); it != order.begin();) {
				--it;
				if (back.contains(*it)) {
					latest = *it;
					break;
				}
			}
			back.erase(latest);
			if (!back.subset_of(g.neighbors(latest))) return false;
		}
		earlier.insert(v);
	}
	return true;
}

struct strong_chordality {
	bool strongly_chordal = false;
	vertex_set stuck; // vertices left when no simple vertex remains
};

/// Greedy simple-vertex elimination. A vertex is simple when the closed
/// neighbourhoods of its closed neighbours form a chain. A non-simple vertex
/// keeps a witness (two neighbours and one private vertex each) and is only
/// re-examined after one of those is deleted.
inline strong_chordality strongly_chordal_elimination(const graph& g) {
	const std::size_t n = g.order();
	vertex_set alive = g.all();
	std::vector<std::vector<vertex>> watchers(n);
	std::vector<vertex> queue(n);
	std::iota(queue.begin(), queue.end(), vertex{0});
	std::stable_sort(queue.begin(), queue.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
	std::vector<bool> queued(n, true);

	auto closed = [&](vertex u) {
		vertex_set s = g.neighbors(u) & alive;
		s.insert(u);
		return s;
	};
	std::vector<vertex_set> nbhd;
	std::vector<std::pair<std::size_t, vertex>> by_size;

	while (!queue.empty()) {
		const vertex v = queue.back();
		queue.pop_back();
		queued[v] = false;
		if (!alive.contains(v)) continue;

		by_size.clear();
		nbhd.clear();
		closed(v).for_each([&](vertex u) {
			nbhd.push_back(closed(u));
			by_size.emplace_back(nbhd.back().count(), u);
		});
		std::vector<std::size_t> idx(by_size.size());
		std::iota(idx.begin(), idx.end(), std::size_t{0});
		std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return by_size[a] < by_size[b]; });
		bool simple = true;
		for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
			const auto& small = nbhd[idx[k]];
			const auto& large = nbhd[idx[k + 1]];
			if (small.subset_of(large)) continue;
			simple = false;
			const vertex a = (small - large).first();
			const vertex b = (large - small).first();
			for (vertex w : {by_size[idx[k]].second, by_size[idx[k + 1]].second, a, b}) watchers[w].push_back(v);
			break;
		}
		if (!simple) continue;
		alive.erase(v);
		for (vertex w : watchers[v])
			if (alive.contains(w) && !queued[w]) {
				queued[w] = true;
				queue.push_back(w);
			}
		watchers[v].clear();
	}
	return {alive.empty(), alive};
}

inline bool is_strongly_chordal(const graph& g) { return strongly_chordal_elimination(g).strongly_chordal; }

/// Why a graph failed a class test.
struct class_witness {
	enum class kind { pattern, cycle, no_simple_vertex, not_split };
	kind what = kind::pattern;
	std::string pattern_name; // kind::pattern
	std::vector<vertex> vertices; // embedding, cycle, or stuck set
};

struct recognition {
	bool member = false;
	std::optional<class_witness> witness;
};

struct recognize_options {
	cycle_search_options cycles;
};

/// C-I edges of h as a bipartite graph on the same vertex set.
inline graph incidence_graph(const graph& h, const split_partition& part) {
	graph_builder b(h.order());
	part.independent_side.for_each([&](vertex x) {
		(h.neighbors(x) & part.clique_side).for_each([&](vertex c) { b.add_edge(x, c); });
	});
	return std::move(b).build();
}

namespace detail {

inline const std::vector<pattern_id>& forbidden_patterns(class_id c) {
	using p = pattern_id;
	static const std::vector<p> sun3{p::sun3};
	static const std::vector<p> sun3_net{p::sun3, p::net};
	static const std::vector<p> interval{p::sun3, p::net, p::s4_minus};
	static const std::vector<p> comparability{p::sun3, p::net, p::co_s4_minus};
	static const std::vector<p> permutation{p::sun3, p::net, p::s4_minus, p::co_s4_minus};
	static const std::vector<p> probe_threshold{p::sun3, p::net, p::pt1, p::pt2, p::pt3, p::pt4};
	switch (c) {
	case class_id::sun3_net_free: return sun3_net;
	case class_id::interval: return interval;
	case class_id::comparability: return comparability;
	case class_id::permutation: return permutation;
	case class_id::probe_threshold: return probe_threshold;
	default: return sun3;
	}
}

inline const pattern& cached_pattern(pattern_id id) {
	static const std::array<pattern, 12> all = [] {
		std::array<pattern, 12> a;
		for (int i = 0; i < 12; ++i) a[i] = catalog(static_cast<pattern_id>(i));
		return a;
	}();
	return all[static_cast<std::size_t>(id)];
}

} // namespace detail

/// Membership of the split graph h (with a valid partition) in class c.
/// Forbidden-subgraph classes ignore the partition; odd-sun-freeness is
/// read off the C-I incidence graph, where every induced sun shows up as an
/// induced cycle of twice its length.
inline recognition recognize(const graph& h, const split_partition& part, class_id c,
                             const recognize_options& opts = {}) {
	if (!is_valid_partition(h, part)) throw precondition_error("invalid split partition");
	if (c == class_id::strongly_chordal) {
		// Elimination decides alone (the 3-sun is a sun). On failure, prefer a
		// 3-sun inside the stuck remainder as the witness.
		auto elim = strongly_chordal_elimination(h);
		if (elim.strongly_chordal) return {true, std::nullopt};
		const auto rest = induced(h, elim.stuck);
		const pattern& s3 = detail::cached_pattern(pattern_id::sun3);
		if (auto phi = has_induced(rest.g, s3)) {
			for (auto& v : *phi) v = rest.to_host[v];
			return {false, class_witness{class_witness::kind::pattern, s3.name, std::move(*phi)}};
		}
		return {false, class_witness{class_witness::kind::no_simple_vertex, {}, elim.stuck.members()}};
	}
	for (pattern_id pid : detail::forbidden_patterns(c)) {
		const pattern& pat = detail::cached_pattern(pid);
		if (auto phi = has_induced(h, pat))
			return {false, class_witness{class_witness::kind::pattern, pat.name, std::move(*phi)}};
	}
	if (c == class_id::odd_sun_free) {
		const graph b = incidence_graph(h, part);
		if (auto cyc = find_induced_cycle_2mod4(b, {part.clique_side, part.independent_side}, opts.cycles))
			return {false, class_witness{class_witness::kind::cycle, {}, std::move(*cyc)}};
	}
	return {true, std::nullopt};
}

/// As above for an arbitrary graph; non-split graphs are never members.
inline recognition recognize(const graph& h, class_id c, const recognize_options& opts = {}) {
	auto part = find_split_partition(h);
	if (!part) return {false, class_witness{class_witness::kind::not_split, {}, {}}};
	return recognize(h, *part, c, opts);
}

} // namespace splitroot

#endif
