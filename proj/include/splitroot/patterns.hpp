#ifndef SPLITROOT_PATTERNS_HPP
#define SPLITROOT_PATTERNS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace splitroot {

enum class pattern_id { sun3, net, s4_minus, co_s4_minus, g1, g2, g3, g4, pt1, pt2, pt3, pt4, sun, cycle };

struct pattern {
	pattern_id id;
	std::size_t param = 0; // l for sun(l), k for cycle(k)
	std::string name;
	graph g;
};

/// l-sun: clique v_0..v_{l-1} (labels 0..l-1) and u_i = l+i adjacent to exactly v_i, v_{i+1 mod l}.
inline graph sun_graph(std::size_t l) {
	if (l < 3) throw precondition_error("sun requires l >= 3");
	graph_builder b(2 * l);
	for (vertex i = 0; i < l; ++i)
		for (vertex j = i + 1; j < l; ++j) b.add_edge(i, j);
	for (vertex i = 0; i < l; ++i) {
		b.add_edge(static_cast<vertex>(l + i), i);
		b.add_edge(static_cast<vertex>(l + i), static_cast<vertex>((i + 1) % l));
	}
	return std::move(b).build();
}

inline graph cycle_graph(std::size_t k) {
	if (k < 3) throw precondition_error("cycle requires k >= 3");
	graph_builder b(k);
	for (vertex i = 0; i < k; ++i) b.add_edge(i, static_cast<vertex>((i + 1) % k));
	return std::move(b).build();
}

namespace detail {

// S3 with the first `extra` of the outer pairs (3,4), (3,5), (4,5) joined.
inline graph helly_obstruction(int extra) {
	graph_builder b(sun_graph(3));
	const edge outer[] = {{3, 4}, {3, 5}, {4, 5}};
	for (int i = 0; i < extra; ++i) b.add_edge(outer[i].first, outer[i].second);
	return std::move(b).build();
}

inline graph s4_minus() {
	return induced(sun_graph(4), std::vector<vertex>{0, 1, 2, 3, 4, 5, 6}).g;
}

// Probe-threshold obstructions, transcribed from drawings (a_1 -> 0, ...).
inline graph pt_graph(int which) {
	switch (which) {
	case 1:
		return graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
	case 2:
		return graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}});
	case 3:
		return graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4},
		                 {1, 5}, {2, 5}, {3, 5}, {5, 6}});
	default:
		return graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {1, 2}, {2, 3}, {3, 4},
		                 {1, 5}, {2, 5}, {3, 5}, {5, 6}, {4, 5}});
	}
}

} // namespace detail

inline pattern catalog(pattern_id id, std::size_t param = 0) {
	switch (id) {
	case pattern_id::sun3: return {id, 3, "3-sun", sun_graph(3)};
	case pattern_id::net: return {id, 0, "net", complement(sun_graph(3))};
	case pattern_id::s4_minus: return {id, 0, "S4-", detail::s4_minus()};
	case pattern_id::co_s4_minus: return {id, 0, "co-S4-", complement(detail::s4_minus())};
	case pattern_id::g1: return {id, 0, "G1", detail::helly_obstruction(0)};
	case pattern_id::g2: return {id, 0, "G2", detail::helly_obstruction(1)};
	case pattern_id::g3: return {id, 0, "G3", detail::helly_obstruction(2)};
	case pattern_id::g4: return {id, 0, "G4", detail::helly_obstruction(3)};
	case pattern_id::pt1: return {id, 0, "PT1", detail::pt_graph(1)};
	case pattern_id::pt2: return {id, 0, "PT2", detail::pt_graph(2)};
	case pattern_id::pt3: return {id, 0, "PT3", detail::pt_graph(3)};
	case pattern_id::pt4: return {id, 0, "PT4", detail::pt_graph(4)};
	case pattern_id::sun: return {id, param, std::to_string(param) + "-sun", sun_graph(param)};
	case pattern_id::cycle: return {id, param, "C" + std::to_string(param), cycle_graph(param)};
	}
	throw precondition_error("unknown pattern id");
}

/// Induced-subgraph embedding: result[i] is the host vertex hosting pattern vertex i.
using embedding = std::vector<vertex>;

namespace detail {

class induced_matcher {
public:
	// Forward checking: every unplaced pattern vertex keeps the set of host
	// vertices still compatible with all placements so far. A placement that
	// empties some set is abandoned at once, and the next vertex to place is
	// the one with the fewest candidates (ties by label).
	induced_matcher(const graph& host, const graph& pat) : host_(host), pat_(pat) {
		const std::size_t k = pat.order();
		for (vertex v = 0; v < k; ++v) {
			vertex_set ok(host.order());
			for (vertex x = 0; x < host.order(); ++x)
				if (host.degree(x) >= pat.degree(v) && host.order() - 1 - host.degree(x) >= k - 1 - pat.degree(v))
					ok.insert(x);
			initial_.push_back(std::move(ok));
		}
		image_.assign(k, 0);
		placed_.assign(k, false);
	}

	std::optional<embedding> find() {
		if (pat_.order() > host_.order()) return std::nullopt;
		for (const auto& d : initial_)
			if (d.empty()) return std::nullopt;
		if (search(initial_, 0)) return image_;
		return std::nullopt;
	}

private:
	bool search(const std::vector<vertex_set>& domains, std::size_t depth) {
		const std::size_t k = pat_.order();
		if (depth == k) return true;
		vertex p = 0;
		std::size_t best = ~std::size_t{0};
		for (vertex v = 0; v < k; ++v) {
			if (placed_[v]) continue;
			const std::size_t c = domains[v].count();
			if (c < best) {
				best = c;
				p = v;
			}
		}
		placed_[p] = true;
		const vertex_set& cand = domains[p];
		std::vector<vertex_set> next(k);
		for (vertex x = cand.first(); x < host_.order(); x = cand.next(x + 1)) {
			bool alive = true;
			for (vertex v = 0; v < k && alive; ++v) {
				if (placed_[v]) continue;
				next[v] = domains[v];
				next[v].erase(x);
				if (pat_.adjacent(p, v))
					next[v] &= host_.neighbors(x);
				else
					next[v] -= host_.neighbors(x);
				alive = !next[v].empty();
			}
			if (!alive) continue;
			image_[p] = x;
			if (search(next, depth + 1)) return true;
		}
		placed_[p] = false;
		return false;
	}

	const graph& host_;
	const graph& pat_;
	std::vector<vertex_set> initial_;
	std::vector<bool> placed_;
	embedding image_;
};

} // namespace detail

inline std::optional<embedding> has_induced(const graph& host, const graph& pat) {
	return detail::induced_matcher(host, pat).find();
}
inline std::optional<embedding> has_induced(const graph& host, const pattern& p) {
	return has_induced(host, p.g);
}

/// Checks that `phi` is an induced embedding of pat into host.
inline bool is_induced_embedding(const graph& host, const graph& pat, const embedding& phi) {
	if (phi.size() != pat.order()) return false;
	for (std::size_t i = 0; i < phi.size(); ++i) {
		if (phi[i] >= host.order()) return false;
		for (std::size_t j = i + 1; j < phi.size(); ++j) {
			if (phi[i] == phi[j]) return false;
			if (pat.adjacent(static_cast<vertex>(i), static_cast<vertex>(j)) != host.adjacent(phi[i], phi[j]))
				return false;
		}
	}
	return true;
}

struct bipartition {
	vertex_set left;
	vertex_set right;
};

struct cycle_search_options {
	std::size_t max_vertices = 64; // applied to the 2-core of the input
	bool force = false;
};

namespace detail {

// Vertices of the 2-core; only they can lie on a cycle.
inline vertex_set two_core(const graph& g) {
	vertex_set alive = g.all();
	bool changed = true;
	while (changed) {
		changed = false;
		alive.for_each([&](vertex v) {
			if (g.neighbors(v).intersection_count(alive) < 2) {
				alive.erase(v);
				changed = true;
			}
		});
	}
	return alive;
}

// Enumerates chordless cycles, each once: rooted at its least vertex, with the
// second vertex smaller than the last. `visit` returns true to stop.
class chordless_cycles {
public:
	chordless_cycles(const graph& g, std::function<bool(const std::vector<vertex>&)> visit)
	    : g_(g), visit_(std::move(visit)) {}

	bool run() {
		const auto n = static_cast<vertex>(g_.order());
		for (vertex s = 0; s < n; ++s) {
			above_ = vertex_set(n);
			for (vertex v = s + 1; v < n; ++v) above_.insert(v);
			vertex_set firsts = g_.neighbors(s) & above_;
			for (vertex p1 = firsts.first(); p1 < n; p1 = firsts.next(p1 + 1)) {
				path_ = {s, p1};
				on_path_ = vertex_set(n, {s, p1});
				if (grow(vertex_set(n))) return true;
			}
		}
		return false;
	}

private:
	bool grow(const vertex_set& forbidden) {
		const vertex root = path_.front(), tip = path_.back();
		const auto n = static_cast<vertex>(g_.order());
		vertex_set cand = (g_.neighbors(tip) & above_) - on_path_ - forbidden;
		vertex_set next_forbidden = forbidden | g_.neighbors(tip); // tip becomes interior
		next_forbidden.insert(tip);
		for (vertex w = cand.first(); w < n; w = cand.next(w + 1)) {
			if (g_.adjacent(w, root)) {
				if (path_.size() >= 3 && path_[1] < w) {
					path_.push_back(w);
					const bool stop = visit_(path_);
					path_.pop_back();
					if (stop) return true;
				}
				continue;
			}
			path_.push_back(w);
			on_path_.insert(w);
			const bool stop = grow(next_forbidden);
			on_path_.erase(w);
			path_.pop_back();
			if (stop) return true;
		}
		return false;
	}

	const graph& g_;
	std::function<bool(const std::vector<vertex>&)> visit_;
	vertex_set above_;
	vertex_set on_path_;
	std::vector<vertex> path_;
};

} // namespace detail

/// Visits every chordless cycle of g (length >= 4) until `visit` returns true.
/// Exponential in the worst case.
inline void for_each_chordless_cycle(const graph& g, const std::function<bool(const std::vector<vertex>&)>& visit) {
	detail::chordless_cycles(g, visit).run();
}

/// An induced cycle of length 2 (mod 4) in the bipartite graph b, if any.
inline std::optional<std::vector<vertex>> find_induced_cycle_2mod4(const graph& b, const bipartition& sides,
                                                                  const cycle_search_options& opts = {}) {
	if (sides.left.universe() != b.order() || sides.right.universe() != b.order())
		throw precondition_error("bipartition universe does not match graph order");
	if (sides.left.intersects(sides.right) || (sides.left | sides.right).count() != b.order())
		throw precondition_error("sides do not partition the vertex set");
	if (!b.is_independent(sides.left) || !b.is_independent(sides.right))
		throw precondition_error("an edge lies inside one side of the bipartition");
	const auto core = induced(b, detail::two_core(b));
	if (core.g.order() > opts.max_vertices && !opts.force)
		throw precondition_error("cycle search refused: 2-core has " + std::to_string(core.g.order()) +
		                         " vertices (limit " + std::to_string(opts.max_vertices) + ")");
	std::optional<std::vector<vertex>> found;
	for_each_chordless_cycle(core.g, [&](const std::vector<vertex>& c) {
		if (c.size() % 4 != 2) return false;
		std::vector<vertex> host;
		for (vertex v : c) host.push_back(core.to_host[v]);
		found = std::move(host);
		return true;
	});
	return found;
}

} // namespace splitroot

#endif
