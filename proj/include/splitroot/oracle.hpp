#ifndef SPLITROOT_ORACLE_HPP
#define SPLITROOT_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <vector>

#include "classes.hpp"
#include "cliques.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "roots.hpp"

namespace splitroot::oracle {

inline constexpr std::size_t max_canonical_order = 10;

/// Isomorphism-invariant key: the minimum upper-triangle bitstring (graph6
/// bit order, first bit most significant) over all relabelings that list
/// vertices by non-increasing degree.
struct canonical_form {
	std::size_t n = 0;
	std::uint64_t bits = 0;
	friend auto operator<=>(const canonical_form&, const canonical_form&) = default;

	graph to_graph() const {
		graph_builder b(n);
		const std::size_t total = n * (n - (n ? 1 : 0)) / 2;
		std::size_t k = 0;
		for (vertex v = 1; v < n; ++v)
			for (vertex u = 0; u < v; ++u, ++k)
				if ((bits >> (total - 1 - k)) & 1u) b.add_edge(u, v);
		return std::move(b).build();
	}
	std::string bytes() const { return io::to_graph6(to_graph()); }
};

namespace detail {

class canonizer {
public:
	explicit canonizer(const graph& g) : g_(g), n_(g.order()) {
		std::vector<vertex> byDeg(n_);
		std::iota(byDeg.begin(), byDeg.end(), vertex{0});
		std::stable_sort(byDeg.begin(), byDeg.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
		for (vertex v : byDeg) slot_degree_.push_back(g.degree(v));
		total_ = n_ * (n_ - (n_ ? 1 : 0)) / 2;
	}

	canonical_form run() {
		placed_.clear();
		used_.assign(n_, false);
		best_ = ~std::uint64_t{0};
		have_best_ = false;
		search(0, 0);
		return {n_, have_best_ ? best_ : 0};
	}

private:
	// prefix holds the bits of columns 0..pos-1, i.e. pos*(pos-1)/2 bits.
	void search(std::size_t pos, std::uint64_t prefix) {
		if (pos == n_) {
			if (!have_best_ || prefix < best_) {
				best_ = prefix;
				have_best_ = true;
			}
			return;
		}
		for (vertex v = 0; v < n_; ++v) {
			if (used_[v] || g_.degree(v) != slot_degree_[pos]) continue;
			std::uint64_t next = prefix;
			for (vertex u : placed_) next = (next << 1) | (g_.adjacent(u, v) ? 1u : 0u);
			const std::size_t have = (pos + 1) * pos / 2;
			if (have_best_ && have > 0) {
				const std::uint64_t best_prefix = best_ >> (total_ - have);
				if (next > best_prefix) continue;
			}
			used_[v] = true;
			placed_.push_back(v);
			search(pos + 1, next);
			placed_.pop_back();
			used_[v] = false;
		}
	}

	const graph& g_;
	std::size_t n_;
	std::size_t total_ = 0;
	std::vector<std::size_t> slot_degree_;
	std::vector<vertex> placed_;
	std::vector<bool> used_;
	std::uint64_t best_ = 0;
	bool have_best_ = false;
};

} // namespace detail

inline canonical_form canonical(const graph& g) {
	if (g.order() > max_canonical_order)
		throw precondition_error("canonical form limited to " + std::to_string(max_canonical_order) + " vertices");
	return detail::canonizer(g).run();
}

/// Memoizing wrapper keyed by graph6 text.
class canonical_cache {
public:
	canonical_form operator()(const graph& g) {
		auto key = io::to_graph6(g);
		if (auto it = memo_.find(key); it != memo_.end()) return it->second;
		auto cf = canonical(g);
		memo_.emplace(std::move(key), cf);
		return cf;
	}
	std::size_t size() const { return memo_.size(); }

private:
	std::unordered_map<std::string, canonical_form> memo_;
};

inline constexpr std::size_t max_enumeration_order = 8;

/// Every labeled connected graph on n vertices (2^(n choose 2) candidates).
inline void for_each_labeled_connected(std::size_t n, const std::function<void(const graph&)>& visit) {
	if (n > max_enumeration_order) throw precondition_error("enumeration limited to 8 vertices");
	if (n == 0) return;
	edge_list pairs;
	for (vertex v = 1; v < n; ++v)
		for (vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
	const std::uint64_t limit = std::uint64_t{1} << pairs.size();
	for (std::uint64_t mask = 0; mask < limit; ++mask) {
		if (std::popcount(mask) + 1 < static_cast<int>(n)) continue;
		graph_builder b(n);
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if ((mask >> i) & 1u) b.add_edge(pairs[i].first, pairs[i].second);
		graph g = std::move(b).build();
		if (is_connected(g)) visit(g);
	}
}

/// Connected graphs on n vertices up to isomorphism, as canonical
/// representatives sorted by canonical key. Built by attaching a new vertex
/// to every nonempty subset of each (n-1)-vertex representative: every
/// connected graph has a vertex whose deletion leaves it connected.
inline std::vector<graph> enumerate_connected(std::size_t n) {
	if (n > max_enumeration_order) throw precondition_error("enumeration limited to 8 vertices");
	if (n == 0) return {};
	if (n == 1) return {graph(1)};
	std::set<canonical_form> seen;
	for (const graph& base : enumerate_connected(n - 1)) {
		const std::uint64_t limit = std::uint64_t{1} << base.order();
		for (std::uint64_t mask = 1; mask < limit; ++mask) {
			graph_builder b(n);
			for (auto [u, v] : base.edges()) b.add_edge(u, v);
			for (vertex u = 0; u < base.order(); ++u)
				if ((mask >> u) & 1u) b.add_edge(u, static_cast<vertex>(n - 1));
			seen.insert(canonical(std::move(b).build()));
		}
	}
	std::vector<graph> out;
	out.reserve(seen.size());
	for (const auto& cf : seen) out.push_back(cf.to_graph());
	return out;
}

inline std::vector<graph> enumerate_connected_upto(std::size_t max_n) {
	std::vector<graph> out;
	for (std::size_t n = 1; n <= max_n; ++n) {
		auto level = enumerate_connected(n);
		out.insert(out.end(), level.begin(), level.end());
	}
	return out;
}

inline constexpr std::size_t max_oracle_order = 7;

/// Exhaustive split-root search. Candidates are the edge subsets of g (a
/// root's edges survive in its square), visited by increasing bitmask where
/// bit i is the i-th edge of g in (u, v) order. Returns the first connected
/// split candidate in `cls` (any split graph when cls is empty) squaring to g.
inline std::optional<graph> oracle_find_root(const graph& g, std::optional<class_id> cls) {
	const std::size_t n = g.order();
	if (n > max_oracle_order) throw precondition_error("oracle limited to 7 vertices");
	if (n == 0) return std::nullopt;
	const auto edges = g.edges();
	std::vector<std::uint32_t> target(n, 0);
	for (auto [u, v] : edges) {
		target[u] |= 1u << v;
		target[v] |= 1u << u;
	}
	std::vector<std::uint32_t> adj(n);
	const std::uint64_t limit = std::uint64_t{1} << edges.size();
	for (std::uint64_t mask = 0; mask < limit; ++mask) {
		if (std::popcount(mask) + 1 < static_cast<int>(n)) continue;
		std::fill(adj.begin(), adj.end(), 0u);
		for (std::size_t i = 0; i < edges.size(); ++i)
			if ((mask >> i) & 1u) {
				adj[edges[i].first] |= 1u << edges[i].second;
				adj[edges[i].second] |= 1u << edges[i].first;
			}
		bool match = true;
		for (std::size_t v = 0; v < n && match; ++v) {
			std::uint32_t reach = adj[v];
			for (std::size_t u = 0; u < n; ++u)
				if ((adj[v] >> u) & 1u) reach |= adj[u];
			reach &= ~(1u << v);
			match = reach == target[v];
		}
		if (!match) continue; // a square equal to connected g forces a connected candidate
		graph_builder b(n);
		for (std::size_t i = 0; i < edges.size(); ++i)
			if ((mask >> i) & 1u) b.add_edge(edges[i].first, edges[i].second);
		graph h = std::move(b).build();
		if (!is_connected(h)) continue;
		auto part = find_split_partition(h);
		if (!part) continue;
		if (cls && !recognize(h, *part, *cls).member) continue;
		return h;
	}
	return std::nullopt;
}

struct obstruction_report {
	class_id cls = class_id::sun3_free;
	std::size_t max_n = 0;
	std::vector<graph> obstructions; // canonical representatives, by order then key
};

namespace detail {

template <typename F>
void parallel_for(std::size_t count, std::size_t jobs, F&& body) {
	jobs = std::max<std::size_t>(1, std::min(jobs, count));
	if (jobs == 1) {
		for (std::size_t i = 0; i < count; ++i) body(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	std::vector<std::thread> pool;
	for (std::size_t t = 0; t < jobs; ++t)
		pool.emplace_back([&] {
			for (std::size_t i = next++; i < count; i = next++) {
				try {
					body(i);
				} catch (...) {
					std::lock_guard lock(failure_mutex);
					if (!failure) failure = std::current_exception();
				}
			}
		});
	for (auto& th : pool) th.join();
	if (failure) std::rethrow_exception(failure);
}

inline bool gate_holds(const graph& g) { return is_connected(g) && gate(g).holds; }

// Proper nonempty induced subgraphs of g that pass the gate. Disconnected
// ones never do: they have at least two cliques and no common vertex.
inline std::vector<graph> gated_proper_subgraphs(const graph& g) {
	std::vector<graph> out;
	const std::size_t n = g.order();
	for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
		std::vector<vertex> keep;
		for (vertex v = 0; v < n; ++v)
			if ((mask >> v) & 1u) keep.push_back(v);
		graph sub = induced(g, keep).g;
		if (gate_holds(sub)) out.push_back(std::move(sub));
	}
	return out;
}

} // namespace detail

/// Minimal graphs at most max_n vertices that pass the gate, have no root in
/// cls, and whose gated proper induced subgraphs all do. Each emitted graph
/// is re-audited by exhaustive search; any disagreement throws internal_error.
inline obstruction_report mine_obstructions(class_id cls, std::size_t max_n, std::size_t jobs = 1) {
	if (max_n > max_oracle_order) throw precondition_error("miner limited to 7 vertices");
	obstruction_report report{cls, max_n, {}};
	const auto corpus = enumerate_connected_upto(max_n);
	std::vector<char> hit(corpus.size(), 0);
	detail::parallel_for(corpus.size(), jobs, [&](std::size_t i) {
		const graph& g = corpus[i];
		if (!gate(g).holds || find_root(g, cls).decision) return;
		for (const graph& sub : detail::gated_proper_subgraphs(g))
			if (!find_root(sub, cls).decision) return;
		if (oracle_find_root(g, cls)) throw internal_error("miner audit: exhaustive search found a root");
		for (const graph& sub : detail::gated_proper_subgraphs(g))
			if (!oracle_find_root(sub, cls)) throw internal_error("miner audit: proper subgraph has no root");
		hit[i] = 1;
	});
	for (std::size_t i = 0; i < corpus.size(); ++i)
		if (hit[i]) report.obstructions.push_back(corpus[i]);
	return report;
}

} // namespace splitroot::oracle

#endif
