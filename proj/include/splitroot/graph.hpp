#ifndef SPLITROOT_GRAPH_HPP
#define SPLITROOT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace splitroot {

using vertex = std::uint32_t;
using edge = std::pair<vertex, vertex>;
using edge_list = std::vector<edge>;

/// Fixed-universe bitset over the vertices 0..size()-1 of some host graph.
class vertex_set {
public:
	using word = std::uint64_t;
	static constexpr std::size_t word_bits = 64;

	vertex_set() = default;
	explicit vertex_set(std::size_t universe)
	    : size_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}
	vertex_set(std::size_t universe, std::initializer_list<vertex> members)
	    : vertex_set(universe) {
		for (vertex v : members) insert(v);
	}
	template <typename Range>
	static vertex_set of(std::size_t universe, const Range& members) {
		vertex_set s(universe);
		for (auto v : members) s.insert(static_cast<vertex>(v));
		return s;
	}
	static vertex_set full(std::size_t universe) {
		vertex_set s(universe);
		for (auto& w : s.words_) w = ~word{0};
		s.trim();
		return s;
	}

	/// {0, ..., end-1}
	static vertex_set prefix(std::size_t universe, std::size_t end) {
		vertex_set s(universe);
		end = std::min(end, universe);
		for (std::size_t wi = 0; wi < end / word_bits; ++wi) s.words_[wi] = ~word{0};
		if (end % word_bits) s.words_[end / word_bits] = (word{1} << (end % word_bits)) - 1;
		return s;
	}

	std::size_t universe() const noexcept { return size_; }

	bool contains(vertex v) const noexcept {
		return v < size_ && ((words_[v / word_bits] >> (v % word_bits)) & 1u);
	}
	void insert(vertex v) {
		check(v);
		words_[v / word_bits] |= word{1} << (v % word_bits);
	}
	void erase(vertex v) {
		check(v);
		words_[v / word_bits] &= ~(word{1} << (v % word_bits));
	}

	std::size_t count() const noexcept {
		std::size_t c = 0;
		for (word w : words_) c += static_cast<std::size_t>(std::popcount(w));
		return c;
	}
	bool empty() const noexcept {
		return std::all_of(words_.begin(), words_.end(), [](word w) { return w == 0; });
	}

	/// Smallest member >= from, or universe() if none.
	vertex next(vertex from) const noexcept {
		if (from >= size_) return static_cast<vertex>(size_);
		std::size_t wi = from / word_bits;
		word w = words_[wi] & (~word{0} << (from % word_bits));
		while (true) {
			if (w) return static_cast<vertex>(wi * word_bits + std::countr_zero(w));
			if (++wi == words_.size()) return static_cast<vertex>(size_);
			w = words_[wi];
		}
	}
	vertex first() const noexcept { return next(0); }

	template <typename F>
	void for_each(F&& f) const {
		for (std::size_t wi = 0; wi < words_.size(); ++wi) {
			word w = words_[wi];
			while (w) {
				f(static_cast<vertex>(wi * word_bits + std::countr_zero(w)));
				w &= w - 1;
			}
		}
	}
	std::vector<vertex> members() const {
		std::vector<vertex> out;
		out.reserve(count());
		for_each([&](vertex v) { out.push_back(v); });
		return out;
	}

	vertex_set& operator&=(const vertex_set& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
		return *this;
	}
	vertex_set& operator|=(const vertex_set& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
		return *this;
	}
	vertex_set& operator-=(const vertex_set& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
		return *this;
	}
	friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
	friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
	friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }
	vertex_set complement() const {
		vertex_set s(*this);
		for (auto& w : s.words_) w = ~w;
		s.trim();
		return s;
	}

	bool intersects(const vertex_set& o) const noexcept {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & o.words_[i]) return true;
		return false;
	}
	bool subset_of(const vertex_set& o) const noexcept {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & ~o.words_[i]) return false;
		return true;
	}
	std::size_t intersection_count(const vertex_set& o) const noexcept {
		std::size_t c = 0;
		for (std::size_t i = 0; i < words_.size(); ++i)
			c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
		return c;
	}

	friend bool operator==(const vertex_set&, const vertex_set&) = default;

	/// Lexicographic order on the ascending member lists.
	friend bool lex_less(const vertex_set& a, const vertex_set& b) {
		vertex x = a.first(), y = b.first();
		const auto na = static_cast<vertex>(a.size_), nb = static_cast<vertex>(b.size_);
		while (x < na && y < nb) {
			if (x != y) return x < y;
			x = a.next(x + 1);
			y = b.next(y + 1);
		}
		return x >= na && y < nb;
	}

private:
	void check(vertex v) const {
		if (v >= size_)
			throw precondition_error("vertex " + std::to_string(v) + " out of range for universe of size " +
			                         std::to_string(size_));
	}
	void trim() {
		if (size_ % word_bits && !words_.empty()) words_.back() &= (word{1} << (size_ % word_bits)) - 1;
	}

	std::size_t size_ = 0;
	std::vector<word> words_;
};

class graph_builder;

/// Immutable simple graph on vertices 0..order()-1 stored as adjacency bitsets.
class graph {
public:
	graph() = default;
	explicit graph(std::size_t n) : adj_(n, vertex_set(n)) {}
	graph(std::size_t n, const edge_list& edges);

	std::size_t order() const noexcept { return adj_.size(); }
	std::size_t size() const noexcept {
		std::size_t twice = 0;
		for (const auto& row : adj_) twice += row.count();
		return twice / 2;
	}
	const vertex_set& neighbors(vertex v) const { return adj_.at(v); }
	vertex_set closed_neighbors(vertex v) const {
		vertex_set s = adj_.at(v);
		s.insert(v);
		return s;
	}
	std::size_t degree(vertex v) const { return adj_.at(v).count(); }
	bool adjacent(vertex u, vertex v) const { return adj_.at(u).contains(v); }
	vertex_set all() const { return vertex_set::full(order()); }

	/// Edges (u, v) with u < v in lexicographic order.
	edge_list edges() const {
		edge_list out;
		for (vertex u = 0; u < order(); ++u)
			adj_[u].for_each([&](vertex v) {
				if (u < v) out.emplace_back(u, v);
			});
		return out;
	}

	bool is_clique(const vertex_set& s) const {
		bool ok = true;
		s.for_each([&](vertex v) {
			if (ok) ok = (s - adj_[v]).count() == 1;
		});
		return ok;
	}
	bool is_independent(const vertex_set& s) const {
		bool ok = true;
		s.for_each([&](vertex v) {
			if (ok) ok = !adj_[v].intersects(s);
		});
		return ok;
	}

	friend bool operator==(const graph&, const graph&) = default;

private:
	friend class graph_builder;
	std::vector<vertex_set> adj_;
};

/// Mutable staging area; `build()` freezes the result into a graph.
class graph_builder {
public:
	explicit graph_builder(std::size_t n) : g_(n) {}
	explicit graph_builder(graph g) : g_(std::move(g)) {}

	std::size_t order() const noexcept { return g_.order(); }
	graph_builder& add_edge(vertex u, vertex v) {
		check(u, v);
		g_.adj_[u].insert(v);
		g_.adj_[v].insert(u);
		return *this;
	}
	graph_builder& remove_edge(vertex u, vertex v) {
		check(u, v);
		g_.adj_[u].erase(v);
		g_.adj_[v].erase(u);
		return *this;
	}
	bool adjacent(vertex u, vertex v) const { return g_.adjacent(u, v); }
	graph build() && { return std::move(g_); }
	graph build() const& { return g_; }

private:
	void check(vertex u, vertex v) const {
		if (u >= g_.order() || v >= g_.order())
			throw precondition_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
			                         ") out of range for " + std::to_string(g_.order()) + " vertices");
		if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
	}
	graph g_;
};

inline graph::graph(std::size_t n, const edge_list& edges) {
	graph_builder b(n);
	for (auto [u, v] : edges) b.add_edge(u, v);
	*this = std::move(b).build();
}

inline graph complete_graph(std::size_t n) {
	graph_builder b(n);
	for (vertex u = 0; u < n; ++u)
		for (vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
	return std::move(b).build();
}

inline graph complement(const graph& g) {
	graph_builder b(g.order());
	for (vertex u = 0; u < g.order(); ++u)
		for (vertex v = u + 1; v < g.order(); ++v)
			if (!g.adjacent(u, v)) b.add_edge(u, v);
	return std::move(b).build();
}

/// Distance-at-most-two closure: uv is an edge iff they are adjacent or share a neighbor.
inline graph square(const graph& g) {
	graph_builder b(g.order());
	for (vertex v = 0; v < g.order(); ++v) {
		vertex_set reach = g.neighbors(v);
		g.neighbors(v).for_each([&](vertex u) { reach |= g.neighbors(u); });
		reach.for_each([&](vertex u) {
			if (u != v) b.add_edge(v, u);
		});
	}
	return std::move(b).build();
}

/// Disjoint union plus all cross edges; vertices of h follow those of g.
inline graph join(const graph& g, const graph& h) {
	const auto off = static_cast<vertex>(g.order());
	graph_builder b(g.order() + h.order());
	for (auto [u, v] : g.edges()) b.add_edge(u, v);
	for (auto [u, v] : h.edges()) b.add_edge(u + off, v + off);
	for (vertex u = 0; u < g.order(); ++u)
		for (vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + off);
	return std::move(b).build();
}

struct induced_subgraph {
	graph g;
	std::vector<vertex> to_host; // new label -> host label
};

inline induced_subgraph induced(const graph& g, const vertex_set& s) {
	if (s.universe() != g.order()) throw precondition_error("vertex set universe does not match graph order");
	induced_subgraph out;
	out.to_host = s.members();
	std::vector<vertex> to_new(g.order(), 0);
	for (vertex i = 0; i < out.to_host.size(); ++i) to_new[out.to_host[i]] = i;
	graph_builder b(out.to_host.size());
	for (vertex i = 0; i < out.to_host.size(); ++i)
		(g.neighbors(out.to_host[i]) & s).for_each([&](vertex u) {
			if (to_new[u] > i) b.add_edge(i, to_new[u]);
		});
	out.g = std::move(b).build();
	return out;
}

inline induced_subgraph induced(const graph& g, const std::vector<vertex>& members) {
	for (vertex v : members)
		if (v >= g.order()) throw precondition_error("vertex " + std::to_string(v) + " out of range");
	return induced(g, vertex_set::of(g.order(), members));
}

/// Relabel: vertex v of g becomes perm[v].
inline graph relabel(const graph& g, const std::vector<vertex>& perm) {
	graph_builder b(g.order());
	for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
	return std::move(b).build();
}

inline vertex_set universal_vertices(const graph& g) {
	vertex_set s(g.order());
	for (vertex v = 0; v < g.order(); ++v)
		if (g.degree(v) + 1 == g.order()) s.insert(v);
	return s;
}

inline bool is_connected(const graph& g) {
	if (g.order() <= 1) return true;
	vertex_set seen(g.order()), frontier(g.order());
	seen.insert(0);
	frontier.insert(0);
	while (!frontier.empty()) {
		vertex_set next(g.order());
		frontier.for_each([&](vertex v) { next |= g.neighbors(v); });
		next -= seen;
		seen |= next;
		frontier = std::move(next);
	}
	return seen.count() == g.order();
}

} // namespace splitroot

#endif
