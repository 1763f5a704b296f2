// Readable gtest output for graphs: graph6 plus the edge list.
#ifndef SPLITROOT_TESTS_PRINT_HPP
#define SPLITROOT_TESTS_PRINT_HPP

#include <ostream>

#include <splitroot/io.hpp>

namespace splitroot {

inline void PrintTo(const graph& g, std::ostream* os) {
	*os << io::to_graph6(g) << " {";
	for (auto [u, v] : g.edges()) *os << ' ' << u << '-' << v;
	*os << " }";
}

inline void PrintTo(const vertex_set& s, std::ostream* os) {
	*os << '{';
	for (vertex v : s.members()) *os << ' ' << v;
	*os << " }";
}

} // namespace splitroot

#endif
