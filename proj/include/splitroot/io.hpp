#ifndef SPLITROOT_IO_HPP
#define SPLITROOT_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace splitroot::io {

// Edge-list format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Blank lines and '#' comments are ignored.

inline std::string to_edge_list(const graph& g) {
	std::ostringstream out;
	auto edges = g.edges();
	out << g.order() << ' ' << edges.size() << '\n';
	for (auto [u, v] : edges) out << u << ' ' << v << '\n';
	return out.str();
}

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
	std::vector<std::string> lines;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos) end = text.size();
		std::string line(text.substr(pos, end - pos));
		if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
		if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(std::move(line));
		pos = end + 1;
	}
	return lines;
}

inline bool read_uints(const std::string& line, std::size_t& a, std::size_t& b) {
	std::istringstream in(line);
	long long x = -1, y = -1;
	if (!(in >> x >> y) || x < 0 || y < 0) return false;
	std::string rest;
	if (in >> rest) return false;
	a = static_cast<std::size_t>(x);
	b = static_cast<std::size_t>(y);
	return true;
}

} // namespace detail

inline graph parse_edge_list(std::string_view text) {
	auto lines = detail::content_lines(text);
	if (lines.empty()) throw parse_error("edge list: missing header line \"n m\"");
	std::size_t n = 0, m = 0;
	if (!detail::read_uints(lines[0], n, m)) throw parse_error("edge list: malformed header: " + lines[0]);
	if (lines.size() - 1 != m)
		throw parse_error("edge list: header announces " + std::to_string(m) + " edges, found " +
		                  std::to_string(lines.size() - 1));
	graph_builder b(n);
	for (std::size_t i = 1; i < lines.size(); ++i) {
		std::size_t u = 0, v = 0;
		if (!detail::read_uints(lines[i], u, v)) throw parse_error("edge list: malformed edge line: " + lines[i]);
		if (!(u < v && v < n))
			throw parse_error("edge list: edge must satisfy 0 <= u < v < n: " + lines[i]);
		if (b.adjacent(static_cast<vertex>(u), static_cast<vertex>(v)))
			throw parse_error("edge list: duplicate edge: " + lines[i]);
		b.add_edge(static_cast<vertex>(u), static_cast<vertex>(v));
	}
	return std::move(b).build();
}

// graph6: size header, then the upper triangle column by column
// (x01, x02, x12, x03, ...) packed big-endian into 6-bit groups, each +63.

inline std::string to_graph6(const graph& g) {
	const std::size_t n = g.order();
	std::string out;
	if (n <= 62) {
		out.push_back(static_cast<char>(n + 63));
	} else if (n <= 258047) {
		out.push_back(126);
		for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
	} else {
		out.push_back(126);
		out.push_back(126);
		for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
	}
	int group = 0, filled = 0;
	for (vertex v = 1; v < n; ++v)
		for (vertex u = 0; u < v; ++u) {
			group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
			if (++filled == 6) {
				out.push_back(static_cast<char>(group + 63));
				group = filled = 0;
			}
		}
	if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
	return out;
}

inline graph parse_graph6(std::string_view line) {
	while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
	if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
	std::size_t pos = 0;
	auto next6 = [&]() -> unsigned {
		if (pos >= line.size()) throw parse_error("graph6: truncated input");
		const auto c = static_cast<unsigned char>(line[pos++]);
		if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
		return c - 63u;
	};
	std::size_t n = 0;
	if (line.empty()) throw parse_error("graph6: empty line");
	if (static_cast<unsigned char>(line[0]) != 126) {
		n = next6();
	} else {
		++pos;
		int chunks = 3;
		if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
			++pos;
			chunks = 6;
		}
		for (int i = 0; i < chunks; ++i) n = (n << 6) | next6();
	}
	graph_builder b(n);
	unsigned group = 0;
	int left = 0;
	for (vertex v = 1; v < n; ++v)
		for (vertex u = 0; u < v; ++u) {
			if (left == 0) {
				group = next6();
				left = 6;
			}
			--left;
			if ((group >> left) & 1u) b.add_edge(u, v);
		}
	if (left && (group & ((1u << left) - 1))) throw parse_error("graph6: nonzero padding bits");
	if (pos != line.size()) throw parse_error("graph6: trailing bytes");
	return std::move(b).build();
}

/// One graph per non-empty line.
inline std::vector<graph> parse_graph6_lines(std::string_view text) {
	std::vector<graph> out;
	std::size_t pos = 0;
	while (pos < text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos) end = text.size();
		auto line = text.substr(pos, end - pos);
		while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
		if (!line.empty()) out.push_back(parse_graph6(line));
		pos = end + 1;
	}
	return out;
}

} // namespace splitroot::io

#endif
