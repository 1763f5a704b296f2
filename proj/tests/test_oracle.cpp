#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <splitroot/oracle.hpp>

#include "brute.hpp"
#include "generators.hpp"

using namespace splitroot;

namespace {

graph net() { return catalog(pattern_id::net).g; }

graph shuffled(const graph& g, gen::rng& r) {
	std::vector<vertex> perm(g.order());
	std::iota(perm.begin(), perm.end(), vertex{0});
	std::shuffle(perm.begin(), perm.end(), r);
	return relabel(g, perm);
}

} // namespace

TEST(Canonical, InvariantUnderRelabeling) {
	gen::rng r(71);
	for (int t = 0; t < 60; ++t) {
		graph g = gen::random_graph(r, 1 + t % 10);
		const auto cf = oracle::canonical(g);
		for (int k = 0; k < 50; ++k) EXPECT_EQ(oracle::canonical(shuffled(g, r)), cf);
		EXPECT_EQ(oracle::canonical(cf.to_graph()), cf);
	}
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
	// path and star on four vertices share the edge count
	EXPECT_NE(oracle::canonical(graph(4, {{0, 1}, {1, 2}, {2, 3}})),
	          oracle::canonical(graph(4, {{0, 1}, {0, 2}, {0, 3}})));
	EXPECT_NE(oracle::canonical(net()), oracle::canonical(catalog(pattern_id::sun3).g));
	EXPECT_THROW(oracle::canonical(graph(11)), precondition_error);
}

TEST(Canonical, CacheReturnsSameForm) {
	oracle::canonical_cache cache;
	graph g = net();
	EXPECT_EQ(cache(g), oracle::canonical(g));
	EXPECT_EQ(cache(g), oracle::canonical(g));
	EXPECT_EQ(cache.size(), 1u);
}

TEST(Enumerate, Counts) {
	std::size_t labeled3 = 0;
	oracle::for_each_labeled_connected(3, [&](const graph&) { ++labeled3; });
	EXPECT_EQ(labeled3, 4u);
	const std::size_t expect[] = {0, 1, 1, 2, 6, 21, 112, 853};
	for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(oracle::enumerate_connected(n).size(), expect[n]) << n;
	EXPECT_EQ(oracle::enumerate_connected_upto(6).size(), 143u);
	EXPECT_THROW(oracle::enumerate_connected(9), precondition_error);
}

TEST(Enumerate, LabeledAndAugmentedAgree) {
	for (std::size_t n = 1; n <= 6; ++n) {
		std::set<oracle::canonical_form> from_labeled;
		oracle::for_each_labeled_connected(n, [&](const graph& g) { from_labeled.insert(oracle::canonical(g)); });
		std::set<oracle::canonical_form> from_augment;
		for (const graph& g : oracle::enumerate_connected(n)) {
			EXPECT_TRUE(is_connected(g));
			from_augment.insert(oracle::canonical(g));
		}
		EXPECT_EQ(from_labeled, from_augment) << n;
	}
}

TEST(OracleRoot, Examples) {
	auto k4 = oracle::oracle_find_root(complete_graph(4), class_id::sun3_free);
	ASSERT_TRUE(k4);
	EXPECT_EQ(square(*k4), complete_graph(4));
	for (class_id c : all_classes) {
		EXPECT_FALSE(oracle::oracle_find_root(graph(4, {{0, 1}, {1, 2}, {2, 3}}), c));
		EXPECT_FALSE(oracle::oracle_find_root(cycle_graph(4), c));
	}
	EXPECT_FALSE(oracle::oracle_find_root(cycle_graph(4), std::nullopt));
	EXPECT_THROW(oracle::oracle_find_root(graph(8), std::nullopt), precondition_error);
}

TEST(OracleRoot, ReturnedRootsCheckOut) {
	for (const graph& g : oracle::enumerate_connected_upto(5))
		for (class_id c : all_classes)
			if (auto h = oracle::oracle_find_root(g, c)) {
				EXPECT_EQ(brute::square_by_distance(*h), g);
				EXPECT_TRUE(brute::is_split(*h));
				EXPECT_TRUE(recognize(*h, c).member);
			}
}

TEST(OracleRoot, MatchesPipelineOnSmallGraphs) {
	for (const graph& g : oracle::enumerate_connected_upto(5))
		for (class_id c : all_classes)
			EXPECT_EQ(find_root(g, c).decision, oracle::oracle_find_root(g, c).has_value())
			    << to_string(c) << " " << io::to_graph6(g);
}

TEST(Miner, Examples) {
	for (class_id c : all_classes) EXPECT_TRUE(oracle::mine_obstructions(c, 1).obstructions.empty());
	EXPECT_TRUE(oracle::mine_obstructions(class_id::sun3_free, 5).obstructions.empty());
	auto rep = oracle::mine_obstructions(class_id::sun3_net_free, 6, 2);
	const auto target = oracle::canonical(square(net()));
	bool found = false;
	for (const graph& g : rep.obstructions) found = found || oracle::canonical(g) == target;
	EXPECT_TRUE(found);
	EXPECT_THROW(oracle::mine_obstructions(class_id::sun3_free, 8), precondition_error);
}

// Adding a universal vertex to an obstruction breaks minimality: the
// obstruction itself is a proper gated induced subgraph without a root.
TEST(Miner, MinimalityIsStrict) {
	auto rep = oracle::mine_obstructions(class_id::sun3_net_free, 6);
	ASSERT_FALSE(rep.obstructions.empty());
	for (const graph& g : rep.obstructions) {
		graph bigger = join(g, graph(1));
		EXPECT_TRUE(gate(bigger).holds);
		bool some_sub_fails = false;
		for (const graph& sub : oracle::detail::gated_proper_subgraphs(bigger))
			some_sub_fails = some_sub_fails || !find_root(sub, class_id::sun3_net_free).decision;
		EXPECT_TRUE(some_sub_fails);
	}
}

TEST(Miner, ParallelMatchesSerial) {
	auto a = oracle::mine_obstructions(class_id::interval, 6, 1);
	auto b = oracle::mine_obstructions(class_id::interval, 6, 3);
	ASSERT_EQ(a.obstructions.size(), b.obstructions.size());
	for (std::size_t i = 0; i < a.obstructions.size(); ++i) EXPECT_EQ(a.obstructions[i], b.obstructions[i]);
}
