#include "dcmkit/core.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace dcmkit;

TEST_CASE("out_neighborhood")
{
    CHECK(out_neighborhood(Digraph(2, {{1, 2}}), 1) == VertexSet{2});
    CHECK(out_neighborhood(Digraph(1, {{1, 1}}), 1) == VertexSet{1});
    CHECK(out_neighborhood(Digraph(3), 2).empty());
    CHECK_THROWS_AS(out_neighborhood(Digraph(3), 4), std::domain_error);
    CHECK_THROWS_AS(out_neighborhood(Digraph(3), 0), std::domain_error);
}

TEST_CASE("in_neighborhood")
{
    CHECK(in_neighborhood(Digraph(2, {{1, 2}}), 2) == VertexSet{1});
    CHECK(in_neighborhood(Digraph(1, {{1, 1}}), 1) == VertexSet{1});
    CHECK(in_neighborhood(Digraph(3, {{1, 3}, {2, 3}}), 3) == VertexSet{1, 2});
    CHECK_THROWS_AS(in_neighborhood(Digraph(3), -1), std::domain_error);
}

TEST_CASE("digraph construction rejects bad arcs")
{
    CHECK_THROWS_AS(Digraph(0), std::domain_error);
    CHECK_THROWS_AS(Digraph(2, {{1, 3}}), std::domain_error);
    CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), std::domain_error);

    Digraph d(2);
    CHECK(d.add_arc(1, 2));
    CHECK_FALSE(d.add_arc(1, 2));
    CHECK(d.arc_count() == 1);
}

TEST_CASE("neighbourhoods agree on arc membership")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        const Digraph d = oracle::random_digraph(rng, n, 0.4);
        for (Vertex x = 1; x <= n; ++x) {
            for (Vertex v = 1; v <= n; ++v) {
                CHECK(out_neighborhood(d, x).contains(v) == in_neighborhood(d, v).contains(x));
            }
        }
    }
}

TEST_CASE("multiplicity lookup")
{
    Multigraph m(3);
    m.set_multiplicity(1, 2, 4);
    CHECK(m.multiplicity(1, 2) == 4);
    CHECK(m.multiplicity(2, 1) == 4);
    CHECK(m.multiplicity(1, 3) == 0);
    CHECK_THROWS_AS(m.multiplicity(2, 2), std::domain_error);
    CHECK_THROWS_AS(m.multiplicity(1, 4), std::domain_error);

    m.set_multiplicity(2, 1, 0);
    CHECK(m.edges().empty());
}

TEST_CASE("is_clique")
{
    Multigraph m(3);
    m.set_multiplicity(1, 2, 1);
    CHECK(is_clique(m, {}));
    CHECK(is_clique(m, {3}));
    CHECK(is_clique(m, {1, 2}));
    CHECK_FALSE(is_clique(m, {1, 2, 3}));
    CHECK_THROWS_AS(is_clique(m, {1, 5}), std::domain_error);
}

TEST_CASE("is_clique is closed under subsets")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mult(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4;
        Multigraph m(n);
        for (Vertex x = 1; x <= n; ++x) {
            for (Vertex y = x + 1; y <= n; ++y) {
                m.set_multiplicity(x, y, static_cast<Multiplicity>(mult(rng)));
            }
        }
        for (unsigned set = 0; set < 16; ++set) {
            VertexSet s;
            for (int b = 0; b < n; ++b) {
                if (set >> b & 1U) {
                    s.insert(b + 1);
                }
            }
            if (!is_clique(m, s)) {
                continue;
            }
            for (unsigned sub = 0; sub < 16; ++sub) {
                if ((sub & set) != sub) {
                    continue;
                }
                VertexSet t;
                for (int b = 0; b < n; ++b) {
                    if (sub >> b & 1U) {
                        t.insert(b + 1);
                    }
                }
                CHECK(is_clique(m, t));
            }
        }
    }
}

TEST_CASE("class predicates")
{
    CHECK(is_loopless(Digraph(2, {{1, 2}})));
    CHECK_FALSE(is_loopless(Digraph(2, {{2, 2}})));
    CHECK(is_reflexive(Digraph(2, {{1, 1}, {2, 2}})));
    CHECK_FALSE(is_reflexive(Digraph(2, {{1, 1}})));
    CHECK(is_acyclic(Digraph(3, {{3, 1}, {1, 2}})));
    CHECK_FALSE(is_acyclic(Digraph(2, {{1, 2}, {2, 1}})));
    CHECK_FALSE(is_acyclic(Digraph(1, {{1, 1}})));
    CHECK(acyclic_ordering(Digraph(3, {{3, 1}, {1, 2}})) == std::vector<Vertex>{3, 1, 2});
}

TEST_CASE("acyclicity agrees with a DFS cycle search on every digraph with n <= 3")
{
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
            const Digraph d = oracle::from_mask(n, mask);
            CHECK(is_acyclic(d) == !oracle::has_cycle(d));
        }
    }
}

TEST_CASE("reverse flips every arc")
{
    const Digraph d(3, {{1, 2}, {2, 2}, {3, 1}});
    CHECK(reverse(d) == Digraph(3, {{2, 1}, {2, 2}, {1, 3}}));
    CHECK(reverse(reverse(d)) == d);
}
