#include "dcmkit/recognition.hpp"
#include "dcmkit/competition.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace dcmkit;

namespace {

std::set<std::vector<Arc>> arc_sets(const std::vector<Digraph>& ds)
{
    std::set<std::vector<Arc>> out;
    for (const Digraph& d : ds) {
        out.insert(d.arcs());
    }
    return out;
}

// Brute-force filter over all 2^(n^2) labelled digraphs.
std::set<std::vector<Arc>> filtered(int n, DigraphClass c)
{
    std::set<std::vector<Arc>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
        const Digraph d = oracle::from_mask(n, mask);
        const bool member = c == DigraphClass::Arbitrary  ? true
                          : c == DigraphClass::Loopless   ? is_loopless(d)
                          : c == DigraphClass::Reflexive  ? is_reflexive(d)
                                                          : !oracle::has_cycle(d);
        if (member) {
            out.insert(d.arcs());
        }
    }
    return out;
}

Multigraph single_edge(int n, Vertex x, Vertex y, Multiplicity m)
{
    Multigraph out(n);
    out.set_multiplicity(x, y, m);
    return out;
}

} // namespace

TEST_CASE("enumerate_digraphs counts")
{
    CHECK(enumerate_digraphs(1, DigraphClass::Arbitrary).size() == 2);
    CHECK(enumerate_digraphs(2, DigraphClass::Loopless).size() == 4);

    const std::vector<Digraph> dags = enumerate_digraphs(2, DigraphClass::Acyclic);
    REQUIRE(dags.size() == 3);
    CHECK(arc_sets(dags) == std::set<std::vector<Arc>>{{}, {{1, 2}}, {{2, 1}}});
}

TEST_CASE("enumeration matches a brute-force class filter, each digraph once")
{
    for (int n = 1; n <= 4; ++n) {
        for (DigraphClass c : kAllClasses) {
            const std::vector<Digraph> ds = enumerate_digraphs(n, c);
            const auto unique = arc_sets(ds);
            CHECK(unique.size() == ds.size());
            CHECK(ds.size() == class_size(n, c));
            CHECK(unique == filtered(n, c));
        }
    }
    // Labelled DAG counts 1, 3, 25, 543 come out of the filter above.
    CHECK(class_size(3, DigraphClass::Acyclic) == 25);
    CHECK(class_size(4, DigraphClass::Acyclic) == 543);
}

TEST_CASE("enumeration order is deterministic and can stop early")
{
    CHECK(enumerate_digraphs(3, DigraphClass::Acyclic) == enumerate_digraphs(3, DigraphClass::Acyclic));
    int seen = 0;
    for_each_digraph(3, DigraphClass::Arbitrary, [&seen](const Digraph&) { return ++seen < 10; });
    CHECK(seen == 10);
    CHECK(enumerate_digraphs(2, DigraphClass::Reflexive).front() == Digraph(2, {{1, 1}, {2, 2}}));
}

TEST_CASE("bounds are enforced, never truncated")
{
    CHECK_THROWS_AS(enumerate_digraphs(5, DigraphClass::Arbitrary), BoundExceeded);
    CHECK_THROWS_AS(class_size(6, DigraphClass::Arbitrary, 6), BoundExceeded);
    CHECK_THROWS_AS(recognize(Multigraph(6), DigraphClass::Arbitrary, 5), BoundExceeded);
    CHECK_THROWS_AS(catalog(5, DigraphClass::Loopless), BoundExceeded);
    CHECK(class_size(5, DigraphClass::Loopless, 5) == (std::uint64_t{1} << 20));
}

TEST_CASE("recognize examples")
{
    const RecognitionResult empty = recognize(Multigraph(3), DigraphClass::Arbitrary);
    CHECK(empty.recognized);
    CHECK(empty.witness_digraph->arc_count() == 0);
    CHECK(empty.digraphs_examined == 1);

    const Multigraph m = single_edge(4, 2, 3, 1);
    const RecognitionResult dag = recognize(m, DigraphClass::Acyclic);
    REQUIRE(dag.recognized);
    CHECK(is_acyclic(*dag.witness_digraph));
    CHECK(double_competition_multigraph(*dag.witness_digraph) == m);
    CHECK(verify_certificate(m, *dag.witness_certificate, DigraphClass::Acyclic).accepted());
    CHECK(double_competition_multigraph(Digraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})) == m);

    const Multigraph four = single_edge(2, 1, 2, 4);
    const RecognitionResult loopless = recognize(four, DigraphClass::Loopless);
    CHECK_FALSE(loopless.recognized);
    CHECK_FALSE(loopless.witness_digraph.has_value());
    CHECK_FALSE(loopless.witness_certificate.has_value());
    CHECK(loopless.digraphs_examined == 4);

    const RecognitionResult arbitrary = recognize(four, DigraphClass::Arbitrary);
    REQUIRE(arbitrary.recognized);
    CHECK(*arbitrary.witness_digraph == Digraph(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    CHECK(arbitrary.digraphs_examined == 16);

    for (DigraphClass c : kAllClasses) {
        CHECK(recognize(Multigraph(4), c).recognized);
    }
}

TEST_CASE("multiplicities beyond any realizable value are rejected")
{
    const Multigraph huge = single_edge(2, 1, 2, 1000);
    CHECK_FALSE(recognize(huge, DigraphClass::Arbitrary).recognized);
    CHECK_FALSE(RecognitionIndex(2, DigraphClass::Arbitrary).recognize(huge).recognized);
}

TEST_CASE("catalog examples")
{
    const std::vector<CatalogRow> one = catalog(1, DigraphClass::Arbitrary);
    REQUIRE(one.size() == 1);
    CHECK(one[0].multigraph.edges().empty());
    CHECK(one[0].witnesses == 2);

    const std::vector<CatalogRow> loopless = catalog(2, DigraphClass::Loopless);
    REQUIRE(loopless.size() == 1);
    CHECK(loopless[0].multigraph.edges().empty());
    CHECK(loopless[0].witnesses == 4);

    for (int n = 1; n <= 4; ++n) {
        for (DigraphClass c : kAllClasses) {
            std::uint64_t total = 0;
            for (const CatalogRow& row : catalog(n, c)) {
                total += row.witnesses;
            }
            CHECK(total == class_size(n, c));
        }
    }
}

TEST_CASE("catalog counts match direct DCM tallies for n = 3")
{
    for (DigraphClass c : kAllClasses) {
        std::map<Multigraph::EdgeMap, std::uint64_t> tally;
        for (const Digraph& d : enumerate_digraphs(3, c)) {
            ++tally[double_competition_multigraph(d).edges()];
        }
        const std::vector<CatalogRow> rows = catalog(3, c);
        REQUIRE(rows.size() == tally.size());
        for (const CatalogRow& row : rows) {
            CHECK(tally.at(row.multigraph.edges()) == row.witnesses);
        }
    }
}

TEST_CASE("indexed and scanning recognition agree, soundness and completeness for n <= 3")
{
    for (int n = 1; n <= 3; ++n) {
        for (DigraphClass c : kAllClasses) {
            const RecognitionIndex index(n, c);
            for (const Digraph& d : enumerate_digraphs(n, c)) {
                const Multigraph m = double_competition_multigraph(d);
                const RecognitionResult scan = recognize(m, c);
                const RecognitionResult fast = index.recognize(m);
                REQUIRE(scan.recognized);
                CHECK(scan.digraphs_examined == fast.digraphs_examined);
                CHECK(*scan.witness_digraph == *fast.witness_digraph);
                CHECK(*scan.witness_certificate == *fast.witness_certificate);
                CHECK(is_in_class(*scan.witness_digraph, c));
                CHECK(double_competition_multigraph(*scan.witness_digraph) == m);
                CHECK(verify_certificate(m, *scan.witness_certificate, c).accepted());
            }
        }
    }
}

TEST_CASE("accepted certificates imply recognition, recognition implies an accepted certificate (n <= 3)")
{
    // Reverse direction of each characterization: an accepted certificate
    // reconstructs to a class member with the same DCM, so the multigraph
    // must be recognized. Certificates come from canonical families of all
    // class members and their single mutations.
    for (int n = 2; n <= 3; ++n) {
        for (DigraphClass c : kAllClasses) {
            const RecognitionIndex index(n, c);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
                const Digraph source = oracle::from_mask(n, mask);
                std::vector<CliqueFamily> candidates{canonical_family(source, identity_ordering(n))};
                for (int i = 1; i <= n; ++i) {
                    for (int j = 1; j <= n; ++j) {
                        for (Vertex v = 1; v <= n; ++v) {
                            CliqueFamily f = candidates.front();
                            VertexSet s = f.at(i, j);
                            if (!s.erase(v)) {
                                s.insert(v);
                            }
                            f.set(i, j, std::move(s));
                            candidates.push_back(std::move(f));
                        }
                    }
                }
                for (const CliqueFamily& f : candidates) {
                    const Multigraph m = coverage_multigraph(f);
                    const bool certified = verify_certificate(m, f, c).accepted();
                    if (certified) {
                        const Digraph d = reconstruct_digraph(f);
                        REQUIRE(is_in_class(d, c));
                        REQUIRE(double_competition_multigraph(d) == m);
                        REQUIRE(index.recognize(m).recognized);
                    }
                    const RecognitionResult r = index.recognize(m);
                    if (r.recognized) {
                        REQUIRE(verify_certificate(m, *r.witness_certificate, c).accepted());
                    }
                }
            }
        }
    }
}
