#ifndef DCMKIT_CORE_HPP
#define DCMKIT_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace dcmkit {

// Vertices are the integers 1..n.
using Vertex = int;
using VertexSet = std::set<Vertex>;
using Multiplicity = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

struct Arc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arc&) const = default;
};

/// Digraph on [n] with an arc set; loops are permitted.
class Digraph {
public:
    explicit Digraph(int n);
    /// Throws std::domain_error on out-of-range endpoints or repeated arcs.
    Digraph(int n, std::span<const Arc> arcs);
    Digraph(int n, std::initializer_list<Arc> arcs);

    int order() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }

    bool has_arc(Vertex tail, Vertex head) const;
    /// Inserts (tail, head); returns false if the arc was already present.
    bool add_arc(Vertex tail, Vertex head);

    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph&) const = default;

private:
    std::size_t slot(Vertex tail, Vertex head) const;

    int n_;
    std::vector<char> adjacency_;
    std::size_t arc_count_ = 0;
};

VertexSet out_neighborhood(const Digraph& d, Vertex x);
VertexSet in_neighborhood(const Digraph& d, Vertex x);

/// Flips every arc.
Digraph reverse(const Digraph& d);

bool is_loopless(const Digraph& d);
bool is_reflexive(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// Topological order preferring the smallest available label, or nullopt if
/// the digraph has a directed cycle (a loop counts as one).
std::optional<std::vector<Vertex>> acyclic_ordering(const Digraph& d);

/// Loopless multigraph on [n] stored as a sparse multiplicity map keyed by
/// (x, y) with x < y. Zero multiplicities are never stored.
class Multigraph {
public:
    using EdgeMap = std::map<VertexPair, Multiplicity>;

    explicit Multigraph(int n);

    int order() const { return n_; }

    /// Throws std::domain_error when x == y or either vertex is out of range.
    Multiplicity multiplicity(Vertex x, Vertex y) const;
    /// Setting zero removes the pair.
    void set_multiplicity(Vertex x, Vertex y, Multiplicity m);

    const EdgeMap& edges() const { return edges_; }

    bool operator==(const Multigraph&) const = default;

private:
    VertexPair key(Vertex x, Vertex y) const;

    int n_;
    EdgeMap edges_;
};

class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int order() const { return n_; }
    bool has_edge(Vertex x, Vertex y) const;
    void add_edge(Vertex x, Vertex y);
    const std::set<VertexPair>& edges() const { return edges_; }

    bool operator==(const SimpleGraph&) const = default;

private:
    VertexPair key(Vertex x, Vertex y) const;

    int n_;
    std::set<VertexPair> edges_;
};

/// Underlying simple graph: pairs of multiplicity at least one.
SimpleGraph support(const Multigraph& m);

/// True iff every two distinct members are joined by at least one edge.
/// The empty set and singletons are cliques.
bool is_clique(const Multigraph& m, const VertexSet& s);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

void check_vertex(int n, Vertex v);

} // namespace dcmkit

#endif // DCMKIT_CORE_HPP
