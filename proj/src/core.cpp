#include "dcmkit/core.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <queue>
#include <stdexcept>
#include <string>

namespace dcmkit {

namespace {

void check_order(int n)
{
    if (n < 1) {
        throw std::domain_error("vertex count must be positive, got " + std::to_string(n));
    }
}

} // namespace

void check_vertex(int n, Vertex v)
{
    if (v < 1 || v > n) {
        throw std::domain_error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
}

Digraph::Digraph(int n)
    : n_(n)
{
    check_order(n);
    adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs)
    : Digraph(n)
{
    for (const Arc& a : arcs) {
        if (!add_arc(a.tail, a.head)) {
            throw std::domain_error("duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
        }
    }
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()))
{
}

std::size_t Digraph::slot(Vertex tail, Vertex head) const
{
    check_vertex(n_, tail);
    check_vertex(n_, head);
    return static_cast<std::size_t>(tail - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(head - 1);
}

bool Digraph::has_arc(Vertex tail, Vertex head) const
{
    return adjacency_[slot(tail, head)] != 0;
}

bool Digraph::add_arc(Vertex tail, Vertex head)
{
    char& cell = adjacency_[slot(tail, head)];
    if (cell) {
        return false;
    }
    cell = 1;
    ++arc_count_;
    return true;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v = 1; v <= n_; ++v) {
            if (has_arc(u, v)) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

VertexSet out_neighborhood(const Digraph& d, Vertex x)
{
    check_vertex(d.order(), x);
    VertexSet out;
    for (Vertex v = 1; v <= d.order(); ++v) {
        if (d.has_arc(x, v)) {
            out.insert(out.end(), v);
        }
    }
    return out;
}

VertexSet in_neighborhood(const Digraph& d, Vertex x)
{
    check_vertex(d.order(), x);
    VertexSet in;
    for (Vertex v = 1; v <= d.order(); ++v) {
        if (d.has_arc(v, x)) {
            in.insert(in.end(), v);
        }
    }
    return in;
}

Digraph reverse(const Digraph& d)
{
    Digraph r(d.order());
    for (const Arc& a : d.arcs()) {
        r.add_arc(a.head, a.tail);
    }
    return r;
}

bool is_loopless(const Digraph& d)
{
    for (Vertex v = 1; v <= d.order(); ++v) {
        if (d.has_arc(v, v)) {
            return false;
        }
    }
    return true;
}

bool is_reflexive(const Digraph& d)
{
    for (Vertex v = 1; v <= d.order(); ++v) {
        if (!d.has_arc(v, v)) {
            return false;
        }
    }
    return true;
}

// Kahn's algorithm with a min-heap so the order is deterministic.
std::optional<std::vector<Vertex>> acyclic_ordering(const Digraph& d)
{
    const int n = d.order();
    std::vector<int> in_degree(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : d.arcs()) {
        ++in_degree[static_cast<std::size_t>(a.head)];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 1; v <= n; ++v) {
        if (in_degree[static_cast<std::size_t>(v)] == 0) {
            ready.push(v);
        }
    }
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const Vertex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Vertex v = 1; v <= n; ++v) {
            if (d.has_arc(u, v) && --in_degree[static_cast<std::size_t>(v)] == 0) {
                ready.push(v);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        return std::nullopt;
    }
    return order;
}

bool is_acyclic(const Digraph& d)
{
    return acyclic_ordering(d).has_value();
}

Multigraph::Multigraph(int n)
    : n_(n)
{
    check_order(n);
}

VertexPair Multigraph::key(Vertex x, Vertex y) const
{
    check_vertex(n_, x);
    check_vertex(n_, y);
    if (x == y) {
        throw std::domain_error("multigraphs have no loops: pair {" + std::to_string(x) + "," + std::to_string(y) + "}");
    }
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

Multiplicity Multigraph::multiplicity(Vertex x, Vertex y) const
{
    const auto it = edges_.find(key(x, y));
    return it == edges_.end() ? 0 : it->second;
}

void Multigraph::set_multiplicity(Vertex x, Vertex y, Multiplicity m)
{
    const VertexPair k = key(x, y);
    if (m == 0) {
        edges_.erase(k);
    } else {
        edges_[k] = m;
    }
}

SimpleGraph::SimpleGraph(int n)
    : n_(n)
{
    check_order(n);
}

VertexPair SimpleGraph::key(Vertex x, Vertex y) const
{
    check_vertex(n_, x);
    check_vertex(n_, y);
    if (x == y) {
        throw std::domain_error("simple graphs have no loops");
    }
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

bool SimpleGraph::has_edge(Vertex x, Vertex y) const
{
    return edges_.contains(key(x, y));
}

void SimpleGraph::add_edge(Vertex x, Vertex y)
{
    edges_.insert(key(x, y));
}

SimpleGraph support(const Multigraph& m)
{
    SimpleGraph g(m.order());
    for (const auto& [pair, mult] : m.edges()) {
        g.add_edge(pair.first, pair.second);
    }
    return g;
}

bool is_clique(const Multigraph& m, const VertexSet& s)
{
    for (Vertex v : s) {
        check_vertex(m.order(), v);
    }
    for (auto x = s.begin(); x != s.end(); ++x) {
        for (auto y = std::next(x); y != s.end(); ++y) {
            if (m.multiplicity(*x, *y) == 0) {
                return false;
            }
        }
    }
    return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

} // namespace dcmkit
