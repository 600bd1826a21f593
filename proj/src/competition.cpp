#include "dcmkit/competition.hpp"

namespace dcmkit {

namespace {

Multiplicity common_out(const Digraph& d, Vertex x, Vertex y)
{
    Multiplicity count = 0;
    for (Vertex k = 1; k <= d.order(); ++k) {
        if (d.has_arc(x, k) && d.has_arc(y, k)) {
            ++count;
        }
    }
    return count;
}

Multiplicity common_in(const Digraph& d, Vertex x, Vertex y)
{
    Multiplicity count = 0;
    for (Vertex k = 1; k <= d.order(); ++k) {
        if (d.has_arc(k, x) && d.has_arc(k, y)) {
            ++count;
        }
    }
    return count;
}

} // namespace

Multigraph double_competition_multigraph(const Digraph& d)
{
    Multigraph m(d.order());
    for (Vertex x = 1; x <= d.order(); ++x) {
        for (Vertex y = x + 1; y <= d.order(); ++y) {
            m.set_multiplicity(x, y, common_out(d, x, y) * common_in(d, x, y));
        }
    }
    return m;
}

Multigraph competition_multigraph(const Digraph& d)
{
    Multigraph m(d.order());
    for (Vertex x = 1; x <= d.order(); ++x) {
        for (Vertex y = x + 1; y <= d.order(); ++y) {
            m.set_multiplicity(x, y, common_out(d, x, y));
        }
    }
    return m;
}

SimpleGraph competition_graph(const Digraph& d)
{
    SimpleGraph g(d.order());
    for (Vertex x = 1; x <= d.order(); ++x) {
        for (Vertex y = x + 1; y <= d.order(); ++y) {
            if (common_out(d, x, y) > 0) {
                g.add_edge(x, y);
            }
        }
    }
    return g;
}

SimpleGraph double_competition_graph(const Digraph& d)
{
    SimpleGraph g(d.order());
    for (Vertex x = 1; x <= d.order(); ++x) {
        for (Vertex y = x + 1; y <= d.order(); ++y) {
            if (common_out(d, x, y) > 0 && common_in(d, x, y) > 0) {
                g.add_edge(x, y);
            }
        }
    }
    return g;
}

} // namespace dcmkit
