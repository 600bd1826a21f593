#include "dcmkit/certificate.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace dcmkit {

namespace {

const VertexSet kEmpty;

void add_witness(CheckResult& result, std::size_t& count, Witness w)
{
    result.ok = false;
    if (count++ < kMaxWitnessesPerCondition) {
        result.witnesses.push_back(std::move(w));
    }
}

std::string pair_text(Vertex x, Vertex y)
{
    return "{" + std::to_string(x) + "," + std::to_string(y) + "}";
}

// First non-adjacent pair of a would-be clique.
std::optional<VertexPair> missing_edge(const Multigraph& m, const VertexSet& s)
{
    for (auto x = s.begin(); x != s.end(); ++x) {
        for (auto y = std::next(x); y != s.end(); ++y) {
            if (m.multiplicity(*x, *y) == 0) {
                return VertexPair{*x, *y};
            }
        }
    }
    return std::nullopt;
}

} // namespace

Ordering identity_ordering(int n)
{
    Ordering ord(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
        ord[static_cast<std::size_t>(p - 1)] = p;
    }
    return ord;
}

void check_ordering(int n, const Ordering& ordering)
{
    if (static_cast<int>(ordering.size()) != n) {
        throw std::domain_error("ordering has " + std::to_string(ordering.size()) + " entries, expected "
                                + std::to_string(n));
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : ordering) {
        check_vertex(n, v);
        if (seen[static_cast<std::size_t>(v)]++) {
            throw std::domain_error("ordering repeats vertex " + std::to_string(v));
        }
    }
}

bool is_acyclic_ordering(const Digraph& d, const Ordering& ordering)
{
    check_ordering(d.order(), ordering);
    std::vector<int> position(static_cast<std::size_t>(d.order()) + 1);
    for (std::size_t p = 0; p < ordering.size(); ++p) {
        position[static_cast<std::size_t>(ordering[p])] = static_cast<int>(p);
    }
    return std::ranges::all_of(d.arcs(), [&](const Arc& a) {
        return position[static_cast<std::size_t>(a.tail)] < position[static_cast<std::size_t>(a.head)];
    });
}

CliqueFamily::CliqueFamily(int n, Ordering ordering)
    : n_(n)
    , ordering_(std::move(ordering))
{
    if (n < 1) {
        throw std::domain_error("vertex count must be positive");
    }
    check_ordering(n_, ordering_);
    position_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int p = 1; p <= n_; ++p) {
        position_[static_cast<std::size_t>(ordering_[static_cast<std::size_t>(p - 1)])] = p;
    }
}

CliqueFamily::CliqueFamily(int n)
    : CliqueFamily(n, identity_ordering(n))
{
}

void CliqueFamily::check_position(int p) const
{
    if (p < 1 || p > n_) {
        throw std::domain_error("index " + std::to_string(p) + " outside [1, " + std::to_string(n_) + "]");
    }
}

Vertex CliqueFamily::vertex_at(int position) const
{
    check_position(position);
    return ordering_[static_cast<std::size_t>(position - 1)];
}

int CliqueFamily::position_of(Vertex v) const
{
    check_vertex(n_, v);
    return position_[static_cast<std::size_t>(v)];
}

const VertexSet& CliqueFamily::at(int i, int j) const
{
    check_position(i);
    check_position(j);
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? kEmpty : it->second;
}

void CliqueFamily::set(int i, int j, VertexSet members)
{
    check_position(i);
    check_position(j);
    for (Vertex v : members) {
        check_vertex(n_, v);
    }
    if (members.empty()) {
        entries_.erase({i, j});
    } else {
        entries_[{i, j}] = std::move(members);
    }
}

CliqueFamily canonical_family(const Digraph& d, const Ordering& ordering)
{
    CliqueFamily f(d.order(), ordering);
    const int n = d.order();
    for (int i = 1; i <= n; ++i) {
        const Vertex vi = f.vertex_at(i);
        for (int j = 1; j <= n; ++j) {
            const Vertex vj = f.vertex_at(j);
            VertexSet s;
            for (Vertex vk = 1; vk <= n; ++vk) {
                if (d.has_arc(vi, vk) && d.has_arc(vk, vj)) {
                    s.insert(s.end(), vk);
                }
            }
            f.set(i, j, std::move(s));
        }
    }
    return f;
}

DerivedSets derived_sets(const CliqueFamily& f)
{
    const auto n = static_cast<std::size_t>(f.order());
    DerivedSets out{std::vector<VertexSet>(n), std::vector<VertexSet>(n), std::vector<VertexSet>(n),
                    std::vector<VertexSet>(n), std::vector<VertexSet>(n), std::vector<VertexSet>(n)};
    for (const auto& [index, members] : f.entries()) {
        const auto [a, b] = index;
        out.row[static_cast<std::size_t>(a - 1)].insert(members.begin(), members.end());
        out.col[static_cast<std::size_t>(b - 1)].insert(members.begin(), members.end());
        for (Vertex v : members) {
            const auto p = static_cast<std::size_t>(f.position_of(v) - 1);
            out.t_plus[p].insert(f.vertex_at(b));
            out.t_minus[p].insert(f.vertex_at(a));
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        out.a[p] = set_union(out.row[p], out.t_plus[p]);
        out.b[p] = set_union(out.col[p], out.t_minus[p]);
    }
    return out;
}

Multigraph coverage_multigraph(const CliqueFamily& f)
{
    Multigraph m(f.order());
    for (const auto& [index, members] : f.entries()) {
        for (auto x = members.begin(); x != members.end(); ++x) {
            for (auto y = std::next(x); y != members.end(); ++y) {
                m.set_multiplicity(*x, *y, m.multiplicity(*x, *y) + 1);
            }
        }
    }
    return m;
}

std::string_view condition_name(Condition c)
{
    switch (c) {
    case Condition::Clique: return "clique";
    case Condition::Partition: return "partition";
    case Condition::I: return "I";
    case Condition::II: return "II";
    case Condition::III: return "III";
    case Condition::IV: return "IV";
    }
    return "?";
}

PartitionCheck is_edge_clique_partition(const Multigraph& m, const CliqueFamily& f)
{
    if (m.order() != f.order()) {
        throw std::domain_error("multigraph has " + std::to_string(m.order()) + " vertices, certificate has "
                                + std::to_string(f.order()));
    }
    PartitionCheck out;

    CheckResult cliques;
    std::size_t clique_count = 0;
    for (const auto& [index, members] : f.entries()) {
        if (const auto gap = missing_edge(m, members)) {
            add_witness(cliques, clique_count,
                        {Condition::Clique, {index.first, index.second}, {members},
                         "vertices " + pair_text(gap->first, gap->second) + " are not adjacent"});
        }
    }

    CheckResult coverage;
    std::size_t coverage_count = 0;
    const Multigraph covered = coverage_multigraph(f);
    for (Vertex x = 1; x <= m.order(); ++x) {
        for (Vertex y = x + 1; y <= m.order(); ++y) {
            const Multiplicity want = m.multiplicity(x, y);
            const Multiplicity got = covered.multiplicity(x, y);
            if (want != got) {
                add_witness(coverage, coverage_count,
                            {Condition::Partition, {x, y}, {},
                             "pair " + pair_text(x, y) + " covered " + std::to_string(got)
                                 + " times, multiplicity " + std::to_string(want)});
            }
        }
    }

    out.cliques_ok = cliques.ok;
    out.coverage_ok = coverage.ok;
    out.witnesses = std::move(cliques.witnesses);
    out.witnesses.insert(out.witnesses.end(), std::make_move_iterator(coverage.witnesses.begin()),
                         std::make_move_iterator(coverage.witnesses.end()));
    return out;
}

CheckResult check_condition_I(const CliqueFamily& f, const DerivedSets& sets)
{
    CheckResult out;
    std::size_t count = 0;
    for (int i = 1; i <= f.order(); ++i) {
        for (int j = 1; j <= f.order(); ++j) {
            VertexSet common = set_intersection(sets.a[static_cast<std::size_t>(i - 1)],
                                                sets.b[static_cast<std::size_t>(j - 1)]);
            const VertexSet& s = f.at(i, j);
            if (common.size() >= 2 && common != s) {
                add_witness(out, count, {Condition::I, {i, j}, {std::move(common), s}, "A_i ∩ B_j differs from S_ij"});
            }
        }
    }
    return out;
}

CheckResult check_condition_I(const CliqueFamily& f)
{
    return check_condition_I(f, derived_sets(f));
}

CheckResult check_condition_II(const CliqueFamily& f)
{
    CheckResult out;
    std::size_t count = 0;
    for (const auto& [index, members] : f.entries()) {
        const auto [i, j] = index;
        const Vertex vi = f.vertex_at(i);
        const Vertex vj = f.vertex_at(j);
        if (members.contains(vi) || members.contains(vj)) {
            const Vertex hit = members.contains(vi) ? vi : vj;
            add_witness(out, count,
                        {Condition::II, {i, j}, {members}, "S_ij contains its own endpoint " + std::to_string(hit)});
        }
    }
    return out;
}

CheckResult check_condition_III(const CliqueFamily& f, const DerivedSets& sets)
{
    CheckResult out;
    std::size_t count = 0;
    for (int i = 1; i <= f.order(); ++i) {
        const auto p = static_cast<std::size_t>(i - 1);
        VertexSet around = set_union(sets.row[p], sets.col[p]);
        if (!around.contains(f.vertex_at(i))) {
            add_witness(out, count,
                        {Condition::III, {i}, {std::move(around)},
                         "vertex " + std::to_string(f.vertex_at(i)) + " missing from S_{i*} ∪ S_{*i}"});
        }
    }
    return out;
}

CheckResult check_condition_III(const CliqueFamily& f)
{
    return check_condition_III(f, derived_sets(f));
}

CheckResult check_condition_IV(const CliqueFamily& f)
{
    CheckResult out;
    std::size_t count = 0;
    for (const auto& [index, members] : f.entries()) {
        const auto [i, j] = index;
        std::vector<int> positions;
        for (Vertex v : members) {
            positions.push_back(f.position_of(v));
        }
        std::ranges::sort(positions);
        for (int k : positions) {
            if (!(i < k && k < j)) {
                add_witness(out, count,
                            {Condition::IV, {i, j, k}, {members},
                             "vertex " + std::to_string(f.vertex_at(k)) + " at position " + std::to_string(k)
                                 + " not strictly between " + std::to_string(i) + " and " + std::to_string(j)});
            }
        }
    }
    return out;
}

std::string_view class_name(DigraphClass c)
{
    switch (c) {
    case DigraphClass::Arbitrary: return "arbitrary";
    case DigraphClass::Loopless: return "loopless";
    case DigraphClass::Reflexive: return "reflexive";
    case DigraphClass::Acyclic: return "acyclic";
    }
    return "?";
}

std::optional<DigraphClass> parse_class(std::string_view name)
{
    for (DigraphClass c : kAllClasses) {
        if (class_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

bool is_in_class(const Digraph& d, DigraphClass c)
{
    switch (c) {
    case DigraphClass::Arbitrary: return true;
    case DigraphClass::Loopless: return is_loopless(d);
    case DigraphClass::Reflexive: return is_reflexive(d);
    case DigraphClass::Acyclic: return is_acyclic(d);
    }
    return false;
}

bool VerificationReport::accepted() const
{
    return partition_ok && cliques_ok && cond_I && cond_II.value_or(true) && cond_III.value_or(true)
        && cond_IV.value_or(true);
}

VerificationReport verify_certificate(const Multigraph& m, const CliqueFamily& f, DigraphClass c)
{
    VerificationReport report;
    report.digraph_class = c;

    PartitionCheck partition = is_edge_clique_partition(m, f);
    report.partition_ok = partition.coverage_ok;
    report.cliques_ok = partition.cliques_ok;
    report.witnesses = std::move(partition.witnesses);

    const DerivedSets sets = derived_sets(f);
    auto absorb = [&report](CheckResult r) {
        report.witnesses.insert(report.witnesses.end(), std::make_move_iterator(r.witnesses.begin()),
                                std::make_move_iterator(r.witnesses.end()));
        return r.ok;
    };
    report.cond_I = absorb(check_condition_I(f, sets));
    switch (c) {
    case DigraphClass::Arbitrary: break;
    case DigraphClass::Loopless: report.cond_II = absorb(check_condition_II(f)); break;
    case DigraphClass::Reflexive: report.cond_III = absorb(check_condition_III(f, sets)); break;
    case DigraphClass::Acyclic: report.cond_IV = absorb(check_condition_IV(f)); break;
    }
    return report;
}

Digraph reconstruct_digraph(const CliqueFamily& f)
{
    Digraph d(f.order());
    for (const auto& [index, members] : f.entries()) {
        const Vertex vi = f.vertex_at(index.first);
        const Vertex vj = f.vertex_at(index.second);
        for (Vertex vk : members) {
            d.add_arc(vi, vk);
            d.add_arc(vk, vj);
        }
    }
    return d;
}

} // namespace dcmkit
