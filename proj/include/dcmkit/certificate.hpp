#ifndef DCMKIT_CERTIFICATE_HPP
#define DCMKIT_CERTIFICATE_HPP

#include "dcmkit/core.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcmkit {

/// A vertex ordering (v_1, ..., v_n): ordering[p - 1] is the vertex at
/// position p.
using Ordering = std::vector<Vertex>;

Ordering identity_ordering(int n);

/// Throws std::domain_error unless `ordering` is a permutation of [n].
void check_ordering(int n, const Ordering& ordering);

/// True iff every arc runs from an earlier to a strictly later position.
bool is_acyclic_ordering(const Digraph& d, const Ordering& ordering);

/// Double-indexed family {S_ij : i, j in [n]} together with the ordering
/// that gives the indices meaning. Indices i, j are positions in the
/// ordering; members are vertices. Only nonempty entries are stored, but
/// every one of the n^2 index pairs is a member of the family.
class CliqueFamily {
public:
    using Index = std::pair<int, int>;
    using EntryMap = std::map<Index, VertexSet>;

    CliqueFamily(int n, Ordering ordering);
    explicit CliqueFamily(int n);

    int order() const { return n_; }
    const Ordering& ordering() const { return ordering_; }

    Vertex vertex_at(int position) const;
    int position_of(Vertex v) const;

    /// S_ij; the empty set when no entry is stored.
    const VertexSet& at(int i, int j) const;
    /// Replaces S_ij. Storing the empty set erases the entry.
    void set(int i, int j, VertexSet members);

    const EntryMap& entries() const { return entries_; }

    bool operator==(const CliqueFamily&) const = default;

private:
    void check_position(int p) const;

    int n_;
    Ordering ordering_;
    std::vector<int> position_;
    EntryMap entries_;
};

/// S_ij = { v_k : (v_i, v_k), (v_k, v_j) in A(D) } for every i, j.
CliqueFamily canonical_family(const Digraph& d, const Ordering& ordering);

/// Sets derived from a family; vector slot p - 1 holds the set for
/// position p.
struct DerivedSets {
    std::vector<VertexSet> a;       // A_i = S_{i*} ∪ T+_i
    std::vector<VertexSet> b;       // B_j = S_{*j} ∪ T-_j
    std::vector<VertexSet> row;     // S_{i*}
    std::vector<VertexSet> col;     // S_{*j}
    std::vector<VertexSet> t_plus;  // { v_b : v_i in S_ab }
    std::vector<VertexSet> t_minus; // { v_a : v_j in S_ab }
};

DerivedSets derived_sets(const CliqueFamily& f);

/// Number of index pairs (i, j) whose S_ij contains both ends of each pair.
Multigraph coverage_multigraph(const CliqueFamily& f);

enum class Condition { Clique, Partition, I, II, III, IV };

std::string_view condition_name(Condition c);

struct Witness {
    Condition condition;
    std::vector<int> indices;
    std::vector<VertexSet> sets;
    std::string detail;

    bool operator==(const Witness&) const = default;
};

/// Witnesses are reported for at most this many violations per condition,
/// in lexicographic index order.
inline constexpr std::size_t kMaxWitnessesPerCondition = 16;

struct CheckResult {
    bool ok = true;
    std::vector<Witness> witnesses;
};

struct PartitionCheck {
    bool cliques_ok = true;
    bool coverage_ok = true;
    std::vector<Witness> witnesses;

    bool ok() const { return cliques_ok && coverage_ok; }
};

/// Every S_ij must be a clique of M and every pair {x,y} must lie in exactly
/// m({x,y}) of the n^2 sets. Throws std::domain_error on a size mismatch.
PartitionCheck is_edge_clique_partition(const Multigraph& m, const CliqueFamily& f);

/// |A_i ∩ B_j| >= 2 implies A_i ∩ B_j = S_ij, over all n^2 index pairs.
CheckResult check_condition_I(const CliqueFamily& f);
CheckResult check_condition_I(const CliqueFamily& f, const DerivedSets& sets);
/// v_i ∉ S_ij and v_j ∉ S_ij.
CheckResult check_condition_II(const CliqueFamily& f);
/// v_i ∈ S_{i*} ∪ S_{*i}.
CheckResult check_condition_III(const CliqueFamily& f);
CheckResult check_condition_III(const CliqueFamily& f, const DerivedSets& sets);
/// v_k ∈ S_ij implies i < k < j, comparing positions.
CheckResult check_condition_IV(const CliqueFamily& f);

enum class DigraphClass { Arbitrary, Loopless, Reflexive, Acyclic };

inline constexpr DigraphClass kAllClasses[] = {
    DigraphClass::Arbitrary, DigraphClass::Loopless, DigraphClass::Reflexive, DigraphClass::Acyclic};

std::string_view class_name(DigraphClass c);
std::optional<DigraphClass> parse_class(std::string_view name);

/// Class membership of a digraph; acyclic means no directed cycle.
bool is_in_class(const Digraph& d, DigraphClass c);

struct VerificationReport {
    DigraphClass digraph_class = DigraphClass::Arbitrary;
    bool partition_ok = false;
    bool cliques_ok = false;
    bool cond_I = false;
    std::optional<bool> cond_II;
    std::optional<bool> cond_III;
    std::optional<bool> cond_IV;
    std::vector<Witness> witnesses;

    bool accepted() const;
};

/// Evaluates the partition, clique and (I) checks, plus the one extra
/// condition tied to the class: (II) loopless, (III) reflexive, (IV) acyclic.
VerificationReport verify_certificate(const Multigraph& m, const CliqueFamily& f, DigraphClass c);

/// A(D) = union over i, j and v_k in S_ij of {(v_i, v_k), (v_k, v_j)}.
Digraph reconstruct_digraph(const CliqueFamily& f);

} // namespace dcmkit

#endif // DCMKIT_CERTIFICATE_HPP
