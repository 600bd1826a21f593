#include "dcmkit/recognition.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace dcmkit {

namespace {

// Digraphs on at most kHardBound vertices are packed into a 64-bit arc mask,
// bit (u-1)*n + (v-1) standing for the arc (u, v).
std::uint64_t arc_bit(int n, Vertex u, Vertex v)
{
    return std::uint64_t{1} << ((u - 1) * n + (v - 1));
}

Digraph unpack(int n, std::uint64_t arcs)
{
    Digraph d(n);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (arcs & arc_bit(n, u, v)) {
                d.add_arc(u, v);
            }
        }
    }
    return d;
}

void check_bound(int n, int bound)
{
    if (bound < 1 || bound > kHardBound) {
        throw BoundExceeded("vertex bound " + std::to_string(bound) + " outside [1, " + std::to_string(kHardBound)
                            + "]");
    }
    if (n < 1) {
        throw std::domain_error("vertex count must be positive");
    }
    if (n > bound) {
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the recognition bound " + std::to_string(bound));
    }
}

// Spreads the low bits of `subset` onto the given bit positions.
std::uint64_t scatter(std::uint64_t subset, const std::vector<std::uint64_t>& bits)
{
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
        if (subset >> b & 1U) {
            out |= bits[b];
        }
    }
    return out;
}

std::vector<std::uint64_t> acyclic_masks(int n)
{
    std::vector<std::pair<Vertex, Vertex>> forward;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            forward.emplace_back(u, v);
        }
    }
    std::vector<Vertex> perm = identity_ordering(n);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    const std::uint64_t subsets = std::uint64_t{1} << forward.size();
    do {
        std::vector<std::uint64_t> bits;
        bits.reserve(forward.size());
        for (const auto& [u, v] : forward) {
            bits.push_back(arc_bit(n, perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]));
        }
        for (std::uint64_t s = 0; s < subsets; ++s) {
            const std::uint64_t mask = scatter(s, bits);
            if (seen.insert(mask).second) {
                out.push_back(mask);
            }
        }
    } while (std::ranges::next_permutation(perm).found);
    return out;
}

// Calls visit(index, mask) for each class member in enumeration order until
// visit returns false.
template <class Visit>
void for_each_mask(int n, DigraphClass c, Visit&& visit)
{
    if (c == DigraphClass::Acyclic) {
        const std::vector<std::uint64_t> masks = acyclic_masks(n);
        for (std::uint64_t i = 0; i < masks.size(); ++i) {
            if (!visit(i, masks[i])) {
                return;
            }
        }
        return;
    }
    std::vector<std::uint64_t> bits;
    std::uint64_t loops = 0;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v && c != DigraphClass::Arbitrary) {
                loops |= arc_bit(n, u, v);
            } else {
                bits.push_back(arc_bit(n, u, v));
            }
        }
    }
    const std::uint64_t base = c == DigraphClass::Reflexive ? loops : 0;
    const std::uint64_t subsets = std::uint64_t{1} << bits.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        if (!visit(s, base | scatter(s, bits))) {
            return;
        }
    }
}

// Multiplicities packed five bits per pair, pairs in lexicographic order.
// With n <= 5 every multiplicity is at most 25.
constexpr int kBitsPerPair = 5;
constexpr std::uint64_t kPairMask = (1U << kBitsPerPair) - 1;

std::uint64_t packed_dcm(int n, std::uint64_t arcs)
{
    std::uint32_t out[kHardBound] = {};
    std::uint32_t in[kHardBound] = {};
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (arcs >> (u * n + v) & 1U) {
                out[u] |= 1U << v;
                in[v] |= 1U << u;
            }
        }
    }
    std::uint64_t key = 0;
    int shift = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const auto m = static_cast<std::uint64_t>(std::popcount(out[x] & out[y]) * std::popcount(in[x] & in[y]));
            key |= m << shift;
            shift += kBitsPerPair;
        }
    }
    return key;
}

std::optional<std::uint64_t> packed_multigraph(const Multigraph& m)
{
    std::uint64_t key = 0;
    int shift = 0;
    for (Vertex x = 1; x <= m.order(); ++x) {
        for (Vertex y = x + 1; y <= m.order(); ++y) {
            const Multiplicity mult = m.multiplicity(x, y);
            if (mult > kPairMask) {
                return std::nullopt;
            }
            key |= static_cast<std::uint64_t>(mult) << shift;
            shift += kBitsPerPair;
        }
    }
    return key;
}

Multigraph unpack_multigraph(int n, std::uint64_t key)
{
    Multigraph m(n);
    int shift = 0;
    for (Vertex x = 1; x <= n; ++x) {
        for (Vertex y = x + 1; y <= n; ++y) {
            m.set_multiplicity(x, y, static_cast<Multiplicity>(key >> shift & kPairMask));
            shift += kBitsPerPair;
        }
    }
    return m;
}

RecognitionResult success(int n, DigraphClass c, std::uint64_t arcs, std::uint64_t index)
{
    RecognitionResult r;
    r.recognized = true;
    r.digraphs_examined = index + 1;
    Digraph d = unpack(n, arcs);
    const Ordering ord = c == DigraphClass::Acyclic ? *acyclic_ordering(d) : identity_ordering(n);
    r.witness_certificate = canonical_family(d, ord);
    r.witness_digraph = std::move(d);
    return r;
}

} // namespace

std::uint64_t class_size(int n, DigraphClass c, int bound)
{
    check_bound(n, bound);
    const auto nn = static_cast<unsigned>(n * n);
    switch (c) {
    case DigraphClass::Arbitrary: return std::uint64_t{1} << nn;
    case DigraphClass::Loopless:
    case DigraphClass::Reflexive: return std::uint64_t{1} << (nn - static_cast<unsigned>(n));
    case DigraphClass::Acyclic: return acyclic_masks(n).size();
    }
    return 0;
}

void for_each_digraph(int n, DigraphClass c, const std::function<bool(const Digraph&)>& visit, int bound)
{
    check_bound(n, bound);
    for_each_mask(n, c, [&](std::uint64_t, std::uint64_t arcs) { return visit(unpack(n, arcs)); });
}

std::vector<Digraph> enumerate_digraphs(int n, DigraphClass c, int bound)
{
    std::vector<Digraph> out;
    for_each_digraph(
        n, c,
        [&out](const Digraph& d) {
            out.push_back(d);
            return true;
        },
        bound);
    return out;
}

RecognitionResult recognize(const Multigraph& m, DigraphClass c, int bound)
{
    const int n = m.order();
    check_bound(n, bound);
    const std::optional<std::uint64_t> target = packed_multigraph(m);
    RecognitionResult result;
    for_each_mask(n, c, [&](std::uint64_t index, std::uint64_t arcs) {
        ++result.digraphs_examined;
        if (target && packed_dcm(n, arcs) == *target) {
            result = success(n, c, arcs, index);
            return false;
        }
        return true;
    });
    return result;
}

RecognitionIndex::RecognitionIndex(int n, DigraphClass c, int bound, const Progress& progress)
    : n_(n)
    , class_(c)
{
    check_bound(n, bound);
    const std::uint64_t expected = dcmkit::class_size(n, c, bound);
    const std::uint64_t step = std::max<std::uint64_t>(expected / 100, 1);
    for_each_mask(n, c, [&](std::uint64_t index, std::uint64_t arcs) {
        auto [it, fresh] = entries_.try_emplace(packed_dcm(n, arcs), Entry{index, arcs, 0});
        ++it->second.count;
        ++total_;
        if (progress && total_ % step == 0) {
            progress(total_, expected);
        }
        return true;
    });
}

RecognitionResult RecognitionIndex::recognize(const Multigraph& m) const
{
    if (m.order() != n_) {
        throw std::domain_error("index built for n = " + std::to_string(n_) + ", multigraph has "
                                + std::to_string(m.order()) + " vertices");
    }
    const std::optional<std::uint64_t> target = packed_multigraph(m);
    if (target) {
        if (const auto it = entries_.find(*target); it != entries_.end()) {
            return success(n_, class_, it->second.arcs, it->second.first_index);
        }
    }
    RecognitionResult miss;
    miss.digraphs_examined = total_;
    return miss;
}

std::vector<CatalogRow> RecognitionIndex::catalog() const
{
    std::vector<CatalogRow> rows;
    rows.reserve(entries_.size());
    for (const auto& [key, entry] : entries_) {
        rows.push_back({unpack_multigraph(n_, key), entry.count});
    }
    std::ranges::sort(rows, [](const CatalogRow& a, const CatalogRow& b) {
        return a.multigraph.edges() < b.multigraph.edges();
    });
    return rows;
}

std::vector<CatalogRow> catalog(int n, DigraphClass c, int bound)
{
    return RecognitionIndex(n, c, bound).catalog();
}

} // namespace dcmkit
