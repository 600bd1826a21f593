#ifndef DCMKIT_RECOGNITION_HPP
#define DCMKIT_RECOGNITION_HPP

#include "dcmkit/certificate.hpp"
#include "dcmkit/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace dcmkit {

inline constexpr int kDefaultBound = 4;
inline constexpr int kHardBound = 5;

/// Raised when a request exceeds the configured vertex bound. Enumeration
/// never truncates silently.
class BoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Number of digraphs on [n] in the class. Throws BoundExceeded past the
/// bound.
std::uint64_t class_size(int n, DigraphClass c, int bound = kDefaultBound);

/// Visits every digraph on [n] in the class exactly once in a fixed order:
/// arc subsets by increasing bitmask for arbitrary, loopless and reflexive;
/// for acyclic, subsets of forward arcs relabelled under permutations in
/// lexicographic order, keeping the first occurrence of each arc set.
/// The visitor returns false to stop early.
void for_each_digraph(int n, DigraphClass c, const std::function<bool(const Digraph&)>& visit,
                      int bound = kDefaultBound);

std::vector<Digraph> enumerate_digraphs(int n, DigraphClass c, int bound = kDefaultBound);

struct RecognitionResult {
    bool recognized = false;
    std::optional<Digraph> witness_digraph;
    std::optional<CliqueFamily> witness_certificate;
    std::uint64_t digraphs_examined = 0;
};

/// Scans the class in enumeration order and stops at the first digraph whose
/// double competition multigraph equals `m`. The certificate is the
/// canonical family under the identity ordering, or under an acyclic
/// ordering for the acyclic class.
RecognitionResult recognize(const Multigraph& m, DigraphClass c, int bound = kDefaultBound);

struct CatalogRow {
    Multigraph multigraph;
    std::uint64_t witnesses = 0;
};

/// One full pass over a class, memoizing the first realizing digraph and the
/// realization count of every multigraph that occurs. Answers match the
/// scanning recognize() exactly, including digraphs_examined.
class RecognitionIndex {
public:
    using Progress = std::function<void(std::uint64_t done, std::uint64_t total)>;

    RecognitionIndex(int n, DigraphClass c, int bound = kDefaultBound, const Progress& progress = {});

    int order() const { return n_; }
    DigraphClass digraph_class() const { return class_; }
    std::uint64_t class_size() const { return total_; }

    RecognitionResult recognize(const Multigraph& m) const;

    /// Rows sorted by edge list, empty multigraph first.
    std::vector<CatalogRow> catalog() const;

private:
    struct Entry {
        std::uint64_t first_index;
        std::uint64_t arcs;
        std::uint64_t count;
    };

    int n_;
    DigraphClass class_;
    std::uint64_t total_ = 0;
    std::unordered_map<std::uint64_t, Entry> entries_;
};

std::vector<CatalogRow> catalog(int n, DigraphClass c, int bound = kDefaultBound);

} // namespace dcmkit

#endif // DCMKIT_RECOGNITION_HPP
