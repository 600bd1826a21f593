#ifndef DCMKIT_IO_HPP
#define DCMKIT_IO_HPP

#include "dcmkit/certificate.hpp"
#include "dcmkit/core.hpp"
#include "dcmkit/recognition.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcmkit {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text that is not JSON at all; carries the 1-based position.
class ParseError : public FormatError {
public:
    ParseError(const std::string& what, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Json parse_json(std::string_view text);

/// Canonical serialization: compact, fixed key order, trailing newline.
std::string dump(const Json& j);

// {"n": n, "arcs": [[u,v], ...]}, arcs sorted.
Json to_json(const Digraph& d);
// {"n": n, "edges": [[x,y,m], ...]}, x < y, sorted.
Json to_json(const Multigraph& m);
// {"n": n, "edges": [[x,y], ...]}, x < y, sorted.
Json to_json(const SimpleGraph& g);
// {"n": n, "ordering": [...], "cliques": [{"i":..,"j":..,"members":[...]}, ...]}
// with empty entries omitted.
Json to_json(const CliqueFamily& f);
Json to_json(const VerificationReport& r);
Json to_json(const RecognitionResult& r, int n, DigraphClass c);
Json to_json(const std::vector<CatalogRow>& rows);

Digraph digraph_from_json(const Json& j);
Multigraph multigraph_from_json(const Json& j);
SimpleGraph simple_graph_from_json(const Json& j);
CliqueFamily certificate_from_json(const Json& j);

/// Sorted edge list of a multigraph as compact JSON.
std::string canonical_key(const Multigraph& m);

std::string to_dot(const Digraph& d);
/// Each pair with positive multiplicity becomes one edge labelled with its
/// multiplicity; parallel edges (multiplicity > 1) are drawn bold.
std::string to_dot(const Multigraph& m);
std::string to_dot(const SimpleGraph& g);

std::string to_text(const VertexSet& s);
std::string to_text(const Digraph& d);
std::string to_text(const Multigraph& m);
std::string to_text(const SimpleGraph& g);
std::string to_text(const CliqueFamily& f);
std::string to_text(const VerificationReport& r);
std::string to_text(const RecognitionResult& r, int n, DigraphClass c);
std::string to_text(const std::vector<CatalogRow>& rows);

} // namespace dcmkit

#endif // DCMKIT_IO_HPP
