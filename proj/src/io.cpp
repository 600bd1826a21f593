#include "dcmkit/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dcmkit {

ParseError::ParseError(const std::string& what, int line, int column)
    : FormatError(what)
    , line_(line)
    , column_(column)
{
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1;
        std::size_t line_start = 0;
        for (std::size_t k = 0; k < end; ++k) {
            if (text[k] == '\n') {
                ++line;
                line_start = k + 1;
            }
        }
        const int column = static_cast<int>(end - line_start) + 1;
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column), line,
                         column);
    }
}

std::string dump(const Json& j)
{
    return j.dump() + "\n";
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) {
        throw FormatError("expected a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

long long integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) {
        throw FormatError(what + " must be an integer");
    }
    return j.get<long long>();
}

int vertex_count(const Json& j)
{
    const long long n = integer(field(j, "n"), "\"n\"");
    if (n < 1 || n > 1'000'000) {
        throw FormatError("\"n\" must be a positive integer, got " + std::to_string(n));
    }
    return static_cast<int>(n);
}

Vertex vertex(const Json& j, int n, const std::string& what)
{
    const long long v = integer(j, what);
    if (v < 1 || v > n) {
        throw FormatError(what + " = " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    return static_cast<Vertex>(v);
}

const Json& array(const Json& j, const std::string& what)
{
    if (!j.is_array()) {
        throw FormatError(what + " must be an array");
    }
    return j;
}

const Json& tuple(const Json& j, std::size_t size, const std::string& what)
{
    if (!j.is_array() || j.size() != size) {
        throw FormatError(what + " must be an array of " + std::to_string(size) + " integers");
    }
    return j;
}

VertexPair unordered(Vertex x, Vertex y, const std::string& what)
{
    if (x == y) {
        throw FormatError(what + " joins vertex " + std::to_string(x) + " to itself");
    }
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

std::string pair_text(const VertexPair& p)
{
    return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

Json set_json(const VertexSet& s)
{
    Json out = Json::array();
    for (Vertex v : s) {
        out.push_back(v);
    }
    return out;
}

std::string index_text(const std::vector<int>& indices)
{
    std::string out = "(";
    for (std::size_t k = 0; k < indices.size(); ++k) {
        out += (k ? "," : "") + std::to_string(indices[k]);
    }
    return out + ")";
}

} // namespace

Json to_json(const Digraph& d)
{
    Json arcs = Json::array();
    for (const Arc& a : d.arcs()) {
        arcs.push_back({a.tail, a.head});
    }
    Json j;
    j["n"] = d.order();
    j["arcs"] = std::move(arcs);
    return j;
}

Json to_json(const Multigraph& m)
{
    Json edges = Json::array();
    for (const auto& [pair, mult] : m.edges()) {
        edges.push_back({pair.first, pair.second, mult});
    }
    Json j;
    j["n"] = m.order();
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const SimpleGraph& g)
{
    Json edges = Json::array();
    for (const auto& [x, y] : g.edges()) {
        edges.push_back({x, y});
    }
    Json j;
    j["n"] = g.order();
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const CliqueFamily& f)
{
    Json cliques = Json::array();
    for (const auto& [index, members] : f.entries()) {
        Json entry;
        entry["i"] = index.first;
        entry["j"] = index.second;
        entry["members"] = set_json(members);
        cliques.push_back(std::move(entry));
    }
    Json j;
    j["n"] = f.order();
    j["ordering"] = f.ordering();
    j["cliques"] = std::move(cliques);
    return j;
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["class"] = class_name(r.digraph_class);
    j["accepted"] = r.accepted();
    j["partition_ok"] = r.partition_ok;
    j["cliques_ok"] = r.cliques_ok;
    j["cond_I"] = r.cond_I;
    if (r.cond_II) {
        j["cond_II"] = *r.cond_II;
    }
    if (r.cond_III) {
        j["cond_III"] = *r.cond_III;
    }
    if (r.cond_IV) {
        j["cond_IV"] = *r.cond_IV;
    }
    Json witnesses = Json::array();
    for (const Witness& w : r.witnesses) {
        Json entry;
        entry["condition"] = condition_name(w.condition);
        entry["indices"] = w.indices;
        Json sets = Json::array();
        for (const VertexSet& s : w.sets) {
            sets.push_back(set_json(s));
        }
        entry["sets"] = std::move(sets);
        entry["detail"] = w.detail;
        witnesses.push_back(std::move(entry));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json to_json(const RecognitionResult& r, int n, DigraphClass c)
{
    Json j;
    j["n"] = n;
    j["class"] = class_name(c);
    j["recognized"] = r.recognized;
    j["digraphs_examined"] = r.digraphs_examined;
    j["witness_digraph"] = r.witness_digraph ? to_json(*r.witness_digraph) : Json(nullptr);
    j["witness_certificate"] = r.witness_certificate ? to_json(*r.witness_certificate) : Json(nullptr);
    return j;
}

Json to_json(const std::vector<CatalogRow>& rows)
{
    Json out = Json::array();
    for (const CatalogRow& row : rows) {
        Json entry;
        entry["multigraph"] = to_json(row.multigraph);
        entry["witnesses"] = row.witnesses;
        out.push_back(std::move(entry));
    }
    return out;
}

Digraph digraph_from_json(const Json& j)
{
    const int n = vertex_count(j);
    Digraph d(n);
    for (const Json& a : array(field(j, "arcs"), "\"arcs\"")) {
        tuple(a, 2, "arc");
        const Vertex u = vertex(a[0], n, "arc tail");
        const Vertex v = vertex(a[1], n, "arc head");
        if (!d.add_arc(u, v)) {
            throw FormatError("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    return d;
}

Multigraph multigraph_from_json(const Json& j)
{
    const int n = vertex_count(j);
    Multigraph m(n);
    for (const Json& e : array(field(j, "edges"), "\"edges\"")) {
        tuple(e, 3, "edge");
        const VertexPair p = unordered(vertex(e[0], n, "edge end"), vertex(e[1], n, "edge end"), "edge");
        const long long mult = integer(e[2], "multiplicity");
        if (mult < 1 || mult > 0xffffffffLL) {
            throw FormatError("multiplicity of " + pair_text(p) + " must be a positive 32-bit integer");
        }
        if (m.multiplicity(p.first, p.second) != 0) {
            throw FormatError("duplicate edge " + pair_text(p));
        }
        m.set_multiplicity(p.first, p.second, static_cast<Multiplicity>(mult));
    }
    return m;
}

SimpleGraph simple_graph_from_json(const Json& j)
{
    const int n = vertex_count(j);
    SimpleGraph g(n);
    for (const Json& e : array(field(j, "edges"), "\"edges\"")) {
        tuple(e, 2, "edge");
        const VertexPair p = unordered(vertex(e[0], n, "edge end"), vertex(e[1], n, "edge end"), "edge");
        if (g.has_edge(p.first, p.second)) {
            throw FormatError("duplicate edge " + pair_text(p));
        }
        g.add_edge(p.first, p.second);
    }
    return g;
}

CliqueFamily certificate_from_json(const Json& j)
{
    const int n = vertex_count(j);
    Ordering ordering;
    for (const Json& v : array(field(j, "ordering"), "\"ordering\"")) {
        ordering.push_back(vertex(v, n, "ordering entry"));
    }
    try {
        check_ordering(n, ordering);
    } catch (const std::domain_error& e) {
        throw FormatError(e.what());
    }
    CliqueFamily f(n, std::move(ordering));
    std::set<std::pair<int, int>> seen;
    for (const Json& entry : array(field(j, "cliques"), "\"cliques\"")) {
        const int i = vertex(field(entry, "i"), n, "clique index i");
        const int k = vertex(field(entry, "j"), n, "clique index j");
        if (!seen.emplace(i, k).second) {
            throw FormatError("duplicate clique entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
        }
        VertexSet members;
        for (const Json& v : array(field(entry, "members"), "\"members\"")) {
            if (!members.insert(vertex(v, n, "clique member")).second) {
                throw FormatError("clique entry (" + std::to_string(i) + "," + std::to_string(k)
                                  + ") repeats a member");
            }
        }
        f.set(i, k, std::move(members));
    }
    return f;
}

std::string canonical_key(const Multigraph& m)
{
    return to_json(m)["edges"].dump();
}

std::string to_dot(const Digraph& d)
{
    std::ostringstream os;
    os << "digraph D {\n";
    for (Vertex v = 1; v <= d.order(); ++v) {
        os << "  " << v << ";\n";
    }
    for (const Arc& a : d.arcs()) {
        os << "  " << a.tail << " -> " << a.head << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Multigraph& m)
{
    std::ostringstream os;
    os << "graph M {\n";
    for (Vertex v = 1; v <= m.order(); ++v) {
        os << "  " << v << ";\n";
    }
    for (const auto& [pair, mult] : m.edges()) {
        os << "  " << pair.first << " -- " << pair.second << " [label=\"" << mult << "\"";
        if (mult > 1) {
            os << ", style=bold, penwidth=2";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const SimpleGraph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 1; v <= g.order(); ++v) {
        os << "  " << v << ";\n";
    }
    for (const auto& [x, y] : g.edges()) {
        os << "  " << x << " -- " << y << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_text(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string to_text(const Digraph& d)
{
    std::ostringstream os;
    os << "digraph n=" << d.order() << " arcs=" << d.arc_count() << "\n";
    for (const Arc& a : d.arcs()) {
        os << a.tail << " -> " << a.head << "\n";
    }
    return os.str();
}

std::string to_text(const Multigraph& m)
{
    std::ostringstream os;
    os << "multigraph n=" << m.order() << " pairs=" << m.edges().size() << "\n";
    for (const auto& [pair, mult] : m.edges()) {
        os << pair.first << " -- " << pair.second << " x" << mult << "\n";
    }
    return os.str();
}

std::string to_text(const SimpleGraph& g)
{
    std::ostringstream os;
    os << "graph n=" << g.order() << " edges=" << g.edges().size() << "\n";
    for (const auto& [x, y] : g.edges()) {
        os << x << " -- " << y << "\n";
    }
    return os.str();
}

std::string to_text(const CliqueFamily& f)
{
    std::ostringstream os;
    os << "certificate n=" << f.order() << " ordering=(";
    for (std::size_t p = 0; p < f.ordering().size(); ++p) {
        os << (p ? "," : "") << f.ordering()[p];
    }
    os << ") entries=" << f.entries().size() << "\n";
    for (const auto& [index, members] : f.entries()) {
        os << "S_" << index.first << "," << index.second << " = " << to_text(members) << "\n";
    }
    return os.str();
}

std::string to_text(const VerificationReport& r)
{
    auto verdict = [](bool ok) { return ok ? "ok" : "FAILED"; };
    std::ostringstream os;
    os << "class: " << class_name(r.digraph_class) << "\n";
    os << "partition: " << verdict(r.partition_ok) << "\n";
    os << "cliques: " << verdict(r.cliques_ok) << "\n";
    os << "condition I: " << verdict(r.cond_I) << "\n";
    if (r.cond_II) {
        os << "condition II: " << verdict(*r.cond_II) << "\n";
    }
    if (r.cond_III) {
        os << "condition III: " << verdict(*r.cond_III) << "\n";
    }
    if (r.cond_IV) {
        os << "condition IV: " << verdict(*r.cond_IV) << "\n";
    }
    for (const Witness& w : r.witnesses) {
        os << "  [" << condition_name(w.condition) << "] " << index_text(w.indices);
        for (const VertexSet& s : w.sets) {
            os << " " << to_text(s);
        }
        os << ": " << w.detail << "\n";
    }
    os << "verdict: " << (r.accepted() ? "accepted" : "rejected") << "\n";
    return os.str();
}

std::string to_text(const RecognitionResult& r, int n, DigraphClass c)
{
    std::ostringstream os;
    if (r.recognized) {
        os << "DCM of class " << class_name(c) << " at n=" << n << "\n";
    } else {
        os << "not a DCM of class " << class_name(c) << " at n=" << n << "\n";
    }
    os << "digraphs examined: " << r.digraphs_examined << "\n";
    if (r.witness_digraph) {
        os << to_text(*r.witness_digraph);
    }
    if (r.witness_certificate) {
        os << to_text(*r.witness_certificate);
    }
    return os.str();
}

std::string to_text(const std::vector<CatalogRow>& rows)
{
    std::ostringstream os;
    os << "witnesses\tedges\n";
    for (const CatalogRow& row : rows) {
        os << row.witnesses << "\t" << canonical_key(row.multigraph) << "\n";
    }
    return os.str();
}

} // namespace dcmkit
