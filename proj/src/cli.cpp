#include "dcmkit/cli.hpp"

#include "dcmkit/certificate.hpp"
#include "dcmkit/competition.hpp"
#include "dcmkit/io.hpp"
#include "dcmkit/recognition.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dcmkit::cli {

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::string out;
    std::string multigraph_out;
    std::string digraph_out;
    std::string certificate_out;
    std::string variant = "dcm";
    std::string format;
    std::string digraph_class;
    std::string ordering = "identity";
    int bound = kDefaultBound;
    int n = 0;
};

// Input problems surfaced to the user with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failed preconditions, exit code 3.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path)
{
    const std::string text = read_file(path);
    try {
        return parse_json(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class Parse>
auto load(const std::string& path, Parse parse)
{
    const Json j = read_json(path);
    try {
        return parse(j);
    } catch (const FormatError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw InputError("cannot write " + path);
    }
    file << text;
}

DigraphClass require_class(const std::string& name)
{
    const auto c = parse_class(name);
    if (!c) {
        throw InputError("unknown class " + name);
    }
    return *c;
}

int checked_bound(int bound)
{
    const int ceiling = bound_ceiling();
    if (bound < 1 || bound > ceiling) {
        throw InputError("--bound " + std::to_string(bound) + " outside [1, " + std::to_string(ceiling) + "]");
    }
    return bound;
}

Ordering parse_ordering(const std::string& spec, const Digraph& d)
{
    if (spec == "identity") {
        return identity_ordering(d.order());
    }
    if (spec == "auto-acyclic") {
        auto ord = acyclic_ordering(d);
        if (!ord) {
            throw PreconditionError("no acyclic ordering: the digraph has a directed cycle");
        }
        return *ord;
    }
    Ordering ord;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            ord.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw InputError("--ordering: '" + item + "' is not a vertex");
        }
    }
    try {
        check_ordering(d.order(), ord);
    } catch (const std::domain_error& e) {
        throw InputError(std::string("--ordering: ") + e.what());
    }
    return ord;
}

std::string derived_multigraph_path(const std::string& certificate_path)
{
    const std::string suffix = ".json";
    if (certificate_path.size() > suffix.size() && certificate_path.ends_with(suffix)) {
        return certificate_path.substr(0, certificate_path.size() - suffix.size()) + ".dcm.json";
    }
    return certificate_path + ".dcm.json";
}

int run_compute(const Options& o, std::ostream& out)
{
    const Digraph d = load(o.inputs.at(0), digraph_from_json);
    const std::string format = o.format.empty() ? "json" : o.format;
    std::string text;
    if (o.variant == "dcm" || o.variant == "cm") {
        const Multigraph m = o.variant == "dcm" ? double_competition_multigraph(d) : competition_multigraph(d);
        text = format == "dot" ? to_dot(m) : format == "text" ? to_text(m) : dump(to_json(m));
    } else {
        const SimpleGraph g = o.variant == "dcg" ? double_competition_graph(d) : competition_graph(d);
        text = format == "dot" ? to_dot(g) : format == "text" ? to_text(g) : dump(to_json(g));
    }
    emit(o.out, text, out);
    return kSuccess;
}

int run_certify(const Options& o, std::ostream& out)
{
    const Digraph d = load(o.inputs.at(0), digraph_from_json);
    const CliqueFamily f = canonical_family(d, parse_ordering(o.ordering, d));
    const Multigraph m = double_competition_multigraph(d);
    emit(o.out, o.format == "text" ? to_text(f) : dump(to_json(f)), out);
    std::string multigraph_path = o.multigraph_out;
    if (multigraph_path.empty() && !o.out.empty()) {
        multigraph_path = derived_multigraph_path(o.out);
    }
    if (!multigraph_path.empty()) {
        emit(multigraph_path, dump(to_json(m)), out);
    }
    return kSuccess;
}

int run_verify(const Options& o, std::ostream& out)
{
    const Multigraph m = load(o.inputs.at(0), multigraph_from_json);
    const CliqueFamily f = load(o.inputs.at(1), certificate_from_json);
    if (m.order() != f.order()) {
        throw InputError("multigraph has " + std::to_string(m.order()) + " vertices, certificate has "
                         + std::to_string(f.order()));
    }
    const VerificationReport report = verify_certificate(m, f, require_class(o.digraph_class));
    emit(o.out, o.format == "json" ? dump(to_json(report)) : to_text(report), out);
    return report.accepted() ? kSuccess : kNegative;
}

int run_reconstruct(const Options& o, std::ostream& out)
{
    const Digraph d = reconstruct_digraph(load(o.inputs.at(0), certificate_from_json));
    emit(o.out, o.format == "dot" ? to_dot(d) : o.format == "text" ? to_text(d) : dump(to_json(d)), out);
    return kSuccess;
}

int run_recognize(const Options& o, std::ostream& out, std::ostream& err)
{
    const Multigraph m = load(o.inputs.at(0), multigraph_from_json);
    const DigraphClass c = require_class(o.digraph_class);
    const int bound = checked_bound(o.bound);
    if (m.order() > bound) {
        throw InputError("n = " + std::to_string(m.order()) + " exceeds --bound " + std::to_string(bound));
    }
    if (m.order() == kHardBound) {
        err << "searching up to " << class_size(m.order(), c, bound) << " " << class_name(c) << " digraphs\n";
    }
    const RecognitionResult r = recognize(m, c, bound);
    emit(o.out, o.format == "json" ? dump(to_json(r, m.order(), c)) : to_text(r, m.order(), c), out);
    if (r.recognized) {
        if (!o.digraph_out.empty()) {
            emit(o.digraph_out, dump(to_json(*r.witness_digraph)), out);
        }
        if (!o.certificate_out.empty()) {
            emit(o.certificate_out, dump(to_json(*r.witness_certificate)), out);
        }
    }
    return r.recognized ? kSuccess : kNegative;
}

int run_catalog(const Options& o, std::ostream& out, std::ostream& err)
{
    const DigraphClass c = require_class(o.digraph_class);
    const int bound = checked_bound(o.bound);
    if (o.n < 1 || o.n > bound) {
        throw InputError("--n " + std::to_string(o.n) + " outside [1, " + std::to_string(bound) + "]");
    }
    RecognitionIndex::Progress progress;
    if (o.n == kHardBound) {
        // Called once per percent; report every tenth call.
        progress = [&err, calls = 0](std::uint64_t done, std::uint64_t total) mutable {
            if (++calls % 10 == 0) {
                err << "catalog: " << done << "/" << total << " digraphs\n";
            }
        };
    }
    const RecognitionIndex index(o.n, c, bound, progress);
    const std::vector<CatalogRow> rows = index.catalog();
    emit(o.out, o.format == "json" ? dump(to_json(rows)) : to_text(rows), out);
    return kSuccess;
}

int run_convert(const Options& o, std::ostream& out)
{
    const Json j = read_json(o.inputs.at(0));
    const std::string format = o.format.empty() ? "json" : o.format;
    auto render = [&format](const auto& value) -> std::string {
        if (format == "dot") {
            return to_dot(value);
        }
        return format == "text" ? to_text(value) : dump(to_json(value));
    };
    try {
        if (j.is_object() && j.contains("cliques")) {
            const CliqueFamily f = certificate_from_json(j);
            if (format == "dot") {
                throw InputError("dot output is not available for certificates");
            }
            emit(o.out, format == "text" ? to_text(f) : dump(to_json(f)), out);
        } else if (j.is_object() && j.contains("arcs")) {
            emit(o.out, render(digraph_from_json(j)), out);
        } else if (j.is_object() && j.contains("edges") && j["edges"].is_array() && !j["edges"].empty()
                   && j["edges"][0].is_array() && j["edges"][0].size() == 2) {
            emit(o.out, render(simple_graph_from_json(j)), out);
        } else {
            emit(o.out, render(multigraph_from_json(j)), out);
        }
    } catch (const FormatError& e) {
        throw InputError(o.inputs.at(0) + ": " + e.what());
    }
    return kSuccess;
}

} // namespace

int bound_ceiling()
{
    const char* env = std::getenv("DCMKIT_MAX_N");
    if (env == nullptr) {
        return kHardBound;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
        return kHardBound;
    }
    return static_cast<int>(std::min<long>(value, kHardBound));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Double competition multigraphs: compute, certify, verify, reconstruct, recognize", "dcmkit"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> classes{"arbitrary", "loopless", "reflexive", "acyclic"};

    auto* compute = app.add_subcommand("compute", "Compute a competition-style (multi)graph of a digraph");
    compute->add_option("digraph", o.inputs, "Digraph JSON")->required()->expected(1);
    compute->add_option("--variant", o.variant, "dcm | cm | dcg | cg")
        ->check(CLI::IsMember({"dcm", "cm", "dcg", "cg"}));
    compute->add_option("--format", o.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
    compute->add_option("--out", o.out, "Output path (default stdout)");

    auto* certify = app.add_subcommand("certify", "Build the canonical certificate and the DCM of a digraph");
    certify->add_option("digraph", o.inputs, "Digraph JSON")->required()->expected(1);
    certify->add_option("--ordering", o.ordering, "identity | auto-acyclic | comma-separated permutation");
    certify->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    certify->add_option("--out", o.out, "Certificate path (default stdout)");
    certify->add_option("--multigraph-out", o.multigraph_out,
                        "DCM path (default: certificate path with .dcm.json suffix)");

    auto* verify = app.add_subcommand("verify", "Check a certificate against a multigraph for a digraph class");
    verify->add_option("files", o.inputs, "Multigraph JSON and certificate JSON")->required()->expected(2);
    verify->add_option("--class", o.digraph_class, "Digraph class")->required()->check(CLI::IsMember(classes));
    verify->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", o.out, "Report path (default stdout)");

    auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild a digraph from a certificate");
    reconstruct->add_option("certificate", o.inputs, "Certificate JSON")->required()->expected(1);
    reconstruct->add_option("--format", o.format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    reconstruct->add_option("--out", o.out, "Digraph path (default stdout)");

    auto* recognize_cmd = app.add_subcommand("recognize", "Decide by exhaustive search whether a multigraph is a DCM");
    recognize_cmd->add_option("multigraph", o.inputs, "Multigraph JSON")->required()->expected(1);
    recognize_cmd->add_option("--class", o.digraph_class, "Digraph class")
        ->required()
        ->check(CLI::IsMember(classes));
    recognize_cmd->add_option("--bound", o.bound, "Largest vertex count searched (at most 5)");
    recognize_cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"json", "text"}));
    recognize_cmd->add_option("--out", o.out, "Result path (default stdout)");
    recognize_cmd->add_option("--digraph-out", o.digraph_out, "Witness digraph path");
    recognize_cmd->add_option("--certificate-out", o.certificate_out, "Witness certificate path");

    auto* catalog_cmd = app.add_subcommand("catalog", "Tabulate every DCM of a class on n vertices");
    catalog_cmd->add_option("--n", o.n, "Vertex count")->required();
    catalog_cmd->add_option("--class", o.digraph_class, "Digraph class")->required()->check(CLI::IsMember(classes));
    catalog_cmd->add_option("--bound", o.bound, "Largest vertex count allowed (at most 5)");
    catalog_cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"json", "text"}));
    catalog_cmd->add_option("--out", o.out, "Table path (default stdout)");

    auto* convert = app.add_subcommand("convert", "Re-serialize a digraph, multigraph, graph or certificate");
    convert->add_option("file", o.inputs, "Input JSON")->required()->expected(1);
    convert->add_option("--to,--format", o.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
    convert->add_option("--out", o.out, "Output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*compute) {
            return run_compute(o, out);
        }
        if (*certify) {
            return run_certify(o, out);
        }
        if (*verify) {
            return run_verify(o, out);
        }
        if (*reconstruct) {
            return run_reconstruct(o, out);
        }
        if (*recognize_cmd) {
            return run_recognize(o, out, err);
        }
        if (*catalog_cmd) {
            return run_catalog(o, out, err);
        }
        return run_convert(o, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPreconditionFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace dcmkit::cli
