// kblocked: generate, verify, search and draw k-blocked point sets.
//
// Exit codes: 0 success, 1 semantic failure (verification failed, or a search did not
// produce what was asked for), 2 usage or parse errors.

#include "kblocked/blocked.hpp"
#include "kblocked/constructions.hpp"
#include "kblocked/document.hpp"
#include "kblocked/error.hpp"
#include "kblocked/search.hpp"
#include "kblocked/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

namespace {

using namespace kblocked;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Usage errors detected after CLI parsing (bad positional values and the like).
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& output)
{
    if (output.empty() || output == "-")
        std::cout << text;
    else
        write_text_file(output, text);
}

// A canonical name, or the path of a configuration document.
ConfigDocument load_set(const std::string& source)
{
    const auto& names = canonical_names();
    if (std::find(names.begin(), names.end(), source) != names.end())
        return {canonical(source), {{"name", source}}};
    auto doc = read_document_file(source);
    if (auto* c = std::get_if<ConfigDocument>(&doc)) return std::move(*c);
    throw DocumentError("'" + source + "' is not a point configuration document");
}

int parse_int(const std::string& text, const char* what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
    }
}

void require_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage)
{
    if (args.size() != n) throw UsageError("usage: kblocked generate " + usage);
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& args, const std::string& output)
{
    if (kind == "turan") {
        require_args(args, 2, "turan K N");
        LineCoverDocument doc{turan_lines(parse_int(args[0], "K"), parse_int(args[1], "N"))};
        auto report = verify_line_cover(doc.cover);
        if (!report.all_pass()) {
            std::cerr << "generated line cover failed verification\n";
            return kFailure;
        }
        emit(dump_document(doc), output);
        return kOk;
    }

    ConfigDocument doc;
    if (kind == "canonical") {
        require_args(args, 1, "canonical NAME");
        doc = {canonical(args[0]), {{"name", args[0]}, {"provenance", "canonical " + args[0]}}};
    } else if (kind == "grid3d") {
        require_args(args, 1, "grid3d D");
        doc = {grid_3d(parse_int(args[0], "D")), {{"provenance", "grid3d " + args[0]}}};
    } else if (kind == "product") {
        require_args(args, 2, "product A B");
        doc = {product(load_set(args[0]).set, load_set(args[1]).set),
               {{"provenance", "product " + args[0] + " " + args[1]}}};
    } else if (kind == "power") {
        require_args(args, 2, "power A I");
        doc = {power(load_set(args[0]).set, parse_int(args[1], "I")),
               {{"provenance", "power " + args[0] + " " + args[1]}}};
    } else if (kind == "augment") {
        require_args(args, 2, "augment A M");
        doc = {augment(load_set(args[0]).set, parse_int(args[1], "M")),
               {{"provenance", "augment " + args[0] + " " + args[1]}}};
    } else {
        throw UsageError("unknown generate kind '" + kind + "' (canonical, grid3d, product, power, augment, turan)");
    }

    auto report = verify_blocked(doc.set);
    if (!report.ok) {
        std::cerr << "generated configuration failed verification (" << report.violations.size() << " violations)\n";
        return kFailure;
    }
    doc.metadata["signature"] = report.signature->to_string();
    emit(dump_document(doc), output);
    return kOk;
}

int cmd_project(const std::string& input, std::uint64_t seed, const std::string& output)
{
    auto doc = load_set(input);
    auto projection = occlusion_free_projection(doc.set.config(), seed);
    ConfigDocument out{ColouredPointSet(projection.image, doc.set.colours()), doc.metadata};
    out.metadata["seed"] = std::to_string(seed);
    out.metadata["provenance"] = "project " + input;
    if (!verify_blocked(out.set).ok && verify_blocked(doc.set).ok) {
        std::cerr << "projection changed the blocking structure\n";
        return kFailure;
    }
    emit(dump_document(out), output);
    return kOk;
}

int verify_cover(const LineCover& cover)
{
    auto r = verify_line_cover(cover);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "line cover: k=" << cover.k << " n=" << cover.n << " lines=" << cover.lines.size() << "\n"
              << "edges or induced paths: " << yes(r.lines_are_edges_or_induced_paths) << "\n"
              << "every pair in exactly one line: " << yes(r.every_pair_in_exactly_one_line) << "\n"
              << "common neighbour per line: " << yes(r.every_line_has_common_neighbour) << "\n"
              << "lines partition the edges: " << yes(r.lines_partition_edges) << "\n"
              << "pairs covered: " << r.pairs_covered << "\n";
    if (r.witness_pair) std::cout << "witness pair: " << r.witness_pair->first << " " << r.witness_pair->second << "\n";
    return r.all_pass() ? kOk : kFailure;
}

int cmd_verify(const std::string& input, bool midpoint, bool audit)
{
    auto doc = read_document_file(input);
    if (auto* cover = std::get_if<LineCoverDocument>(&doc)) return verify_cover(cover->cover);
    const auto& set = std::get<ConfigDocument>(doc).set;

    std::cout << "points: " << set.size() << "  dim: " << set.dim() << "  colours: " << set.colour_count() << "\n";
    auto report = verify_blocked(set);
    if (!report.ok) {
        std::cout << "blocked: no\n";
        for (const auto& v : report.violations)
            std::cout << "violation: " << to_string(v.kind) << " " << v.i << " " << v.j << "  "
                      << set.config()[v.i].to_string() << " " << set.config()[v.j].to_string() << "\n";
        return kFailure;
    }
    std::cout << "blocked: yes  signature: " << report.signature->to_string() << "\n";
    bool ok = true;
    if (midpoint) {
        auto m = verify_midpoint_blocked(set);
        if (m.ok) {
            std::cout << "midpoint-blocked: yes\n";
        } else {
            std::cout << "midpoint-blocked: no (pair " << m.failing_pair->first << " " << m.failing_pair->second << ")\n";
            ok = false;
        }
    }
    if (audit) {
        auto a = audit_lemmas(set);
        auto show = [](const char* label, std::optional<bool> v) {
            std::cout << "audit " << label << ": " << (!v ? "skipped" : *v ? "pass" : "FAIL") << "\n";
        };
        show("at most three collinear", a.at_most_three_collinear);
        show("classes in general position", a.classes_in_general_position);
        show("classes of at most four", a.classes_at_most_four);
        show("at most twelve points", a.at_most_twelve_points);
        show("triangles meet every colour", a.triangles_see_every_colour);
        if (a.triangle_witness)
            std::cout << "triangle witness: " << (*a.triangle_witness)[0] << " " << (*a.triangle_witness)[1] << " "
                      << (*a.triangle_witness)[2] << "\n";
        ok = ok && a.all_pass();
    }
    return ok ? kOk : kFailure;
}

struct SearchArgs
{
    std::vector<int> grid{4, 4};
    int max_points = 0;
    std::string target;
    bool midpoint = false;
    std::uint64_t budget = 100'000'000;
    int parallel = 1;
    bool no_symmetry = false;
    bool certify_absent = false;
    int witnesses = 1;
    std::string out_dir;
};

int cmd_search(const SearchArgs& a)
{
    SearchSpec spec;
    spec.x_max = a.grid[0];
    spec.y_max = a.grid[1];
    spec.require_midpoint_blocked = a.midpoint;
    spec.node_budget = a.budget;
    spec.parallel_width = a.parallel;
    spec.symmetry_reduction = !a.no_symmetry;
    spec.max_witnesses = a.witnesses;
    std::optional<KSetSignature> target;
    if (!a.target.empty()) {
        try {
            target = KSetSignature::parse(a.target);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
    }
    if (a.certify_absent && !target) throw UsageError("--certify-absent needs --target");
    spec.max_points = a.max_points > 0 ? a.max_points : target ? target->total() : 6;

    SearchOutcome out;
    try {
        out = !target ? enumerate_blocked(spec) : a.certify_absent ? certify_absent(*target, spec) : find_blocked(*target, spec);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }

    std::cout << "status: " << to_string(out.status) << "\n"
              << "nodes: " << out.nodes_explored << "\n"
              << "witnesses: " << out.witnesses.size() << "\n";
    for (const auto& sig : out.signatures_found) std::cout << "signature: " << sig.to_string() << "\n";

    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        for (std::size_t i = 0; i < out.witnesses.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "witness_%03zu.json", i);
            ConfigDocument doc{out.witnesses[i],
                               {{"provenance", "search grid " + std::to_string(spec.x_max) + " " + std::to_string(spec.y_max)},
                                {"signature", signature(out.witnesses[i]).to_string()}}};
            write_text_file((std::filesystem::path(a.out_dir) / name).string(), dump_document(doc));
        }
    }

    if (a.certify_absent) return out.status == SearchStatus::Exhausted && out.witnesses.empty() ? kOk : kFailure;
    if (target) return out.status == SearchStatus::Found ? kOk : kFailure;
    return out.status == SearchStatus::Exhausted ? kOk : kFailure;
}

int cmd_export_svg(const std::string& input, const std::string& output)
{
    auto doc = load_set(input);
    if (doc.set.dim() != 2) {
        std::cerr << "export-svg needs a planar configuration (dim " << doc.set.dim() << ")\n";
        return kFailure;
    }
    emit(render_svg(doc.set), output);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kblocked: k-blocked point sets with exact rational arithmetic"};
    app.require_subcommand(1);

    std::string output;
    std::string kind;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("generate", "Build a configuration or Turán line cover");
    gen->add_option("kind", kind, "canonical | grid3d | product | power | augment | turan")->required();
    gen->add_option("args", gen_args, "Arguments for the kind");
    gen->add_option("-o,--output", output, "Output file (default: standard output)");

    std::string project_input;
    std::uint64_t seed = 0;
    auto* proj = app.add_subcommand("project", "Occlusion-free projection of a d >= 3 configuration to the plane");
    proj->add_option("input", project_input, "Canonical name or configuration document")->required();
    proj->add_option("--seed", seed, "Random seed")->capture_default_str();
    proj->add_option("-o,--output", output, "Output file (default: standard output)");

    std::string verify_input;
    bool midpoint = false, audit = false;
    auto* ver = app.add_subcommand("verify", "Check blockedness of a document");
    ver->add_option("input", verify_input, "Configuration or line-cover document")->required();
    ver->add_flag("--midpoint", midpoint, "Also require midpoint-blockedness");
    ver->add_flag("--audit", audit, "Also run the structural audits");

    SearchArgs sargs;
    auto* srch = app.add_subcommand("search", "Exhaustive search over an integer grid");
    srch->add_option("--grid", sargs.grid, "Grid bounds X Y")->expected(2)->capture_default_str();
    srch->add_option("--max-points", sargs.max_points, "Point limit (default: target size, else 6)");
    srch->add_option("--target", sargs.target, "Target signature, e.g. 3,3,3,1");
    srch->add_flag("--midpoint", sargs.midpoint, "Only midpoint-blocked configurations");
    srch->add_option("--budget", sargs.budget, "Node budget")->capture_default_str();
    srch->add_option("--parallel", sargs.parallel, "Worker threads")->capture_default_str();
    srch->add_flag("--no-symmetry", sargs.no_symmetry, "Disable translation reduction");
    srch->add_flag("--certify-absent", sargs.certify_absent, "Succeed only on exhaustion without witnesses");
    srch->add_option("--witnesses", sargs.witnesses, "Witnesses to collect for a target")->capture_default_str();
    srch->add_option("--out", sargs.out_dir, "Directory for witness documents");

    std::string svg_input;
    auto* svg = app.add_subcommand("export-svg", "Draw a planar configuration as SVG");
    svg->add_option("input", svg_input, "Canonical name or configuration document")->required();
    svg->add_option("-o,--output", output, "Output SVG file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_generate(kind, gen_args, output);
        if (*proj) return cmd_project(project_input, seed, output);
        if (*ver) return cmd_verify(verify_input, midpoint, audit);
        if (*srch) return cmd_search(sargs);
        if (*svg) return cmd_export_svg(svg_input, output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
