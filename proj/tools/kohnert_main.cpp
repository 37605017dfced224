// Command-line front end: closure listing, family analysis, Hasse/DOT
// export, theorem verification sweeps, and Kohnert polynomials.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kohnert/kohnert.hpp"
#include "kohnert/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw kohnert::parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

kohnert::Diagram parse_with_format(const std::string& text, const std::string& format) {
    if (format == "grid") return kohnert::parse_grid(text);
    if (format == "pairs") return kohnert::parse_pairs(text);
    if (format == "json") return kohnert::diagram_from_json(nlohmann::json::parse(text));
    // auto-detection
    for (char c : text) {
        if (c == '{') return kohnert::diagram_from_json(nlohmann::json::parse(text));
        if (c == '(') return kohnert::parse_pairs(text);
        if (!std::isspace(static_cast<unsigned char>(c))) break;
    }
    return kohnert::parse_diagram(text);
}

kohnert::Limits make_limits(std::size_t node_cap_flag) {
    kohnert::Limits limits;
    if (const char* env = std::getenv("KOHNERT_NODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) limits.node_cap = v;
    }
    if (node_cap_flag > 0) limits.node_cap = node_cap_flag;
    return limits;
}

kohnert::Composition parse_composition(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t pos = 0;
        int value = std::stoi(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size() || value < 0)
            throw std::invalid_argument("bad composition entry: " + token);
        entries.push_back(value);
    }
    if (entries.empty()) throw std::invalid_argument("empty composition");
    return kohnert::Composition(std::move(entries));
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_report_text(const kohnert::AnalysisReport& r, const std::string& family) {
    std::cout << "family: " << family << "\n";
    if (r.node_count) std::cout << "node_count: " << *r.node_count << "\n";
    std::cout << "min_count: " << r.min_count << "\n";
    std::cout << "bounded: " << yesno(r.bounded) << "\n";
    std::cout << "ranked: " << yesno(r.ranked) << "\n";
    std::cout << "b: " << r.b_value << "\n";
    if (!r.rank_function.empty()) std::cout << "rank_function: " << r.rank_function << "\n";
    if (!r.minimal_sample.empty()) {
        std::cout << "least-rowsum minimal: " << kohnert::render_pairs(r.minimal_sample.front())
                  << "\n";
        if (r.minimal_sample.size() > 1)
            std::cout << "minimals listed: " << r.minimal_sample.size() << "\n";
    }
    if (r.rank_conflict_edge)
        std::cout << "rank conflict edge: " << kohnert::render_pairs(r.rank_conflict_edge->first)
                  << " -> " << kohnert::render_pairs(r.rank_conflict_edge->second) << "\n";
    for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Kohnert diagram posets: closures, bounded/ranked analysis, polynomials"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "auto";
    std::string out = "text";
    std::size_t node_cap = 0;
    bool list_nodes = false;

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", input, "diagram file (grid, pair list, or JSON; - for stdin)")
                ->required();
        cmd->add_option("--format", format, "input format: auto|grid|pairs|json")
            ->check(CLI::IsMember({"auto", "grid", "pairs", "json"}));
        cmd->add_option("--node-cap", node_cap, "closure node cap (overrides KOHNERT_NODE_CAP)");
    };

    CLI::App* closure = app.add_subcommand("closure", "enumerate KD(D) and count diagrams");
    add_io(closure);
    closure->add_option("--out", out, "output: text|json")->check(CLI::IsMember({"text", "json"}));
    closure->add_flag("--list", list_nodes, "print every closure member (pair-list form)");

    CLI::App* analyze = app.add_subcommand("analyze", "bounded/ranked analysis with family dispatch");
    std::string key_arg, checkered_arg, family_arg = "auto";
    bool force_generic = false;
    add_io(analyze, false);
    analyze->add_option("input", input, "diagram file (grid, pair list, or JSON; - for stdin)");
    analyze->add_option("--key", key_arg, "analyze the key diagram of a composition a1,a2,...");
    analyze->add_option("--checkered", checkered_arg, "analyze a checkered board: n,variant");
    analyze->add_option("--family", family_arg, "force a family: auto|one-col|two-row|key|checkered")
        ->check(CLI::IsMember({"auto", "one-col", "two-row", "key", "checkered"}));
    analyze->add_flag("--force-generic", force_generic, "skip closed forms; brute-force the closure");
    analyze->add_option("--out", out, "output: text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* hasse = app.add_subcommand("hasse", "cover (Hasse) diagram of KD(D)");
    add_io(hasse);
    std::string hasse_out = "dot";
    hasse->add_option("--out", hasse_out, "output: text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    bool dot_flag = false;
    hasse->add_flag("--dot", dot_flag, "emit Graphviz DOT (same as --out dot)");

    CLI::App* poly = app.add_subcommand("poly", "Kohnert polynomial of KD(D)");
    add_io(poly);
    poly->add_option("--out", out, "output: text|json")->check(CLI::IsMember({"text", "json"}));
    bool poly_json = false;
    poly->add_flag("--json", poly_json, "emit the JSON term list (same as --out json)");

    CLI::App* verify = app.add_subcommand("verify", "cross-check the closed forms by brute force");
    std::vector<std::string> claims;
    int max_rows = 0, max_cols = 0, max_cells = 0;
    bool list_claims = false;
    verify->add_option("claims", claims, "claim ids, or 'all' (default)");
    verify->add_option("--max-rows", max_rows, "override sweep row bound");
    verify->add_option("--max-cols", max_cols, "override sweep column bound");
    verify->add_option("--max-cells", max_cells, "override sweep cell bound");
    verify->add_flag("--list", list_claims, "list known claim ids and exit");
    verify->add_option("--out", out, "output: text|json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    const kohnert::Limits limits = make_limits(node_cap);

    if (closure->parsed()) {
        kohnert::Diagram d = parse_with_format(read_input(input), format);
        kohnert::KohnertPoset p = kohnert::kd_closure(d, limits);
        if (out == "json") {
            std::cout << kohnert::to_json(p).dump(2) << "\n";
        } else {
            std::cout << p.nodes.size() << (p.nodes.size() == 1 ? " diagram" : " diagrams") << "\n";
            if (list_nodes)
                for (const kohnert::Diagram& node : p.nodes)
                    std::cout << kohnert::render_pairs(node) << "\n";
        }
        return kExitOk;
    }

    if (analyze->parsed()) {
        const int sources = int(!input.empty()) + int(!key_arg.empty()) + int(!checkered_arg.empty());
        if (sources != 1)
            throw std::invalid_argument("analyze: give exactly one of input, --key, --checkered");

        std::optional<kohnert::FamilyMatch> match;
        kohnert::Diagram d;
        std::vector<std::string> notes;
        if (!key_arg.empty()) {
            d = kohnert::key_diagram(parse_composition(key_arg));
            match = kohnert::FamilyMatch{kohnert::Family::Key};
        } else if (!checkered_arg.empty()) {
            std::stringstream ss(checkered_arg);
            int n = 0, variant = 1;
            char comma = ',';
            ss >> n;
            if (ss >> comma && comma == ',') ss >> variant;
            d = kohnert::checkered(n, variant);
            match = kohnert::FamilyMatch{kohnert::Family::Checkered, n, variant};
        } else {
            kohnert::Diagram raw = parse_with_format(read_input(input), format);
            d = kohnert::normalize(raw);
            if (d != raw) notes.push_back("input normalized: empty columns compacted");
            if (family_arg == "auto")
                match = kohnert::detect_family(d);
            else if (family_arg == "one-col")
                match = kohnert::FamilyMatch{kohnert::Family::OnePerColumn};
            else if (family_arg == "two-row")
                match = kohnert::FamilyMatch{kohnert::Family::TwoRow};
            else if (family_arg == "key")
                match = kohnert::FamilyMatch{kohnert::Family::Key};
            else if (family_arg == "checkered")
                match = kohnert::detect_family(d);  // needs n and variant from the diagram
            if (family_arg == "checkered" &&
                (!match || match->family != kohnert::Family::Checkered))
                throw std::invalid_argument("diagram is not a checkered board");
            if (family_arg == "key" && !kohnert::matches_family(d, kohnert::Family::Key))
                throw std::invalid_argument("diagram rows are not left-justified");
        }

        kohnert::AnalysisReport report;
        std::string family_name = "generic";
        if (force_generic || !match) {
            report = kohnert::brute_force_report(d, limits);
        } else {
            report = kohnert::family_report(d, *match);
            family_name = kohnert::to_string(match->family);
        }
        for (std::string& n : notes) report.notes.insert(report.notes.begin(), std::move(n));

        if (out == "json") {
            nlohmann::json j = kohnert::to_json(report);
            j["family"] = family_name;
            j["diagram"] = kohnert::to_json(d);
            std::cout << j.dump(2) << "\n";
        } else {
            print_report_text(report, family_name);
        }
        return kExitOk;
    }

    if (hasse->parsed()) {
        kohnert::Diagram d = parse_with_format(read_input(input), format);
        kohnert::KohnertPoset p = kohnert::kd_closure(d, limits);
        if (dot_flag) hasse_out = "dot";
        if (hasse_out == "dot") {
            std::cout << kohnert::to_dot(p);
        } else if (hasse_out == "json") {
            std::cout << kohnert::to_json(p).dump(2) << "\n";
        } else {
            std::size_t edge_count = 0;
            for (const auto& lst : p.cover_edges) edge_count += lst.size();
            std::cout << p.nodes.size() << " nodes, " << edge_count << " cover edges\n";
            for (std::size_t u = 0; u < p.cover_edges.size(); ++u)
                for (int v : p.cover_edges[u])
                    std::cout << kohnert::render_pairs(p.nodes[u]) << " -> "
                              << kohnert::render_pairs(p.node(v)) << "\n";
        }
        return kExitOk;
    }

    if (poly->parsed()) {
        kohnert::Diagram d = parse_with_format(read_input(input), format);
        kohnert::Polynomial polynomial = kohnert::kohnert_polynomial(d, limits);
        if (poly_json || out == "json")
            std::cout << kohnert::to_json(polynomial).dump(2) << "\n";
        else
            std::cout << kohnert::to_string(polynomial) << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        if (list_claims) {
            for (const std::string& id : kohnert::claim_ids()) std::cout << id << "\n";
            std::cout << "obstruction-gap-probe\n";
            return kExitOk;
        }
        if (claims.empty()) claims.push_back("all");
        std::vector<std::string> selected;
        if (claims.size() == 1 && claims.front() == "all") {
            selected = kohnert::claim_ids();
            selected.push_back("obstruction-gap-probe");
        } else {
            selected = claims;
        }

        auto customized = [&](const kohnert::CorpusSpec& base) {
            kohnert::CorpusSpec spec = base;
            if (max_rows > 0) spec.max_rows = max_rows;
            if (max_cols > 0) spec.max_cols = max_cols;
            if (max_cells > 0) spec.max_cells = max_cells;
            return spec;
        };

        std::vector<kohnert::VerifyOutcome> outcomes;
        for (const std::string& id : selected) {
            if (id == "obstruction-gap-probe") {
                outcomes.push_back(kohnert::obstruction_gap_probe(
                    customized(kohnert::desk_spec(3, 4))));
                continue;
            }
            bool found = false;
            for (const kohnert::ClaimEntry& entry : kohnert::claim_registry()) {
                if (id != entry.id) continue;
                outcomes.push_back(entry.run(customized(entry.default_spec)));
                found = true;
                break;
            }
            if (!found) throw std::invalid_argument("unknown claim id: " + id);
        }

        bool any_failure = false;
        if (out == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const kohnert::VerifyOutcome& o : outcomes) {
                j.push_back(kohnert::to_json(o));
                any_failure |= !o.passed();
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const kohnert::VerifyOutcome& o : outcomes) {
                std::cout << (o.passed() ? "pass" : "FAIL") << "  " << o.claim_id << "  ("
                          << o.instances_checked << " instances";
                if (!o.failures.empty()) std::cout << ", " << o.failures.size() << " failures";
                std::cout << ")\n";
                for (std::size_t i = 0; i < std::min<std::size_t>(o.failures.size(), 10); ++i)
                    std::cout << "      " << o.failures[i].instance << " expected "
                              << o.failures[i].expected << ", got " << o.failures[i].actual << "\n";
                if (o.failures.size() > 10)
                    std::cout << "      ... " << o.failures.size() - 10 << " more\n";
                for (const std::string& gap : o.gap_list)
                    std::cout << "      gap: " << gap << "\n";
                any_failure |= !o.passed();
            }
        }
        return any_failure ? kExitVerifyFailure : kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kohnert::parse_error& e) {
        std::cerr << "parse error";
        if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
        std::cerr << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const kohnert::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
