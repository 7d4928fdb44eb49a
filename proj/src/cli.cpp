#include "tubecat/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tubecat/error.hpp"
#include "tubecat/int_matrix.hpp"
#include "tubecat/io.hpp"
#include "tubecat/lin_rep.hpp"
#include "tubecat/suites.hpp"
#include "tubecat/svg.hpp"
#include "tubecat/tube.hpp"

namespace tubecat::cli {

namespace {

using io::json;

// An argument naming an existing file is read from disk; anything else is an
// inline literal.
std::string load(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

char first_char(const std::string& s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return c;
    }
    return '\0';
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

TubeObject read_object(const std::string& arg) {
    const std::string text = load(arg);
    if (first_char(text) == '{') return io::object_from_json(parse_json(text));
    return io::parse_object(text);
}

TubeMorphism read_morphism(const std::string& arg) {
    const std::string text = load(arg);
    if (first_char(text) == '{') return io::morphism_from_json(parse_json(text));
    return io::parse_morphism(text);
}

bool looks_like_morphism(const std::string& text) {
    const char c = first_char(text);
    if (c == 'N' || c == '[') return true;
    if (c != '{') return false;
    const json j = parse_json(text);
    return j.contains("outer") || j.contains("blocks");
}

struct Globals {
    int alphabet = 2;
    int depth = 2;
    std::uint64_t bound = 0;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string format;

    std::uint64_t dimension_bound() const { return bound ? bound : default_dimension_bound(); }
    bool json() const { return format == "json"; }
};

void print(std::ostream& out, const Globals& g, const TubeMorphism& rho) {
    out << (g.json() ? io::to_json(rho).dump() : io::to_text(rho)) << '\n';
}

void print(std::ostream& out, const Globals& g, const TubeObject& a) {
    out << (g.json() ? io::to_json(a).dump() : io::to_text(a)) << '\n';
}

void print_matrix(std::ostream& out, const Globals& g, const IntMatrix& m) {
    if (g.format == "csv") out << to_csv(m);
    else if (g.json()) out << io::to_json(m).dump() << '\n';
    else out << to_triplet_text(m);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tubular partition calculus: compose, tensor and represent nested non-crossing partitions.",
                 "tubecat"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Globals g;
    app.add_option("--alphabet", g.alphabet, "Alphabet size |X|")->check(CLI::PositiveNumber);
    app.add_option("--depth", g.depth, "Truncation depth of the tree model")->check(CLI::NonNegativeNumber);
    app.add_option("--bound", g.bound, "Matrix side bound (default 4096, or TUBECAT_BOUND)")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for sampled checks");
    app.add_option("--threads", g.threads, "Worker threads for checks")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "dsl", "triplet", "csv", "svg"}));

    std::string a1, a2, direction, suite = "all", triplet_file, output_file;
    std::vector<std::string> many;
    bool inverse = false;

    auto* parse = app.add_subcommand("parse", "Parse a partition, object or morphism and print its canonical form");
    parse->add_option("value", a1, "File or literal")->required();
    auto* compose_cmd = app.add_subcommand("compose", "Compose lhs ∘ rhs and report removed blocks");
    compose_cmd->add_option("--lhs", a1, "Morphism applied second")->required();
    compose_cmd->add_option("--rhs", a2, "Morphism applied first")->required();
    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product lhs ⊗ rhs");
    tensor_cmd->add_option("--lhs", a1)->required();
    tensor_cmd->add_option("--rhs", a2)->required();
    auto* adjoint_cmd = app.add_subcommand("adjoint", "Reflect a morphism");
    adjoint_cmd->add_option("morphism", a1)->required();
    auto* psi_cmd = app.add_subcommand("psi", "Apply Ψ to an object or a morphism");
    psi_cmd->add_option("value", a1)->required();
    auto* rotate = app.add_subcommand("rotate", "Left or right rotation of a morphism");
    rotate->add_option("direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
    rotate->add_option("morphism", a1)->required();
    rotate->add_flag("--inverse", inverse, "Apply the inverse rotation");
    auto* dual_cmd = app.add_subcommand("dual", "Dual object");
    dual_cmd->add_option("object", a1)->required();
    auto* eta_cmd = app.add_subcommand("eta", "η_α : unit → α ⊗ dual(α)");
    eta_cmd->add_option("object", a1)->required();
    auto* eps_cmd = app.add_subcommand("epsilon", "ε_α : dual(α) ⊗ α → unit");
    eps_cmd->add_option("object", a1)->required();
    auto* pmorph = app.add_subcommand("pmorph", "P_{α1,...,αn} : Ψ(α1⊗...⊗αn) → Ψ(α1)⊗...⊗Ψ(αn)");
    pmorph->add_option("objects", many)->expected(0, -1);
    auto* sdecomp = app.add_subcommand("sdecomp", "Isometry S_α into a tensor of ψ levels");
    sdecomp->add_option("object", a1)->required();
    auto* hom = app.add_subcommand("hom", "Enumerate every morphism between two objects");
    hom->add_option("domain", a1)->required();
    hom->add_option("codomain", a2)->required();
    auto* matrix = app.add_subcommand("matrix", "Integer matrix T_ρ over the alphabet");
    matrix->add_option("--morphism", a1, "Morphism")->required();
    auto* rank = app.add_subcommand("rank", "Rank of span{T_ρ : ρ ∈ Hom(domain, codomain)}, or of a triplet matrix");
    rank->add_option("domain", a1);
    rank->add_option("codomain", a2);
    rank->add_option("--triplet", triplet_file, "Rank of a matrix in triplet form instead");
    auto* check = app.add_subcommand("check", "Run verification suites");
    check->add_option("--suite", suite)->check(CLI::IsMember({"nc", "tube", "linrep", "wreath", "all"}));
    auto* render = app.add_subcommand("render", "SVG diagram of a morphism");
    render->add_option("morphism", a1)->required();
    render->add_option("--output", output_file, "Write to a file instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (parse->parsed()) {
            const std::string text = load(a1);
            const char c = first_char(text);
            if (looks_like_morphism(text)) {
                const bool partition = c == 'N' ? text.find(':') == std::string::npos
                                                : c == '{' && parse_json(text).contains("blocks");
                if (partition) {
                    const NCPartition p = c == '{' ? io::partition_from_json(parse_json(text)) : io::parse_partition(text);
                    out << (g.json() ? io::to_json(p).dump() : io::to_text(p)) << '\n';
                } else {
                    print(out, g, read_morphism(a1));
                }
            } else {
                print(out, g, read_object(a1));
            }
        } else if (compose_cmd->parsed()) {
            const auto c = compose(read_morphism(a1), read_morphism(a2));
            if (g.json()) {
                out << json{{"morphism", io::to_json(c.morphism)}, {"rb", c.removed}}.dump() << '\n';
            } else {
                print(out, g, c.morphism);
                out << "rb=" << c.removed << '\n';
            }
        } else if (tensor_cmd->parsed()) {
            print(out, g, tensor(read_morphism(a1), read_morphism(a2)));
        } else if (adjoint_cmd->parsed()) {
            print(out, g, adjoint(read_morphism(a1)));
        } else if (psi_cmd->parsed()) {
            if (looks_like_morphism(load(a1))) print(out, g, psi(read_morphism(a1)));
            else print(out, g, psi(read_object(a1)));
        } else if (rotate->parsed()) {
            const auto rho = read_morphism(a1);
            const bool left = direction == "left";
            print(out, g, inverse ? (left ? unrotate_left(rho) : unrotate_right(rho))
                                  : (left ? rotate_left(rho) : rotate_right(rho)));
        } else if (dual_cmd->parsed()) {
            print(out, g, dual(read_object(a1)));
        } else if (eta_cmd->parsed()) {
            print(out, g, eta(read_object(a1)));
        } else if (eps_cmd->parsed()) {
            print(out, g, epsilon(read_object(a1)));
        } else if (pmorph->parsed()) {
            std::vector<TubeObject> objs;
            for (const auto& s : many) objs.push_back(read_object(s));
            print(out, g, p_morphism(objs));
        } else if (sdecomp->parsed()) {
            const auto s = s_decomposition(read_object(a1));
            if (g.json()) {
                out << json{{"isometry", io::to_json(s.isometry)}, {"levels", s.levels}}.dump() << '\n';
            } else {
                print(out, g, s.isometry);
                out << "levels=";
                for (std::size_t i = 0; i < s.levels.size(); ++i) out << (i ? " " : "") << s.levels[i];
                out << '\n';
            }
        } else if (hom->parsed()) {
            const auto all = enumerate_hom(read_object(a1), read_object(a2));
            if (g.json()) {
                json arr = json::array();
                for (const auto& r : all) arr.push_back(io::to_json(r));
                out << arr.dump() << '\n';
            } else {
                out << "count=" << all.size() << '\n';
                for (const auto& r : all) out << io::to_text(r) << '\n';
            }
        } else if (matrix->parsed()) {
            print_matrix(out, g, matrix_of(read_morphism(a1), Alphabet(g.alphabet), g.dimension_bound()));
        } else if (rank->parsed()) {
            if (!triplet_file.empty()) {
                out << rank_exact(parse_triplet_text(load(triplet_file))) << '\n';
            } else {
                if (a1.empty() || a2.empty()) {
                    err << "rank: domain and codomain are required unless --triplet is given\n";
                    return 2;
                }
                out << hom_span_rank(read_object(a1), read_object(a2), Alphabet(g.alphabet), kDefaultHomPointBound,
                                     g.dimension_bound())
                    << '\n';
            }
        } else if (check->parsed()) {
            SuiteOptions opts;
            opts.alphabet = g.alphabet;
            opts.depth = g.depth;
            opts.seed = g.seed;
            opts.threads = g.threads;
            opts.bound = g.dimension_bound();
            const auto results = run_suite(suite, opts);
            std::size_t passed = 0;
            for (const auto& r : results) passed += r.passed;
            if (g.json()) {
                json arr = json::array();
                for (const auto& r : results) arr.push_back(io::to_json(r));
                out << arr.dump(2) << '\n';
            } else {
                for (const auto& r : results) {
                    out << (r.passed ? "PASS " : "FAIL ") << r.identity << " (cases=" << r.cases << ")";
                    if (r.counterexample) out << " counterexample: " << *r.counterexample;
                    out << '\n';
                }
                out << passed << "/" << results.size() << " checks passed\n";
            }
            return passed == results.size() ? 0 : 1;
        } else if (render->parsed()) {
            const std::string svg = render_svg(read_morphism(a1));
            if (output_file.empty()) {
                out << svg;
            } else {
                std::ofstream file(output_file, std::ios::binary);
                if (!file) {
                    err << "cannot write " << output_file << '\n';
                    return 1;
                }
                file << svg;
            }
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tubecat::cli
