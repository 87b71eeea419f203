// orbitfin command-line front end. Structures are read from JSON files or
// named as gallery:<name>; results go to standard output as JSON.
//
// Exit codes: 0 success, 1 definite negative answer, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitfin/gallery.hpp"
#include "orbitfin/json_io.hpp"
#include "orbitfin/verify.hpp"

using namespace orbitfin;
using Json = nlohmann::json;
namespace io = orbitfin::json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    int atom_budget = Limits{}.atom_budget;
    unsigned threads = 1;
    bool json_out = false;

    Limits limits() const {
        Limits l;
        l.atom_budget = atom_budget;
        l.threads = threads;
        return l;
    }
};

gallery::Object load(const std::string& source) {
    if (source.starts_with("gallery:")) {
        auto obj = gallery::lookup(source);
        if (!obj) throw Error(ErrorCode::ParseError, "no gallery object named " + source.substr(8));
        return *obj;
    }
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    const Json j = io::parse(buf.str());
    if (j.is_object() && j.contains("base")) return io::defstructure_from_json(j);
    if (j.is_object() && j.contains("structure")) return io::finstructure_from_json(j.at("structure"));
    return io::finstructure_from_json(j);
}

DefStructure load_def(const std::string& source) {
    auto obj = load(source);
    if (auto* d = std::get_if<DefStructure>(&obj)) return *d;
    throw Error(ErrorCode::ParseError, source + " is a finite structure, a definable one is needed");
}

FinStructure load_fin(const std::string& source) {
    auto obj = load(source);
    if (auto* f = std::get_if<FinStructure>(&obj)) return *f;
    throw Error(ErrorCode::ParseError, source + " is definable; sample it first");
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "not an integer list: " + text);
        }
    }
    return out;
}

AtomSample atoms_for(const DefStructure& d, int count, const std::string& list, const std::string& labels) {
    if (!list.empty()) {
        std::vector<Atom> atoms;
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ',')) atoms.push_back(parse_atom(item));
        return AtomSample(d.base(), std::move(atoms));
    }
    std::optional<std::vector<int>> labs;
    if (!labels.empty()) labs = parse_ints(labels);
    if (count < 0) throw Error(ErrorCode::ParseError, "atom count must be non-negative");
    return make_sample(d.base(), static_cast<std::size_t>(count), labs);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation with finite and orbit-finite relational structures"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized checks");
    app.add_option("--atom-budget", g.atom_budget, "Largest support enumerated")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json_out, "Machine-readable output");

    int exit_code = 0;

    std::string def_in, atom_list, labels;
    int atom_count = 3;
    auto* sample_cmd = app.add_subcommand("sample", "Sample a definable structure on finitely many atoms");
    sample_cmd->add_option("structure", def_in, "File or gallery:<name>")->required();
    sample_cmd->add_option("--atoms", atom_count, "Use atoms 0..n-1");
    sample_cmd->add_option("--atom-list", atom_list, "Comma-separated atoms such as 0,1/2,3:1");
    sample_cmd->add_option("--labels", labels, "Comma-separated labels for --atoms");
    sample_cmd->callback([&] {
        const DefStructure d = load_def(def_in);
        print(io::to_json(sample(d, atoms_for(d, atom_count, atom_list, labels)), d));
    });

    std::string src_in, dst_in, mode_text = "hom";
    auto* hom_cmd = app.add_subcommand("hom", "Search for a homomorphism, embedding or isomorphism");
    hom_cmd->add_option("source", src_in)->required();
    hom_cmd->add_option("target", dst_in)->required();
    hom_cmd->add_option("--mode", mode_text, "hom, embedding or iso");
    hom_cmd->callback([&] {
        const HomMode mode = parse_hom_mode(mode_text);
        const auto h = find_hom(load_fin(src_in), load_fin(dst_in), mode);
        if (!h) {
            std::cout << "none\n";
            exit_code = 1;
            return;
        }
        print({{"mode", std::string(to_string(mode))}, {"map", h->map()}});
    });

    std::string fin_in;
    auto* core_cmd = app.add_subcommand("core", "Compute the core and a retraction onto it");
    core_cmd->add_option("structure", fin_in)->required();
    core_cmd->callback([&] {
        const CoreResult c = compute_core(load_fin(fin_in));
        print({{"core", io::to_json(c.core)},
               {"elements", c.elements},
               {"retraction", c.retraction.map()},
               {"was_core", c.was_core}});
    });

    auto* is_core_cmd = app.add_subcommand("is-core", "Exit 0 if every endomorphism is an automorphism, else 1");
    is_core_cmd->add_option("structure", fin_in)->required();
    is_core_cmd->callback([&] {
        const bool core = is_core(load_fin(fin_in));
        if (g.json_out) print({{"is_core", core}});
        else std::cout << (core ? "true" : "false") << "\n";
        exit_code = core ? 0 : 1;
    });

    std::size_t endo_limit = 0;
    auto* endos_cmd = app.add_subcommand("endos", "Enumerate endomorphisms");
    endos_cmd->add_option("structure", fin_in)->required();
    endos_cmd->add_option("--limit", endo_limit, "Stop after this many (0: all)");
    endos_cmd->callback([&] {
        const auto s = load_fin(fin_in);
        const auto endos =
            enumerate_endos(s, endo_limit ? std::optional<std::size_t>(endo_limit) : std::nullopt, g.threads);
        Json maps = Json::array();
        std::size_t autos = 0;
        for (const auto& e : endos) {
            maps.push_back(e.map());
            if (is_hom(s, s, e.map(), HomMode::Iso)) ++autos;
        }
        print({{"count", endos.size()}, {"automorphisms", autos}, {"maps", std::move(maps)}});
    });

    int power = 2;
    auto* power_cmd = app.add_subcommand("power", "Full power of a finite or definable structure");
    power_cmd->add_option("structure", fin_in)->required();
    power_cmd->add_option("--d", power, "Exponent")->check(CLI::PositiveNumber);
    power_cmd->callback([&] {
        auto obj = load(fin_in);
        if (auto* d = std::get_if<DefStructure>(&obj)) print(io::to_json(full_power_def(*d, power, g.limits())));
        else print(io::to_json(full_power(std::get<FinStructure>(obj), power)));
    });

    auto* union_cmd = app.add_subcommand("union", "Disjoint union of two structures of the same kind");
    union_cmd->add_option("first", src_in)->required();
    union_cmd->add_option("second", dst_in)->required();
    union_cmd->callback([&] {
        auto a = load(src_in), b = load(dst_in);
        if (a.index() != b.index()) throw Error(ErrorCode::ParseError, "cannot unite a finite and a definable structure");
        if (auto* d = std::get_if<DefStructure>(&a)) print(io::to_json(disjoint_union_def(*d, std::get<DefStructure>(b))));
        else print(io::to_json(disjoint_union(std::get<FinStructure>(a), std::get<FinStructure>(b))));
    });

    int n = 2;
    auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of n-tuples of points");
    orbits_cmd->add_option("structure", def_in)->required();
    orbits_cmd->add_option("--n", n, "Tuple length")->check(CLI::NonNegativeNumber);
    orbits_cmd->callback([&] {
        const auto orbits = point_orbits(load_def(def_in), n, g.limits());
        if (!g.json_out) {
            std::cout << orbits.size() << "\n";
            return;
        }
        Json list = Json::array();
        for (const auto& o : orbits) list.push_back(o.encoding());
        print({{"count", orbits.size()}, {"orbits", std::move(list)}});
    });

    std::string growth_mode = "base";
    auto* growth_cmd = app.add_subcommand("growth", "Unlabelled growth u_1..u_n");
    growth_cmd->add_option("structure", def_in)->required();
    growth_cmd->add_option("--n", n, "Largest subset size")->check(CLI::PositiveNumber);
    growth_cmd->add_option("--mode", growth_mode, "base, homogeneous or reversal");
    growth_cmd->callback([&] {
        const DefStructure d = load_def(def_in);
        std::vector<std::size_t> seq;
        for (int k = 1; k <= n; ++k) {
            if (growth_mode == "reversal") seq.push_back(growth_up_to_reversal(d, k, g.limits()));
            else seq.push_back(unlabelled_growth(d, k, parse_growth_mode(growth_mode), g.limits()));
        }
        if (g.json_out) {
            print({{"mode", growth_mode}, {"growth", seq}});
            return;
        }
        for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? "," : "") << seq[i];
        std::cout << "\n";
    });

    int dim = 1;
    bool emit_orbits = false;
    auto* classify_cmd = app.add_subcommand("classify-orders", "Invariant orders on increasing d-tuples");
    classify_cmd->add_option("--d", dim, "Dimension")->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--emit-orbits", emit_orbits, "Also list each order's pair orbits");
    classify_cmd->callback([&] {
        const DefStructure d = gallery::jord(dim);
        Json list = Json::array();
        bool all_lex = true;
        for (const auto& o : enumerate_invariant_orders(d, g.limits())) {
            const auto lex = classify_signed_lex(o, d, g.limits());
            all_lex = all_lex && lex.has_value();
            Json e = {{"signed_lex", lex ? lex->to_string() : "NotLex"}};
            if (emit_orbits) e["orbits"] = o.orbits;
            list.push_back(std::move(e));
        }
        if (g.json_out || emit_orbits) print({{"d", dim}, {"count", list.size()}, {"orders", list}});
        else
            for (const auto& e : list) std::cout << e.at("signed_lex").get<std::string>() << "\n";
        exit_code = all_lex ? 0 : 1;
    });

    std::string suite = "all";
    bool timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name or all");
    verify_cmd->add_flag("--timings", timings, "Include wall times in the JSON report");
    verify_cmd->callback([&] {
        verify::Options opt{g.seed, g.limits()};
        const auto report = verify::run_suite(suite, opt);
        if (g.json_out) print(report.to_json(timings));
        else std::cout << report.summary();
        exit_code = report.passed() ? 0 : 1;
    });

    std::string export_name;
    bool manifest = false;
    auto* gallery_cmd = app.add_subcommand("gallery", "List or export gallery objects");
    gallery_cmd->add_option("--export", export_name, "Print this object as JSON");
    gallery_cmd->add_flag("--manifest", manifest, "Print the manifest as JSON");
    gallery_cmd->callback([&] {
        if (!export_name.empty()) {
            auto obj = gallery::lookup(export_name);
            if (!obj) throw Error(ErrorCode::ParseError, "no gallery object named " + export_name);
            if (auto* d = std::get_if<DefStructure>(&*obj)) print(io::to_json(*d));
            else print(io::to_json(std::get<FinStructure>(*obj)));
            return;
        }
        Json list = Json::array();
        for (const auto& e : gallery::manifest())
            list.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}, {"reference", e.reference}});
        if (manifest || g.json_out) print({{"objects", list}});
        else
            for (const auto& e : gallery::manifest()) std::cout << e.name << "\t" << e.description << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
