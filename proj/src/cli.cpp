#include "orlov/an_sing.hpp"
#include "orlov/bounds.hpp"
#include "orlov/braid.hpp"
#include "orlov/exc.hpp"
#include "orlov/fp.hpp"
#include "orlov/quiver.hpp"
#include "orlov/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <regex>
#include <sstream>

namespace orlov {

namespace {

struct Opts {
    int n = 0;
    int field = 2;
    std::string generator;
    std::string model = "an-sing";
    std::string start;
    int genus = 0;
    int max_steps = -1;
    int jobs = 1;
    std::string format = "json";
    std::string presentation;
    std::string kind;
    long long d = 0, dim = -1, ll = 0;
    std::string times;
    std::string word;
    int letters = 0;
    bool braid_moves = false;
    long budget = 1'000'000;
    bool no_timing = false;
};

nlohmann::ordered_json level_json(int v) {
    return v == kInf ? nlohmann::ordered_json() : nlohmann::ordered_json(v);
}

std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_an_class(const AnSing& m, const std::string& tok) {
    static const std::regex re(R"([Vv]_?(\d+))");
    std::smatch sm;
    if (!std::regex_match(tok, sm, re)) throw InvalidArgument("bad an_sing class " + tok);
    const int i = std::stoi(sm[1]);
    if (i < 1 || i >= m.n()) throw InvalidArgument("V" + std::to_string(i) + " out of range");
    return m.indec_of_module(i).cls;
}

int parse_quiver_class(const Quiver& q, const std::string& tok) {
    static const std::regex iv(R"([Mm]\(?(\d+),(\d+)\)?)");
    static const std::regex ps(R"(([PpSs])_?(\d+))");
    std::smatch sm;
    if (std::regex_match(tok, sm, iv)) return q.class_of({std::stoi(sm[1]), std::stoi(sm[2])});
    if (std::regex_match(tok, sm, ps)) {
        const int i = std::stoi(sm[2]);
        if (i < 1 || i > q.n()) throw InvalidArgument(tok + " out of range");
        return (sm[1] == "P" || sm[1] == "p") ? q.projective(i) : q.simple(i);
    }
    throw InvalidArgument("bad quiver class " + tok);
}

struct Built {
    std::unique_ptr<CategoryModel> model;
    std::function<int(const std::string&)> parse;
};

Built build_model(const Opts& o) {
    Built b;
    if (o.model == "an-sing" || o.model == "an_sing") {
        auto m = std::make_unique<AnSing>(o.n);
        const AnSing* raw = m.get();
        b.parse = [raw](const std::string& t) { return parse_an_class(*raw, t); };
        b.model = std::move(m);
    } else if (o.model == "quiver") {
        if (o.n > 8) throw InvalidArgument("quiver model supports n <= 8");
        auto q = std::make_unique<Quiver>(o.n);
        const Quiver* raw = q.get();
        b.parse = [raw](const std::string& t) { return parse_quiver_class(*raw, t); };
        b.model = std::move(q);
    } else {
        throw InvalidArgument("unknown model " + o.model);
    }
    return b;
}

GeneratorSet parse_generator(const Built& b, const std::string& s) {
    GeneratorSet g;
    for (const auto& tok : split_top(s)) g.push_back(b.parse(tok));
    if (g.empty()) throw InvalidArgument("--generator is required");
    validate_generator(*b.model, g);
    return g;
}

nlohmann::ordered_json names(const CategoryModel& m, const GeneratorSet& g) {
    auto a = nlohmann::ordered_json::array();
    for (int c : g) a.push_back(m.class_name(c));
    return a;
}

std::string indec_name(const CategoryModel& m, Indec x) {
    return m.class_name(x.cls) + (x.shift ? "[" + std::to_string(x.shift) + "]" : "");
}

void fill_spectrum(Report& r, const CategoryModel& m, const SpectrumReport& s) {
    r.times = s.times;
    r.gaps = s.gaps;
    for (const auto& [g, t] : s.per_generator)
        r.per_generator.push_back({{"generator", names(m, g)}, {"tritime", level_json(t)}});
    r.bounds["rdim"] = level_json(s.rdim);
    r.bounds["udim"] = level_json(s.udim);
    r.bounds["generator_count"] = s.generator_count;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("presentation is not valid JSON: ") + e.what());
    }
    try {
        return Presentation::from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("presentation schema: ") + e.what());
    }
}

void check_n(const Opts& o, int lo) {
    if (o.n < lo) throw InvalidArgument("--n must be >= " + std::to_string(lo));
}

Report dispatch(const std::string& cmd, const Opts& o) {
    Report r;
    r.command = cmd;
    if (!supported_prime(o.field)) throw InvalidArgument("unsupported --field " + std::to_string(o.field));

    if (cmd == "an-sing-spectrum" || cmd == "an-sing-tritime") {
        check_n(o, 2);
        if (o.n > 40) throw InvalidArgument("--n too large for subset enumeration");
        Opts mo = o;
        mo.model = "an-sing";
        auto b = build_model(mo);
        const auto& m = static_cast<const AnSing&>(*b.model);
        r.params = {{"n", o.n}, {"max_steps", o.max_steps}};
        if (cmd == "an-sing-spectrum") {
            fill_spectrum(r, m, orlov_spectrum(m, o.jobs, o.max_steps));
            auto cf = an_sing_closed_form_spectrum(o.n);
            r.bounds["closed_form"] = std::vector<int>(cf.begin(), cf.end());
            if (std::vector<int>(cf.begin(), cf.end()) != r.times)
                throw ConsistencyError("spectrum differs from the closed form");
            if (o.n >= 3) {
                const auto hb = compute_bound("hypersurface", {{"dim", 0}, {"ll", o.n - 1}});
                r.bounds["hypersurface_bound"] = hb.value;
            }
        } else {
            auto g = parse_generator(b, o.generator);
            const int t = tritime(m, g, o.max_steps);
            r.params["generator"] = names(m, g);
            r.per_generator.push_back({{"generator", names(m, g)}, {"tritime", level_json(t)}});
            if (t != kInf) r.times = {t};
            r.bounds["closed_form"] = an_sing_closed_form_tritime(o.n, g);
        }
        return r;
    }

    if (cmd == "quiver-spectrum" || cmd == "quiver-tritime") {
        check_n(o, 1);
        Opts mo = o;
        mo.model = "quiver";
        auto b = build_model(mo);
        r.params = {{"n", o.n}, {"field", o.field}, {"max_steps", o.max_steps}};
        if (cmd == "quiver-spectrum") {
            if (o.n > 5) throw InvalidArgument("quiver spectrum enumeration supports n <= 5");
            fill_spectrum(r, *b.model, orlov_spectrum(*b.model, o.jobs, o.max_steps));
        } else {
            auto g = parse_generator(b, o.generator);
            const int t = tritime(*b.model, g, o.max_steps);
            r.params["generator"] = names(*b.model, g);
            r.per_generator.push_back({{"generator", names(*b.model, g)}, {"tritime", level_json(t)}});
            if (t != kInf) r.times = {t};
        }
        return r;
    }

    if (cmd == "level" || cmd == "ghost-chain") {
        check_n(o, o.model == "quiver" ? 1 : 2);
        auto b = build_model(o);
        const auto& m = *b.model;
        auto g = parse_generator(b, o.generator);
        r.params = {{"model", o.model}, {"n", o.n}, {"generator", names(m, g)}, {"max_steps", o.max_steps}};
        if (cmd == "level") {
            const auto d = tritime_detail(m, g, o.max_steps);
            nlohmann::ordered_json lv = nlohmann::ordered_json::object();
            for (int c = 0; c < m.class_count(); ++c) lv[m.class_name(c)] = level_json(d.saturation.level[size_t(c)]);
            r.per_generator.push_back({{"generator", names(m, g)}, {"tritime", level_json(d.value)}, {"levels", lv}});
            r.bounds["rounds"] = d.saturation.rounds;
            r.bounds["stabilized"] = d.saturation.stabilized;
            if (d.value != kInf) r.times = {d.value};
        } else {
            if (o.start.empty()) throw InvalidArgument("--start is required");
            const Indec s = m.normalize({b.parse(o.start), 0});
            GhostChain ch;
            try {
                ch = ghost_chain(m, g, s);
            } catch (const NonTerminatingChain& e) {
                throw ConsistencyError(e.what());
            }
            auto maps = nlohmann::ordered_json::array();
            for (const auto& f : ch.maps)
                maps.push_back({{"source", indec_name(m, f.src)}, {"target", indec_name(m, f.dst)}, {"tag", f.tag}});
            r.params["start"] = m.class_name(s.cls);
            r.per_generator.push_back({{"generator", names(m, g)}, {"start", m.class_name(s.cls)},
                                       {"chain_length", ch.length}, {"chain", maps}});
        }
        return r;
    }

    if (cmd == "loewy") {
        if (!o.presentation.empty()) {
            auto p = load_presentation(o.presentation);
            r.params = {{"presentation", o.presentation}};
            r.bounds["loewy_length"] = loewy_length(p);
        } else {
            check_n(o, 1);
            if (o.n > 40) throw InvalidArgument("--n too large");
            r.params = {{"n", o.n}};
            const auto ch = loewy_length_end_algebra_chain(o.n);
            Quiver q(o.n);
            auto maps = nlohmann::ordered_json::array();
            for (const auto& f : ch.witness)
                maps.push_back({{"source", indec_name(q, f.src)}, {"target", indec_name(q, f.dst)}, {"degree", f.tag}});
            r.bounds["loewy_length"] = ch.loewy_length;
            r.bounds["witness"] = maps;
        }
        return r;
    }

    if (cmd == "ll-infinity") {
        Presentation p;
        if (!o.presentation.empty()) {
            p = load_presentation(o.presentation);
            r.params = {{"presentation", o.presentation}};
        } else {
            check_n(o, 2);
            if (o.n > 12) throw InvalidArgument("--n too large");
            p = koszul_dual_truncated_an(o.n);
            r.params = {{"n", o.n}, {"preset", "koszul-dual-truncated-an"}};
        }
        const auto warnings = p.validate();
        r.bounds["ll_infinity"] = loewy_length_infinity(p);
        r.bounds["filtration_dims"] = ll_infinity_filtration(p);
        if (o.presentation.empty()) {
            const auto coh = koszul_dual_truncated_an_cohomology(o.n);
            const auto db = dual_gen_time_bounds(coh, &p);
            r.bounds["dual_lower"] = db.lower;
            r.bounds["dual_upper"] = db.upper;
        } else {
            r.bounds["dual_upper"] = loewy_length_infinity(p) - 1;
        }
        r.bounds["warnings"] = warnings;
        return r;
    }

    if (cmd == "mutation-walk") {
        check_n(o, 1);
        if (o.n > 6) throw InvalidArgument("mutation walk supports n <= 6");
        Quiver q(o.n);
        std::vector<Indec> coll;
        if (o.generator.empty()) {
            for (int i = o.n; i >= 1; --i) coll.push_back({q.projective(i), 0});
        } else {
            for (const auto& tok : split_top(o.generator)) coll.push_back({parse_quiver_class(q, tok), 0});
        }
        r.params = {{"model", "quiver"}, {"n", o.n}};
        auto in = nlohmann::ordered_json::array();
        for (const auto& x : coll) in.push_back(q.class_name(x.cls));
        r.params["collection"] = in;
        const auto w = mutation_walk(q, coll, o.max_steps);
        for (const auto& s : w.steps) {
            auto comps = nlohmann::ordered_json::array();
            for (const auto& x : s.components) comps.push_back(indec_name(q, x));
            r.per_generator.push_back({{"generator", comps}, {"tritime", level_json(s.tritime)}, {"step", s.label}});
        }
        r.times = w.times;
        r.gaps = w.gaps;
        r.bounds["component_max"] = w.component_max;
        r.bounds["max_increment"] = w.component_max + 1;
        return r;
    }

    if (cmd == "braid-bound") {
        RewriteOptions opt;
        opt.braid_moves = o.braid_moves;
        opt.budget = o.budget;
        if (!o.word.empty()) {
            if (o.letters < 1) throw InvalidArgument("--m is required with --word");
            TwistWord w;
            std::istringstream is(o.word);
            std::string tok;
            while (is >> tok) {
                try {
                    w.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw InvalidArgument("bad letter " + tok);
                }
            }
            const auto cfg = SphericalConfig::a_m(o.letters);
            const auto res = commutation_rewrite_detail(w, cfg, opt);
            if (w.empty()) throw InvalidArgument("empty word gives no bound");
            r.params = {{"word_length", w.size()}, {"config", "A_" + std::to_string(o.letters)}};
            r.bounds["blocks"] = res.blocks;
            r.bounds["upper"] = res.blocks - 1;
            r.bounds["rewritten"] = res.word;
            return r;
        }
        if (o.genus < 1) throw InvalidArgument("--genus must be >= 1");
        if (o.genus > 200) throw InvalidArgument("--genus too large");
        const auto gb = genus_bound(o.genus);
        r.params = {{"genus", o.genus}, {"word_length", 2 * o.genus * (4 * o.genus + 2)}};
        r.bounds["lower"] = gb.lower;
        r.bounds["lower_provenance"] = "4g, recorded constant from the Fukaya-category ghost chain";
        r.bounds["upper"] = gb.upper;
        r.bounds["upper_provenance"] = "Matsumoto relation word, orthogonal block partition minus one";
        return r;
    }

    if (cmd == "bounds") {
        std::map<std::string, long long> p;
        if (o.n) p["n"] = o.n;
        if (o.d) p["d"] = o.d;
        if (o.dim >= 0) p["dim"] = o.dim;
        if (o.ll) p["ll"] = o.ll;
        if (o.genus) p["g"] = o.genus;
        if (o.kind.empty()) throw InvalidArgument("--kind is required");
        const auto b = compute_bound(o.kind, p);
        r.params["kind"] = o.kind;
        for (const auto& [k, v] : b.params) r.params[k] = v;
        r.bounds["value"] = b.value;
        r.bounds["provenance"] = b.provenance;
        r.bounds["non_tight"] = b.non_tight;
        return r;
    }

    if (cmd == "gaps") {
        std::vector<int> t;
        for (const auto& tok : split_top(o.times)) {
            try {
                t.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InvalidArgument("bad time " + tok);
            }
            if (t.back() < 0) throw InvalidArgument("times are non-negative");
        }
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        r.params["times"] = t;
        r.times = t;
        r.gaps = gaps(t);
        return r;
    }

    throw InvalidArgument("unknown command " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generation times, ghost chains and Orlov spectra of small triangulated categories", "orlov"};
    app.require_subcommand(1);
    Opts o;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"an-sing-spectrum", "spectrum of the stable category of k[u]/(u^n)"},
        {"an-sing-tritime", "generation time of a set of V_i"},
        {"quiver-spectrum", "spectrum of D^b of the linear A_n quiver"},
        {"quiver-tritime", "generation time of a set of interval modules"},
        {"level", "per-class levels (cone saturation, checked against ghost chains)"},
        {"ghost-chain", "a longest ghost chain out of --start"},
        {"loewy", "Loewy length of the quiver's graded endomorphism algebra or of --presentation"},
        {"ll-infinity", "A-infinity Loewy length of --presentation or the truncated Koszul preset"},
        {"mutation-walk", "generation times along the left mutations to the dual collection"},
        {"braid-bound", "generation-time bounds from twist relation words"},
        {"bounds", "closed-form bound calculators"},
        {"gaps", "gaps of a set of integers"},
    };
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.name, s.help);
        sc->add_option("--n", o.n, "size parameter");
        sc->add_option("--field", o.field, "prime field characteristic")->capture_default_str();
        sc->add_option("--generator", o.generator, "comma list such as V1,V3 or M(1,2),P3");
        sc->add_option("--model", o.model, "an-sing or quiver")->capture_default_str();
        sc->add_option("--start", o.start, "start class for ghost-chain");
        sc->add_option("--genus", o.genus, "surface genus");
        sc->add_option("--max-steps", o.max_steps, "saturation rounds (default 4 x classes)");
        sc->add_option("--jobs", o.jobs, "worker threads for generator enumeration")
            ->check(CLI::Range(1, 256));
        sc->add_option("--format", o.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sc->add_option("--presentation", o.presentation, "JSON presentation file");
        sc->add_option("--kind", o.kind, "bound kind");
        sc->add_option("--d", o.d, "degree");
        sc->add_option("--dim", o.dim, "dimension");
        sc->add_option("--ll", o.ll, "Loewy length");
        sc->add_option("--times", o.times, "comma list of integers");
        sc->add_option("--word", o.word, "whitespace separated letters");
        sc->add_option("--m", o.letters, "number of spherical objects (A_m)");
        sc->add_flag("--braid-moves", o.braid_moves, "also search aba = bab moves");
        sc->add_option("--budget", o.budget, "evaluation budget for braid moves");
        sc->add_flag("--no-timing", o.no_timing, "emit null elapsed_ms");
    }

    std::vector<std::string> store;
    store.push_back("orlov");
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Report r = dispatch(cmd, o);
        if (!o.no_timing)
            r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        out << emit_report(r, o.format);
        return 0;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const NonTerminatingChain& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonNilpotent& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace orlov
