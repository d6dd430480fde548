#include "fsdet/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fsdet/bounds.hpp"
#include "fsdet/determinants.hpp"
#include "fsdet/proofcheck.hpp"
#include "fsdet/report.hpp"
#include "fsdet/search.hpp"
#include "fsdet/starlike.hpp"
#include "fsdet/verify.hpp"

namespace fsdet {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(cur, &used);
        } catch (const std::exception&) {
            throw Usage("cannot parse number `" + cur + "`");
        }
        if (used != cur.size()) throw Usage("cannot parse number `" + cur + "`");
        out.push_back(v);
    }
    if (out.empty()) throw Usage("expected at least one number");
    return out;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ':')) parts.push_back(cur);
    if (parts.size() != 3) throw Usage("grid must look like a:b:step");
    const std::vector<double> a = parse_doubles(parts[0]);
    const std::vector<double> b = parse_doubles(parts[1]);
    const std::vector<double> step = parse_doubles(parts[2]);
    if (!(step[0] > 0.0) || b[0] < a[0]) throw Usage("grid must satisfy a <= b, step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = a[0] + i * step[0];
        if (v > b[0] + 1e-9) break;
        out.push_back(v);
    }
    return out;
}

Functional make_functional(const std::string& name, const std::vector<double>& params) {
    if (name == "fekete_szego") {
        if (params.size() != 1) throw Usage("fekete_szego takes one parameter (gamma)");
        return Functional::fekete_szego(params[0]);
    }
    if (name == "h2_2") {
        if (params.size() != 1) throw Usage("h2_2 takes one parameter (alpha)");
        return Functional::h2_2(params[0]);
    }
    if (name == "b2_1") {
        if (params.size() != 1) throw Usage("b2_1 takes one parameter (beta)");
        return Functional::b2_1(params[0]);
    }
    if (name == "h3") {
        if (params.size() != 3) throw Usage("h3 takes three parameters (l1,l2,l3)");
        return Functional::h3(params[0], params[1], params[2]);
    }
    throw Usage("unknown functional `" + name + "`");
}

Functional::Kind kind_from_name(const std::string& name) {
    return make_functional(name, name == "h3" ? std::vector<double>{1, 1, 1}
                                              : std::vector<double>{1})
        .kind;
}

StarlikeCoeffs load_function(const std::string& spec, int order) {
    std::string name = spec;
    double param = 0.0;
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        const std::vector<double> p = parse_doubles(spec.substr(colon + 1));
        param = p[0];
    }
    if (name == "koebe") return catalog(CatalogId::koebe, 0.0, order);
    if (name == "two_symmetric") return catalog(CatalogId::two_symmetric, 0.0, order);
    if (name == "kfold") return catalog(CatalogId::kfold, param, order);
    if (name == "paper_thm2_literal") {
        return catalog(CatalogId::paper_thm2_literal, 0.0, order);
    }
    if (name == "paper_thm3_literal") {
        return catalog(CatalogId::paper_thm3_literal, param, order);
    }

    std::ifstream in(spec, std::ios::binary);
    if (!in.good()) {
        throw Usage("unknown function `" + spec +
                    "` (not a catalog name, not a readable csv file)");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const TaylorCoeffs coeffs = coeffs_from_csv(buf.str());
    if (coeffs.order() < 1 || std::abs(coeffs.at(0)) > 1e-12 ||
        std::abs(coeffs.at(1) - 1.0) > 1e-12) {
        throw Usage("coefficient file must describe a normalized function (a0=0, a1=1)");
    }
    StarlikeCoeffs f;
    f.a = coeffs.coeffs;
    f.provenance = spec;
    return f;
}

Json bound_json(const BoundValue& b) {
    Json obj = Json::object();
    obj.set("value", b.value);
    obj.set("branch", b.branch);
    if (b.alt_value) {
        obj.set("alt_value", *b.alt_value);
    } else {
        obj.set("alt_value", nullptr);
    }
    obj.set("consistent", b.consistent);
    return obj;
}

Json witness_json(const SearchResult& r) {
    Json obj = Json::object();
    if (const AtomMixture* mix = std::get_if<AtomMixture>(&r.witness)) {
        obj.set("type", "atoms");
        Json weights = Json::array();
        for (double w : mix->weights) weights.push(w);
        Json angles = Json::array();
        for (double a : mix->angles) angles.push(a);
        obj.set("weights", std::move(weights));
        obj.set("angles", std::move(angles));
    } else {
        const Lemma3Params& p = std::get<Lemma3Params>(r.witness);
        obj.set("type", "lemma3");
        obj.set("c1", p.c1);
        obj.set("x_re", p.x.real());
        obj.set("x_im", p.x.imag());
        obj.set("z_re", p.z.real());
        obj.set("z_im", p.z.imag());
    }
    return obj;
}

Json search_json(const SearchResult& r) {
    Json obj = Json::object();
    obj.set("value", r.value);
    obj.set("bound", bound_json(r.bound));
    obj.set("gap", r.gap);
    obj.set("witness", witness_json(r));
    obj.set("seed", r.seed);
    obj.set("restarts", static_cast<long long>(r.restarts));
    obj.set("iterations", r.iterations);
    return obj;
}

struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::array();
    Table table;
    int exit_code = 0;
};

void emit(const Report& report, const std::string& format, std::uint64_t seed,
          std::ostream& out) {
    if (format == "json") {
        Json doc = Json::object();
        doc.set("command", report.command);
        doc.set("params", report.params);
        doc.set("results", report.results);
        doc.set("seed", seed);
        doc.set("version", kVersion);
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << table_to_csv(report.table);
    } else {
        out << table_to_md(report.table);
    }
}

std::uint64_t default_seed() {
    const char* env = std::getenv("FSDET_SEED");
    if (!env || !*env) return 42;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Usage("FSDET_SEED is not an integer");
    return static_cast<std::uint64_t>(v);
}

std::string bool_cell(bool v) { return v ? "true" : "false"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        CLI::App app{"coefficient determinants with Fekete-Szego parameters "
                     "for starlike functions"};
        app.require_subcommand(1);
        app.fallthrough();
        app.set_config("--config");

        std::string format = "json";
        app.add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        std::uint64_t seed = default_seed();
        app.add_option("--seed", seed, "seed override (default: FSDET_SEED or 42)");

        // bound
        CLI::App* bound_cmd = app.add_subcommand("bound", "evaluate a sharp-bound formula");
        std::string theorem;
        std::string bound_params;
        bound_cmd->add_option("--theorem", theorem)
            ->required()
            ->check(CLI::IsMember({"t1", "t2", "t3", "t4"}));
        bound_cmd->add_option("--params", bound_params)->required();

        // eval
        CLI::App* eval_cmd =
            app.add_subcommand("eval", "evaluate a functional on a catalog or csv function");
        std::string eval_function, eval_functional, eval_params;
        int eval_order = kDefaultOrder;
        eval_cmd->add_option("--function", eval_function)->required();
        eval_cmd->add_option("--functional", eval_functional)->required();
        eval_cmd->add_option("--params", eval_params)->required();
        eval_cmd->add_option("--order", eval_order)->check(CLI::Range(5, 64));

        // search
        CLI::App* search_cmd =
            app.add_subcommand("search", "estimate the supremum of a functional");
        std::string search_functional, search_params, backend = "atoms";
        SearchConfig cfg;
        search_cmd->add_option("--functional", search_functional)->required();
        search_cmd->add_option("--params", search_params)->required();
        search_cmd->add_option("--backend", backend)
            ->check(CLI::IsMember({"atoms", "lemma3"}));
        search_cmd->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber);
        search_cmd->add_option("--atoms", cfg.atoms)->check(CLI::PositiveNumber);
        search_cmd->add_option("--max-iters", cfg.max_iters)->check(CLI::PositiveNumber);
        search_cmd->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber);
        search_cmd->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
        search_cmd->add_option("--grid-size", cfg.lemma3_grid)->check(CLI::Range(2, 257));

        // sweep
        CLI::App* sweep_cmd =
            app.add_subcommand("sweep", "per-parameter sharpness report for a functional");
        std::string sweep_functional, sweep_grid;
        SearchConfig sweep_cfg;
        sweep_cmd->add_option("--functional", sweep_functional)->required();
        sweep_cmd->add_option("--grid", sweep_grid, "a:b:step")->required();
        sweep_cmd->add_option("--restarts", sweep_cfg.restarts)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--atoms", sweep_cfg.atoms)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--max-iters", sweep_cfg.max_iters)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--tol", sweep_cfg.tol)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--threads", sweep_cfg.threads)->check(CLI::PositiveNumber);
        sweep_cmd->add_option("--grid-size", sweep_cfg.lemma3_grid)->check(CLI::Range(2, 257));

        // table
        CLI::App* table_cmd = app.add_subcommand("table", "reference-value audit tables");
        std::string which_table;
        table_cmd->add_option("which", which_table)->required();

        // verify
        CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
        std::string suite = "all";
        long long samples = 10000;
        int proof_grid = 512;
        verify_cmd->add_option("--suite", suite)
            ->check(CLI::IsMember({"lemmas", "identities", "proofs", "all"}));
        verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
        verify_cmd->add_option("--grid", proof_grid)->check(CLI::Range(100, 4096));

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(std::move(reversed));
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }

        Report report;

        if (app.got_subcommand(bound_cmd)) {
            report.command = "bound";
            const std::vector<double> p = parse_doubles(bound_params);
            BoundValue b;
            if (theorem == "t4") {
                if (p.size() != 3) throw Usage("t4 takes three parameters");
                b = t4_bound(p[0], p[1], p[2]);
            } else {
                if (p.size() != 1) throw Usage(theorem + " takes one parameter");
                b = theorem == "t1" ? t1_bound(p[0])
                                    : theorem == "t2" ? t2_bound(p[0]) : t3_bound(p[0]);
            }
            Json params = Json::object();
            params.set("theorem", theorem);
            Json plist = Json::array();
            for (double v : p) plist.push(v);
            params.set("params", std::move(plist));
            report.params = std::move(params);
            report.results.push(bound_json(b));
            report.table.header = {"theorem", "params", "value", "branch", "alt_value",
                                   "consistent"};
            std::string joined;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i) joined += ';';
                joined += format_full(p[i]);
            }
            report.table.rows.push_back(
                {theorem, joined,
                 format == "md" ? format_short(b.value) : format_full(b.value), b.branch,
                 b.alt_value ? (format == "md" ? format_short(*b.alt_value)
                                               : format_full(*b.alt_value))
                             : "",
                 bool_cell(b.consistent)});
        } else if (app.got_subcommand(eval_cmd)) {
            report.command = "eval";
            const StarlikeCoeffs f = load_function(eval_function, eval_order);
            const std::vector<double> p = parse_doubles(eval_params);
            const Functional fn = make_functional(eval_functional, p);
            const Complex value = functional_eval(f, fn);
            std::optional<BoundValue> bound;
            try {
                bound = bound_for(fn);
            } catch (const std::exception&) {
                // parameter outside the bound's hypothesis: report the value alone
            }
            Json params = Json::object();
            params.set("function", f.provenance);
            params.set("functional", fn.name());
            Json plist = Json::array();
            for (double v : p) plist.push(v);
            params.set("params", std::move(plist));
            params.set("order", static_cast<long long>(eval_order));
            report.params = std::move(params);
            Json result = Json::object();
            result.set("re", value.real());
            result.set("im", value.imag());
            result.set("modulus", std::abs(value));
            result.set("suspect", f.suspect);
            if (bound) result.set("bound", bound_json(*bound));
            report.results.push(std::move(result));
            auto fmt = format == "md" ? format_short : format_full;
            report.table.header = {"function", "functional", "re", "im", "modulus",
                                   "suspect"};
            report.table.rows.push_back({f.provenance, fn.name(), fmt(value.real()),
                                         fmt(value.imag()), fmt(std::abs(value)),
                                         bool_cell(f.suspect)});
        } else if (app.got_subcommand(search_cmd)) {
            report.command = "search";
            cfg.seed = seed;
            const Functional fn = make_functional(search_functional, parse_doubles(search_params));
            const SearchResult r =
                backend == "atoms" ? sup_over_atoms(fn, cfg) : sup_over_lemma3(fn, cfg);
            Json params = Json::object();
            params.set("functional", fn.name());
            Json plist = Json::array();
            if (fn.kind == Functional::Kind::h3) {
                for (double v : fn.lambdas) plist.push(v);
            } else {
                plist.push(fn.param);
            }
            params.set("params", std::move(plist));
            params.set("backend", backend);
            params.set("atoms", static_cast<long long>(cfg.atoms));
            params.set("restarts", static_cast<long long>(cfg.restarts));
            params.set("max_iters", static_cast<long long>(cfg.max_iters));
            params.set("tol", cfg.tol);
            params.set("grid_size", static_cast<long long>(cfg.lemma3_grid));
            report.params = std::move(params);
            report.results.push(search_json(r));
            auto fmt = format == "md" ? format_short : format_full;
            report.table.header = {"functional", "backend", "value", "bound", "gap",
                                   "iterations"};
            report.table.rows.push_back({fn.name(), backend, fmt(r.value),
                                         fmt(r.bound.value), fmt(r.gap),
                                         std::to_string(r.iterations)});
        } else if (app.got_subcommand(sweep_cmd)) {
            report.command = "sweep";
            sweep_cfg.seed = seed;
            const Functional::Kind kind = kind_from_name(sweep_functional);
            const std::vector<double> grid = parse_grid(sweep_grid);
            const SweepReport sweep = sharpness_sweep(kind, grid, sweep_cfg);
            Json params = Json::object();
            params.set("functional", sweep_functional);
            params.set("grid", sweep_grid);
            params.set("atoms", static_cast<long long>(sweep_cfg.atoms));
            params.set("restarts", static_cast<long long>(sweep_cfg.restarts));
            report.params = std::move(params);
            auto fmt = format == "md" ? format_short : format_full;
            report.table.header = {"param", "value", "bound", "gap", "attained",
                                   "value_atoms", "value_lemma3"};
            for (const SweepEntry& entry : sweep.entries) {
                Json row = Json::object();
                row.set("param", entry.param);
                row.set("value", entry.value);
                row.set("bound", bound_json(entry.atoms.bound));
                row.set("gap", entry.gap);
                row.set("attained", entry.attained);
                row.set("atoms", search_json(entry.atoms));
                if (entry.lemma3) row.set("lemma3", search_json(*entry.lemma3));
                report.results.push(std::move(row));
                report.table.rows.push_back(
                    {fmt(entry.param), fmt(entry.value), fmt(entry.atoms.bound.value),
                     fmt(entry.gap), bool_cell(entry.attained), fmt(entry.atoms.value),
                     entry.lemma3 ? fmt(entry.lemma3->value) : ""});
            }
        } else if (app.got_subcommand(table_cmd)) {
            report.command = "table";
            if (which_table != "corollary4") {
                throw Usage("unknown table `" + which_table + "` (expected corollary4)");
            }
            Json params = Json::object();
            params.set("which", which_table);
            report.params = std::move(params);
            auto fmt = format == "md" ? format_short : format_full;
            report.table.header = {"l1", "l2", "l3", "printed", "recomputed", "match"};
            for (const Corollary4Row& row : corollary4_table()) {
                Json obj = Json::object();
                Json lambdas = Json::array();
                for (double l : row.lambdas) lambdas.push(l);
                obj.set("lambdas", std::move(lambdas));
                obj.set("printed", row.printed);
                obj.set("recomputed", row.recomputed);
                obj.set("match", row.match);
                report.results.push(std::move(obj));
                report.table.rows.push_back({fmt(row.lambdas[0]), fmt(row.lambdas[1]),
                                             fmt(row.lambdas[2]), fmt(row.printed),
                                             fmt(row.recomputed), bool_cell(row.match)});
            }
        } else if (app.got_subcommand(verify_cmd)) {
            report.command = "verify";
            std::vector<SuiteReport> suites;
            if (suite == "lemmas" || suite == "all") {
                suites.push_back(lemmas_suite(samples, seed));
            }
            if (suite == "identities" || suite == "all") {
                suites.push_back(identities_suite(samples, seed));
            }
            if (suite == "proofs" || suite == "all") {
                suites.push_back(proofs_suite(proof_grid));
            }
            Json params = Json::object();
            params.set("suite", suite);
            params.set("samples", samples);
            params.set("grid", static_cast<long long>(proof_grid));
            report.params = std::move(params);
            auto fmt = format == "md" ? format_short : format_full;
            report.table.header = {"suite", "check", "samples", "violations",
                                   "max_deviation", "pass"};
            bool all_pass = true;
            for (const SuiteReport& sr : suites) {
                all_pass = all_pass && sr.pass();
                for (const SuiteCheck& check : sr.checks) {
                    Json obj = Json::object();
                    obj.set("suite", sr.suite);
                    obj.set("check", check.label);
                    obj.set("samples", check.samples);
                    obj.set("violations", check.violations);
                    obj.set("max_deviation", check.max_deviation);
                    obj.set("pass", check.pass);
                    report.results.push(std::move(obj));
                    report.table.rows.push_back(
                        {sr.suite, check.label, std::to_string(check.samples),
                         std::to_string(check.violations), fmt(check.max_deviation),
                         bool_cell(check.pass)});
                }
            }
            report.exit_code = all_pass ? 0 : 1;
        }

        emit(report, format, seed, out);
        return report.exit_code;
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fsdet
