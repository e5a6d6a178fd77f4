#include "svmc/cli.hpp"

#include <charconv>
#include <fstream>

#include "CLI11.hpp"
#include "svmc/evaluator.hpp"
#include "svmc/io.hpp"
#include "svmc/oracle.hpp"

namespace svmc {
namespace {

struct Common {
    std::string net_path;
    std::string formula;
    std::string capacity = "inf";
    std::string capacities_path;
    std::size_t max_iterations = 10000;
    bool json = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Capacity parse_capacity(const std::string& text) {
    if (text == "inf" || text == "∞") return std::nullopt;
    Count k = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || end != text.data() + text.size())
        throw UsageError("capacity must be a natural number or 'inf', got '" + text + "'");
    return k;
}

void add_common(CLI::App* cmd, Common& c, bool formula_required) {
    cmd->add_option("--net", c.net_path, "PNML file")->required();
    auto* f = cmd->add_option("--formula", c.formula, "CTL formula");
    if (formula_required) f->required();
    cmd->add_option("--capacity", c.capacity, "uniform capacity for unbounded places (K or inf)");
    cmd->add_option("--capacities", c.capacities_path, "JSON file {\"capacities\": {place: k}}; wins over --capacity");
    cmd->add_option("--max-iterations", c.max_iterations, "iteration cap per fixpoint")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", c.json, "machine-readable output");
}

PetriNet load_net(const Common& c) {
    PetriNet net = load_pnml(c.net_path);
    if (!c.capacities_path.empty()) net = net.with_place_capacities(load_capacity_sidecar(c.capacities_path));
    return net.with_default_capacity(parse_capacity(c.capacity));
}

Vector capacity_box(const PetriNet& net, const char* what) {
    std::vector<Count> box;
    for (std::size_t p = 0; p < net.place_count(); ++p) {
        if (!net.capacity(p)) throw UsageError(std::string(what) + " needs a finite capacity for every place");
        box.push_back(*net.capacity(p));
    }
    return Vector(std::move(box));
}

Vector parse_marking(const PetriNet& net, const std::string& text) {
    Vector m = Vector::parse(text);
    if (m.dim() != net.place_count())
        throw UsageError("marking '" + text + "' has " + std::to_string(m.dim()) + " components, the net has " +
                         std::to_string(net.place_count()) + " places");
    return m;
}

Json stats_json(const EvalStats& s) {
    return Json{{"iterations", s.total_iterations()}, {"fixpoint_iterations", s.iterations},
                {"peak", s.peak},
                {"final", s.final},
                {"ms", s.ms},
                {"saturation_levels", s.saturation_levels}};
}

int cmd_check(const Common& c, bool no_saturation, const std::vector<std::string>& contains_args, bool count,
              bool stats, std::ostream& out, std::ostream& err) {
    PetriNet net = load_net(c);
    Formula f = prepare_formula(c.formula);
    EvalOptions opts;
    opts.saturation = !no_saturation;
    opts.max_iterations = c.max_iterations;
    Evaluator ev(net, opts);
    SymbolicVectorSet result(net.place_count());
    try {
        result = ev.eval(f);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << " (last iterate has " << e.last_iterate().size() << " members)\n";
        return kExitNonConvergence;
    }

    std::vector<std::pair<std::string, bool>> membership;
    for (const std::string& text : contains_args)
        membership.emplace_back(parse_marking(net, text).to_string(), contains(result, parse_marking(net, text)));
    std::optional<BigCount> n;
    if (count) n = count_within(result, capacity_box(net, "--count"));

    if (c.json) {
        Json report{{"formula", c.formula},
                    {"core", f.to_string()},
                    {"places", net.places()},
                    {"options",
                     {{"capacity", c.capacity}, {"saturation", opts.saturation}, {"max_iterations", opts.max_iterations}}},
                    {"result", to_json(result)}};
        if (stats) report["stats"] = stats_json(ev.stats());
        if (!membership.empty()) {
            Json m = Json::object();
            for (const auto& [k, v] : membership) m[k] = v;
            report["membership"] = m;
        }
        if (n) report["count"] = n->str();
        out << report.dump(2) << "\n";
        return kExitOk;
    }
    out << "result: " << result.to_string() << "\n";
    out << "members: " << result.size() << "\n";
    for (const auto& [k, v] : membership) out << "contains (" << k << "): " << (v ? "true" : "false") << "\n";
    if (n) out << "count: " << n->str() << "\n";
    if (stats) {
        const EvalStats& s = ev.stats();
        out << "iterations: " << s.total_iterations() << "\npeak: " << s.peak << "\nfinal: " << s.final
            << "\nms: " << s.ms << "\n";
        if (!s.saturation_levels.empty()) {
            out << "saturation levels:";
            for (Count l : s.saturation_levels) out << ' ' << l;
            out << "\n";
        }
    }
    return kExitOk;
}

void print_failure(std::ostream& out, const EquivReport& r) {
    out << "counterexample: (" << r.counterexample->to_string() << ") symbolic=" << (r.symbolic_member ? "true" : "false")
        << " explicit=" << (r.explicit_member ? "true" : "false") << "\n";
}

int cmd_verify(const Common& c, std::size_t random_cases, std::uint64_t seed, std::size_t budget, std::ostream& out) {
    const SymbolicEvaluator evaluator = default_symbolic_evaluator(c.max_iterations);
    if (random_cases > 0) {
        RandomSuiteOptions o;
        o.seed = seed;
        o.cases = random_cases;
        RandomSuiteReport r = run_random_suite(o, evaluator);
        if (c.json) {
            Json j{{"cases", r.cases}, {"failures", r.failures}, {"pass", r.failures == 0}};
            if (r.first_failure) {
                j["first_failure"] = {{"case", r.first_failure->case_index},
                                      {"net", r.first_failure->net_summary},
                                      {"formula", r.first_failure->formula},
                                      {"counterexample", to_json(*r.first_failure->report.counterexample)}};
            }
            out << j.dump(2) << "\n";
        } else {
            out << (r.failures == 0 ? "PASS" : "FAIL") << " random suite: " << r.cases << " cases, " << r.failures
                << " failures (seed " << seed << ")\n";
            if (r.first_failure) {
                out << "case " << r.first_failure->case_index << ": " << r.first_failure->net_summary << "\nformula: "
                    << r.first_failure->formula << "\n";
                print_failure(out, r.first_failure->report);
            }
        }
        return r.failures == 0 ? kExitOk : kExitMismatch;
    }
    if (c.formula.empty()) throw UsageError("verify needs --formula or --random N");
    PetriNet net = load_net(c);
    EquivReport r = check_equiv(net, parse_formula(c.formula), std::nullopt, evaluator, budget);
    if (c.json) {
        Json j{{"pass", r.pass}, {"states", r.states}, {"satisfying", r.satisfying}};
        if (r.counterexample) {
            j["counterexample"] = to_json(*r.counterexample);
            j["symbolic"] = r.symbolic_member;
            j["explicit"] = r.explicit_member;
        }
        out << j.dump(2) << "\n";
    } else {
        out << (r.pass ? "PASS" : "FAIL") << ": " << r.states << " states, " << r.satisfying << " satisfying\n";
        if (!r.pass) print_failure(out, r);
    }
    return r.pass ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const Common& c, const std::string& svs_path, std::size_t limit, std::ostream& out,
                  std::ostream& err) {
    PetriNet net = load_net(c);
    Vector box = capacity_box(net, "enumerate");
    SymbolicVectorSet result(net.place_count());
    if (!svs_path.empty()) {
        std::ifstream in(svs_path);
        if (!in) throw UsageError("cannot open " + svs_path);
        Json j = Json::parse(in);
        result = svs_from_json(j.is_object() && j.contains("result") ? j.at("result") : j, net.place_count());
    } else {
        if (c.formula.empty()) throw UsageError("enumerate needs --formula or --svs");
        EvalOptions opts;
        opts.max_iterations = c.max_iterations;
        try {
            result = eval(net, prepare_formula(c.formula), opts);
        } catch (const NonConvergence& e) {
            err << "error: " << e.what() << "\n";
            return kExitNonConvergence;
        }
    }
    std::vector<Vector> points = enumerate_within(result, box);
    if (limit > 0 && points.size() > limit) points.erase(points.begin() + static_cast<std::ptrdiff_t>(limit), points.end());
    if (c.json) {
        Json arr = Json::array();
        for (const Vector& v : points) arr.push_back(to_json(v));
        out << Json{{"count", count_within(result, box).str()}, {"markings", arr}}.dump(2) << "\n";
    } else {
        for (const Vector& v : points) out << "(" << v.to_string() << ")\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Global CTL model checking of capacity Petri nets over symbolic vector sets", "svmc"};
    app.require_subcommand(1);

    Common check_opts, verify_opts, enum_opts;
    bool no_saturation = false, count = false, stats = false;
    std::vector<std::string> contains_args;
    auto* check = app.add_subcommand("check", "evaluate a formula and print the satisfying set");
    add_common(check, check_opts, true);
    check->add_flag("--no-saturation", no_saturation, "plain fixpoints for EF");
    check->add_option("--contains", contains_args, "membership query, e.g. 1,0,2 (repeatable)");
    check->add_flag("--count", count, "number of satisfying markings within the capacities");
    check->add_flag("--stats", stats, "iterations, peak and final member counts, time");

    std::size_t random_cases = 0, budget = ExplicitSpace::kDefaultBudget;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "compare against the explicit-state checker");
    verify->add_option("--net", verify_opts.net_path, "PNML file");
    verify->add_option("--formula", verify_opts.formula, "CTL formula");
    verify->add_option("--capacity", verify_opts.capacity, "uniform capacity for unbounded places");
    verify->add_option("--capacities", verify_opts.capacities_path, "per-place capacity JSON");
    verify->add_option("--max-iterations", verify_opts.max_iterations, "iteration cap per fixpoint")
        ->check(CLI::PositiveNumber);
    verify->add_option("--random", random_cases, "run N seeded random cases instead");
    verify->add_option("--seed", seed, "seed for --random");
    verify->add_option("--budget", budget, "maximum explicit state count");
    verify->add_flag("--json", verify_opts.json, "machine-readable output");

    std::string svs_path;
    std::size_t limit = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list the satisfying markings within the capacities");
    add_common(enumerate, enum_opts, false);
    enumerate->add_option("--svs", svs_path, "decode a saved JSON result instead of evaluating");
    enumerate->add_option("--limit", limit, "print at most N markings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return cmd_check(check_opts, no_saturation, contains_args, count, stats, out, err);
        if (*verify) {
            if (random_cases == 0 && verify_opts.net_path.empty()) throw UsageError("verify needs --net or --random N");
            return cmd_verify(verify_opts, random_cases, seed, budget, out);
        }
        return cmd_enumerate(enum_opts, svs_path, limit, out, err);
    } catch (const CtlSyntaxError& e) {
        err << "formula error: " << e.what() << "\n";
    } catch (const PnmlError& e) {
        err << "net error: " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace svmc
