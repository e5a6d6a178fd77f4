#include "svmc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

#include "svmc/random.hpp"

namespace svmc {
namespace {

using K = Formula::Kind;

StateSet complement(StateSet s) {
    for (char& c : s) c = !c;
    return s;
}

// Backward closure of target through predecessors that satisfy through.
StateSet backward_reach(const ExplicitSpace& sp, const StateSet& through, const StateSet& target) {
    StateSet out = target;
    std::deque<std::size_t> work;
    for (std::size_t s = 0; s < sp.size(); ++s)
        if (out[s]) work.push_back(s);
    while (!work.empty()) {
        std::size_t s = work.front();
        work.pop_front();
        for (std::uint32_t p : sp.predecessors(s))
            if (!out[p] && through[p]) {
                out[p] = 1;
                work.push_back(p);
            }
    }
    return out;
}

// Least Z ⊇ base closed under: through(s), s has successors, all of them in Z.
StateSet universal_until(const ExplicitSpace& sp, const StateSet& through, const StateSet& base) {
    StateSet out = base;
    std::vector<std::size_t> remaining(sp.size());
    std::deque<std::size_t> work;
    for (std::size_t s = 0; s < sp.size(); ++s) {
        remaining[s] = sp.successors(s).size();
        if (out[s]) work.push_back(s);
    }
    while (!work.empty()) {
        std::size_t s = work.front();
        work.pop_front();
        for (std::uint32_t p : sp.predecessors(s)) {
            if (out[p] || !through[p]) continue;
            if (--remaining[p] == 0) {
                out[p] = 1;
                work.push_back(p);
            }
        }
    }
    return out;
}

// States of φ lying on a cycle of the φ-subgraph (iterative Tarjan).
StateSet on_phi_cycle(const ExplicitSpace& sp, const StateSet& phi) {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    const std::size_t n = sp.size();
    std::vector<std::size_t> index(n, kUnset), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> calls;
    StateSet cyclic(n, 0);
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (!phi[root] || index[root] != kUnset) continue;
        auto open = [&](std::size_t v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = 1;
            calls.emplace_back(v, 0);
        };
        open(root);
        while (!calls.empty()) {
            auto& [v, pos] = calls.back();
            const auto& succ = sp.successors(v);
            if (pos < succ.size()) {
                std::size_t w = succ[pos++];
                if (!phi[w]) continue;
                if (index[w] == kUnset)
                    open(w);
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            const std::size_t done = v;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
            if (low[done] != index[done]) continue;
            std::vector<std::size_t> component;
            for (;;) {
                std::size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                component.push_back(w);
                if (w == done) break;
            }
            const auto& s = sp.successors(done);
            bool self_loop = std::find(s.begin(), s.end(), done) != s.end();
            if (component.size() > 1 || self_loop)
                for (std::size_t w : component) cyclic[w] = 1;
        }
    }
    return cyclic;
}

}  // namespace

ExplicitSpace::ExplicitSpace(PetriNet net) : net_(std::move(net)) {}

ExplicitSpace ExplicitSpace::build(const PetriNet& net, Capacity k, std::size_t budget) {
    ExplicitSpace sp(net.with_default_capacity(k));
    const PetriNet& pn = sp.net_;
    const std::size_t np = pn.place_count(), nt = pn.transition_count();
    std::size_t size = 1;
    for (std::size_t p = 0; p < np; ++p) {
        if (!pn.capacity(p)) throw std::invalid_argument("explicit space needs a finite capacity for " + pn.places()[p]);
        Count r = *pn.capacity(p) + 1;
        if (r > budget || size > budget / r) throw BudgetExceeded("state space exceeds the budget of " + std::to_string(budget));
        sp.radix_.push_back(r);
        size *= r;
    }
    if (size > std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded("state space too large");
    sp.size_ = size;
    sp.succ_.assign(size, {});
    sp.pred_.assign(size, {});
    sp.fireable_.assign(size, std::vector<char>(nt, 0));

    std::vector<Count> m(np, 0);
    for (std::size_t s = 0; s < size; ++s) {
        for (std::size_t t = 0; t < nt; ++t) {
            bool ok = true;
            std::size_t target = 0;
            for (std::size_t p = 0; p < np && ok; ++p) {
                Count win = pn.weight_in(p, t), wout = pn.weight_out(t, p);
                // Strict capacity rule: the produced tokens must fit before consumption.
                ok = m[p] >= win && m[p] + wout <= *pn.capacity(p);
                if (ok) target = target * sp.radix_[p] + (m[p] - win + wout);
            }
            if (!ok) continue;
            sp.fireable_[s][t] = 1;
            sp.succ_[s].push_back(static_cast<std::uint32_t>(target));
        }
        auto& succ = sp.succ_[s];
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        for (std::uint32_t t : succ) sp.pred_[t].push_back(static_cast<std::uint32_t>(s));
        // Advance the mixed-radix counter, last place fastest.
        for (std::size_t p = np; p-- > 0;) {
            if (++m[p] < sp.radix_[p]) break;
            m[p] = 0;
        }
    }
    return sp;
}

Marking ExplicitSpace::marking(std::size_t state) const {
    if (state >= size_) throw std::out_of_range("state index out of range");
    std::vector<Count> m(radix_.size());
    for (std::size_t p = radix_.size(); p-- > 0;) {
        m[p] = state % radix_[p];
        state /= radix_[p];
    }
    return Marking(std::move(m));
}

std::size_t ExplicitSpace::index(const Marking& m) const {
    if (m.dim() != radix_.size()) throw DimensionMismatch(radix_.size(), m.dim());
    std::size_t s = 0;
    for (std::size_t p = 0; p < radix_.size(); ++p) {
        if (m[p] >= radix_[p]) throw std::out_of_range("marking outside the capacity box");
        s = s * radix_[p] + m[p];
    }
    return s;
}

bool ExplicitSpace::fireable(std::size_t state, std::size_t t) const { return fireable_.at(state).at(t) != 0; }

StateSet explicit_eg_fixpoint(const ExplicitSpace& sp, const StateSet& phi) {
    StateSet z = phi;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < sp.size(); ++s) {
            if (!z[s] || sp.is_sink(s)) continue;
            const auto& succ = sp.successors(s);
            if (std::none_of(succ.begin(), succ.end(), [&](std::uint32_t w) { return z[w] != 0; })) {
                z[s] = 0;
                changed = true;
            }
        }
    }
    return z;
}

StateSet explicit_eval(const ExplicitSpace& sp, const Formula& f) {
    const std::size_t n = sp.size();
    const StateSet all(n, 1);
    switch (f.kind()) {
        case K::True:
            return all;
        case K::Fireable: {
            std::size_t t = sp.net().transition_index(f.transition());
            StateSet out(n, 0);
            for (std::size_t s = 0; s < n; ++s) out[s] = sp.fireable(s, t);
            return out;
        }
        case K::Not:
            return complement(explicit_eval(sp, f.operand()));
        case K::Or:
        case K::And: {
            StateSet a = explicit_eval(sp, f.child(0)), b = explicit_eval(sp, f.child(1));
            for (std::size_t s = 0; s < n; ++s) a[s] = f.kind() == K::Or ? (a[s] || b[s]) : (a[s] && b[s]);
            return a;
        }
        case K::EX:
        case K::AX: {
            StateSet a = explicit_eval(sp, f.operand()), out(n, 0);
            for (std::size_t s = 0; s < n; ++s) {
                const auto& succ = sp.successors(s);
                auto in_a = [&](std::uint32_t w) { return a[w] != 0; };
                out[s] = f.kind() == K::EX ? std::any_of(succ.begin(), succ.end(), in_a)
                                           : std::all_of(succ.begin(), succ.end(), in_a);
            }
            return out;
        }
        case K::EF:
            return backward_reach(sp, all, explicit_eval(sp, f.operand()));
        case K::EU:
            return backward_reach(sp, explicit_eval(sp, f.child(0)), explicit_eval(sp, f.child(1)));
        case K::AG:
            return complement(backward_reach(sp, all, complement(explicit_eval(sp, f.operand()))));
        case K::AF:
            return universal_until(sp, all, explicit_eval(sp, f.operand()));
        case K::AU:
            return universal_until(sp, explicit_eval(sp, f.child(0)), explicit_eval(sp, f.child(1)));
        case K::EG: {
            StateSet phi = explicit_eval(sp, f.operand());
            StateSet good = on_phi_cycle(sp, phi);
            for (std::size_t s = 0; s < n; ++s)
                if (phi[s] && sp.is_sink(s)) good[s] = 1;
            return backward_reach(sp, phi, good);
        }
    }
    throw std::logic_error("unhandled formula kind");
}

SymbolicEvaluator default_symbolic_evaluator(std::size_t max_iterations) {
    return [max_iterations](const PetriNet& net, const Formula& f) {
        EvalOptions opts;
        opts.saturation = true;
        opts.max_iterations = max_iterations;
        opts.collect_stats = false;
        return eval(net, reduce(desugar(reduce(f))), opts);
    };
}

EquivReport check_equiv(const PetriNet& net, const Formula& f, Capacity k, const SymbolicEvaluator& evaluator,
                        std::size_t budget) {
    ExplicitSpace sp = ExplicitSpace::build(net, k, budget);
    StateSet expected = explicit_eval(sp, f);
    SymbolicVectorSet got = evaluator(sp.net(), f);
    EquivReport report;
    report.states = sp.size();
    for (std::size_t s = 0; s < sp.size(); ++s) {
        Marking m = sp.marking(s);
        bool sym = contains(got, m);
        report.satisfying += expected[s] != 0;
        if (sym != (expected[s] != 0) && report.pass) {
            report.pass = false;
            report.counterexample = m;
            report.symbolic_member = sym;
            report.explicit_member = expected[s] != 0;
        }
    }
    return report;
}

std::string describe_net(const PetriNet& net) {
    std::ostringstream out;
    out << "places";
    for (std::size_t p = 0; p < net.place_count(); ++p) {
        out << ' ' << net.places()[p] << '=' << net.initial()[p] << '/';
        if (net.capacity(p))
            out << *net.capacity(p);
        else
            out << "inf";
    }
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
        out << "; " << net.transitions()[t] << ':';
        for (std::size_t p = 0; p < net.place_count(); ++p)
            if (net.weight_in(p, t)) out << ' ' << net.places()[p] << "-" << net.weight_in(p, t);
        out << " ->";
        for (std::size_t p = 0; p < net.place_count(); ++p)
            if (net.weight_out(t, p)) out << ' ' << net.places()[p] << "+" << net.weight_out(t, p);
    }
    return out.str();
}

RandomSuiteReport run_random_suite(const RandomSuiteOptions& options, const SymbolicEvaluator& evaluator) {
    std::mt19937_64 rng(options.seed);
    RandomSuiteReport report;
    for (std::size_t i = 0; i < options.cases; ++i) {
        RandomNetOptions net_opts;
        net_opts.max_places = options.max_places;
        net_opts.max_transitions = options.max_transitions;
        net_opts.max_weight = options.max_weight;
        net_opts.capacity = std::uniform_int_distribution<Count>(1, options.max_capacity)(rng);
        PetriNet net = random_net(rng, net_opts);
        std::size_t depth = std::uniform_int_distribution<std::size_t>(1, options.max_depth)(rng);
        Formula f = random_formula(rng, net, depth);
        EquivReport r = check_equiv(net, f, std::nullopt, evaluator);
        ++report.cases;
        if (!r.pass) {
            ++report.failures;
            if (!report.first_failure) report.first_failure = RandomCaseFailure{i, describe_net(net), f.to_string(), r};
        }
    }
    return report;
}

}  // namespace svmc
