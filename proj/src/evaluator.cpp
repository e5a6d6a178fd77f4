#include "svmc/evaluator.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace svmc {
namespace {

using K = Formula::Kind;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Capacity max_capacity(const PetriNet& net) {
    Count k = 0;
    for (const Capacity& c : net.capacities()) {
        if (!c) return std::nullopt;
        k = std::max(k, *c);
    }
    return k;
}

}  // namespace

std::size_t EvalStats::total_iterations() const {
    return std::accumulate(iterations.begin(), iterations.end(), std::size_t{0});
}

NonConvergence::NonConvergence(const std::string& what, SymbolicVectorSet last)
    : std::runtime_error(what), last_(std::move(last)) {}

Evaluator::Evaluator(const PetriNet& net, EvalOptions options)
    : net_(net.with_default_capacity(options.capacity)), options_(std::move(options)), bound_(max_capacity(net_)) {
    if (options_.max_iterations == 0) throw std::invalid_argument("max_iterations must be at least 1");
}

void Evaluator::record(const SymbolicVectorSet& svs) {
    if (options_.collect_stats) stats_.peak = std::max(stats_.peak, svs.size());
}

void Evaluator::observe(std::string_view name, std::size_t iteration, const SymbolicVectorSet& svs) {
    record(svs);
    if (options_.observer) options_.observer(name, iteration, svs);
}

void Evaluator::check_budget(std::string_view name, std::size_t iteration, const SymbolicVectorSet& last) const {
    if (iteration > options_.max_iterations)
        throw NonConvergence(std::string(name) + " did not converge within " + std::to_string(options_.max_iterations) +
                                 " iterations",
                             last);
}

SymbolicVectorSet Evaluator::weak_pre(const SymbolicVectorSet& svs) {
    return canonical_negate(pre_svs(net_, canonical_negate(svs)));
}

SymbolicVectorSet Evaluator::eval_EU(const SymbolicVectorSet& phi, const SymbolicVectorSet& psi) {
    const bool phi_full = phi == SymbolicVectorSet::full(phi.dim());
    SymbolicVectorSet y(net_.place_count());
    std::size_t it = 0;
    for (;;) {
        check_budget("EU", ++it, y);
        SymbolicVectorSet step = pre_svs(net_, y);
        if (!phi_full) step = canonical_intersect(phi, step);
        SymbolicVectorSet next = canonical_union(psi, step);
        observe("EU", it, next);
        // Nothing can be added to the full set, so it needs no confirming pass.
        const bool done = is_subset(next, y) || next == SymbolicVectorSet::full(next.dim());
        y = std::move(next);
        if (done) break;
    }
    if (options_.collect_stats) stats_.iterations.push_back(it);
    return y;
}

SymbolicVectorSet Evaluator::eval_EG(const SymbolicVectorSet& phi) {
    // Seeded with ⟦φ⟧, so the iterates shrink and y can stand in for φ in
    // φ ∩ (pre(y) ∪ weak_pre(y)). Intersecting before the union keeps the
    // operands small; y ∩ weak_pre(y) is y minus pre(¬y).
    SymbolicVectorSet y = phi;
    std::size_t it = 0;
    for (;;) {
        check_budget("EG", ++it, y);
        SymbolicVectorSet next = canonical_union(canonical_intersect(y, pre_svs(net_, y)),
                                                 canonical_subtract(y, pre_svs(net_, canonical_negate(y))));
        observe("EG", it, next);
        const bool done = is_subset(y, next);
        y = std::move(next);
        if (done) break;
    }
    if (options_.collect_stats) stats_.iterations.push_back(it);
    return y;
}

SymbolicVectorSet Evaluator::saturated_reach(const SymbolicVectorSet& phi) {
    const std::vector<Count> weights = net_.arc_weights();
    SymbolicVectorSet res = phi;
    Count n = 1;
    std::size_t it = 0;
    for (;;) {
        const Count level = bound_ ? std::min(n, *bound_) : n;
        if (options_.collect_stats) stats_.saturation_levels.push_back(level);
        const SymbolicVectorSet cap = res;
        for (;;) {
            check_budget("EF", ++it, res);
            SymbolicVectorSet tmp = res;
            res = canonical_union(res, pre_svs(net_, res, level));
            observe("EF", it, res);
            if (is_subset(res, tmp)) break;
        }
        if (res == SymbolicVectorSet::full(res.dim())) break;
        // Every non-empty predecessor piece has lower bounds within the capacities,
        // so the pass at the full bound was exact.
        if (bound_ && level == *bound_) break;
        if (!is_subset(res, cap)) {
            ++n;
            continue;
        }
        auto w = std::find_if(weights.begin(), weights.end(), [n](Count x) { return x > n; });
        if (w != weights.end()) {
            n = *w;
            continue;
        }
        // No weight above n is left, but larger predecessors can still arise from
        // sums of weights: stop only once the exact pre adds nothing.
        SymbolicVectorSet exact = pre_svs(net_, res);
        Count next = n + 1;
        bool closed = true;
        for (const SymbolicVector& m : exact) {
            if (is_subset(SymbolicVectorSet(res.dim(), {m}), res)) continue;
            Count need = m.lower().max_component();
            next = closed ? std::max(need, n + 1) : std::min(next, std::max(need, n + 1));
            closed = false;
        }
        if (closed) break;
        n = next;
    }
    if (options_.collect_stats) stats_.iterations.push_back(it);
    return res;
}

SymbolicVectorSet Evaluator::eval_core(const Formula& f) {
    SymbolicVectorSet out(net_.place_count());
    switch (f.kind()) {
        case K::True:
            out = SymbolicVectorSet::full(net_.place_count());
            break;
        case K::Fireable:
            out = enabled_set(net_, net_.transition_index(f.transition()));
            break;
        case K::Not:
            out = canonical_negate(eval_core(f.operand()));
            break;
        case K::Or:
            out = canonical_union(eval_core(f.child(0)), eval_core(f.child(1)));
            break;
        case K::EX:
            out = pre_svs(net_, eval_core(f.operand()));
            break;
        case K::EG:
            out = eval_EG(eval_core(f.operand()));
            break;
        case K::EU:
            if (options_.saturation && f.child(0).kind() == K::True)
                out = saturated_reach(eval_core(f.child(1)));
            else
                out = eval_EU(eval_core(f.child(0)), eval_core(f.child(1)));
            break;
        default:
            throw std::invalid_argument("formula is not in the core fragment: " + f.to_string());
    }
    record(out);
    return out;
}

SymbolicVectorSet Evaluator::eval(const Formula& f) {
    auto start = Clock::now();
    SymbolicVectorSet out = eval_core(f);
    if (options_.collect_stats) {
        stats_.final = out.size();
        stats_.ms += elapsed_ms(start);
    }
    return out;
}

SymbolicVectorSet Evaluator::eval_extended(const Formula& f) {
    auto start = Clock::now();
    auto operand = [&] { return eval_core(reduce(desugar(f.operand()))); };
    SymbolicVectorSet out(net_.place_count());
    auto reach = [&](const SymbolicVectorSet& target) {
        return options_.saturation ? saturated_reach(target)
                                   : eval_EU(SymbolicVectorSet::full(net_.place_count()), target);
    };
    switch (f.kind()) {
        case K::EF:
            out = reach(operand());
            break;
        case K::AG:
            out = canonical_negate(reach(canonical_negate(operand())));
            break;
        case K::EG:
            out = eval_EG(operand());
            break;
        case K::AF:
            out = canonical_negate(eval_EG(canonical_negate(operand())));
            break;
        default:
            out = eval_core(reduce(desugar(f)));
    }
    record(out);
    if (options_.collect_stats) {
        stats_.final = out.size();
        stats_.ms += elapsed_ms(start);
    }
    return out;
}

SymbolicVectorSet eval(const PetriNet& net, const Formula& f, const EvalOptions& options, EvalStats* stats) {
    Evaluator ev(net, options);
    SymbolicVectorSet out = ev.eval(f);
    if (stats) *stats = ev.stats();
    return out;
}

SymbolicVectorSet eval_extended_saturated(const PetriNet& net, const Formula& f, const EvalOptions& options,
                                          EvalStats* stats) {
    EvalOptions opts = options;
    opts.saturation = true;
    Evaluator ev(net, std::move(opts));
    SymbolicVectorSet out = ev.eval_extended(f);
    if (stats) *stats = ev.stats();
    return out;
}

SymbolicVectorSet weak_pre(const PetriNet& net, const SymbolicVectorSet& svs) {
    return canonical_negate(pre_svs(net, canonical_negate(svs)));
}

Formula prepare_formula(std::string_view text) { return reduce(desugar(reduce(parse_formula(text)))); }

}  // namespace svmc
