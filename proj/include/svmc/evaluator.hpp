#pragma once

#include <functional>
#include <stdexcept>
#include <string_view>

#include "svmc/ctl.hpp"
#include "svmc/petri_net.hpp"

namespace svmc {

// Called with every fixpoint iterate: (fixpoint name, 1-based iteration, iterate).
using IterateObserver = std::function<void(std::string_view, std::size_t, const SymbolicVectorSet&)>;

struct EvalOptions {
    // Uniform bound for places that have no capacity of their own; nullopt is ∞.
    Capacity capacity;
    bool saturation = true;
    std::size_t max_iterations = 10000;
    bool collect_stats = true;
    IterateObserver observer;
};

struct EvalStats {
    // One entry per fixpoint computed, in evaluation order.
    std::vector<std::size_t> iterations;
    // Largest member count among recorded sets (fixpoint iterates and subformula results).
    std::size_t peak = 0;
    std::size_t final = 0;
    double ms = 0;
    // Capacity levels visited by saturated reachability, in order.
    std::vector<Count> saturation_levels;

    std::size_t total_iterations() const;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, SymbolicVectorSet last);
    const SymbolicVectorSet& last_iterate() const noexcept { return last_; }

private:
    SymbolicVectorSet last_;
};

class Evaluator {
public:
    // Capacities from options are applied to places that have none.
    Evaluator(const PetriNet& net, EvalOptions options);

    const PetriNet& net() const noexcept { return net_; }
    const EvalOptions& options() const noexcept { return options_; }
    const EvalStats& stats() const noexcept { return stats_; }
    // Max place capacity, or nullopt when some place is unbounded.
    Capacity bound() const noexcept { return bound_; }

    // f must be in the core fragment. EU(true, ψ) goes through saturated_reach when enabled.
    SymbolicVectorSet eval(const Formula& f);
    // Heads EF, AF, EG, AG with arbitrary operands; anything else is desugared and evaluated.
    SymbolicVectorSet eval_extended(const Formula& f);

    SymbolicVectorSet weak_pre(const SymbolicVectorSet& svs);
    SymbolicVectorSet eval_EU(const SymbolicVectorSet& phi, const SymbolicVectorSet& psi);
    SymbolicVectorSet eval_EG(const SymbolicVectorSet& phi);
    SymbolicVectorSet saturated_reach(const SymbolicVectorSet& phi);

private:
    void record(const SymbolicVectorSet& svs);
    void observe(std::string_view name, std::size_t iteration, const SymbolicVectorSet& svs);
    void check_budget(std::string_view name, std::size_t iteration, const SymbolicVectorSet& last) const;
    SymbolicVectorSet eval_core(const Formula& f);

    PetriNet net_;
    EvalOptions options_;
    Capacity bound_;
    EvalStats stats_;
};

// One-shot helpers; stats, when given, receive the run's statistics.
SymbolicVectorSet eval(const PetriNet& net, const Formula& f, const EvalOptions& options, EvalStats* stats = nullptr);
SymbolicVectorSet eval_extended_saturated(const PetriNet& net, const Formula& f, const EvalOptions& options,
                                          EvalStats* stats = nullptr);
SymbolicVectorSet weak_pre(const PetriNet& net, const SymbolicVectorSet& svs);

// parse, reduce, desugar, reduce.
Formula prepare_formula(std::string_view text);

}  // namespace svmc
