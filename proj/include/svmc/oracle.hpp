#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "svmc/ctl.hpp"
#include "svmc/evaluator.hpp"
#include "svmc/petri_net.hpp"

// Explicit-state reference checker. Shares only the net description and the
// formula AST with the symbolic side; firing and every CTL operator are
// re-implemented here over an enumerated universe.
namespace svmc {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Indexed by state number; nonzero means the state is in the set.
using StateSet = std::vector<char>;

class ExplicitSpace {
public:
    static constexpr std::size_t kDefaultBudget = 1'000'000;

    // Places without a capacity get k; throws if any place is still unbounded.
    static ExplicitSpace build(const PetriNet& net, Capacity k = std::nullopt, std::size_t budget = kDefaultBudget);

    std::size_t size() const noexcept { return size_; }
    const PetriNet& net() const noexcept { return net_; }
    // States are numbered in lexicographic order of their markings.
    Marking marking(std::size_t state) const;
    std::size_t index(const Marking& m) const;
    const std::vector<std::uint32_t>& successors(std::size_t state) const { return succ_.at(state); }
    const std::vector<std::uint32_t>& predecessors(std::size_t state) const { return pred_.at(state); }
    bool is_sink(std::size_t state) const { return succ_.at(state).empty(); }
    bool fireable(std::size_t state, std::size_t t) const;

private:
    explicit ExplicitSpace(PetriNet net);

    PetriNet net_;
    std::vector<Count> radix_;
    std::size_t size_ = 0;
    std::vector<std::vector<std::uint32_t>> succ_, pred_;
    std::vector<std::vector<char>> fireable_;  // [state][t]
};

// Direct semantics for the whole surface syntax: EG and AF/AU use maximal paths,
// so a sink satisfying φ witnesses EG φ.
StateSet explicit_eval(const ExplicitSpace& space, const Formula& f);

// Textbook greatest fixpoint νZ. φ ∧ (sink ∨ ∃succ ∈ Z), used to cross-check the SCC route.
StateSet explicit_eg_fixpoint(const ExplicitSpace& space, const StateSet& phi);

using SymbolicEvaluator = std::function<SymbolicVectorSet(const PetriNet&, const Formula&)>;

// Evaluates the prepared formula (reduce, desugar, reduce) with saturation on.
SymbolicEvaluator default_symbolic_evaluator(std::size_t max_iterations = 10000);

struct EquivReport {
    bool pass = true;
    std::size_t states = 0;
    std::size_t satisfying = 0;
    // First marking (lexicographic) where the two sides disagree.
    std::optional<Marking> counterexample;
    bool symbolic_member = false;
    bool explicit_member = false;
};

// The net's own capacities win; unbounded places get k.
EquivReport check_equiv(const PetriNet& net, const Formula& f, Capacity k,
                        const SymbolicEvaluator& evaluator = default_symbolic_evaluator(),
                        std::size_t budget = ExplicitSpace::kDefaultBudget);

struct RandomSuiteOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 200;
    std::size_t max_places = 4;
    std::size_t max_transitions = 4;
    Count max_weight = 2;
    Count max_capacity = 3;
    std::size_t max_depth = 3;
};

struct RandomCaseFailure {
    std::size_t case_index;
    std::string net_summary;
    std::string formula;
    EquivReport report;
};

struct RandomSuiteReport {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<RandomCaseFailure> first_failure;
};

RandomSuiteReport run_random_suite(const RandomSuiteOptions& options,
                                   const SymbolicEvaluator& evaluator = default_symbolic_evaluator());

std::string describe_net(const PetriNet& net);

}  // namespace svmc
