#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "svmc/vector_set.hpp"

namespace svmc {

// Per-place token bound; nullopt is unbounded.
using Capacity = std::optional<Count>;
using Marking = Vector;

class PnmlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownName : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class PetriNet {
public:
    // weight_in[t][p] = w(p,t), weight_out[t][p] = w(t,p).
    PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
             std::vector<std::vector<Count>> weight_in, std::vector<std::vector<Count>> weight_out,
             std::vector<Capacity> capacity, Marking initial);

    std::size_t place_count() const noexcept { return places_.size(); }
    std::size_t transition_count() const noexcept { return transitions_.size(); }
    const std::vector<std::string>& places() const noexcept { return places_; }
    const std::vector<std::string>& transitions() const noexcept { return transitions_; }
    std::size_t place_index(std::string_view id) const;
    std::size_t transition_index(std::string_view id) const;

    Count weight_in(std::size_t p, std::size_t t) const { return in_.at(t).at(p); }
    Count weight_out(std::size_t t, std::size_t p) const { return out_.at(t).at(p); }
    const Capacity& capacity(std::size_t p) const { return capacity_.at(p); }
    const std::vector<Capacity>& capacities() const noexcept { return capacity_; }
    const Marking& initial() const noexcept { return initial_; }

    std::size_t arc_count() const;
    // Distinct arc weights (in and out), ascending.
    std::vector<Count> arc_weights() const;

    PetriNet with_capacities(std::vector<Capacity> capacity) const;
    // Gives every unbounded place the bound k; bounded places keep theirs.
    PetriNet with_default_capacity(Capacity k) const;
    // Named per-place bounds override the current ones.
    PetriNet with_place_capacities(const std::map<std::string, Count>& bounds) const;

    // Throws UnknownName for an index outside the transition list.
    void check_transition(std::size_t t) const;

private:
    std::vector<std::string> places_;
    std::vector<std::string> transitions_;
    std::vector<std::vector<Count>> in_;
    std::vector<std::vector<Count>> out_;
    std::vector<Capacity> capacity_;
    Marking initial_;
};

bool enabled(const PetriNet& net, const Marking& m, std::size_t t);
Marking fire(const PetriNet& net, const Marking& m, std::size_t t);
// λ_in(t): the marking with w(p,t) tokens in every place p.
Marking input_marking(const PetriNet& net, std::size_t t);
bool reversible(const PetriNet& net, std::size_t t, const Marking& m);
Marking pre_t(const PetriNet& net, const Marking& m, std::size_t t);

// Markings that enable t, capacities included.
SymbolicVectorSet enabled_set(const PetriNet& net, std::size_t t);

// Predecessors of uf(sv): markings enabling some t whose firing lands in uf(sv).
SymbolicVectorSet pre_sv(const PetriNet& net, const SymbolicVector& sv);

// Canonical union of pre_sv over the members. A finite cap_bound n drops generated
// symbolic vectors whose lower bound has a component above n.
SymbolicVectorSet pre_svs(const PetriNet& net, const SymbolicVectorSet& svs, Capacity cap_bound = std::nullopt);

PetriNet parse_pnml(std::istream& in);
PetriNet parse_pnml(std::string_view document);
PetriNet load_pnml(const std::string& path);

}  // namespace svmc
