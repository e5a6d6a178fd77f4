#pragma once

#include <random>

#include "svmc/ctl.hpp"
#include "svmc/petri_net.hpp"

namespace svmc {

struct RandomNetOptions {
    std::size_t min_places = 1;
    std::size_t max_places = 4;
    std::size_t min_transitions = 1;
    std::size_t max_transitions = 4;
    Count max_weight = 2;
    // Applied to every place.
    Capacity capacity = 3;
};

// Places p0.., transitions t0..; every transition gets at least one arc.
// The initial marking is drawn inside the capacity box (or below max_weight+1 when unbounded).
PetriNet random_net(std::mt19937_64& rng, const RandomNetOptions& options = {});

// Uses the full surface syntax, including derived operators and false.
Formula random_formula(std::mt19937_64& rng, const PetriNet& net, std::size_t max_depth);

}  // namespace svmc
