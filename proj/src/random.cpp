#include "svmc/random.hpp"

#include <algorithm>

namespace svmc {
namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

PetriNet random_net(std::mt19937_64& rng, const RandomNetOptions& options) {
    if (options.min_places == 0 || options.min_places > options.max_places ||
        options.min_transitions > options.max_transitions || options.max_weight == 0)
        throw std::invalid_argument("inconsistent random net options");
    const std::size_t np = pick(rng, options.min_places, options.max_places);
    const std::size_t nt = pick(rng, options.min_transitions, options.max_transitions);
    std::vector<std::string> places, transitions;
    for (std::size_t p = 0; p < np; ++p) places.push_back("p" + std::to_string(p));
    for (std::size_t t = 0; t < nt; ++t) transitions.push_back("t" + std::to_string(t));
    std::sort(places.begin(), places.end());
    std::sort(transitions.begin(), transitions.end());

    std::vector<std::vector<Count>> win(nt, std::vector<Count>(np, 0)), wout(nt, std::vector<Count>(np, 0));
    for (std::size_t t = 0; t < nt; ++t) {
        bool any = false;
        while (!any) {
            for (std::size_t p = 0; p < np; ++p) {
                if (pick(rng, 0, 2) == 0) win[t][p] = pick(rng, 1, options.max_weight);
                if (pick(rng, 0, 2) == 0) wout[t][p] = pick(rng, 1, options.max_weight);
                any = any || win[t][p] || wout[t][p];
            }
        }
    }
    const Count top = options.capacity ? *options.capacity : options.max_weight + 1;
    std::vector<Count> initial(np);
    for (Count& v : initial) v = pick(rng, 0, top);
    return PetriNet(std::move(places), std::move(transitions), std::move(win), std::move(wout),
                    std::vector<Capacity>(np, options.capacity), Marking(std::move(initial)));
}

Formula random_formula(std::mt19937_64& rng, const PetriNet& net, std::size_t max_depth) {
    using K = Formula::Kind;
    if (max_depth == 0 || pick(rng, 0, 3) == 0) {
        std::size_t leaf = pick(rng, 0, 7);
        if (leaf == 0 || net.transition_count() == 0) return Formula::truth();
        if (leaf == 1) return Formula::falsity();
        return Formula::fireable(net.transitions()[pick(rng, 0, net.transition_count() - 1)]);
    }
    static constexpr K kUnary[] = {K::EX, K::EF, K::EG, K::AX, K::AF, K::AG};
    switch (pick(rng, 0, 5)) {
        case 0:
            return Formula::negation(random_formula(rng, net, max_depth - 1));
        case 1:
            return Formula::disjunction(random_formula(rng, net, max_depth - 1), random_formula(rng, net, max_depth - 1));
        case 2:
            return Formula::conjunction(random_formula(rng, net, max_depth - 1), random_formula(rng, net, max_depth - 1));
        case 3:
            return Formula::until(pick(rng, 0, 1) ? K::EU : K::AU, random_formula(rng, net, max_depth - 1),
                                  random_formula(rng, net, max_depth - 1));
        default:
            return Formula::unary(kUnary[pick(rng, 0, 5)], random_formula(rng, net, max_depth - 1));
    }
}

}  // namespace svmc
