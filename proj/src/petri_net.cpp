#include "svmc/petri_net.hpp"

#include <algorithm>
#include <set>

namespace svmc {
namespace {

void require_dim(const PetriNet& net, const Vector& m) {
    if (m.dim() != net.place_count()) throw DimensionMismatch(net.place_count(), m.dim());
}

// The reverse-firing formula applied to any bound vector, without the reversibility guard.
Vector reverse_bound(const PetriNet& net, const Vector& q, std::size_t t) {
    std::vector<Count> out(q.dim());
    for (std::size_t p = 0; p < q.dim(); ++p) {
        Count win = net.weight_in(p, t), wout = net.weight_out(t, p);
        out[p] = q[p] <= wout ? win : q[p] + win - wout;
    }
    return Vector(std::move(out));
}

// Exclude bounds (k(p) - w(t,p) + 1)·e_p encoding "m(p) ≤ k(p) - w(t,p)".
// Returns false when some place can never satisfy it, i.e. t is dead.
bool capacity_bounds(const PetriNet& net, std::size_t t, std::vector<Vector>& out) {
    const std::size_t n = net.place_count();
    for (std::size_t p = 0; p < n; ++p) {
        const Capacity& k = net.capacity(p);
        if (!k) continue;
        Count wout = net.weight_out(t, p);
        if (*k < wout) return false;
        std::vector<Count> e(n, 0);
        e[p] = *k - wout + 1;
        out.emplace_back(std::move(e));
    }
    return true;
}

void pre_pieces(const PetriNet& net, const SymbolicVector& sv, Capacity cap_bound, std::vector<SymbolicVector>& out) {
    const Vector& qa = sv.include().front();
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
        Vector lower = reverse_bound(net, qa, t);
        if (cap_bound && lower.max_component() > *cap_bound) continue;
        std::vector<Vector> excl;
        if (!capacity_bounds(net, t, excl)) continue;
        for (const Vector& qb : sv.exclude()) excl.push_back(reverse_bound(net, qb, t));
        SymbolicVector piece = canonicalize(SymbolicVector(std::move(lower), std::move(excl)));
        if (!is_sentinel(piece)) out.push_back(std::move(piece));
    }
}

}  // namespace

PetriNet::PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
                   std::vector<std::vector<Count>> weight_in, std::vector<std::vector<Count>> weight_out,
                   std::vector<Capacity> capacity, Marking initial)
    : places_(std::move(places)),
      transitions_(std::move(transitions)),
      in_(std::move(weight_in)),
      out_(std::move(weight_out)),
      capacity_(std::move(capacity)),
      initial_(std::move(initial)) {
    const std::size_t n = places_.size();
    if (n == 0) throw std::invalid_argument("a net needs at least one place");
    if (std::set<std::string>(places_.begin(), places_.end()).size() != n)
        throw std::invalid_argument("duplicate place id");
    if (std::set<std::string>(transitions_.begin(), transitions_.end()).size() != transitions_.size())
        throw std::invalid_argument("duplicate transition id");
    if (in_.size() != transitions_.size() || out_.size() != transitions_.size())
        throw std::invalid_argument("weight tables must have one row per transition");
    for (std::size_t t = 0; t < transitions_.size(); ++t)
        if (in_[t].size() != n || out_[t].size() != n)
            throw std::invalid_argument("weight rows must have one entry per place");
    if (capacity_.size() != n) throw std::invalid_argument("capacity list must have one entry per place");
    if (initial_.dim() != n) throw DimensionMismatch(n, initial_.dim());
    for (std::size_t p = 0; p < n; ++p)
        if (capacity_[p] && initial_[p] > *capacity_[p])
            throw std::invalid_argument("initial marking exceeds the capacity of place " + places_[p]);
}

std::size_t PetriNet::place_index(std::string_view id) const {
    auto it = std::find(places_.begin(), places_.end(), id);
    if (it == places_.end()) throw UnknownName("unknown place \"" + std::string(id) + "\"");
    return static_cast<std::size_t>(it - places_.begin());
}

std::size_t PetriNet::transition_index(std::string_view id) const {
    auto it = std::find(transitions_.begin(), transitions_.end(), id);
    if (it == transitions_.end()) throw UnknownName("unknown transition \"" + std::string(id) + "\"");
    return static_cast<std::size_t>(it - transitions_.begin());
}

void PetriNet::check_transition(std::size_t t) const {
    if (t >= transitions_.size()) throw UnknownName("unknown transition index " + std::to_string(t));
}

std::size_t PetriNet::arc_count() const {
    std::size_t arcs = 0;
    for (std::size_t t = 0; t < transitions_.size(); ++t)
        for (std::size_t p = 0; p < places_.size(); ++p) arcs += (in_[t][p] > 0) + (out_[t][p] > 0);
    return arcs;
}

std::vector<Count> PetriNet::arc_weights() const {
    std::set<Count> ws;
    for (std::size_t t = 0; t < transitions_.size(); ++t)
        for (std::size_t p = 0; p < places_.size(); ++p) {
            if (in_[t][p]) ws.insert(in_[t][p]);
            if (out_[t][p]) ws.insert(out_[t][p]);
        }
    return {ws.begin(), ws.end()};
}

PetriNet PetriNet::with_capacities(std::vector<Capacity> capacity) const {
    return PetriNet(places_, transitions_, in_, out_, std::move(capacity), initial_);
}

PetriNet PetriNet::with_default_capacity(Capacity k) const {
    std::vector<Capacity> caps = capacity_;
    for (Capacity& c : caps)
        if (!c) c = k;
    return with_capacities(std::move(caps));
}

PetriNet PetriNet::with_place_capacities(const std::map<std::string, Count>& bounds) const {
    std::vector<Capacity> caps = capacity_;
    for (const auto& [id, k] : bounds) caps[place_index(id)] = k;
    return with_capacities(std::move(caps));
}

bool enabled(const PetriNet& net, const Marking& m, std::size_t t) {
    net.check_transition(t);
    require_dim(net, m);
    for (std::size_t p = 0; p < m.dim(); ++p) {
        if (m[p] < net.weight_in(p, t)) return false;
        const Capacity& k = net.capacity(p);
        if (k && (*k < net.weight_out(t, p) || m[p] > *k - net.weight_out(t, p))) return false;
    }
    return true;
}

Marking fire(const PetriNet& net, const Marking& m, std::size_t t) {
    if (!enabled(net, m, t))
        throw std::invalid_argument("transition " + net.transitions()[t] + " is not enabled at (" + m.to_string() + ")");
    std::vector<Count> out(m.dim());
    for (std::size_t p = 0; p < m.dim(); ++p) out[p] = m[p] - net.weight_in(p, t) + net.weight_out(t, p);
    return Marking(std::move(out));
}

Marking input_marking(const PetriNet& net, std::size_t t) {
    net.check_transition(t);
    std::vector<Count> out(net.place_count());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = net.weight_in(p, t);
    return Marking(std::move(out));
}

bool reversible(const PetriNet& net, std::size_t t, const Marking& m) {
    net.check_transition(t);
    require_dim(net, m);
    for (std::size_t p = 0; p < m.dim(); ++p) {
        const Capacity& k = net.capacity(p);
        if (k && (*k < net.weight_in(p, t) || m[p] > *k - net.weight_in(p, t))) return false;
    }
    return true;
}

Marking pre_t(const PetriNet& net, const Marking& m, std::size_t t) {
    if (!reversible(net, t, m))
        throw std::invalid_argument("transition " + net.transitions()[t] + " is not reversible at (" + m.to_string() +
                                    ")");
    return reverse_bound(net, m, t);
}

SymbolicVectorSet enabled_set(const PetriNet& net, std::size_t t) {
    net.check_transition(t);
    std::vector<Vector> excl;
    if (!capacity_bounds(net, t, excl)) return SymbolicVectorSet(net.place_count());
    SymbolicVector sv = canonicalize(SymbolicVector(input_marking(net, t), std::move(excl)));
    return canonicalize(SymbolicVectorSet(net.place_count(), {sv}));
}

SymbolicVectorSet pre_sv(const PetriNet& net, const SymbolicVector& sv) {
    if (sv.dim() != net.place_count()) throw DimensionMismatch(net.place_count(), sv.dim());
    SymbolicVector c = canonicalize(sv);
    std::vector<SymbolicVector> pieces;
    if (!is_sentinel(c)) pre_pieces(net, c, std::nullopt, pieces);
    return canonicalize(SymbolicVectorSet(net.place_count(), std::move(pieces)));
}

SymbolicVectorSet pre_svs(const PetriNet& net, const SymbolicVectorSet& svs, Capacity cap_bound) {
    if (svs.dim() != net.place_count()) throw DimensionMismatch(net.place_count(), svs.dim());
    std::vector<SymbolicVector> pieces;
    for (const SymbolicVector& sv : svs) {
        SymbolicVector c = is_canonical(sv) ? sv : canonicalize(sv);
        if (!is_sentinel(c)) pre_pieces(net, c, cap_bound, pieces);
    }
    return canonicalize(SymbolicVectorSet(net.place_count(), std::move(pieces)));
}

}  // namespace svmc
