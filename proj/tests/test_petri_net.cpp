#include <algorithm>
#include <random>

#include "doctest.h"
#include "support/decode.hpp"
#include "svmc/petri_net.hpp"
#include "svmc/random.hpp"

using namespace svmc;

namespace {

const std::string kData = SVMC_TEST_DATA;

SymbolicVector sv(Vector lower, std::vector<Vector> exc = {}) { return SymbolicVector(std::move(lower), std::move(exc)); }

SymbolicVectorSet set(std::size_t dim, std::vector<SymbolicVector> ms) { return SymbolicVectorSet(dim, std::move(ms)); }

PetriNet mutex() { return load_pnml(kData + "/mutex.pnml"); }

// Explicit predecessor test, independent of the library's firing code.
bool has_successor_in(const PetriNet& net, const support::Point& m, const SymbolicVectorSet& target) {
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
        support::Point next(m.size());
        bool ok = true;
        for (std::size_t p = 0; p < m.size() && ok; ++p) {
            Count win = net.weight_in(p, t), wout = net.weight_out(t, p);
            if (m[p] < win) ok = false;
            else next[p] = m[p] - win + wout;
            // Strict capacity rule: room for the produced tokens before consuming.
            if (ok && net.capacity(p) && m[p] + wout > *net.capacity(p)) ok = false;
        }
        if (!ok) continue;
        for (const SymbolicVector& s : target)
            if (support::member(s, next)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("two places: enabling and firing") {
    PetriNet net = load_pnml(kData + "/two_places.pnml");
    REQUIRE(net.place_count() == 2);
    CHECK(net.initial() == Marking{3, 1});
    CHECK(enabled(net, net.initial(), 0));
    CHECK(fire(net, net.initial(), 0) == Marking{1, 2});
    CHECK_FALSE(enabled(net, Marking{1, 2}, 0));
    CHECK_THROWS_AS(fire(net, Marking{1, 2}, 0), std::invalid_argument);
    CHECK(input_marking(net, 0) == Marking{2, 0});

    PetriNet capped = net.with_default_capacity(3);
    CHECK_FALSE(enabled(capped, Marking{2, 3}, 0));
    CHECK(enabled(capped, Marking{2, 2}, 0));
    CHECK(capped.with_default_capacity(5).capacities() == capped.capacities());
    CHECK_THROWS_AS(capped.transition_index("t9"), UnknownName);
    CHECK_THROWS_AS(net.with_place_capacities({{"p0", 1}}), std::invalid_argument);  // initial 3 > 1
}

TEST_CASE("reverse firing") {
    PetriNet net = mutex();
    std::size_t t0 = net.transition_index("t0");
    CHECK(pre_t(net, Marking{0, 0, 0, 1, 1}, t0) == Marking{1, 0, 1, 0, 1});
    CHECK(fire(net, Marking{1, 0, 1, 0, 1}, t0) == Marking{0, 0, 0, 1, 1});
    CHECK(reversible(net, t0, Marking{0, 0, 0, 0, 0}));

    PetriNet capped = net.with_default_capacity(1);
    CHECK_FALSE(reversible(capped, t0, Marking{1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(pre_t(capped, Marking{1, 0, 0, 0, 0}, t0), std::invalid_argument);
}

TEST_CASE("mutex backward steps") {
    PetriNet net = mutex();
    auto step1 = canonicalize(set(5, {sv({0, 0, 0, 1, 1})}));
    auto step2 = canonicalize(set(5, {sv({0, 0, 0, 1, 1}), sv({0, 1, 1, 1, 0}), sv({1, 0, 1, 0, 1})}));
    auto step3 = canonicalize(set(5, {sv({0, 0, 0, 1, 1}), sv({0, 1, 1, 1, 0}), sv({1, 0, 1, 0, 1}),
                                      sv({1, 1, 2, 0, 0}), sv({0, 1, 0, 2, 0}), sv({1, 0, 0, 0, 2})}));
    auto r2 = canonical_union(step1, pre_svs(net, step1));
    CHECK(equals(r2, step2));
    CHECK(r2 == step2);
    auto r3 = canonical_union(r2, pre_svs(net, r2));
    CHECK(r3 == step3);
    CHECK(is_subset(pre_svs(net, r3), r3));
    CHECK(contains(r3, Vector{1, 1, 2, 0, 0}));
    CHECK_FALSE(contains(r3, Vector{1, 1, 1, 0, 0}));
}

TEST_CASE("pre of the empty sentinel and dead transitions") {
    PetriNet net = mutex();
    CHECK(pre_sv(net, SymbolicVector::sentinel(5)).empty());
    CHECK(pre_svs(net, SymbolicVectorSet::empty_set(5)).empty());

    // Producing 2 tokens into a place bounded by 1 can never fire.
    PetriNet dead({"p"}, {"t"}, {{0}}, {{2}}, {Count{1}}, Marking{0});
    CHECK(enabled_set(dead, 0).empty());
    CHECK(pre_svs(dead, SymbolicVectorSet::full(1)).empty());
    CHECK_FALSE(enabled(dead, Marking{0}, 0));
}

TEST_CASE("enabled set encodes the capacity clause") {
    PetriNet net = load_pnml(kData + "/two_places.pnml").with_default_capacity(3);
    auto e = enabled_set(net, 0);
    CHECK(e == canonicalize(set(2, {sv({2, 0}, {{4, 0}, {0, 3}})})));
    for (Count a = 0; a <= 3; ++a)
        for (Count b = 0; b <= 3; ++b) CHECK(contains(e, Vector{a, b}) == enabled(net, Marking{a, b}, 0));
}

TEST_CASE("cap bound discards high lower bounds") {
    PetriNet net = mutex();
    auto seed = canonicalize(set(5, {sv({0, 0, 0, 1, 1})}));
    CHECK(pre_svs(net, seed, Count{0}).empty());
    auto exact = pre_svs(net, seed);
    CHECK(pre_svs(net, seed, Count{2}) == exact);
    CHECK(is_subset(pre_svs(net, seed, Count{1}), exact));
}

TEST_CASE("pnml structure") {
    PetriNet m = mutex();
    CHECK(m.place_count() == 5);
    CHECK(m.transition_count() == 4);
    CHECK(m.arc_count() == 12);
    CHECK(m.places() == std::vector<std::string>{"p0", "p1", "p2", "p3", "p4"});
    CHECK(m.transitions() == std::vector<std::string>{"t0", "t1", "t3", "t4"});
    CHECK(m.initial() == Marking{1, 1, 1, 0, 0});
    CHECK_FALSE(m.capacity(0).has_value());

    for (const char* file : {"/circadian_clock.pnml", "/circadian_clock_n2.pnml"}) {
        PetriNet c = load_pnml(kData + file);
        CHECK(c.place_count() == 14);
        CHECK(c.transition_count() == 16);
        CHECK(c.arc_count() == 58);
    }
}

TEST_CASE("pnml errors") {
    auto wrap = [](const std::string& body) {
        return "<pnml><net id=\"n\"><page id=\"g\">" + body + "</page></net></pnml>";
    };
    CHECK_THROWS_AS(parse_pnml(std::string_view("<pnml><net>")), PnmlError);
    CHECK_THROWS_AS(parse_pnml(std::string_view("<other/>")), PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("")), PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("<place id=\"a\"/><place id=\"a\"/>")), PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("<place id=\"a\"/><transition id=\"t\"/><arc id=\"x\" source=\"a\" target=\"u\"/>")),
                    PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("<place id=\"a\"/><place id=\"b\"/><arc id=\"x\" source=\"a\" target=\"b\"/>")),
                    PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("<place id=\"a\"><initialMarking><text>-1</text></initialMarking></place>")),
                    PnmlError);
    CHECK_THROWS_AS(parse_pnml(wrap("<place id=\"a\"/><transition id=\"t\"/>"
                                    "<arc id=\"x\" source=\"a\" target=\"t\"><inscription><text>two</text></inscription></arc>")),
                    PnmlError);
    CHECK_THROWS_AS(load_pnml(kData + "/missing.pnml"), PnmlError);
}

TEST_CASE("pnml is independent of element order") {
    std::string a = "<pnml><net id=\"n\"><page id=\"g\">"
                    "<place id=\"q\"><initialMarking><text>2</text></initialMarking></place><place id=\"b\"/>"
                    "<transition id=\"z\"/><transition id=\"c\"/>"
                    "<arc id=\"1\" source=\"q\" target=\"z\"><inscription><text>2</text></inscription></arc>"
                    "<arc id=\"2\" source=\"z\" target=\"b\"/><arc id=\"3\" source=\"b\" target=\"c\"/>"
                    "<arc id=\"4\" source=\"b\" target=\"c\"/>"
                    "</page></net></pnml>";
    std::string b = "<pnml><net id=\"n\"><page id=\"g\">"
                    "<arc id=\"4\" source=\"b\" target=\"c\"/><transition id=\"c\"/><place id=\"b\"/>"
                    "<arc id=\"2\" source=\"z\" target=\"b\"/><arc id=\"3\" source=\"b\" target=\"c\"/>"
                    "<transition id=\"z\"/><place id=\"q\"><initialMarking><text>2</text></initialMarking></place>"
                    "<arc id=\"1\" source=\"q\" target=\"z\"><inscription><text>2</text></inscription></arc>"
                    "</page></net></pnml>";
    PetriNet x = parse_pnml(a), y = parse_pnml(b);
    CHECK(x.places() == std::vector<std::string>{"b", "q"});
    CHECK(x.places() == y.places());
    CHECK(x.transitions() == y.transitions());
    CHECK(x.initial() == y.initial());
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t p = 0; p < 2; ++p) {
            CHECK(x.weight_in(p, t) == y.weight_in(p, t));
            CHECK(x.weight_out(t, p) == y.weight_out(t, p));
        }
    // Parallel arcs add up.
    CHECK(x.weight_in(x.place_index("b"), x.transition_index("c")) == 2);
    CHECK(x.arc_weights() == std::vector<Count>{1, 2});
}

TEST_CASE("property: pre matches explicit predecessors") {
    std::mt19937_64 rng(20240611);
    for (int round = 0; round < 300; ++round) {
        RandomNetOptions opt;
        opt.capacity = round % 3 == 0 ? Capacity{} : Capacity{Count(1 + round % 3)};
        PetriNet net = random_net(rng, opt);
        const std::size_t n = net.place_count();
        auto target = support::random_canonical_svs(rng, n, 3, 3);
        auto pre = pre_svs(net, target);
        REQUIRE(is_canonical(pre));
        const Count box = opt.capacity ? *opt.capacity : 5;
        for (const support::Point& m : support::box_points(n, box)) {
            bool lib = contains(pre, Vector(m));
            INFO("round " << round << " m=" << Vector(m).to_string() << " target=" << target.to_string());
            CHECK(lib == has_successor_in(net, m, target));
        }
        // Enabled sets against the direct definition.
        for (std::size_t t = 0; t < net.transition_count(); ++t) {
            auto e = enabled_set(net, t);
            for (const support::Point& m : support::box_points(n, box)) CHECK(contains(e, Vector(m)) == enabled(net, Vector(m), t));
        }
    }
}

TEST_CASE("property: reverse firing undoes firing") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        PetriNet net = random_net(rng);
        for (const support::Point& m : support::box_points(net.place_count(), 3))
            for (std::size_t t = 0; t < net.transition_count(); ++t) {
                if (!enabled(net, Vector(m), t)) continue;
                Marking next = fire(net, Vector(m), t);
                REQUIRE(reversible(net, t, next));
                // pre_t gives the least marking that fires into uf(next).
                Marking back = pre_t(net, next, t);
                CHECK(leq(back, Vector(m)));
                CHECK(leq(next, fire(net, back, t)));
            }
    }
}
