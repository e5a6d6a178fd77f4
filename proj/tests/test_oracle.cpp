#include <random>

#include "doctest.h"
#include "svmc/oracle.hpp"
#include "svmc/random.hpp"

using namespace svmc;

namespace {

const std::string kData = SVMC_TEST_DATA;

PetriNet mutex() { return load_pnml(kData + "/mutex.pnml"); }

std::size_t count(const StateSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

}  // namespace

TEST_CASE("explicit space construction") {
    PetriNet two = load_pnml(kData + "/two_places.pnml");
    auto sp = ExplicitSpace::build(two.with_capacities({Count{3}, Count{1}}));
    CHECK(sp.size() == 8);
    CHECK(ExplicitSpace::build(PetriNet({"a", "b"}, {}, {}, {}, {Count{1}, Count{1}}, Marking{0, 0})).size() == 4);
    CHECK(ExplicitSpace::build(mutex(), Count{2}).size() == 243);
    CHECK_THROWS_AS(ExplicitSpace::build(PetriNet({"a", "b"}, {}, {}, {}, {Count{9}, Count{9}}, Marking{0, 0}),
                                         std::nullopt, 10),
                    BudgetExceeded);
    CHECK_THROWS_AS(ExplicitSpace::build(mutex()), std::invalid_argument);

    for (std::size_t s = 0; s < sp.size(); ++s) CHECK(sp.index(sp.marking(s)) == s);
    CHECK(sp.marking(0) == Marking{0, 0});
    CHECK(sp.marking(1) == Marking{0, 1});
    // (3,0) fires t0 to (1,1); (3,1) is blocked by the capacity of p1.
    CHECK(sp.successors(sp.index(Marking{3, 0})) == std::vector<std::uint32_t>{std::uint32_t(sp.index(Marking{1, 1}))});
    CHECK(sp.is_sink(sp.index(Marking{3, 1})));
}

TEST_CASE("explicit semantics") {
    auto sp = ExplicitSpace::build(mutex(), Count{2});
    StateSet eg = explicit_eval(sp, parse_formula("EG true"));
    CHECK(count(eg) == sp.size());
    StateSet fire_t0 = explicit_eval(sp, parse_formula("fireable(t0)"));
    for (std::size_t s = 0; s < sp.size(); ++s) {
        Marking m = sp.marking(s);
        // λ_in(t0) = p0 + p2 and room for one more token in p3.
        bool expected = m[0] >= 1 && m[2] >= 1 && m[3] + 1 <= 2;
        CHECK((fire_t0[s] != 0) == expected);
    }
    CHECK(explicit_eval(sp, parse_formula("EF fireable(t1)")) == explicit_eval(sp, parse_formula("E[true U fireable(t1)]")));
    CHECK(explicit_eval(sp, parse_formula("AX false")) == explicit_eval(sp, parse_formula("!EX true")));
}

TEST_CASE("mutex cross-check") {
    auto r = check_equiv(mutex(), parse_formula("EF (fireable(t3) && fireable(t4))"), Count{2});
    CHECK(r.pass);
    CHECK(r.states == 243);
    CHECK(r.satisfying > 0);
    CHECK(check_equiv(mutex(), parse_formula("true"), Count{1}).pass);
}

TEST_CASE("property: explicit operators agree with their dual forms") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        RandomNetOptions no;
        no.capacity = Count(1 + round % 3);
        PetriNet net = random_net(rng, no);
        auto sp = ExplicitSpace::build(net);
        Formula f = random_formula(rng, net, 2), g = random_formula(rng, net, 2);
        INFO(describe_net(net) << " | " << f.to_string() << " | " << g.to_string());
        StateSet phi = explicit_eval(sp, f);
        CHECK(explicit_eval(sp, Formula::unary(Formula::Kind::EG, f)) == explicit_eg_fixpoint(sp, phi));
        // Derived operators against their desugared forms.
        for (const Formula& h : {Formula::unary(Formula::Kind::AF, f), Formula::unary(Formula::Kind::AG, f),
                                 Formula::unary(Formula::Kind::AX, f), Formula::unary(Formula::Kind::EF, f),
                                 Formula::until(Formula::Kind::AU, f, g), Formula::conjunction(f, g)})
            CHECK(explicit_eval(sp, h) == explicit_eval(sp, desugar(h)));
    }
}

TEST_CASE("random suite passes") {
    RandomSuiteOptions o;
    o.seed = 2024;
    o.cases = 60;
    auto report = run_random_suite(o);
    CHECK(report.cases == 60);
    CHECK(report.failures == 0);
    if (report.first_failure)
        MESSAGE(report.first_failure->net_summary << " | " << report.first_failure->formula);
}

TEST_CASE("mutation: a corrupted evaluator is caught") {
    // EG without the weak-pre term loses deadlocked witnesses.
    SymbolicEvaluator broken = [](const PetriNet& net, const Formula& f) {
        Evaluator ev(net, EvalOptions{});
        Formula core = reduce(desugar(reduce(f)));
        REQUIRE(core.kind() == Formula::Kind::EG);
        auto phi = ev.eval(core.operand());
        SymbolicVectorSet y = phi;
        for (;;) {
            auto next = canonical_intersect(phi, pre_svs(ev.net(), y));
            if (is_subset(y, next)) return next;
            y = next;
        }
    };
    PetriNet two = load_pnml(kData + "/two_places.pnml");
    Formula f = parse_formula("EG true");
    auto r = check_equiv(two, f, Count{3}, broken);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK(r.explicit_member);
    CHECK_FALSE(r.symbolic_member);
    CHECK(*r.counterexample == Marking{0, 0});
    CHECK(check_equiv(two, f, Count{3}).pass);

    // Off-by-one in fireable.
    SymbolicEvaluator shifted = [](const PetriNet& net, const Formula& f) {
        auto good = default_symbolic_evaluator()(net, f);
        return canonical_union(good, SymbolicVectorSet(net.place_count(), {SymbolicVector(Vector{0, 0}, {})}));
    };
    auto r2 = check_equiv(two, parse_formula("fireable(t0)"), Count{3}, shifted);
    CHECK_FALSE(r2.pass);
    CHECK(*r2.counterexample == Marking{0, 0});
}
