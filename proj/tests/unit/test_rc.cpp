#include <doctest.h>

#include <random>

#include "grpstat/actions.hpp"
#include "grpstat/error.hpp"
#include "grpstat/harness.hpp"
#include "grpstat/rc.hpp"
#include "oracles.hpp"

using namespace grpstat;

namespace {

std::vector<oracle::Images> gens_of(const PermGroup& G) {
  std::vector<oracle::Images> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return gens;
}

// Exhaustive n-equivalence from the element list.
bool equivalent_by_elements(const oracle::Group& O, const std::vector<Point>& I,
                            const std::vector<Point>& J) {
  for (const auto& g : O.elements()) {
    bool ok = true;
    for (std::size_t i = 0; i < I.size() && ok; ++i) ok = g[I[i]] == J[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("rc") {
  TEST_CASE("transporter examples") {
    const PermGroup S3 = PermGroup::symmetric(3);
    const std::vector<Point> I{0, 1}, J{1, 2};
    const auto g = transporter(S3, I, J);
    REQUIRE(g.has_value());
    CHECK(g->to_cycle_string() == "(0 1 2)");
    const PermGroup C3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
    const std::vector<Point> J2{0, 2};
    CHECK_FALSE(transporter(C3, I, J2).has_value());
    const auto id = transporter(C3, I, I);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());
    const std::vector<Point> none;
    CHECK(transporter(C3, none, none)->is_identity());
    CHECK_THROWS_AS(transporter(C3, I, std::vector<Point>{0}), InvalidArgument);
  }

  TEST_CASE("transporter agrees with element search") {
    const PermGroup G = act_affine(2, 3).group();
    const oracle::Group O(G.degree(), gens_of(G));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<Point> I(n), J(n);
      for (auto& x : I) x = static_cast<Point>(rng() % 9);
      for (auto& x : J) x = static_cast<Point>(rng() % 9);
      if (trial % 2) {  // force some positive cases
        const auto& g = O.elements()[rng() % O.order()];
        for (std::size_t i = 0; i < n; ++i) J[i] = g[I[i]];
      }
      const auto t = transporter(G, I, J);
      CHECK(t.has_value() == equivalent_by_elements(O, I, J));
      if (t) CHECK(grpstat::apply(*t, I) == J);
      CHECK(r_equivalent(G, I, J, static_cast<unsigned>(n)) == t.has_value());
    }
  }

  TEST_CASE("r_equivalent examples and errors") {
    const PermGroup C2(2, {Permutation({1, 0})});
    const std::vector<Point> I{0, 1}, J{0, 0};
    CHECK(r_equivalent(C2, I, J, 1));
    CHECK_FALSE(r_equivalent(C2, I, J, 2));
    CHECK_THROWS_AS(r_equivalent(C2, I, J, 0), InvalidArgument);
    CHECK_THROWS_AS(r_equivalent(C2, I, J, 3), InvalidArgument);
  }

  TEST_CASE("r-equivalence is monotone in r") {
    const PermGroup G = act_k_subsets(5, 2, SymVariant::sym).group();
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + rng() % 4;
      std::vector<Point> I(n), J(n);
      for (auto& x : I) x = static_cast<Point>(rng() % 10);
      for (std::size_t i = 0; i < n; ++i) J[i] = (rng() % 3 == 0) ? I[i] : static_cast<Point>(rng() % 10);
      bool previous = true;
      for (unsigned r = 1; r <= n; ++r) {
        const bool now = r_equivalent(G, I, J, r);
        CHECK((previous || !now));
        previous = now;
      }
    }
  }

  TEST_CASE("rc_upper examples") {
    CHECK(rc_upper(PermGroup::symmetric(4)) == 4);
    CHECK(rc_upper(PermGroup(2, {Permutation({1, 0})})) == 2);
    const PermGroup V4 = act_regular(
        PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})}),
        "v4").group();
    CHECK(rc_upper(V4) == 2);
    CHECK_THROWS_AS(rc_upper(stat_I(V4)), InvalidArgument);
  }

  TEST_CASE("rc_exact examples") {
    const auto trivial = rc_exact(PermGroup::trivial(3));
    CHECK(trivial.exact());
    CHECK(trivial.value == 1);
    const auto c2 = rc_exact(PermGroup(2, {Permutation({1, 0})}));
    CHECK(c2.exact());
    CHECK(c2.value == 2);
    REQUIRE(c2.witness.has_value());
    CHECK(c2.witness->I == std::vector<Point>{0, 1});
    CHECK(c2.witness->J == std::vector<Point>{0, 0});
    CHECK(rc_exact(PermGroup::symmetric(4)).value == 2);
    CHECK(rc_exact(act_natural(5, SymVariant::alt).group()).value == 4);
  }

  TEST_CASE("rc_exact agrees with the naive oracle on small catalog groups") {
    int compared = 0;
    for (const auto& e : catalog()) {
      const auto inst = e.build();
      if (inst.degree > 6) continue;
      const PermGroup G = inst.group();
      CAPTURE(e.id);
      const auto rc = rc_exact(G);
      REQUIRE(rc.exact());
      CHECK(rc.value == oracle::relational_complexity(inst.degree, gens_of(G), 6));
      CHECK(rc.value <= rc_upper(G));
      if (rc.witness) {
        CHECK(verify_witness(G, *rc.witness));
        CHECK(rc.witness->n == rc.value);
        CHECK(rc.witness->r + 1 == rc.value);
      }
      ++compared;
    }
    CHECK(compared >= 10);
  }

  TEST_CASE("witnesses are genuine counterexamples") {
    const PermGroup G = act_subspaces(2, 5, 1, 1, LinearGroup::gl).group();
    const auto rc = rc_exact(G);
    REQUIRE(rc.witness.has_value());
    const auto& w = *rc.witness;
    CHECK(r_equivalent(G, w.I, w.J, w.r));
    CHECK_FALSE(r_equivalent(G, w.I, w.J, w.n));
    auto broken = w;
    broken.J = broken.I;
    CHECK_FALSE(verify_witness(G, broken));
  }

  TEST_CASE("tight budgets report an interval") {
    RCOptions options;
    options.node_budget = 2;
    const auto rc = rc_exact(act_subspaces(3, 3, 1, 1, LinearGroup::gl).group(), options);
    CHECK_FALSE(rc.exact());
    CHECK(rc.lower <= rc.upper);
    CHECK(rc.value == rc.lower);
  }

  TEST_CASE("n_cap truncation is never reported as exact") {
    RCOptions options;
    options.n_cap = 2;
    const auto rc = rc_exact(act_natural(5, SymVariant::alt).group(), options);
    CHECK(rc.lower == 2);
    CHECK_FALSE(rc.exact());
  }
}
