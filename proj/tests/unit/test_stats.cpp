#include <doctest.h>

#include "grpstat/actions.hpp"
#include "grpstat/error.hpp"
#include "grpstat/harness.hpp"
#include "grpstat/stats.hpp"
#include "oracles.hpp"

using namespace grpstat;

namespace {

oracle::Group to_oracle(const PermGroup& G) {
  std::vector<oracle::Images> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return {G.degree(), gens};
}

PermGroup cyclic(std::size_t n) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return {n, {Permutation(im)}};
}

}  // namespace

TEST_SUITE("stats") {
  TEST_CASE("examples") {
    const PermGroup S3 = PermGroup::symmetric(3);
    const PermGroup S4 = PermGroup::symmetric(4);
    const PermGroup V4 = act_regular(
        PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})}),
        "v4").group();
    CHECK(stat_b(S4).value == 3);
    CHECK(stat_b(cyclic(5)).value == 1);
    CHECK(stat_b(act_affine(1, 7).group()).value == 2);
    CHECK(stat_H(S4).value == 3);
    CHECK(stat_H(V4).value == 1);
    CHECK(stat_H(act_subspaces(3, 3, 1, 1, LinearGroup::gl).group()).value == 4);
    CHECK(stat_I(S3).value == 2);
    CHECK(stat_B(S3).value == 2);
    CHECK(stat_B(S4).value == 3);
    CHECK(stat_B(cyclic(5)).value == 1);
  }

  TEST_CASE("trivial group") {
    const PermGroup T = PermGroup::trivial(4);
    CHECK(stat_b(T).value == 0);
    CHECK(stat_H(T).value == 0);
    CHECK(stat_I(T).value == 0);
    CHECK(stat_B(T).value == 0);
  }

  TEST_CASE("certificates are exact and re-verifiable") {
    const PermGroup G = act_k_subsets(5, 2, SymVariant::sym).group();
    for (auto* stat : {&stat_b, &stat_B, &stat_H, &stat_I}) {
      const auto cert = (*stat)(G, {});
      CHECK(cert.exact());
      CHECK(cert.lower == cert.value);
      CHECK(cert.upper == cert.value);
      CHECK(cert.witness.size() == cert.value);
      CHECK(verify_certificate(G, cert).empty());
      auto forged = cert;
      if (!forged.orders.empty()) {
        forged.orders.back() += 1;
        CHECK_FALSE(verify_certificate(G, forged).empty());
      }
    }
  }

  TEST_CASE("budget exhaustion yields bounds, never a false exact") {
    const PermGroup G = act_subspaces(3, 3, 1, 1, LinearGroup::gl).group();
    SearchOptions tiny;
    tiny.node_budget = 3;
    const auto cert = stat_I(G, tiny);
    CHECK_FALSE(cert.exact());
    CHECK(cert.lower <= cert.upper);
    CHECK(cert.lower <= stat_I(G).value);
    CHECK(stat_I(G).value <= cert.upper);
  }

  TEST_CASE("all four statistics agree with brute force") {
    std::vector<std::pair<std::string, PermGroup>> groups;
    for (const auto& e : catalog()) {
      const auto inst = e.build();
      if (inst.degree > 10) continue;
      const PermGroup G = inst.group();
      if (G.order() * (Order(1) << inst.degree) > Order(4000000)) continue;
      groups.emplace_back(e.id, G);
    }
    groups.emplace_back("c6", cyclic(6));
    groups.emplace_back("c3_on_5", PermGroup(5, {Permutation::from_cycles(5, {{0, 1, 2}})}));
    REQUIRE(groups.size() >= 15);
    for (const auto& [id, G] : groups) {
      CAPTURE(id);
      const auto O = to_oracle(G);
      CHECK(stat_b(G).value == oracle::min_base(O));
      CHECK(stat_B(G).value == oracle::max_minimal_base(O));
      CHECK(stat_H(G).value == oracle::height(O));
      CHECK(stat_I(G).value == oracle::max_irredundant(O));
    }
  }

  TEST_CASE("independence and independent_core") {
    const PermGroup S3 = PermGroup::symmetric(3);
    const std::vector<Point> all3{0, 1, 2}, two{0, 1};
    CHECK(independent_core(S3, all3) == two);
    CHECK(is_independent(S3, two));
    CHECK_FALSE(is_independent(S3, all3));
    CHECK(independent_core(S3, two) == two);
    const std::vector<Point> c4pts{0, 1}, c4core{0};
    CHECK(independent_core(cyclic(4), c4pts) == c4core);
    // the core has the same pointwise stabilizer
    const PermGroup G = act_affine(3, 2).group();
    const std::vector<Point> pts{0, 1, 2, 3, 5, 6};
    const auto core = independent_core(G, pts);
    CHECK(is_independent(G, core));
    CHECK(G.pointwise_stabilizer(core).order() == G.pointwise_stabilizer(pts).order());
  }

  TEST_CASE("subgroup chain length") {
    CHECK(stat_len(cyclic(12)).value == 3);
    CHECK(stat_len(cyclic(12)).exact());
    const PermGroup S4 = PermGroup::symmetric(4);
    const PermGroup S5 = PermGroup::symmetric(5);
    CHECK(stat_len(S4, LenMode::exact_lattice).value == 4);
    CHECK(stat_len(S5, LenMode::exact_lattice).value == 5);
    CHECK(stat_len(S5, LenMode::bound).value == 6);
    CHECK_FALSE(stat_len(S5, LenMode::bound).exact());
    CHECK(oracle::chain_length(to_oracle(S4)) == 4);
    CHECK(oracle::chain_length(to_oracle(S5)) == 5);
    CHECK(symmetric_chain_length(4) == 4);
    CHECK(symmetric_chain_length(5) == 5);
    CHECK(symmetric_chain_length(8) == 10);  // ceil(3*8/2) - b(8) - 1 = 12 - 1 - 1
    CHECK(is_cyclic(cyclic(12)));
    CHECK_FALSE(is_cyclic(S4));
    CHECK_THROWS_AS(stat_len(PermGroup::symmetric(7), LenMode::exact_lattice, 100), CapExceeded);
    for (auto* G : {&S4}) {
      const auto d8 = PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                    Permutation::from_cycles(4, {{1, 3}})});
      CHECK(stat_len(d8, LenMode::exact_lattice).value == oracle::chain_length(to_oracle(d8)));
      CHECK(stat_I(*G).value <= stat_len(*G).value);
    }
  }
}
