#include <doctest.h>

#include <random>
#include <set>

#include "grpstat/actions.hpp"
#include "grpstat/error.hpp"
#include "grpstat/symplectic.hpp"
#include "oracles.hpp"

using namespace grpstat;

namespace {

void check_instance(const ActionInstance& a) {
  CHECK_NOTHROW(check_meta(a));
  CHECK(a.labels.size() == a.degree);
  for (const auto& g : a.generators) CHECK(g.degree() == a.degree);
}

}  // namespace

TEST_SUITE("actions") {
  TEST_CASE("natural, k-subset and partition actions") {
    auto s4 = act_natural(4, SymVariant::sym);
    check_instance(s4);
    CHECK(s4.group().order() == 24);
    CHECK(act_natural(5, SymVariant::alt).group().order() == 60);
    CHECK(is_primitive(act_natural(3, SymVariant::sym).group()));

    CHECK(act_k_subsets(5, 2, SymVariant::sym).degree == 10);
    const auto k63 = act_k_subsets(6, 3, SymVariant::sym);
    check_instance(k63);
    CHECK(k63.degree == 20);
    CHECK(is_transitive(k63.group()));
    const auto a42 = act_k_subsets(4, 2, SymVariant::alt);
    CHECK(a42.degree == 6);
    CHECK(a42.group().order() == 12);

    for (auto [a, b, t] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
             {3, 2, 15}, {2, 3, 10}, {2, 2, 3}}) {
      const auto p = act_partitions(a, b, SymVariant::sym);
      check_instance(p);
      CHECK(p.degree == t);
    }
  }

  TEST_CASE("affine groups") {
    for (auto [d, p, t, order] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t, int>>{
             {1, 5, 5, 20}, {2, 2, 4, 24}, {3, 2, 8, 1344}}) {
      const auto a = act_affine(d, p);
      check_instance(a);
      CHECK(a.degree == t);
      CHECK(a.group().order() == order);
    }
    CHECK_THROWS_AS(act_affine(1, 6), InvalidArgument);
  }

  TEST_CASE("product action is the wreath product") {
    const auto s3 = act_natural(3, SymVariant::sym);
    const auto w = act_product(s3, 2);
    check_instance(w);
    CHECK(w.degree == 9);
    CHECK(w.group().order() == 72);
    CHECK(is_primitive(w.group()));
    const auto pgl = act_subspaces(2, 5, 1, 1, LinearGroup::gl);
    const auto w2 = act_product(pgl, 2);
    CHECK(w2.degree == 36);
    CHECK(w2.group().order() == pgl.group().order() * pgl.group().order() * 2);
    const auto c2 = act_regular(PermGroup(2, {Permutation({1, 0})}), "c2");
    CHECK(act_product(c2, 3).group().order() == 8 * 6);
  }

  TEST_CASE("direct product, regular and quotient actions") {
    const auto s3 = act_natural(3, SymVariant::sym);
    const auto d = act_direct_product(s3, act_natural(2, SymVariant::sym));
    CHECK(d.degree == 6);
    CHECK(d.group().order() == 12);
    CHECK(is_transitive(d.group()));
    CHECK_FALSE(is_primitive(d.group()));
    const auto r = act_regular(s3.group(), "s3");
    CHECK(r.degree == 6);
    CHECK(r.group().order() == 6);
    CHECK(r.group().stabilizer(0).order() == 1);

    const PermGroup S4 = PermGroup::symmetric(4);
    const std::vector<Permutation> v4{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
    const auto q = act_quotient(S4, v4, "s4/v4");
    CHECK(q.degree == 6);
    CHECK(q.group().order() == 6);
    const std::vector<Permutation> not_normal{Permutation::from_cycles(4, {{0, 1}})};
    CHECK_THROWS_AS(act_quotient(S4, not_normal, "bad"), InvalidArgument);
  }

  TEST_CASE("diagonal type") {
    const auto spec = diagonal_spec_alt5(2, true);
    const auto w = act_diagonal(spec);
    check_instance(w);
    CHECK(w.degree == 60);
    CHECK(w.group().order() == 14400);
    CHECK(w.group().stabilizer(0).order() == 240);
    CHECK(act_diagonal(diagonal_spec_alt5(3, false)).degree == 3600);

    // Right multiplication by the diagonal (x, x) and the inner automorphism
    // of x induce the same permutation of the cosets, and it lies in W.
    const std::size_t k = spec.elements.size();
    const PermGroup W = w.group();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = static_cast<std::uint32_t>(rng() % k);
      std::vector<Point> by_diagonal(k), by_inner(k);
      for (std::uint32_t s = 0; s < k; ++s) {
        // point s is the coset D(1, s); D(x, s x) = D(1, x^{-1} s x)
        const auto sx = spec.cayley[s][x];
        by_diagonal[s] = spec.cayley[spec.inverse[x]][sx];
        by_inner[s] = spec.cayley[spec.cayley[spec.inverse[x]][s]][x];
      }
      CHECK(by_diagonal == by_inner);
      CHECK(W.contains(Permutation(by_diagonal)));
    }
    const auto psl = act_diagonal(diagonal_spec_psl32(2, true));
    check_instance(psl);
    CHECK(psl.degree == 168);
  }

  TEST_CASE("diagonal spec validation") {
    const PermGroup S3 = PermGroup::symmetric(3);
    CHECK_THROWS_AS(make_diagonal_spec("s3", S3, 2, {}), InvalidArgument);
  }

  TEST_CASE("subspace actions") {
    const auto fano = act_subspaces(3, 2, 1, 1, LinearGroup::gl);
    check_instance(fano);
    CHECK(fano.degree == 7);
    CHECK(fano.group().order() == 168);
    CHECK(act_subspaces(4, 2, 1, 2, LinearGroup::gl).degree == 35);
    const auto pgaml = act_subspaces(2, 2, 2, 1, LinearGroup::gammal);
    CHECK(pgaml.degree == 5);
    CHECK(pgaml.group().order() == 120);
    CHECK(act_subspaces(2, 3, 1, 1, LinearGroup::gl).degree == 4);
    CHECK(projective_group_order(3, 3, 1, LinearGroup::gl) == 5616);
    CHECK_THROWS_AS(act_subspaces(6, 2, 1, 3, LinearGroup::gl, 100), CapExceeded);
  }

  TEST_CASE("subspace pair actions") {
    const auto comp = act_subspace_pairs(3, 2, 1, 1, PairVariant::complement, false);
    const auto flag = act_subspace_pairs(3, 2, 1, 1, PairVariant::flag, false);
    const auto flag_g = act_subspace_pairs(3, 2, 1, 1, PairVariant::flag, true);
    check_instance(comp);
    check_instance(flag);
    check_instance(flag_g);
    CHECK(comp.degree == 28);
    CHECK(flag.degree == 21);
    CHECK(flag_g.degree == 21);
    CHECK(flag_g.group().order() == 2 * flag.group().order());
    CHECK(Order(comp.degree) == pair_action_degree(3, 2, 1, PairVariant::complement));
    CHECK(Order(flag.degree) == pair_action_degree(3, 2, 1, PairVariant::flag));
    CHECK(pair_action_degree(4, 2, 1, PairVariant::complement) ==
          Order(act_subspace_pairs(4, 2, 1, 1, PairVariant::complement, false).degree));
    CHECK_THROWS_AS(act_subspace_pairs(4, 2, 1, 2, PairVariant::flag, false), InvalidArgument);
  }

  TEST_CASE("M24") {
    const auto m = act_m24();
    check_instance(m);
    CHECK(m.degree == 24);
    CHECK(m.group().order() == 244823040);
  }

  TEST_CASE("meta claims are checked") {
    ActionMeta meta;
    meta.order = Order(7);
    const auto bad = act_from_generators("c3", 3, {Permutation::from_cycles(3, {{0, 1, 2}})}, meta);
    CHECK_THROWS_AS(check_meta(bad), Error);
  }
}

TEST_SUITE("symplectic") {
  TEST_CASE("quadratic form orbit sizes") {
    for (auto [m, e, plus, minus] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t, std::size_t>>{
             {1, 1, 3, 1}, {2, 1, 10, 6}, {1, 2, 10, 6}}) {
      const SymplecticSpace S(m, e);
      const auto p = act_quadratic_forms(m, e, FormSign::plus, FormGroup::transvections);
      const auto n = act_quadratic_forms(m, e, FormSign::minus, FormGroup::transvections);
      check_instance(p);
      check_instance(n);
      CHECK(p.degree == plus);
      CHECK(n.degree == minus);
      CHECK(Order(plus) == S.expected_orbit_size(+1));
      CHECK(Order(minus) == S.expected_orbit_size(-1));
      CHECK(is_transitive(p.group()));
      CHECK(is_transitive(n.group()));
      const auto all = act_quadratic_forms(m, e, FormSign::all, FormGroup::transvections);
      CHECK(all.degree == plus + minus);
      CHECK(orbits(all.group()).size() == 2);
      CHECK(all.group().order() == S.symplectic_order());
    }
    CHECK(SymplecticSpace(2, 1).symplectic_order() == 720);
    const auto minus11 = act_quadratic_forms(1, 1, FormSign::minus, FormGroup::transvections);
    CHECK(minus11.labels.size() == 1);
  }

  TEST_CASE("form_image examples") {
    const SymplecticSpace S(1, 1);
    CHECK(S.form_image_transvection({1, 0}, {0, 0}) == Vector{1, 0});
    CHECK(S.form_image_transvection({1, 1}, {0, 0}) == Vector{0, 0});
    for (std::size_t i = 0; i < S.vector_count(); ++i) {
      const auto a = S.unpack(i);
      CHECK(S.form_image(MatrixGF::identity(2), a) == a);
    }
    MatrixGF singular(2, 2);
    CHECK_THROWS_AS((void)S.form_image(singular, {0, 0}), InvalidArgument);
  }

  TEST_CASE("form_image agrees with brute force for q^{2m} <= 256") {
    for (auto [m, e] : std::vector<std::pair<std::size_t, std::uint32_t>>{
             {1, 1}, {1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 2}}) {
      const SymplecticSpace S(m, e);
      const Field& F = S.field();
      CAPTURE(m);
      CAPTURE(e);
      std::vector<MatrixGF> xs;
      std::vector<Vector> cs;
      for (std::size_t i = 1; i < S.vector_count(); ++i) {
        cs.push_back(S.unpack(i));
        xs.push_back(S.transvection(cs.back()));
      }
      std::mt19937_64 rng(m * 10 + e);
      for (int trial = 0; trial < 6; ++trial) {
        MatrixGF x = MatrixGF::identity(2 * m);
        for (int len = 0; len < 5; ++len) x = multiply(F, x, xs[rng() % xs.size()]);
        xs.push_back(x);
      }
      const std::size_t stride = S.vector_count() > 64 ? 7 : 1;
      for (std::size_t xi = 0; xi < xs.size(); xi += (xi < cs.size() ? stride : 1)) {
        CHECK(S.is_symplectic(xs[xi]));
        for (std::size_t i = 0; i < S.vector_count(); ++i) {
          const auto a = S.unpack(i);
          const auto expected = S.form_image_brute_force(xs[xi], a);
          CHECK(S.form_image(xs[xi], a) == expected);
          if (xi < cs.size()) CHECK(S.form_image_transvection(cs[xi], a) == expected);
        }
      }
    }
  }

  TEST_CASE("transvections preserve the type") {
    const SymplecticSpace S(2, 1);
    for (std::size_t c = 1; c < S.vector_count(); ++c) {
      for (std::size_t i = 0; i < S.vector_count(); ++i) {
        const auto a = S.unpack(i);
        CHECK(S.sign_of(S.form_image_transvection(S.unpack(c), a)) == S.sign_of(a));
      }
    }
  }

  TEST_CASE("GammaSp adds the Frobenius map") {
    const auto g = act_quadratic_forms(1, 2, FormSign::plus, FormGroup::gammasp);
    const auto n = act_quadratic_forms(1, 2, FormSign::plus, FormGroup::transvections);
    check_instance(g);
    CHECK(g.group().order() == 2 * n.group().order());
  }
}
