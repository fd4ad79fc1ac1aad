// Acceptance runner: one line per criterion, "[PASS]" or "[FAIL]", with the
// measured runtime against its limit. Pass a criterion number to run just
// that one. Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grpstat/actions.hpp"
#include "grpstat/harness.hpp"
#include "grpstat/rc.hpp"
#include "grpstat/stats.hpp"
#include "grpstat/symplectic.hpp"
#include "oracles.hpp"

using namespace grpstat;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " FAILED: " << what << ';';
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Verdict&)> run;
};

std::vector<CheckResult> run_check(const std::string& id, const std::string& filter = "",
                                   bool include_slow = false) {
  VerifyParams p;
  p.filter = filter;
  p.include_slow = include_slow;
  if (auto env = budget_from_environment()) p.node_budget = *env;
  return verify(id, p);
}

const CheckResult* find(const std::vector<CheckResult>& results, const std::string& instance) {
  for (const auto& r : results)
    if (r.instance_id == instance) return &r;
  return nullptr;
}

/// Every result passes and there are at least `expected` of them.
void require_all_pass(Verdict& v, const std::vector<CheckResult>& results, std::size_t expected,
                      const std::string& check) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed()) {
      ++passed;
    } else {
      v.require(false, check + " on " + r.instance_id + " [" + to_string(r.status) + "] " +
                           r.detail);
    }
  }
  v.require(passed >= expected, check + ": " + std::to_string(passed) + " passing results, need " +
                                    std::to_string(expected));
  v.note << ' ' << check << ' ' << passed << '/' << results.size() << ';';
}

std::vector<oracle::Images> gens_of(const PermGroup& G) {
  std::vector<oracle::Images> gens;
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return gens;
}

oracle::Group to_oracle(const PermGroup& G) { return {G.degree(), gens_of(G)}; }

void c01_inequality_chain(Verdict& v) {
  const auto results = run_check("INEQ_CHAIN", "!slow");
  std::size_t small = 0;
  for (const auto& r : results) {
    if (std::stoul(r.values.at("t")) > 60) continue;
    v.require(r.passed(), "chain on " + r.instance_id + ": " + r.detail);
    small += r.passed();
  }
  v.require(small >= 20, "only " + std::to_string(small) + " instances of degree <= 60");
  v.note << " " << small << " instances of degree <= 60 exact;";

  // brute-force agreement where subsets can be enumerated
  std::size_t compared = 0;
  for (const auto& r : results) {
    const auto inst = catalog_entry(r.instance_id).build();
    const PermGroup G = inst.group();
    if (inst.degree > 10 || G.order() * (Order(1) << inst.degree) > Order(4000000)) continue;
    const auto O = to_oracle(G);
    const unsigned expect[4] = {oracle::min_base(O), oracle::max_minimal_base(O),
                                oracle::height(O), oracle::max_irredundant(O)};
    for (int k = 0; k < 4; ++k)
      v.require(r.certificates.at(k).value == expect[k],
                "oracle disagrees on " + r.instance_id + " for " + to_string(r.certificates[k].kind));
    ++compared;
  }
  v.note << " brute force agrees on " << compared << ';';
}

void c02_rc_bound(Verdict& v) {
  const auto results = run_check("RC_HEIGHT");
  require_all_pass(v, results, 25, "RC_HEIGHT");
  std::size_t compared = 0;
  for (const auto& r : results) {
    v.require(r.values.count("rc_status") && r.values.at("rc_status") == "exact",
              "RC not exact on " + r.instance_id);
    const auto inst = catalog_entry(r.instance_id).build();
    if (inst.degree > 6) continue;
    const PermGroup G = inst.group();
    const unsigned naive = oracle::relational_complexity(inst.degree, gens_of(G), 6);
    v.require(std::to_string(naive) == r.values.at("rc_lower"),
              "naive oracle RC=" + std::to_string(naive) + " on " + r.instance_id);
    ++compared;
  }
  v.note << " naive oracle agrees on " << compared << ';';
}

void c03_pgl_heights(Verdict& v) {
  const auto results = run_check("PGL_H");
  require_all_pass(v, results, 4, "PGL_H");
  const std::map<std::string, unsigned> expected = {
      {"pgl_3_2", 3}, {"pgl_4_2", 4}, {"pgl_3_3", 4}, {"pgl_3_4", 4}};
  for (const auto& [id, h] : expected) {
    const auto* r = find(results, id);
    v.require(r != nullptr, "no result for " + id);
    if (!r) continue;
    v.require(r->certificates.at(0).exact() && r->certificates[0].value == h,
              id + " has H=" + std::to_string(r->certificates[0].value));
    v.note << ' ' << id << " H=" << r->certificates[0].value << ';';
  }
}

void c04_symplectic_orbits(Verdict& v) {
  const auto results = run_check("ORBIT_SIZES", "forms !slow");
  require_all_pass(v, results, 6, "ORBIT_SIZES");
  for (auto [m, e] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 1}, {2, 1}, {1, 2}}) {
    const SymplecticSpace S(m, e);
    const Field& F = S.field();
    std::vector<MatrixGF> xs;
    std::vector<Vector> cs;
    for (std::size_t i = 1; i < S.vector_count(); ++i) {
      cs.push_back(S.unpack(i));
      xs.push_back(S.transvection(cs.back()));
    }
    std::mt19937_64 rng(m * 31 + e);
    for (int k = 0; k < 10; ++k) {
      MatrixGF x = MatrixGF::identity(2 * m);
      for (int len = 0; len < 6; ++len) x = multiply(F, x, xs[rng() % cs.size()]);
      xs.push_back(x);
    }
    std::size_t pairs = 0;
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
      for (std::size_t i = 0; i < S.vector_count(); ++i) {
        const auto a = S.unpack(i);
        const auto expected = S.form_image_brute_force(xs[xi], a);
        bool ok = S.form_image(xs[xi], a) == expected;
        if (xi < cs.size()) ok = ok && S.form_image_transvection(cs[xi], a) == expected;
        v.require(ok, "form_image mismatch for (m,e)=(" + std::to_string(m) + "," +
                          std::to_string(e) + ")");
        ++pairs;
      }
    }
    v.note << " (" << m << ',' << e << "): " << pairs << " form images match;";
  }
}

void c05_sp_stab(Verdict& v) {
  const auto results = run_check("SP_STAB", "forms !slow");
  for (const char* id : {"qf_2_1_minus", "qf_2_1_plus"}) {
    const auto* r = find(results, id);
    v.require(r != nullptr, std::string("no result for ") + id);
    if (!r) continue;
    v.require(r->passed(), std::string(id) + ": " + r->detail);
    v.require(r->certificates.at(0).exact(), std::string(id) + ": I not exact");
    v.note << ' ' << id << " I=" << r->certificates[0].value << " (bound 5);";
  }
}

void c06_m24(Verdict& v) {
  const auto results = run_check("M24_I", "", true);
  v.require(results.size() == 1, "M24_I produced no result");
  if (results.empty()) return;
  const auto& r = results[0];
  v.require(r.certificates.at(0).exact(), "I(M24) search did not complete");
  v.require(r.passed(), "expected I(M24) = 8, computed " + r.detail);
  v.note << ' ' << r.detail << ';';
}

void c07_diagonal(Verdict& v) {
  const auto results = run_check("DIAG_I");
  const auto* r = find(results, "diag_alt5_m2");
  v.require(r != nullptr, "no diagonal result");
  if (!r) return;
  v.require(r->values.at("t") == "60", "degree " + r->values.at("t"));
  v.require(r->certificates.at(0).exact() && r->certificates[0].value == 5,
            "I(W) = " + std::to_string(r->certificates[0].value));
  v.require(r->values.at("point_stabilizer_order") == "240",
            "W_omega order " + r->values.at("point_stabilizer_order"));
  v.require(r->values.at("order") == "14400", "|W| = " + r->values.at("order"));
  v.note << " t=60 I=" << r->certificates[0].value << " |W_omega|="
         << r->values.at("point_stabilizer_order") << ';';
}

void c08_products(Verdict& v) {
  require_all_pass(v, run_check("PROD_I"), 5, "PROD_I");
  require_all_pass(v, run_check("PROD_H"), 5, "PROD_H");
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"sym3", "sym3"}, {"sym4", "c2_regular"}, {"d5", "alt4"},
      {"c4_regular", "v4_regular"}, {"agl_1_7", "c3_regular"}};
  for (const auto& [a, b] : pairs) {
    const auto A = catalog_entry(a).build();
    const auto B = catalog_entry(b).build();
    const auto AB = act_direct_product(A, B);
    const unsigned ia = oracle::max_irredundant(to_oracle(A.group()));
    const unsigned ib = oracle::max_irredundant(to_oracle(B.group()));
    const unsigned iab = oracle::max_irredundant(to_oracle(AB.group()));
    v.require(iab == ia + ib - 1, "brute force I(" + a + " x " + b + ") = " + std::to_string(iab));
  }
  v.note << " brute-force I identity on 5 pairs;";
}

void c09_regular_normal(Verdict& v) {
  const auto results = run_check("REGNORM_I", "affine");
  for (const char* id : {"agl_1_7", "agl_2_3", "agl_3_2"}) {
    const auto* r = find(results, id);
    v.require(r != nullptr && r->passed(), std::string("REGNORM_I on ") + id);
    if (r) v.note << ' ' << id << ' ' << r->detail << ';';
  }
}

void c10_partitions(Verdict& v) {
  const auto results = run_check("PARTITION_I");
  require_all_pass(v, results, 3, "PARTITION_I");
  const std::map<std::string, std::string> degrees = {
      {"sym6_p23", "10"}, {"sym6_p32", "15"}, {"sym8_p42", "105"}};
  for (const auto& [id, t] : degrees) {
    const auto* r = find(results, id);
    v.require(r != nullptr, "no result for " + id);
    if (!r) continue;
    v.require(r->values.at("t") == t && r->values.at("t_formula") == t, id + " degree");
    v.note << ' ' << id << " t=" << t << " I=" << r->certificates.at(0).value << ';';
  }
}

void c11_main_bounds(Verdict& v) {
  require_all_pass(v, run_check("HEIGHT_MAIN", "", true), 20, "HEIGHT_MAIN");
  require_all_pass(v, run_check("IRRED_MAIN", "", true), 20, "IRRED_MAIN");
  require_all_pass(v, run_check("LIEBECK_B", "", true), 20, "LIEBECK_B");
}

void c12_pairs(Verdict& v) {
  const auto results = run_check("PAIRS_H");
  require_all_pass(v, results, 4, "PAIRS_H");
  const auto h_points = stat_H(catalog_entry("pgl_3_2").build().group());
  for (auto [id, t] : std::vector<std::pair<std::string, std::string>>{
           {"pairs1_3_2_1", "28"}, {"pairs2_3_2_1", "21"}}) {
    const auto* r = find(results, id);
    v.require(r != nullptr, "no result for " + id);
    if (!r) continue;
    v.require(r->values.at("t") == t && r->values.at("t_formula") == t, id + " degree");
    const auto& H = r->certificates.at(0);
    v.require(H.exact() && H.value <= 2 * h_points.value, id + " H=" + std::to_string(H.value));
    v.note << ' ' << id << " t=" << t << " H=" << H.value << " <= " << 2 * h_points.value << ';';
  }
}

void c13_chain_length(Verdict& v) {
  for (unsigned n : {4u, 5u}) {
    const PermGroup S = PermGroup::symmetric(n);
    const auto lattice = stat_len(S, LenMode::exact_lattice);
    const unsigned formula = symmetric_chain_length(n);
    const unsigned brute = oracle::chain_length(to_oracle(S));
    v.require(lattice.exact() && lattice.value == n && formula == n && brute == n,
              "l(Sym(" + std::to_string(n) + ")): lattice " + std::to_string(lattice.value) +
                  ", formula " + std::to_string(formula) + ", brute force " +
                  std::to_string(brute));
    v.note << " l(Sym(" << n << "))=" << lattice.value << ';';
  }
  require_all_pass(v, run_check("LEN_DP"), 5, "LEN_DP");
  require_all_pass(v, run_check("QUOT_CHAIN"), 10, "QUOT_CHAIN");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "inequality chain b <= B <= H <= I <= floor(b log2 t)", 30, c01_inequality_chain},
      {2, "RC <= H + 1, exact RC, naive oracle on degree <= 6", 60, c02_rc_bound},
      {3, "PGL height table", 120, c03_pgl_heights},
      {4, "symplectic orbit sizes and form images", 30, c04_symplectic_orbits},
      {5, "I(Sp_4(2), Omega^+-) <= 5", 30, c05_sp_stab},
      {6, "I(M24) = 8", 600, c06_m24},
      {7, "diagonal type: t = 60, I(W) = 5, |W_omega| = 240", 120, c07_diagonal},
      {8, "direct products: I identity and H bound", 60, c08_products},
      {9, "regular normal subgroup bound for AGL_d(p)", 30, c09_regular_normal},
      {10, "partition actions: I < 2 log2 t", 120, c10_partitions},
      {11, "main bounds on primitive non-large-base groups", 300, c11_main_bounds},
      {12, "subspace pair actions", 60, c12_pairs},
      {13, "subgroup chain length cross-checks", 60, c13_chain_length},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || (argc > 1 && (only < 1 || only > static_cast<int>(criteria.size())))) {
    std::cerr << "usage: " << argv[0] << " [criterion number 1-" << criteria.size() << "]\n";
    return 2;
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds < c.limit_seconds, "runtime over the limit");
    failures += !v.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s, limit %.0f s)", seconds, c.limit_seconds);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << 'C' << (c.number < 10 ? "0" : "")
              << c.number << ' ' << c.title << ' ' << timing << " --" << v.note.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
