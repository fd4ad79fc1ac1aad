#include "grpstat/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "grpstat/error.hpp"
#include "grpstat/group_io.hpp"
#include "grpstat/symplectic.hpp"

namespace grpstat {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Catalog

bool CatalogEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::size_t CatalogEntry::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument(id + " has no parameter " + key);
  return std::stoul(it->second);
}

namespace {

using Tags = std::vector<std::string>;
using Params = std::map<std::string, std::string>;

PermGroup cyclic(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return {n, {Permutation::from_cycles(n, {cycle})}};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string id, std::string description, Tags tags, Params params,
                 std::function<ActionInstance()> build) {
    c.push_back({std::move(id), std::move(description), std::move(tags), std::move(params),
                 std::move(build)});
  };
  auto natural = [&](std::size_t n, SymVariant v, const char* type) {
    const std::string sym = v == SymVariant::sym ? "sym" : "alt";
    add(sym + std::to_string(n), (v == SymVariant::sym ? "Sym(" : "Alt(") + std::to_string(n) +
                                     ") on " + std::to_string(n) + " points",
        {"natural", "primitive", "large_base", type}, {{"n", std::to_string(n)}},
        [n, v] { return act_natural(n, v); });
  };

  // Natural actions.
  natural(3, SymVariant::sym, "type:HA");
  natural(4, SymVariant::sym, "type:HA");
  natural(5, SymVariant::sym, "type:AS");
  natural(6, SymVariant::sym, "type:AS");
  natural(7, SymVariant::sym, "type:AS");
  natural(8, SymVariant::sym, "type:AS");
  natural(4, SymVariant::alt, "type:HA");
  natural(5, SymVariant::alt, "type:AS");
  natural(6, SymVariant::alt, "type:AS");
  natural(7, SymVariant::alt, "type:AS");

  // k-subsets; 2k = n is imprimitive (complementary pairs form blocks).
  auto subsets = [&](std::size_t n, std::size_t k, SymVariant v, Tags tags) {
    const std::string sym = v == SymVariant::sym ? "sym" : "alt";
    tags.insert(tags.begin(), "k_subsets");
    add(sym + std::to_string(n) + "_k" + std::to_string(k),
        (v == SymVariant::sym ? "Sym(" : "Alt(") + std::to_string(n) + ") on " +
            std::to_string(k) + "-subsets",
        std::move(tags), {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
        [n, k, v] { return act_k_subsets(n, k, v); });
  };
  subsets(4, 2, SymVariant::sym, {"imprimitive"});
  subsets(5, 2, SymVariant::sym, {"primitive", "large_base", "type:AS"});
  subsets(6, 2, SymVariant::sym, {"primitive", "large_base", "type:AS"});
  subsets(6, 3, SymVariant::sym, {"imprimitive"});
  subsets(7, 2, SymVariant::alt, {"primitive", "large_base", "type:AS"});
  subsets(7, 3, SymVariant::sym, {"primitive", "large_base", "type:AS"});

  // Partitions into a blocks of size b. For (2,2) the image is Sym(3) on 3
  // points, permutationally the natural action.
  auto partitions = [&](std::size_t a, std::size_t b, Tags tags) {
    tags.insert(tags.begin(), "partitions");
    add("sym" + std::to_string(a * b) + "_p" + std::to_string(a) + std::to_string(b),
        "Sym(" + std::to_string(a * b) + ") on partitions into " + std::to_string(a) +
            " blocks of size " + std::to_string(b),
        std::move(tags), {{"a", std::to_string(a)}, {"b", std::to_string(b)}},
        [a, b] { return act_partitions(a, b, SymVariant::sym); });
  };
  partitions(2, 2, {"primitive", "large_base", "type:HA"});
  partitions(2, 3, {"primitive", "type:AS"});
  partitions(3, 2, {"primitive", "type:AS"});
  partitions(4, 2, {"primitive", "type:AS"});

  // Affine groups.
  auto affine = [&](std::size_t d, std::uint32_t p) {
    add("agl_" + std::to_string(d) + "_" + std::to_string(p),
        "AGL_" + std::to_string(d) + "(" + std::to_string(p) + ") on its vectors",
        {"affine", "primitive", "type:HA"}, {{"d", std::to_string(d)}, {"p", std::to_string(p)}},
        [d, p] { return act_affine(d, p); });
  };
  affine(1, 5);
  affine(1, 7);
  affine(2, 3);
  affine(3, 2);

  // Product actions H wr Sym(r) on Delta^r.
  add("sym3_wr2", "Sym(3) wr Sym(2) on 9 points (affine: Sym(3) = AGL_1(3))",
      {"product", "primitive", "large_base", "type:HA"}, {{"inner", "sym3"}, {"r", "2"}},
      [] { return act_product(act_natural(3, SymVariant::sym), 2); });
  add("sym5_wr2", "Sym(5) wr Sym(2) on 25 points",
      {"product", "primitive", "large_base", "type:PA"}, {{"inner", "sym5"}, {"r", "2"}},
      [] { return act_product(act_natural(5, SymVariant::sym), 2); });
  add("pgl_2_5_wr2", "PGL_2(5) wr Sym(2) on 36 points", {"product", "primitive", "type:PA"},
      {{"inner", "pgl_2_5"}, {"r", "2"}},
      [] { return act_product(act_subspaces(2, 5, 1, 1, LinearGroup::gl), 2); });
  add("c2_wr3", "Sym(2) wr Sym(3) on 8 points", {"product", "imprimitive"},
      {{"inner", "c2_regular"}, {"r", "3"}},
      [] { return act_product(act_natural(2, SymVariant::sym), 3); });

  // Diagonal type.
  add("diag_alt5_m2", "Alt(5)^2.(Out x Sym(2)) on 60 points", {"diagonal", "primitive", "type:SD"},
      {{"m", "2"}}, [] { return act_diagonal(diagonal_spec_alt5(2, true)); });

  // Projective groups on subspaces.
  auto subspaces = [&](std::string id, std::size_t n, std::uint32_t p, std::uint32_t f,
                       std::size_t m, LinearGroup grp, Tags tags) {
    const std::uint32_t q = static_cast<std::uint32_t>(std::pow(p, f));
    const std::string gname = grp == LinearGroup::gammal ? "PGammaL_" : "PGL_";
    tags.insert(tags.begin(), "subspaces");
    add(std::move(id),
        gname + std::to_string(n) + "(" + std::to_string(q) + ") on " + std::to_string(m) +
            "-spaces",
        std::move(tags),
        {{"n", std::to_string(n)},
         {"q", std::to_string(q)},
         {"m", std::to_string(m)},
         {"group", grp == LinearGroup::gammal ? "gammal" : "gl"}},
        [=] { return act_subspaces(n, p, f, m, grp); });
  };
  subspaces("pgaml_2_4", 2, 2, 2, 1, LinearGroup::gammal,
            {"primitive", "large_base", "type:AS"});  // = Sym(5) natural
  subspaces("pgl_2_5", 2, 5, 1, 1, LinearGroup::gl, {"primitive", "type:AS"});
  subspaces("pgl_3_2", 3, 2, 1, 1, LinearGroup::gl, {"primitive", "type:AS"});
  subspaces("pgl_3_3", 3, 3, 1, 1, LinearGroup::gl, {"primitive", "type:AS"});
  subspaces("pgl_3_4", 3, 2, 2, 1, LinearGroup::gl, {"primitive", "type:AS"});
  subspaces("pgaml_3_4", 3, 2, 2, 1, LinearGroup::gammal, {"primitive", "type:AS"});
  subspaces("pgl_4_2", 4, 2, 1, 1, LinearGroup::gl, {"primitive", "type:AS"});
  subspaces("pgl_4_2_lines", 4, 2, 1, 2, LinearGroup::gl, {"primitive", "type:AS"});

  // Pairs {U, W} of subspaces of dimensions m and n - m.
  auto pairs = [&](std::string id, PairVariant variant, bool graph, Tags tags) {
    tags.insert(tags.begin(), "pairs");
    add(std::move(id),
        std::string(graph ? "PGL_3(2).2" : "PGL_3(2)") + " on " +
            (variant == PairVariant::complement ? "complementary" : "incident") +
            " point-line pairs",
        std::move(tags),
        {{"n", "3"},
         {"q", "2"},
         {"m", "1"},
         {"variant", variant == PairVariant::complement ? "complement" : "flag"}},
        [=] { return act_subspace_pairs(3, 2, 1, 1, variant, graph); });
  };
  pairs("pairs1_3_2_1", PairVariant::complement, true, {"primitive", "type:AS"});
  pairs("pairs2_3_2_1", PairVariant::flag, true, {"primitive", "type:AS"});
  pairs("pairs1_3_2_1_pgl", PairVariant::complement, false, {"imprimitive"});
  pairs("pairs2_3_2_1_pgl", PairVariant::flag, false, {"imprimitive"});

  // Quadratic forms polarising to the symplectic form.
  auto forms = [&](std::size_t m, std::uint32_t e, FormSign sign, Tags tags) {
    const bool plus = sign == FormSign::plus;
    tags.insert(tags.begin(), "forms");
    add("qf_" + std::to_string(m) + "_" + std::to_string(e) + (plus ? "_plus" : "_minus"),
        "Sp_" + std::to_string(2 * m) + "(" + std::to_string(1u << e) + ") on " +
            (plus ? "plus" : "minus") + "-type forms",
        std::move(tags),
        {{"m", std::to_string(m)}, {"e", std::to_string(e)}, {"sign", plus ? "plus" : "minus"}},
        [=] { return act_quadratic_forms(m, e, sign, FormGroup::transvections); });
  };
  forms(1, 1, FormSign::plus, {"primitive", "large_base", "type:HA"});  // Sym(3) natural
  forms(1, 1, FormSign::minus, {"trivial"});                            // a single form
  forms(2, 1, FormSign::plus, {"primitive", "type:AS"});
  forms(2, 1, FormSign::minus, {"primitive", "large_base", "type:AS"});  // Sym(6) natural
  forms(1, 2, FormSign::plus, {"primitive", "large_base", "type:AS"});   // Alt(5) on pairs
  forms(1, 2, FormSign::minus, {"primitive", "type:AS"});
  forms(2, 2, FormSign::plus, {"primitive", "type:AS", "slow"});
  forms(2, 2, FormSign::minus, {"primitive", "type:AS", "slow"});

  add("m24", "Mathieu group M24 on 24 points", {"sporadic", "primitive", "type:AS"}, {},
      [] { return act_m24(); });

  // Small helper groups for the direct-product and quotient checks.
  auto aux = [&](std::string id, std::string description, Tags tags,
                 std::function<PermGroup()> group) {
    tags.insert(tags.begin(), "aux");
    add(id, std::move(description), std::move(tags), {}, [id, group] {
      const PermGroup G = group();
      return act_from_generators(id, G.degree(), G.generators());
    });
  };
  aux("c2_regular", "C2 regular", {"regular", "primitive", "large_base", "type:HA"},
      [] { return cyclic(2); });
  aux("c3_regular", "C3 regular", {"regular", "primitive", "large_base", "type:HA"},
      [] { return cyclic(3); });
  aux("c4_regular", "C4 regular", {"regular", "imprimitive"}, [] { return cyclic(4); });
  aux("v4_regular", "Klein four group regular", {"regular", "imprimitive"}, [] {
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  });
  aux("d5", "dihedral group of order 10 on 5 points", {"primitive", "type:HA"}, [] {
    return PermGroup(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                         Permutation::from_cycles(5, {{1, 4}, {2, 3}})});
  });
  aux("c2_x_c3", "C2 x C3 on 5 points", {"intransitive"}, [] {
    return PermGroup(5, {Permutation::from_cycles(5, {{0, 1}}),
                         Permutation::from_cycles(5, {{2, 3, 4}})});
  });
  return c;
}

const std::vector<CatalogEntry>& full_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

struct FilterTerm {
  bool negate = false;
  bool by_id = false;
  std::string value;
};

std::vector<FilterTerm> parse_filter(std::string_view filter) {
  std::vector<FilterTerm> terms;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    FilterTerm term;
    std::string_view t = token;
    if (t.front() == '!') {
      term.negate = true;
      t.remove_prefix(1);
    }
    if (t.starts_with("id:")) {
      term.by_id = true;
      t.remove_prefix(3);
      if (t.empty()) throw ParseError("catalog filter: empty id");
    } else {
      const auto& known = known_tags();
      if (std::find(known.begin(), known.end(), t) == known.end()) {
        throw ParseError("catalog filter: unknown tag '" + std::string(t) + "'");
      }
    }
    term.value = std::string(t);
    terms.push_back(std::move(term));
    token.clear();
  };
  for (char ch : filter) {
    if (ch == ' ' || ch == ',' || ch == '\t') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return terms;
}

bool matches(const CatalogEntry& entry, const std::vector<FilterTerm>& terms) {
  return std::all_of(terms.begin(), terms.end(), [&](const FilterTerm& term) {
    const bool hit = term.by_id ? entry.id == term.value : entry.has_tag(term.value);
    return hit != term.negate;
  });
}

}  // namespace

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> tags = [] {
    std::set<std::string> all;
    for (const auto& e : full_catalog()) all.insert(e.tags.begin(), e.tags.end());
    for (const char* t : {"large_base", "primitive", "imprimitive", "intransitive", "slow",
                          "type:AS", "type:HA", "type:SD", "type:PA"}) {
      all.insert(t);
    }
    return std::vector<std::string>(all.begin(), all.end());
  }();
  return tags;
}

std::vector<CatalogEntry> catalog(std::string_view filter) {
  const auto terms = parse_filter(filter);
  std::vector<CatalogEntry> out;
  for (const auto& e : full_catalog()) {
    if (matches(e, terms)) out.push_back(e);
  }
  return out;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : full_catalog()) {
    if (e.id == id) return e;
  }
  throw InvalidArgument("unknown catalog entry '" + std::string(id) + "'");
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Checks

namespace {

double log2_of(const Order& n) {
  // Exact integer part plus the fraction from the leading 53 bits.
  const unsigned bits = floor_log2(n);
  if (bits < 60) return std::log2(static_cast<double>(to_u64(n)));
  const Order top = n >> (bits - 52);
  return std::log2(static_cast<double>(to_u64(top))) + (bits - 52);
}

/// A built catalog entry with its statistics computed on demand.
struct Instance {
  const CatalogEntry* entry = nullptr;
  ActionInstance action;
  PermGroup group;
  std::map<StatKind, StatCertificate> stats;
};

class Context {
 public:
  Context(std::string filter, bool include_slow, std::uint64_t budget)
      : terms_(parse_filter(filter)), include_slow_(include_slow), budget_(budget) {}

  [[nodiscard]] bool selected(const CatalogEntry& e) const {
    return (include_slow_ || !e.has_tag("slow")) && matches(e, terms_);
  }

  /// Selected entries satisfying `pred`, in catalog order.
  template <typename Pred>
  std::vector<const CatalogEntry*> entries(Pred pred) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : full_catalog()) {
      if (selected(e) && pred(e)) out.push_back(&e);
    }
    return out;
  }

  Instance& get(const std::string& id) {
    auto it = cache_.find(id);
    if (it != cache_.end()) return *it->second;
    auto inst = std::make_unique<Instance>();
    inst->entry = &catalog_entry(id);
    inst->action = inst->entry->build();
    inst->group = inst->action.group();
    return *cache_.emplace(id, std::move(inst)).first->second;
  }

  const StatCertificate& stat(Instance& inst, StatKind kind) {
    auto it = inst.stats.find(kind);
    if (it != inst.stats.end()) return it->second;
    return inst.stats.emplace(kind, compute(inst.group, kind)).first->second;
  }

  [[nodiscard]] StatCertificate compute(const PermGroup& G, StatKind kind) const {
    const SearchOptions options{budget_};
    switch (kind) {
      case StatKind::min_base:
        return stat_b(G, options);
      case StatKind::max_minimal_base:
        return stat_B(G, options);
      case StatKind::max_independent:
        return stat_H(G, options);
      case StatKind::max_irredundant:
        return stat_I(G, options);
    }
    throw InvalidArgument("unknown statistic");
  }

  [[nodiscard]] std::uint64_t budget() const { return budget_; }

 private:
  std::vector<FilterTerm> terms_;
  bool include_slow_;
  std::uint64_t budget_;
  std::map<std::string, std::unique_ptr<Instance>> cache_;
};

/// Builder for one CheckResult; marks it skipped if any attached certificate
/// ran out of budget.
struct Outcome {
  CheckResult r;

  Outcome(const CheckInfo& info, std::string instance) {
    r.check_id = info.id;
    r.instance_id = std::move(instance);
    r.claim = info.claim;
  }
  Outcome& cert(const StatCertificate& c) {
    r.certificates.push_back(c);
    return *this;
  }
  Outcome& value(const std::string& key, const Order& v) {
    r.values[key] = to_string(v);
    return *this;
  }
  Outcome& value(const std::string& key, const std::string& v) {
    r.values[key] = v;
    return *this;
  }
  CheckResult finish(double lhs, double rhs, bool pass, std::string detail,
                     const PermGroup* group = nullptr) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.detail = std::move(detail);
    const bool bounded = std::any_of(r.certificates.begin(), r.certificates.end(),
                                     [](const StatCertificate& c) { return !c.exact(); });
    r.status = bounded ? CheckStatus::skipped : pass ? CheckStatus::pass : CheckStatus::fail;
    if (r.status == CheckStatus::skipped) {
      r.detail += " (statistic out of budget; bounds recorded)";
    }
    if (r.status == CheckStatus::fail && group) r.group_text = format_group(*group);
    return std::move(r);
  }
};

std::string kind_letter(StatKind kind) {
  switch (kind) {
    case StatKind::min_base:
      return "b";
    case StatKind::max_minimal_base:
      return "B";
    case StatKind::max_independent:
      return "H";
    case StatKind::max_irredundant:
      return "I";
  }
  return "?";
}

using CheckFn = std::function<void(Context&, const CheckInfo&, std::vector<CheckResult>&)>;

struct RegisteredCheck {
  CheckInfo info;
  CheckFn run;
};

// Fixed pairs for the direct-product checks.
const std::vector<std::pair<std::string, std::string>> kProductPairs = {
    {"sym3", "sym3"},       {"sym4", "c2_regular"}, {"d5", "alt4"},
    {"c4_regular", "v4_regular"}, {"agl_1_7", "c3_regular"},
};

struct QuotientPair {
  std::string group_id;
  std::string normal_name;
  std::function<std::vector<Permutation>(const ActionInstance&)> normal_gens;
};

std::vector<Permutation> translations(std::size_t d, std::size_t p) {
  std::size_t t = 1;
  for (std::size_t i = 0; i < d; ++i) t *= p;
  std::vector<Permutation> gens;
  std::size_t scale = 1;
  for (std::size_t i = 0; i < d; ++i, scale *= p) {
    std::vector<Point> images(t);
    for (std::size_t x = 0; x < t; ++x) {
      const std::size_t digit = x / scale % p;
      images[x] = static_cast<Point>(x - digit * scale + (digit + 1) % p * scale);
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

const std::vector<QuotientPair>& quotient_pairs() {
  static const std::vector<QuotientPair> pairs = {
      {"sym4", "V4",
       [](const ActionInstance&) {
         return std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
       }},
      {"sym5", "Alt(5)",
       [](const ActionInstance&) { return act_natural(5, SymVariant::alt).generators; }},
      {"sym3_wr2", "Sym(3)^2",
       [](const ActionInstance& a) {
         // The first generators of a product action are the base group's.
         const auto inner = act_natural(3, SymVariant::sym).generators.size();
         return std::vector<Permutation>(a.generators.begin(),
                                         a.generators.begin() + 2 * static_cast<long>(inner));
       }},
      {"agl_2_3", "translations", [](const ActionInstance&) { return translations(2, 3); }},
      {"c2_wr3", "C2^3",
       [](const ActionInstance& a) {
         return std::vector<Permutation>(a.generators.begin(), a.generators.begin() + 3);
       }},
  };
  return pairs;
}

bool is_large_base(const CatalogEntry& e) { return e.has_tag("large_base"); }

const std::vector<RegisteredCheck>& registry() {
  static const std::vector<RegisteredCheck> checks = [] {
    std::vector<RegisteredCheck> c;

    c.push_back({{"INEQ_CHAIN", "b <= B <= H <= I <= floor(b log2 t)", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry&) { return true; })) {
                     auto& inst = ctx.get(e->id);
                     const auto& b = ctx.stat(inst, StatKind::min_base);
                     const auto& B = ctx.stat(inst, StatKind::max_minimal_base);
                     const auto& H = ctx.stat(inst, StatKind::max_independent);
                     const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                     const std::size_t t = inst.group.degree();
                     // floor(b log2 t) = floor(log2 t^b), exact.
                     const unsigned bound = floor_log2(pow(Order(t), b.value));
                     const bool pass = b.value <= B.value && B.value <= H.value &&
                                       H.value <= I.value && I.value <= bound;
                     Outcome o(info, e->id);
                     o.cert(b).cert(B).cert(H).cert(I);
                     o.value("t", Order(t));
                     o.value("floor_b_log2_t", Order(bound));
                     std::ostringstream d;
                     d << "b=" << b.value << " B=" << B.value << " H=" << H.value
                       << " I=" << I.value << " floor(b log2 t)=" << bound;
                     out.push_back(o.finish(I.value, bound, pass, d.str(), &inst.group));
                   }
                 }});

    c.push_back({{"RC_HEIGHT", "RC <= H + 1 (exact RC search, degree <= 8)", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry&) { return true; })) {
                     auto& inst = ctx.get(e->id);
                     if (inst.group.degree() > 8) continue;
                     const auto& H = ctx.stat(inst, StatKind::max_independent);
                     const auto rc = rc_exact(inst.group, RCOptions{std::nullopt, ctx.budget()});
                     Outcome o(info, e->id);
                     o.cert(H);
                     o.r.tuple_witness = rc.witness;
                     o.value("rc_status", to_string(rc.status));
                     o.value("rc_lower", Order(rc.lower));
                     o.value("rc_upper", Order(rc.upper));
                     o.value("distinct_reduction_used", rc.distinct_reduction_used ? "true" : "false");
                     o.value("prefix_exceeds_height", rc.prefix_exceeds_height ? "true" : "false");
                     std::ostringstream d;
                     d << "RC=" << rc.value << " (" << to_string(rc.status) << ") H=" << H.value;
                     auto result = o.finish(rc.value, H.value + 1, rc.value <= H.value + 1,
                                            d.str(), &inst.group);
                     if (!rc.exact() && result.status == CheckStatus::pass) {
                       result.status = CheckStatus::skipped;
                       result.detail += " (RC search out of budget)";
                     }
                     out.push_back(std::move(result));
                   }
                 }});

    auto product_pairs = [](Context& ctx) {
      std::vector<std::pair<Instance*, Instance*>> out;
      for (const auto& [a, b] : kProductPairs) {
        if (!ctx.selected(catalog_entry(a)) && !ctx.selected(catalog_entry(b))) continue;
        out.emplace_back(&ctx.get(a), &ctx.get(b));
      }
      return out;
    };

    c.push_back({{"PROD_I", "I(A x B) = I(A) + I(B) - 1", false},
                 [product_pairs](Context& ctx, const CheckInfo& info,
                                 std::vector<CheckResult>& out) {
                   for (auto [A, B] : product_pairs(ctx)) {
                     const PermGroup AB = act_direct_product(A->action, B->action).group();
                     const auto& ia = ctx.stat(*A, StatKind::max_irredundant);
                     const auto& ib = ctx.stat(*B, StatKind::max_irredundant);
                     const auto iab = ctx.compute(AB, StatKind::max_irredundant);
                     Outcome o(info, A->entry->id + " x " + B->entry->id);
                     o.cert(ia).cert(ib).cert(iab);
                     const double rhs = double(ia.value) + ib.value - 1;
                     std::ostringstream d;
                     d << "I(AxB)=" << iab.value << " I(A)=" << ia.value << " I(B)=" << ib.value;
                     out.push_back(o.finish(iab.value, rhs, iab.value + 1 == ia.value + ib.value,
                                            d.str(), &AB));
                   }
                 }});

    c.push_back({{"PROD_H", "H(A x B) <= H(A) + H(B)", false},
                 [product_pairs](Context& ctx, const CheckInfo& info,
                                 std::vector<CheckResult>& out) {
                   for (auto [A, B] : product_pairs(ctx)) {
                     const PermGroup AB = act_direct_product(A->action, B->action).group();
                     const auto& ha = ctx.stat(*A, StatKind::max_independent);
                     const auto& hb = ctx.stat(*B, StatKind::max_independent);
                     const auto hab = ctx.compute(AB, StatKind::max_independent);
                     Outcome o(info, A->entry->id + " x " + B->entry->id);
                     o.cert(ha).cert(hb).cert(hab);
                     std::ostringstream d;
                     d << "H(AxB)=" << hab.value << " H(A)=" << ha.value << " H(B)=" << hb.value;
                     out.push_back(o.finish(hab.value, double(ha.value) + hb.value,
                                            hab.value <= ha.value + hb.value, d.str(), &AB));
                   }
                 }});

    c.push_back({{"LEN_DP", "len(A x B) <= len(A) + len(B)", false},
                 [product_pairs](Context& ctx, const CheckInfo& info,
                                 std::vector<CheckResult>& out) {
                   for (auto [A, B] : product_pairs(ctx)) {
                     const PermGroup AB = act_direct_product(A->action, B->action).group();
                     Outcome o(info, A->entry->id + " x " + B->entry->id);
                     const auto la = stat_len(A->group);
                     const auto lb = stat_len(B->group);
                     const auto lab = stat_len(AB);
                     o.value("method_AxB", to_string(lab.method));
                     std::ostringstream d;
                     d << "len(AxB)=" << lab.value << " len(A)=" << la.value
                       << " len(B)=" << lb.value;
                     auto result = o.finish(lab.value, double(la.value) + lb.value,
                                            lab.value <= la.value + lb.value, d.str(), &AB);
                     // Only exact lengths on both sides make the comparison meaningful.
                     if (!la.exact() || !lb.exact() || !lab.exact()) {
                       result.status = CheckStatus::skipped;
                       result.detail += " (chain length not exact)";
                     }
                     out.push_back(std::move(result));
                   }
                 }});

    c.push_back(
        {{"QUOT_CHAIN", "H(G) <= H(N) + len(G/N) and I(G) <= I(N) + len(G/N)", false},
         [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
           for (const auto& pair : quotient_pairs()) {
             if (!ctx.selected(catalog_entry(pair.group_id))) continue;
             auto& G = ctx.get(pair.group_id);
             const auto ngens = pair.normal_gens(G.action);
             const PermGroup N(G.group.degree(), ngens);
             const PermGroup Q = act_quotient(G.group, ngens, "quotient").group();
             const auto len_q = stat_len(Q);
             for (StatKind kind : {StatKind::max_independent, StatKind::max_irredundant}) {
               const auto& sg = ctx.stat(G, kind);
               const auto sn = ctx.compute(N, kind);
               const std::string k = kind_letter(kind);
               Outcome o(info, pair.group_id + " / " + pair.normal_name + " (" + k + ")");
               o.cert(sg).cert(sn);
               o.value("order_N", N.order());
               o.value("len_method", to_string(len_q.method));
               std::ostringstream d;
               d << k << "(G)=" << sg.value << " " << k << "(N)=" << sn.value
                 << " len(G/N)=" << len_q.value;
               auto result = o.finish(sg.value, double(sn.value) + len_q.value,
                                      sg.value <= sn.value + len_q.value, d.str(), &G.group);
               if (!len_q.exact() && result.status == CheckStatus::fail) {
                 result.status = CheckStatus::skipped;
               }
               out.push_back(std::move(result));
             }
           }
         }});

    c.push_back({{"REGNORM_I", "I <= log2 t + 1 (affine groups)", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry& x) {
                          return x.has_tag("affine");
                        })) {
                     auto& inst = ctx.get(e->id);
                     const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                     const Order t = inst.group.degree();
                     // I <= log2 t + 1  <=>  2^(I-1) <= t
                     const bool pass = I.value == 0 || pow(Order(2), I.value - 1) <= t;
                     Outcome o(info, e->id);
                     o.cert(I).value("t", t);
                     out.push_back(o.finish(I.value, log2_of(t) + 1, pass,
                                            "I=" + std::to_string(I.value) + " t=" + to_string(t),
                                            &inst.group));
                   }
                 }});

    c.push_back({{"DIAG_I", "I <= log2 t (diagonal type)", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry& x) {
                          return x.has_tag("diagonal");
                        })) {
                     auto& inst = ctx.get(e->id);
                     const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                     const Order t = inst.group.degree();
                     Outcome o(info, e->id);
                     o.cert(I).value("t", t);
                     o.value("point_stabilizer_order", inst.group.stabilizer(0).order());
                     o.value("order", inst.group.order());
                     out.push_back(o.finish(I.value, log2_of(t), pow(Order(2), I.value) <= t,
                                            "I=" + std::to_string(I.value) + " t=" + to_string(t),
                                            &inst.group));
                   }
                 }});

    c.push_back(
        {{"PA_I", "I(H wr Sym(m)) <= m I(H) + 3m/2 (product action)", false},
         [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
           for (auto* e : ctx.entries([](const CatalogEntry& x) {
                  return x.has_tag("product") && x.has_tag("primitive");
                })) {
             auto& W = ctx.get(e->id);
             auto& H = ctx.get(e->params.at("inner"));
             const std::size_t m = e->param("r");
             const auto& iw = ctx.stat(W, StatKind::max_irredundant);
             const auto& ih = ctx.stat(H, StatKind::max_irredundant);
             Outcome o(info, e->id);
             o.cert(iw).cert(ih);
             // Doubled to stay in integers: 2 I(W) <= 2m I(H) + 3m.
             const bool pass = 2 * iw.value <= 2 * m * ih.value + 3 * m;
             std::ostringstream d;
             d << "I(W)=" << iw.value << " I(H)=" << ih.value << " m=" << m;
             out.push_back(o.finish(iw.value, double(m) * ih.value + 1.5 * double(m), pass,
                                    d.str(), &W.group));
           }
         }});

    c.push_back(
        {{"ORBIT_SIZES",
          "|Omega+| = q^m(q^m+1)/2, |Omega-| = q^m(q^m-1)/2, each an orbit of the "
          "transvection group, of order |Sp_2m(q)|",
          false},
         [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
           for (auto* e : ctx.entries([](const CatalogEntry& x) { return x.has_tag("forms"); })) {
             auto& inst = ctx.get(e->id);
             const std::size_t m = e->param("m");
             const auto ee = static_cast<std::uint32_t>(e->param("e"));
             const bool plus = e->params.at("sign") == "plus";
             const SymplecticSpace space(m, ee);
             const Order expected = space.expected_orbit_size(plus ? 1 : -1);
             const bool transitive = is_transitive(inst.group);
             // The action on all forms is faithful, so it carries |Sp_2m(q)|.
             const Order order =
                 act_quadratic_forms(m, ee, FormSign::all, FormGroup::transvections).group().order();
             Outcome o(info, e->id);
             o.value("degree", Order(inst.group.degree()));
             o.value("expected_degree", expected);
             o.value("transitive", transitive ? "true" : "false");
             o.value("group_order", order);
             o.value("expected_order", space.symplectic_order());
             const bool pass = Order(inst.group.degree()) == expected && transitive &&
                               order == space.symplectic_order();
             std::ostringstream d;
             d << "|Omega" << (plus ? "+" : "-") << "|=" << inst.group.degree()
               << " expected " << expected << ", transitive=" << transitive
               << ", |G|=" << order;
             out.push_back(o.finish(double(inst.group.degree()), to_u64(expected) * 1.0, pass,
                                    d.str(), &inst.group));
           }
         }});

    c.push_back({{"SP_STAB", "I(Sp_2m(q), Omega^e) <= 1 + 2m", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry& x) {
                          return x.has_tag("forms");
                        })) {
                     auto& inst = ctx.get(e->id);
                     const std::size_t m = e->param("m");
                     const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                     Outcome o(info, e->id);
                     o.cert(I);
                     out.push_back(o.finish(I.value, double(1 + 2 * m), I.value <= 1 + 2 * m,
                                            "I=" + std::to_string(I.value), &inst.group));
                   }
                 }});

    c.push_back(
        {{"PARTITION_I", "I(Sym(ab), partitions) < 2 log2 t", false},
         [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
           for (auto* e : ctx.entries([](const CatalogEntry& x) {
                  return x.has_tag("partitions") && x.has_tag("primitive") &&
                         !x.has_tag("large_base");
                })) {
             auto& inst = ctx.get(e->id);
             const std::size_t a = e->param("a");
             const std::size_t b = e->param("b");
             const auto& I = ctx.stat(inst, StatKind::max_irredundant);
             const Order t = inst.group.degree();
             // t = (ab)! / (b!^a a!)
             const Order formula = factorial(static_cast<unsigned>(a * b)) /
                                   (pow(factorial(static_cast<unsigned>(b)),
                                        static_cast<unsigned>(a)) *
                                    factorial(static_cast<unsigned>(a)));
             Outcome o(info, e->id);
             o.cert(I).value("t", t).value("t_formula", formula);
             // I < 2 log2 t  <=>  2^I < t^2
             const bool pass = t == formula && pow(Order(2), I.value) < t * t;
             out.push_back(o.finish(I.value, 2 * log2_of(t), pass,
                                    "I=" + std::to_string(I.value) + " t=" + to_string(t) +
                                        " formula " + to_string(formula),
                                    &inst.group));
           }
         }});

    c.push_back({{"PGL_H", "H(PGL_n(q), points) = n for q = 2, 2n - 2 for q > 2 (n >= 3)", false},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   for (auto* e : ctx.entries([](const CatalogEntry& x) {
                          return x.has_tag("subspaces") && x.params.at("group") == "gl" &&
                                 x.param("m") == 1 && x.param("n") >= 3;
                        })) {
                     auto& inst = ctx.get(e->id);
                     const std::size_t n = e->param("n");
                     const std::size_t q = e->param("q");
                     const std::size_t expected = q == 2 ? n : 2 * n - 2;
                     const auto& H = ctx.stat(inst, StatKind::max_independent);
                     Outcome o(info, e->id);
                     o.cert(H);
                     out.push_back(o.finish(H.value, double(expected), H.value == expected,
                                            "H=" + std::to_string(H.value) + " expected " +
                                                std::to_string(expected),
                                            &inst.group));
                   }
                 }});

    c.push_back(
        {{"PAIRS_H", "H(pairs) <= H(Omega_m) + H(Omega_{n-m}), t matches the degree formula",
          false},
         [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
           for (auto* e : ctx.entries([](const CatalogEntry& x) { return x.has_tag("pairs"); })) {
             auto& inst = ctx.get(e->id);
             const std::size_t n = e->param("n");
             const std::size_t q = e->param("q");
             const std::size_t m = e->param("m");
             const auto variant =
                 e->params.at("variant") == "flag" ? PairVariant::flag : PairVariant::complement;
             std::uint32_t p = 2, f = 1;
             for (p = 2; q % p; ++p) {
             }
             for (std::size_t r = p; r < q; r *= p) ++f;
             const auto hm = ctx.compute(act_subspaces(n, p, f, m, LinearGroup::gl).group(),
                                         StatKind::max_independent);
             const auto hn =
                 ctx.compute(act_subspaces(n, p, f, n - m, LinearGroup::gl).group(),
                             StatKind::max_independent);
             const auto& h = ctx.stat(inst, StatKind::max_independent);
             const Order formula =
                 pair_action_degree(n, static_cast<std::uint32_t>(q), m, variant);
             Outcome o(info, e->id);
             o.cert(h).cert(hm).cert(hn);
             o.value("t", Order(inst.group.degree())).value("t_formula", formula);
             const bool pass =
                 h.value <= hm.value + hn.value && Order(inst.group.degree()) == formula;
             std::ostringstream d;
             d << "H=" << h.value << " H(Omega_m)=" << hm.value << " H(Omega_n-m)=" << hn.value
               << " t=" << inst.group.degree() << " formula " << formula;
             out.push_back(o.finish(h.value, double(hm.value) + hn.value, pass, d.str(),
                                    &inst.group));
           }
         }});

    auto main_entries = [](Context& ctx) {
      return ctx.entries([](const CatalogEntry& x) {
        return x.has_tag("primitive") && !is_large_base(x);
      });
    };

    c.push_back({{"HEIGHT_MAIN", "H < 9 log2 t (primitive, not large-base)", false},
                 [main_entries](Context& ctx, const CheckInfo& info,
                                std::vector<CheckResult>& out) {
                   for (auto* e : main_entries(ctx)) {
                     auto& inst = ctx.get(e->id);
                     const auto& H = ctx.stat(inst, StatKind::max_independent);
                     const Order t = inst.group.degree();
                     Outcome o(info, e->id);
                     o.cert(H).value("t", t);
                     out.push_back(o.finish(H.value, 9 * log2_of(t),
                                            pow(Order(2), H.value) < pow(t, 9),
                                            "H=" + std::to_string(H.value) + " t=" + to_string(t),
                                            &inst.group));
                   }
                 }});

    c.push_back({{"IRRED_MAIN", "I < 7 log2 t (primitive, not large-base)", false},
                 [main_entries](Context& ctx, const CheckInfo& info,
                                std::vector<CheckResult>& out) {
                   for (auto* e : main_entries(ctx)) {
                     auto& inst = ctx.get(e->id);
                     const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                     const Order t = inst.group.degree();
                     Outcome o(info, e->id);
                     o.cert(I).value("t", t);
                     out.push_back(o.finish(I.value, 7 * log2_of(t),
                                            pow(Order(2), I.value) < pow(t, 7),
                                            "I=" + std::to_string(I.value) + " t=" + to_string(t),
                                            &inst.group));
                   }
                 }});

    c.push_back({{"M24_I", "I(M24) = 8", true},
                 [](Context& ctx, const CheckInfo& info, std::vector<CheckResult>& out) {
                   if (!ctx.selected(catalog_entry("m24"))) return;
                   auto& inst = ctx.get("m24");
                   const auto& I = ctx.stat(inst, StatKind::max_irredundant);
                   Outcome o(info, "m24");
                   o.cert(I);
                   out.push_back(o.finish(I.value, 8, I.value == 8,
                                          "I=" + std::to_string(I.value), &inst.group));
                 }});

    c.push_back({{"LIEBECK_B", "b <= max(ceil(log2 t) + 1, 7) (primitive, not large-base)", false},
                 [main_entries](Context& ctx, const CheckInfo& info,
                                std::vector<CheckResult>& out) {
                   for (auto* e : main_entries(ctx)) {
                     auto& inst = ctx.get(e->id);
                     const auto& b = ctx.stat(inst, StatKind::min_base);
                     const Order t = inst.group.degree();
                     const unsigned bound = std::max(ceil_log2(t) + 1, 7u);
                     Outcome o(info, e->id);
                     o.cert(b).value("t", t);
                     out.push_back(o.finish(b.value, bound, b.value <= bound,
                                            "b=" + std::to_string(b.value) + " bound " +
                                                std::to_string(bound),
                                            &inst.group));
                   }
                 }});
    return c;
  }();
  return checks;
}

const RegisteredCheck& find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.info.id == id) return c;
  }
  throw InvalidArgument("unknown check '" + std::string(id) + "'");
}

std::vector<CheckResult> run_check(Context& ctx, const RegisteredCheck& check) {
  std::vector<CheckResult> out;
  const auto start = std::chrono::steady_clock::now();
  check.run(ctx, check.info, out);
  // Per-result runtimes are not tracked separately; the check's wall time is
  // spread evenly so that the sum is meaningful.
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.runtime_seconds = elapsed / static_cast<double>(out.size());
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::vector<CheckResult> verify(std::string_view check_id, const VerifyParams& params) {
  const auto& check = find_check(check_id);
  Context ctx(params.filter, params.include_slow || check.info.slow, params.node_budget);
  return run_check(ctx, check);
}

SuiteConfig suite_config(std::string_view suite) {
  SuiteConfig config;
  if (suite == "default") {
    for (const auto& c : check_registry()) {
      if (!c.slow) config.checks.push_back(c.id);
    }
  } else if (suite == "all") {
    for (const auto& c : check_registry()) config.checks.push_back(c.id);
    config.include_slow = true;
  } else {
    throw InvalidArgument("unknown suite '" + std::string(suite) + "' (default|all)");
  }
  return config;
}

std::optional<std::uint64_t> budget_from_environment() {
  const char* text = std::getenv("GRPSTAT_BUDGET");
  if (!text || !*text) return std::nullopt;
  std::uint64_t value = 0;
  const std::string_view sv(text);
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc() || ptr != sv.data() + sv.size() || value == 0) {
    throw ParseError("GRPSTAT_BUDGET must be a positive integer, got '" + std::string(sv) + "'");
  }
  return value;
}

bool SuiteReport::any_failed() const { return count(CheckStatus::fail) > 0; }

std::size_t SuiteReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [&](const CheckResult& r) { return r.status == status; }));
}

SuiteReport run_suite(const SuiteConfig& config) {
  // Validate the whole configuration before running anything.
  std::vector<const RegisteredCheck*> checks;
  for (const auto& id : config.checks) checks.push_back(&find_check(id));
  std::sort(checks.begin(), checks.end(), [](auto* a, auto* b) {
    return std::distance(registry().data(), a) < std::distance(registry().data(), b);
  });
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    return out;
  };
  std::optional<std::ofstream> json_out, csv_out;
  if (config.json_path) json_out = open(*config.json_path);
  if (config.csv_path) csv_out = open(*config.csv_path);

  SuiteReport report;
  Context ctx(config.filter, config.include_slow, config.node_budget);
  for (auto* check : checks) {
    if (check->info.slow && !config.include_slow) continue;
    auto results = run_check(ctx, *check);
    report.results.insert(report.results.end(), std::make_move_iterator(results.begin()),
                          std::make_move_iterator(results.end()));
  }
  if (json_out) *json_out << report_json(report) << '\n';
  if (csv_out) *csv_out << report_csv(report);
  if ((json_out && !*json_out) || (csv_out && !*csv_out)) throw Error("failed writing report");
  return report;
}

namespace {

json certificate_json(const StatCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["value"] = c.value;
  j["lower"] = c.lower;
  j["upper"] = c.upper;
  j["status"] = c.exact() ? "exact" : "bounds";
  j["witness"] = c.witness;
  json orders = json::array();
  for (const auto& o : c.orders) orders.push_back(to_string(o));
  j["orders"] = orders;
  j["nodes"] = c.nodes;
  return j;
}

json result_json(const CheckResult& r) {
  json j;
  j["check_id"] = r.check_id;
  j["instance_id"] = r.instance_id;
  j["claim"] = r.claim;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["status"] = to_string(r.status);
  j["pass"] = r.passed();
  j["detail"] = r.detail;
  j["values"] = r.values;
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = certs;
  if (r.tuple_witness) {
    j["tuple_witness"] = {{"I", r.tuple_witness->I},
                          {"J", r.tuple_witness->J},
                          {"r", r.tuple_witness->r},
                          {"n", r.tuple_witness->n}};
  }
  if (!r.group_text.empty()) j["group"] = r.group_text;
  j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const StatCertificate& cert) { return certificate_json(cert).dump(); }

std::string to_json(const RCResult& result) {
  json j;
  j["value"] = result.value;
  j["status"] = to_string(result.status);
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  if (result.witness) {
    j["witness"] = {{"I", result.witness->I},
                    {"J", result.witness->J},
                    {"r", result.witness->r},
                    {"n", result.witness->n}};
  } else {
    j["witness"] = nullptr;
  }
  j["distinct_reduction_used"] = result.distinct_reduction_used;
  j["prefix_exceeds_height"] = result.prefix_exceeds_height;
  j["height"] = result.height;
  j["height_exact"] = result.height_exact;
  j["nodes"] = result.nodes;
  return j.dump();
}

std::string report_json(const SuiteReport& report) {
  json j;
  j["schema"] = 1;
  json results = json::array();
  json skipped = json::array();
  for (const auto& r : report.results) {
    results.push_back(result_json(r));
    if (r.status == CheckStatus::skipped) {
      skipped.push_back({{"check_id", r.check_id}, {"instance_id", r.instance_id},
                         {"detail", r.detail}});
    }
  }
  j["results"] = results;
  j["skipped"] = skipped;
  j["summary"] = {{"total", report.results.size()},
                  {"pass", report.count(CheckStatus::pass)},
                  {"fail", report.count(CheckStatus::fail)},
                  {"skipped", report.count(CheckStatus::skipped)}};
  return j.dump(2);
}

std::string report_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "check_id,instance_id,status,lhs,rhs,claim,detail,runtime_seconds\n";
  for (const auto& r : report.results) {
    char lhs[32], rhs[32], rt[32];
    std::snprintf(lhs, sizeof lhs, "%.6g", r.lhs);
    std::snprintf(rhs, sizeof rhs, "%.6g", r.rhs);
    std::snprintf(rt, sizeof rt, "%.3f", r.runtime_seconds);
    out << csv_field(r.check_id) << ',' << csv_field(r.instance_id) << ','
        << to_string(r.status) << ',' << lhs << ',' << rhs << ',' << csv_field(r.claim) << ','
        << csv_field(r.detail) << ',' << rt << '\n';
  }
  return out.str();
}

}  // namespace grpstat
