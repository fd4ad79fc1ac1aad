#include "grpstat/actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "grpstat/detail/embedded_data.hpp"
#include "grpstat/error.hpp"
#include "grpstat/group_io.hpp"
#include "grpstat/subspace.hpp"

namespace grpstat {
namespace {

Permutation induced(std::size_t degree, const std::function<std::size_t(std::size_t)>& image) {
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(image(x));
  // Constructors derive images from bijections of the underlying objects;
  // validate anyway so a bug surfaces as an exception, not a corrupt group.
  return Permutation(std::move(images));
}

void require_cap(const Order& degree, std::size_t cap, const std::string& what) {
  if (degree > cap) {
    throw CapExceeded(what + " has degree " + to_string(degree) + ", above the cap of " +
                      std::to_string(cap));
  }
}

std::vector<Permutation> sym_generators(std::size_t n, SymVariant variant) {
  std::vector<Permutation> gens;
  if (variant == SymVariant::sym) {
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      std::vector<Point> cycle(n);
      std::iota(cycle.begin(), cycle.end(), Point{0});
      if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return gens;
  }
  if (n < 3) throw InvalidArgument("Alt(n) requires n >= 3");
  gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  if (n > 3) {
    // (0 1 ... n-1) is even for odd n; for even n use (1 2 ... n-1).
    std::vector<Point> cycle;
    for (Point i = (n % 2 == 1) ? 0 : 1; i < n; ++i) cycle.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return gens;
}

Order sym_order(std::size_t n, SymVariant variant) {
  Order order = factorial(static_cast<unsigned>(n));
  if (variant == SymVariant::alt) order /= 2;
  return order;
}

std::string variant_name(SymVariant variant) {
  return variant == SymVariant::sym ? "sym" : "alt";
}

std::string join_labels(const std::vector<std::string>& parts, const char* open,
                        const char* close, const char* sep = ",") {
  std::string out = open;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out + close;
}

std::string set_label(const std::vector<Point>& points) {
  std::vector<std::string> parts;
  for (Point x : points) parts.push_back(std::to_string(x));
  return join_labels(parts, "{", "}");
}

std::vector<std::string> index_labels(std::size_t degree) {
  std::vector<std::string> labels;
  labels.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

void check_meta(const ActionInstance& instance) {
  for (const auto& g : instance.generators) {
    if (g.degree() != instance.degree) {
      throw Error(instance.name + ": generator degree differs from stated degree");
    }
  }
  if (instance.labels.size() != instance.degree) {
    throw Error(instance.name + ": label count differs from degree");
  }
  const PermGroup G = instance.group();
  if (instance.meta.order && G.order() != *instance.meta.order) {
    throw Error(instance.name + ": claimed order " + to_string(*instance.meta.order) +
                " but generators give " + to_string(G.order()));
  }
  if (instance.meta.transitive && is_transitive(G) != *instance.meta.transitive) {
    throw Error(instance.name + ": transitivity claim does not hold");
  }
  if (instance.meta.primitive && is_primitive(G) != *instance.meta.primitive) {
    throw Error(instance.name + ": primitivity claim does not hold");
  }
}

ActionInstance act_from_generators(const std::string& name, std::size_t degree,
                                   std::vector<Permutation> generators, ActionMeta meta) {
  ActionInstance out;
  out.name = name;
  out.degree = degree;
  out.generators = std::move(generators);
  out.labels = index_labels(degree);
  out.meta = std::move(meta);
  return out;
}

ActionInstance act_natural(std::size_t n, SymVariant variant) {
  if (n == 0) throw InvalidArgument("natural action needs n >= 1");
  ActionInstance out;
  out.name = variant_name(variant) + "(" + std::to_string(n) + ")";
  out.degree = n;
  out.generators = sym_generators(n, variant);
  out.labels = index_labels(n);
  out.meta.order = sym_order(n, variant);
  out.meta.transitive = true;
  out.meta.primitive = n >= 2;
  return out;
}

ActionInstance act_k_subsets(std::size_t n, std::size_t k, SymVariant variant,
                             std::size_t cap) {
  if (k < 1 || k >= n) throw InvalidArgument("k-subset action needs 1 <= k < n");
  if (n > 63) throw InvalidArgument("k-subset action supports n <= 63");
  require_cap(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), cap,
              "k-subset action");
  std::vector<std::uint64_t> subsets;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Point> combo(k);
  std::iota(combo.begin(), combo.end(), Point{0});
  ActionInstance out;
  while (true) {
    std::uint64_t mask = 0;
    for (Point x : combo) mask |= std::uint64_t{1} << x;
    index.emplace(mask, subsets.size());
    subsets.push_back(mask);
    out.labels.push_back(set_label(combo));
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  out.name = variant_name(variant) + "(" + std::to_string(n) + ")_on_" + std::to_string(k) +
             "-sets";
  out.degree = subsets.size();
  for (const auto& g : sym_generators(n, variant)) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      std::uint64_t image = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (subsets[i] >> x & 1) image |= std::uint64_t{1} << g(static_cast<Point>(x));
      }
      return index.at(image);
    }));
  }
  out.meta.order = sym_order(n, variant);
  out.meta.transitive = true;
  out.meta.primitive = 2 * k != n || n == 2;
  return out;
}

ActionInstance act_partitions(std::size_t a, std::size_t b, SymVariant variant,
                              std::size_t cap) {
  if (a < 2 || b < 2) throw InvalidArgument("partition action needs a >= 2 and b >= 2");
  const std::size_t n = a * b;
  if (n > 255) throw InvalidArgument("partition action supports ab <= 255");
  const Order expected = factorial(static_cast<unsigned>(n)) /
                         (factorial(static_cast<unsigned>(a)) *
                          pow(factorial(static_cast<unsigned>(b)), static_cast<unsigned>(a)));
  require_cap(expected, cap, "partition action");

  // A partition is keyed by the block number of each element, blocks numbered
  // in order of their smallest element.
  using Key = std::vector<std::uint8_t>;
  std::vector<Key> keys;
  std::map<Key, std::size_t> index;
  Key current(n, 0xFF);
  std::function<void(std::uint8_t)> place_block = [&](std::uint8_t block) {
    const auto first = std::find(current.begin(), current.end(), 0xFF);
    if (first == current.end()) {
      index.emplace(current, keys.size());
      keys.push_back(current);
      return;
    }
    const std::size_t lead = static_cast<std::size_t>(first - current.begin());
    current[lead] = block;
    std::vector<std::size_t> free;
    for (std::size_t x = lead + 1; x < n; ++x) {
      if (current[x] == 0xFF) free.push_back(x);
    }
    // Choose b-1 companions for `lead` in lexicographic order.
    std::vector<std::size_t> pick(b - 1);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      for (auto p : pick) current[free[p]] = block;
      place_block(static_cast<std::uint8_t>(block + 1));
      for (auto p : pick) current[free[p]] = 0xFF;
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == free.size() - pick.size() + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
    current[lead] = 0xFF;
  };
  place_block(0);

  ActionInstance out;
  out.name = variant_name(variant) + "(" + std::to_string(n) + ")_on_partitions_" +
             std::to_string(a) + "x" + std::to_string(b);
  out.degree = keys.size();
  for (const auto& key : keys) {
    std::string label;
    for (std::uint8_t block = 0; block < a; ++block) {
      std::vector<Point> members;
      for (std::size_t x = 0; x < n; ++x) {
        if (key[x] == block) members.push_back(static_cast<Point>(x));
      }
      label += set_label(members);
    }
    out.labels.push_back(label);
  }
  for (const auto& g : sym_generators(n, variant)) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      Key moved(n);
      for (std::size_t x = 0; x < n; ++x) moved[g(static_cast<Point>(x))] = keys[i][x];
      std::vector<std::uint8_t> relabel(a, 0xFF);
      std::uint8_t next = 0;
      for (auto& block : moved) {
        if (relabel[block] == 0xFF) relabel[block] = next++;
        block = relabel[block];
      }
      return index.at(moved);
    }));
  }
  // Sym(4) on the three pairings has kernel V4.
  if (a == 2 && b == 2) {
    out.meta.order = variant == SymVariant::sym ? 6 : 3;
  } else {
    out.meta.order = sym_order(n, variant);
  }
  out.meta.transitive = true;
  return out;
}

ActionInstance act_product(const ActionInstance& inner, std::size_t r,
                           const std::optional<std::vector<Permutation>>& top,
                           std::size_t cap) {
  if (r < 2) throw InvalidArgument("product action needs r >= 2");
  const std::size_t d = inner.degree;
  if (d < 2) throw InvalidArgument("product action needs inner degree >= 2");
  require_cap(pow(Order(d), static_cast<unsigned>(r)), cap, "product action");
  std::size_t degree = 1;
  for (std::size_t i = 0; i < r; ++i) degree *= d;

  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = x % d;
      x /= d;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::size_t>& v) {
    std::size_t x = 0;
    for (std::size_t i = r; i-- > 0;) x = x * d + v[i];
    return x;
  };

  const std::vector<Permutation> top_gens =
      top ? *top : sym_generators(r, SymVariant::sym);
  for (const auto& s : top_gens) {
    if (s.degree() != r) throw InvalidArgument("top group generators must have degree r");
  }

  ActionInstance out;
  out.name = inner.name + "_wr_" + std::to_string(r) + (top ? "_given_top" : "");
  out.degree = degree;
  for (std::size_t x = 0; x < degree; ++x) {
    std::vector<std::string> parts;
    for (auto c : digits(x)) parts.push_back(inner.labels[c]);
    out.labels.push_back(join_labels(parts, "(", ")"));
  }
  for (std::size_t coord = 0; coord < r; ++coord) {
    for (const auto& h : inner.generators) {
      out.generators.push_back(induced(degree, [&](std::size_t x) {
        auto v = digits(x);
        v[coord] = h(static_cast<Point>(v[coord]));
        return encode(v);
      }));
    }
  }
  for (const auto& s : top_gens) {
    if (s.is_identity()) continue;
    out.generators.push_back(induced(degree, [&](std::size_t x) {
      const auto v = digits(x);
      std::vector<std::size_t> w(r);
      for (std::size_t i = 0; i < r; ++i) w[s(static_cast<Point>(i))] = v[i];
      return encode(w);
    }));
  }
  const PermGroup H = inner.group();
  const PermGroup K(r, top_gens);
  out.meta.order = pow(H.order(), static_cast<unsigned>(r)) * K.order();
  const bool inner_transitive = is_transitive(H);
  out.meta.transitive = inner_transitive && is_transitive(K);
  // Primitive exactly when the inner group is primitive but not regular and
  // the top group is transitive.
  out.meta.primitive = *out.meta.transitive && is_primitive(H) && H.order() != d;
  return out;
}

ActionInstance act_direct_product(const ActionInstance& a, const ActionInstance& b,
                                  std::size_t cap) {
  require_cap(Order(a.degree) * b.degree, cap, "direct product action");
  const std::size_t da = a.degree;
  ActionInstance out;
  out.name = a.name + "_x_" + b.name;
  out.degree = a.degree * b.degree;
  for (std::size_t x = 0; x < out.degree; ++x) {
    out.labels.push_back("(" + a.labels[x % da] + "," + b.labels[x / da] + ")");
  }
  for (const auto& g : a.generators) {
    out.generators.push_back(induced(out.degree, [&](std::size_t x) {
      return g(static_cast<Point>(x % da)) + (x / da) * da;
    }));
  }
  for (const auto& g : b.generators) {
    out.generators.push_back(induced(out.degree, [&](std::size_t x) {
      return x % da + g(static_cast<Point>(x / da)) * da;
    }));
  }
  const PermGroup A = a.group();
  const PermGroup B = b.group();
  out.meta.order = A.order() * B.order();
  out.meta.transitive = is_transitive(A) && is_transitive(B);
  return out;
}

std::vector<MatrixGF> linear_group_generators(const Field& F, std::size_t n, LinearGroup grp) {
  std::vector<MatrixGF> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t k = 0; k < F.degree(); ++k) {
      const FieldElement lambda = F.exp(k);
      MatrixGF upper = MatrixGF::identity(n);
      upper.at(i, i + 1) = lambda;
      MatrixGF lower = MatrixGF::identity(n);
      lower.at(i + 1, i) = lambda;
      gens.push_back(std::move(upper));
      gens.push_back(std::move(lower));
    }
  }
  if (grp != LinearGroup::sl && F.size() > 2) {
    MatrixGF diag = MatrixGF::identity(n);
    diag.at(0, 0) = F.primitive_element();
    gens.push_back(std::move(diag));
  }
  return gens;
}

namespace {

Order gl_order(std::size_t n, std::uint32_t q) {
  Order order = 1;
  const Order qn = pow(Order(q), static_cast<unsigned>(n));
  for (std::size_t i = 0; i < n; ++i) order *= qn - pow(Order(q), static_cast<unsigned>(i));
  return order;
}

std::string vector_label(const Field& F, std::span<const FieldElement> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (F.size() > 10 && i > 0) out += '.';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string subspace_label(const Field& F, const SubspaceIndex& U) {
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < U.dimension(); ++r) rows.push_back(vector_label(F, U.basis.row(r)));
  return join_labels(rows, "<", ">");
}

}  // namespace

Order projective_group_order(std::size_t n, std::uint32_t p, std::uint32_t f, LinearGroup grp) {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) q *= p;
  const Order pgl = gl_order(n, q) / (q - 1);
  switch (grp) {
    case LinearGroup::sl:
      return pgl / std::gcd(static_cast<std::uint32_t>(n), q - 1);
    case LinearGroup::gl:
      return pgl;
    case LinearGroup::gammal:
      return pgl * f;
  }
  return pgl;
}

ActionInstance act_affine(std::size_t d, std::uint32_t p, std::size_t cap) {
  if (!is_prime(p)) throw InvalidArgument("affine action needs a prime p");
  if (d < 1) throw InvalidArgument("affine action needs d >= 1");
  require_cap(pow(Order(p), static_cast<unsigned>(d)), cap, "affine action");
  const Field F(p, 1);
  std::size_t degree = 1;
  for (std::size_t i = 0; i < d; ++i) degree *= p;
  auto unpack = [&](std::size_t x) {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<FieldElement>(x % p);
      x /= p;
    }
    return v;
  };
  auto pack = [&](const Vector& v) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * p + v[i];
    return x;
  };

  ActionInstance out;
  out.name = "agl_" + std::to_string(d) + "_" + std::to_string(p);
  out.degree = degree;
  for (std::size_t x = 0; x < degree; ++x) {
    out.labels.push_back("(" + vector_label(F, unpack(x)) + ")");
  }
  for (std::size_t i = 0; i < d; ++i) {
    out.generators.push_back(induced(degree, [&](std::size_t x) {
      auto v = unpack(x);
      v[i] = F.add(v[i], 1);
      return pack(v);
    }));
  }
  for (const auto& g : linear_group_generators(F, d, LinearGroup::gl)) {
    out.generators.push_back(
        induced(degree, [&](std::size_t x) { return pack(vec_mul(F, unpack(x), g)); }));
  }
  out.meta.order = Order(degree) * gl_order(d, p);
  out.meta.transitive = true;
  out.meta.primitive = true;
  return out;
}

ActionInstance act_regular(const PermGroup& group, const std::string& name, std::size_t cap) {
  const auto elements = enumerate_elements(group, cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  ActionInstance out;
  out.name = name;
  out.degree = elements.size();
  for (const auto& e : elements) out.labels.push_back(e.to_cycle_string());
  for (const auto& g : group.generators()) {
    out.generators.push_back(
        induced(out.degree, [&](std::size_t i) { return index.at(elements[i] * g); }));
  }
  out.meta.order = group.order();
  out.meta.transitive = true;
  return out;
}

ActionInstance act_quotient(const PermGroup& group, const std::vector<Permutation>& normal_gens,
                            const std::string& name, std::size_t cap) {
  const PermGroup N(group.degree(), normal_gens);
  for (const auto& n : N.generators()) {
    if (!group.contains(n)) throw InvalidArgument("normal subgroup generator not in group");
    for (const auto& g : group.generators()) {
      if (!N.contains(g.inverse() * n * g)) {
        throw InvalidArgument("subgroup is not normal");
      }
    }
  }
  const auto elements = enumerate_elements(group, cap);
  const auto n_elements = enumerate_elements(N, cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  for (const auto& x : elements) {
    if (coset_of.count(x)) continue;
    for (const auto& n : n_elements) coset_of.emplace(n * x, reps.size());
    reps.push_back(x);
  }
  ActionInstance out;
  out.name = name;
  out.degree = reps.size();
  for (const auto& r : reps) out.labels.push_back("N" + r.to_cycle_string());
  for (const auto& g : group.generators()) {
    out.generators.push_back(
        induced(out.degree, [&](std::size_t i) { return coset_of.at(reps[i] * g); }));
  }
  out.meta.order = group.order() / N.order();
  out.meta.transitive = true;
  return out;
}

// ---------------------------------------------------------------------------
// Diagonal type

std::vector<std::uint32_t> conjugation_automorphism(const std::vector<Permutation>& elements,
                                                    const Permutation& c) {
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<std::uint32_t>(i));
  }
  const Permutation c_inv = c.inverse();
  std::vector<std::uint32_t> out(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto it = index.find(c_inv * elements[i] * c);
    if (it == index.end()) throw InvalidArgument("conjugating element does not normalize T");
    out[i] = it->second;
  }
  return out;
}

DiagonalSpec make_diagonal_spec(const std::string& name, const PermGroup& T, std::size_t m,
                                const std::vector<std::vector<std::uint32_t>>& outer_autos,
                                std::size_t element_cap) {
  if (m < 2) throw InvalidArgument("diagonal action needs m >= 2");
  DiagonalSpec spec;
  spec.name = name;
  spec.m = m;
  spec.elements = enumerate_elements(T, element_cap);
  const std::size_t k = spec.elements.size();
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(spec.elements[i], static_cast<std::uint32_t>(i));
  spec.cayley.assign(k, std::vector<std::uint32_t>(k));
  spec.inverse.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      spec.cayley[i][j] = index.at(spec.elements[i] * spec.elements[j]);
    }
    spec.inverse[i] = index.at(spec.elements[i].inverse());
  }
  for (const auto& g : T.generators()) spec.generators.push_back(index.at(g));

  // Trivial centre.
  for (std::size_t z = 1; z < k; ++z) {
    const bool central = std::all_of(spec.generators.begin(), spec.generators.end(),
                                     [&](std::uint32_t g) {
                                       return spec.cayley[z][g] == spec.cayley[g][z];
                                     });
    if (central) throw InvalidArgument(name + ": T has a nontrivial centre");
  }
  // Perfect: the normal closure of generator commutators is all of T.
  std::vector<Permutation> commutators;
  for (const auto& a : T.generators()) {
    for (const auto& b : T.generators()) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  PermGroup derived(T.degree(), commutators);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& g : T.generators()) {
      for (const auto& c : std::vector<Permutation>(derived.generators())) {
        Permutation conj = g.inverse() * c * g;
        if (!derived.contains(conj)) {
          derived = join(derived, std::span<const Permutation>(&conj, 1));
          grew = true;
        }
      }
    }
  }
  if (derived.order() != T.order()) throw InvalidArgument(name + ": T is not perfect");

  for (const auto& alpha : outer_autos) {
    if (alpha.size() != k) throw InvalidArgument(name + ": automorphism has wrong length");
    std::vector<bool> hit(k, false);
    for (auto x : alpha) {
      if (x >= k || hit[x]) throw InvalidArgument(name + ": automorphism is not a bijection");
      hit[x] = true;
    }
    if (alpha[0] != 0) throw InvalidArgument(name + ": automorphism moves the identity");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (alpha[spec.cayley[i][j]] != spec.cayley[alpha[i]][alpha[j]]) {
          throw InvalidArgument(name + ": map does not preserve the Cayley table");
        }
      }
    }
    spec.outer_autos.push_back(alpha);
  }
  return spec;
}

DiagonalSpec diagonal_spec_alt5(std::size_t m, bool with_outer) {
  const PermGroup T(5, sym_generators(5, SymVariant::alt));
  std::vector<std::vector<std::uint32_t>> autos;
  if (with_outer) {
    const auto elements = enumerate_elements(T, 60);
    autos.push_back(conjugation_automorphism(elements, Permutation::from_cycles(5, {{0, 1}})));
  }
  return make_diagonal_spec("alt5", T, m, autos);
}

DiagonalSpec diagonal_spec_psl32(std::size_t m, bool with_outer) {
  const Field F(2, 1);
  const auto points = enumerate_subspaces(F, 3, 1);
  const SubspaceLookup lookup(points);
  auto as_perm = [&](const MatrixGF& g) {
    return induced(points.size(),
                   [&](std::size_t i) { return lookup.index(subspace_image(F, points[i], g)); });
  };
  std::vector<Permutation> gens;
  for (const auto& g : linear_group_generators(F, 3, LinearGroup::sl)) gens.push_back(as_perm(g));
  const PermGroup T(points.size(), gens);
  std::vector<std::vector<std::uint32_t>> autos;
  if (with_outer) {
    // GL_3(2) = PSL_3(2) acts faithfully, so each element has one matrix.
    std::map<Permutation, MatrixGF> matrix_of;
    for (std::uint32_t code = 0; code < 512; ++code) {
      MatrixGF g(3, 3);
      for (std::size_t e = 0; e < 9; ++e) g.at(e / 3, e % 3) = code >> e & 1;
      if (is_invertible(F, g)) matrix_of.emplace(as_perm(g), g);
    }
    const auto elements = enumerate_elements(T, 168);
    std::map<Permutation, std::uint32_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], static_cast<std::uint32_t>(i));
    }
    std::vector<std::uint32_t> alpha(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const MatrixGF& g = matrix_of.at(elements[i]);
      alpha[i] = index.at(as_perm(transpose(inverse(F, g))));
    }
    autos.push_back(std::move(alpha));
  }
  return make_diagonal_spec("psl_3_2", T, m, autos);
}

ActionInstance act_diagonal(const DiagonalSpec& spec, std::size_t cap) {
  const std::size_t k = spec.elements.size();
  const std::size_t m = spec.m;
  if (m < 2) throw InvalidArgument("diagonal action needs m >= 2");
  require_cap(pow(Order(k), static_cast<unsigned>(m - 1)), cap, "diagonal action");
  std::size_t degree = 1;
  for (std::size_t i = 1; i < m; ++i) degree *= k;

  // Full coset representative (s_1, ..., s_m) with s_1 = 1.
  auto unpack = [&](std::size_t x) {
    std::vector<std::uint32_t> s(m, 0);
    for (std::size_t i = 1; i < m; ++i) {
      s[i] = static_cast<std::uint32_t>(x % k);
      x /= k;
    }
    return s;
  };
  // Renormalizes D(s_1, ..., s_m) to (1, s_1^{-1} s_2, ...) and encodes it.
  auto encode = [&](const std::vector<std::uint32_t>& s) {
    const std::uint32_t lead_inv = spec.inverse[s[0]];
    std::size_t x = 0;
    for (std::size_t i = m; i-- > 1;) x = x * k + spec.cayley[lead_inv][s[i]];
    return x;
  };

  ActionInstance out;
  out.name = "diag_" + spec.name + "_m" + std::to_string(m);
  out.degree = degree;
  for (std::size_t x = 0; x < degree; ++x) {
    std::vector<std::string> parts;
    for (auto e : unpack(x)) parts.push_back(spec.elements[e].to_cycle_string());
    out.labels.push_back(join_labels(parts, "D[", "]"));
  }
  for (std::size_t coord = 0; coord < m; ++coord) {
    for (auto g : spec.generators) {
      out.generators.push_back(induced(degree, [&](std::size_t x) {
        auto s = unpack(x);
        s[coord] = spec.cayley[s[coord]][g];
        return encode(s);
      }));
    }
  }
  for (const auto& alpha : spec.outer_autos) {
    out.generators.push_back(induced(degree, [&](std::size_t x) {
      auto s = unpack(x);
      for (auto& e : s) e = alpha[e];
      return encode(s);
    }));
  }
  for (const auto& sigma : sym_generators(m, SymVariant::sym)) {
    out.generators.push_back(induced(degree, [&](std::size_t x) {
      const auto s = unpack(x);
      std::vector<std::uint32_t> w(m);
      for (std::size_t i = 0; i < m; ++i) w[sigma(static_cast<Point>(i))] = s[i];
      return encode(w);
    }));
  }

  // |Out| supplied = |<Inn(T), autos>| / |T|, computed on T's element list.
  std::vector<Permutation> aut_gens;
  for (auto g : spec.generators) {
    std::vector<Point> images(k);
    for (std::size_t i = 0; i < k; ++i) {
      images[i] = spec.cayley[spec.cayley[spec.inverse[g]][i]][g];
    }
    aut_gens.emplace_back(std::move(images));
  }
  for (const auto& alpha : spec.outer_autos) {
    aut_gens.emplace_back(std::vector<Point>(alpha.begin(), alpha.end()));
  }
  const Order aut_order = PermGroup(k, aut_gens).order();
  out.meta.order = pow(Order(k), static_cast<unsigned>(m)) * (aut_order / k) *
                   factorial(static_cast<unsigned>(m));
  out.meta.transitive = true;
  return out;
}

// ---------------------------------------------------------------------------
// Subspace actions

ActionInstance act_subspaces(std::size_t n, std::uint32_t p, std::uint32_t f, std::size_t m,
                             LinearGroup grp, std::size_t cap) {
  if (m < 1 || m >= n) throw InvalidArgument("subspace action needs 1 <= m < n");
  const Field F(p, f);
  const std::uint32_t q = F.size();
  require_cap(gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(m), q), cap,
              "subspace action");
  const auto spaces = enumerate_subspaces(F, n, m);
  const SubspaceLookup lookup(spaces);

  ActionInstance out;
  static const char* kGroupNames[] = {"psl", "pgl", "pgammal"};
  out.name = std::string(kGroupNames[static_cast<int>(grp)]) + "_" + std::to_string(n) + "_" +
             std::to_string(q) + "_on_" + std::to_string(m) + "-spaces";
  out.degree = spaces.size();
  for (const auto& U : spaces) out.labels.push_back(subspace_label(F, U));
  for (const auto& g : linear_group_generators(F, n, grp)) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      return lookup.index(subspace_image(F, spaces[i], g));
    }));
  }
  if (grp == LinearGroup::gammal && f > 1) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      const MatrixGF image =
          map_entries(spaces[i].basis, [&](FieldElement x) { return F.frobenius(x); });
      return lookup.index(subspace_canonical(F, image));
    }));
  }
  out.meta.order = projective_group_order(n, p, f, grp);
  out.meta.transitive = true;
  out.meta.primitive = true;
  return out;
}

Order pair_action_degree(std::size_t n, std::uint32_t q, std::size_t m, PairVariant variant) {
  auto prod = [&](std::size_t upto) {
    Order r = 1;
    for (std::size_t i = 1; i <= upto; ++i) r *= pow(Order(q), static_cast<unsigned>(i)) - 1;
    return r;
  };
  if (variant == PairVariant::complement) {
    return pow(Order(q), static_cast<unsigned>(m * (n - m))) * prod(n) /
           (prod(m) * prod(n - m));
  }
  const Order pm = prod(m);
  return prod(n) / (pm * pm * prod(n - 2 * m));
}

ActionInstance act_subspace_pairs(std::size_t n, std::uint32_t p, std::uint32_t f,
                                  std::size_t m, PairVariant variant, bool graph_aut,
                                  std::size_t cap) {
  if (m < 1 || 2 * m >= n) throw InvalidArgument("pair action needs 1 <= m < n/2");
  const Field F(p, f);
  const std::uint32_t q = F.size();
  require_cap(pair_action_degree(n, q, m, variant), cap, "pair action");
  const auto small = enumerate_subspaces(F, n, m);
  const auto large = enumerate_subspaces(F, n, n - m);
  const SubspaceLookup small_lookup(small);
  const SubspaceLookup large_lookup(large);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t u = 0; u < small.size(); ++u) {
    for (std::size_t w = 0; w < large.size(); ++w) {
      const bool ok = variant == PairVariant::complement ? is_complement(F, small[u], large[w])
                                                         : is_contained(F, small[u], large[w]);
      if (!ok) continue;
      index.emplace(std::make_pair(u, w), pairs.size());
      pairs.emplace_back(u, w);
    }
  }

  ActionInstance out;
  out.name = std::string("pgl_") + std::to_string(n) + "_" + std::to_string(q) + "_" +
             (variant == PairVariant::complement ? "complements" : "flags") + "_" +
             std::to_string(m) + (graph_aut ? "_graph" : "");
  out.degree = pairs.size();
  for (auto [u, w] : pairs) {
    out.labels.push_back("{" + subspace_label(F, small[u]) + "," + subspace_label(F, large[w]) +
                         "}");
  }
  for (const auto& g : linear_group_generators(F, n, LinearGroup::gl)) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      const auto [u, w] = pairs[i];
      return index.at({small_lookup.index(subspace_image(F, small[u], g)),
                       large_lookup.index(subspace_image(F, large[w], g))});
    }));
  }
  if (graph_aut) {
    out.generators.push_back(induced(out.degree, [&](std::size_t i) {
      const auto [u, w] = pairs[i];
      return index.at({small_lookup.index(perp(F, large[w])),
                       large_lookup.index(perp(F, small[u]))});
    }));
  }
  out.meta.order = projective_group_order(n, p, f, LinearGroup::gl) * (graph_aut ? 2 : 1);
  out.meta.transitive = true;
  return out;
}

ActionInstance act_m24() {
  const PermGroup G = parse_group(detail::kM24GroupText);
  ActionInstance out;
  out.name = "m24";
  out.degree = G.degree();
  out.generators = G.generators();
  out.labels.resize(G.degree());
  for (std::size_t i = 0; i < G.degree(); ++i) {
    out.labels[i] = i == 23 ? "inf" : std::to_string(i);
  }
  out.meta.order = Order(244823040);
  out.meta.transitive = true;
  out.meta.primitive = true;
  return out;
}

}  // namespace grpstat
