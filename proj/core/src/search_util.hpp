#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grpstat/perm_group.hpp"

namespace grpstat::detail {

struct BudgetExhausted {};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_) throw BudgetExhausted{};
  }
  [[nodiscard]] std::uint64_t count() const { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

inline unsigned omega(const PermGroup& K) { return K.chain().order_prime_factor_count(); }

/// A node of the independent-set search: L, K = G_(L), and the leave-one-out
/// stabilizers G_(L \ a) in the order of L.
struct IndependentNode {
  const PermGroup& K;
  std::span<const Point> lambda;
  std::span<const PermGroup> leave_one_out;
};

/// Depth-first walk over independent sets, one conjugate at least of each.
///
/// Each child appends an orbit representative w of K that keeps the set
/// independent: w is moved by K and, for every a in L,
/// |G_(L\a)| |w^K| > |K| |w^{G_(L\a)}|, i.e. G_(L\a+w) > K_w.
///
/// `enter(node)` is called on every node and returns whether to expand it;
/// `resume(node)` is called after each child returns and may stop the
/// remaining siblings (for bounds that tightened meanwhile).
template <typename Enter, typename Resume>
void walk_independent_sets(const PermGroup& group, NodeCounter& counter, Enter&& enter,
                           Resume&& resume) {
  std::vector<Point> lambda;
  auto visit = [&](auto&& self, const PermGroup& K,
                   const std::vector<PermGroup>& leave_one_out) -> void {
    counter.tick();
    if (!enter(IndependentNode{K, lambda, leave_one_out})) return;
    if (K.order() == 1) return;
    const std::size_t t = K.degree();
    const OrbitTable orbits_k = orbit_table(t, K.generators());
    std::vector<OrbitTable> orbits_loo;
    std::vector<Order> loo_orders;
    for (const auto& Ka : leave_one_out) {
      orbits_loo.push_back(orbit_table(t, Ka.generators()));
      loo_orders.push_back(Ka.order());
    }
    const Order k_order = K.order();
    for (Point w = 0; w < t; ++w) {
      if (orbits_k.rep[w] != w || orbits_k.size[w] == 1) continue;
      bool independent = true;
      for (std::size_t a = 0; a < leave_one_out.size() && independent; ++a) {
        independent = loo_orders[a] * orbits_k.size[w] > k_order * orbits_loo[a].size[w];
      }
      if (!independent) continue;
      std::vector<PermGroup> child_loo;
      child_loo.reserve(leave_one_out.size() + 1);
      for (const auto& Ka : leave_one_out) child_loo.push_back(Ka.stabilizer(w));
      child_loo.push_back(K);
      lambda.push_back(w);
      self(self, K.stabilizer(w), child_loo);
      lambda.pop_back();
      if (!resume(IndependentNode{K, lambda, leave_one_out})) return;
    }
  };
  visit(visit, group, {});
}

}  // namespace grpstat::detail
