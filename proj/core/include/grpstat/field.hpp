#pragma once

#include <cstdint>
#include <vector>

namespace grpstat {

/// Field elements are integers in [0, q): the coefficients of the polynomial
/// representative, packed base p with the constant term least significant.
using FieldElement = std::uint32_t;

/// GF(p^f) for p^f <= 2^16 with exp/log tables.
///
/// The default modulus is the lexicographically smallest monic irreducible
/// polynomial of degree f over GF(p) (coefficients compared from the x^{f-1}
/// term down), found by trial division when the field is built.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t f);

  /// Uses `modulus` (f+1 coefficients, constant term first, monic) instead
  /// of the default. Throws InvalidArgument if it is not irreducible.
  Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::uint32_t degree() const { return f_; }
  [[nodiscard]] std::uint32_t size() const { return q_; }
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Smallest element (as an integer) generating the multiplicative group.
  [[nodiscard]] FieldElement primitive_element() const { return exp_[1]; }

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument for a == 0.
  [[nodiscard]] FieldElement inv(FieldElement a) const;
  [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
  }
  /// a^k with a^0 = 1 (including 0^0); negative k requires a != 0.
  [[nodiscard]] FieldElement pow(FieldElement a, std::int64_t k) const;

  /// zeta^k for the primitive element zeta.
  [[nodiscard]] FieldElement exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }
  /// Discrete log base the primitive element; requires a != 0.
  [[nodiscard]] std::uint32_t log(FieldElement a) const;

  /// Absolute trace to GF(2): x + x^2 + ... + x^{2^{e-1}}. Characteristic 2 only.
  [[nodiscard]] std::uint32_t trace2(FieldElement x) const;

  /// The unique y with y^2 = x. Characteristic 2 only.
  [[nodiscard]] FieldElement sqrt2(FieldElement x) const;

  /// x^p (the Frobenius automorphism).
  [[nodiscard]] FieldElement frobenius(FieldElement x) const { return pow(x, p_); }

 private:
  void build_tables();

  std::uint32_t p_;
  std::uint32_t f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElement> exp_;   // length 2(q-1) so products need no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// True when n is prime (trial division; n is small here).
bool is_prime(std::uint64_t n);

}  // namespace grpstat
