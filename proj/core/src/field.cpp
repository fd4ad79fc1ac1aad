#include "grpstat/field.hpp"

#include <algorithm>

#include "grpstat/error.hpp"

namespace grpstat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw InvalidArgument("no inverse modulo p");
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  normalize(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    }
    normalize(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      divisor[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(std::uint32_t p, std::uint32_t f) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < f; ++i) count *= p;
  // Enumerate lower coefficients so that the x^{f-1} coefficient is the most
  // significant digit: this visits candidates in lexicographic order.
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(f + 1, 0);
    m[f] = 1;
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (f > 1 && m[0] == 0) continue;
    if (is_irreducible(m, p)) return m;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f) : Field(p, f, {}) {}

Field::Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), q_(1) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (f == 0) throw InvalidArgument("field degree must be at least 1");
  for (std::uint32_t i = 0; i < f; ++i) {
    q_ *= p;
    if (q_ > (1u << 16)) throw InvalidArgument("field order exceeds 2^16");
  }
  if (modulus.empty()) {
    modulus_ = default_modulus(p, f);
  } else {
    if (modulus.size() != f + 1 || modulus.back() != 1 ||
        std::any_of(modulus.begin(), modulus.end(), [p](auto c) { return c >= p; }) ||
        !is_irreducible(modulus, p)) {
      throw InvalidArgument("modulus must be a monic irreducible of degree f");
    }
    modulus_ = std::move(modulus);
  }
  build_tables();
}

namespace {

// Multiplies packed a by x modulo the monic modulus.
FieldElement times_x(FieldElement a, std::uint32_t p, std::uint32_t f,
                     const std::vector<std::uint32_t>& modulus) {
  std::vector<std::uint32_t> digits(f + 1, 0);
  for (std::uint32_t i = 0; i < f; ++i) {
    digits[i + 1] = a % p;
    a /= p;
  }
  const std::uint32_t top = digits[f];
  FieldElement out = 0;
  for (std::uint32_t i = f; i-- > 0;) {
    const std::uint32_t d = (digits[i] + p - top * modulus[i] % p) % p;
    out = out * p + d;
  }
  return out;
}

}  // namespace

void Field::build_tables() {
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    return;
  }
  // Multiplication by a candidate g is computed via times_x on the polynomial
  // basis: g * a = sum_i g_i x^i a.
  auto mul_slow = [&](FieldElement a, FieldElement b) {
    FieldElement result = 0;
    FieldElement shifted = a;  // a * x^i
    for (std::uint32_t i = 0; i < f_; ++i) {
      const std::uint32_t bi = b % p_;
      b /= p_;
      for (std::uint32_t k = 0; k < bi; ++k) result = add(result, shifted);
      shifted = times_x(shifted, p_, f_, modulus_);
    }
    return result;
  };
  for (FieldElement g = 2; g < q_; ++g) {
    std::vector<bool> seen(q_, false);
    FieldElement cur = 1;
    std::uint32_t k = 0;
    bool ok = true;
    for (; k < q_ - 1; ++k) {
      if (seen[cur]) {
        ok = false;
        break;
      }
      seen[cur] = true;
      exp_[k] = cur;
      log_[cur] = k;
      cur = mul_slow(cur, g);
    }
    if (ok && cur == 1) break;
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) exp_[k + q_ - 1] = exp_[k];
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return a ^ b;
  FieldElement out = 0;
  FieldElement scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  FieldElement out = 0;
  FieldElement scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (a >= q_) throw InvalidArgument("field element out of range");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::log(FieldElement a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero");
  return log_[a];
}

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
  if (k == 0) return 1;
  if (a == 0) {
    if (k < 0) throw InvalidArgument("negative power of zero");
    return 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (e < 0) e += n;
  return exp_[static_cast<std::size_t>(e)];
}

std::uint32_t Field::trace2(FieldElement x) const {
  if (p_ != 2) throw InvalidArgument("trace2 requires characteristic 2");
  FieldElement sum = 0;
  FieldElement term = x;
  for (std::uint32_t i = 0; i < f_; ++i) {
    sum ^= term;
    term = mul(term, term);
  }
  return sum;  // lies in the prime field {0, 1}
}

FieldElement Field::sqrt2(FieldElement x) const {
  if (p_ != 2) throw InvalidArgument("sqrt2 requires characteristic 2");
  // Squaring has order f on GF(2^f), so x^{2^{f-1}} squares to x.
  FieldElement y = x;
  for (std::uint32_t i = 0; i + 1 < f_; ++i) y = mul(y, y);
  return y;
}

}  // namespace grpstat
