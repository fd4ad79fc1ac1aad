#include "grpstat/order.hpp"

#include "grpstat/error.hpp"

namespace grpstat {

unsigned prime_factor_count(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("prime_factor_count: zero");
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

unsigned prime_factor_count(const Order& n) {
  if (n <= 0) throw InvalidArgument("prime_factor_count: non-positive value");
  Order m = n;
  unsigned count = 0;
  for (std::uint64_t p = 2;; ++p) {
    Order pp = Order(p) * p;
    if (pp > m) break;
    while (m % p == 0) {
      m /= p;
      ++count;
    }
  }
  if (m > 1) ++count;
  return count;
}

unsigned floor_log2(const Order& n) {
  if (n <= 0) throw InvalidArgument("floor_log2: non-positive value");
  return static_cast<unsigned>(boost::multiprecision::msb(n));
}

unsigned ceil_log2(const Order& n) {
  unsigned f = floor_log2(n);
  return (Order(1) << f) == n ? f : f + 1;
}

Order pow(const Order& base, unsigned exponent) {
  Order result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Order factorial(unsigned n) {
  Order result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Order binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Order result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Order gaussian_binomial(unsigned n, unsigned m, unsigned q) {
  if (m > n) return 0;
  Order num = 1;
  Order den = 1;
  for (unsigned i = 0; i < m; ++i) {
    num *= pow(Order(q), n - i) - 1;
    den *= pow(Order(q), i + 1) - 1;
  }
  return num / den;
}

std::string to_string(const Order& n) { return n.str(); }

std::uint64_t to_u64(const Order& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument("value does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace grpstat
