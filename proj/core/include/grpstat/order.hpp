#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grpstat {

/// Unbounded non-negative integer used for group orders and intermediate
/// products in diagnostic formulas.
using Order = boost::multiprecision::cpp_int;

/// Number of prime factors of n counted with multiplicity. omega(1) = 0.
unsigned prime_factor_count(const Order& n);
unsigned prime_factor_count(std::uint64_t n);

/// floor(log2 n) for n >= 1.
unsigned floor_log2(const Order& n);

/// ceil(log2 n) for n >= 1.
unsigned ceil_log2(const Order& n);

Order pow(const Order& base, unsigned exponent);
Order factorial(unsigned n);
Order binomial(unsigned n, unsigned k);

/// Gaussian binomial coefficient [n choose m]_q.
Order gaussian_binomial(unsigned n, unsigned m, unsigned q);

std::string to_string(const Order& n);

/// Narrowing conversion; throws if the value does not fit.
std::uint64_t to_u64(const Order& n);

}  // namespace grpstat
