#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Small integer helpers used internally for field construction (primitivity
// tests need the prime divisors of p^n - 1). Everything fits in 64 bits.
namespace niho::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Exact b^e, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order (Pollard rho underneath).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace niho::nt
