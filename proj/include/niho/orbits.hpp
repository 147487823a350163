#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "niho/factor.hpp"
#include "niho/field.hpp"
#include "niho/poly.hpp"

namespace niho {

// pi_F computed inside a host field built over F.
Value pi_in_host(const Field& base, const Field& host, Value r);

struct OrbitReport {
  std::string base;
  std::string host;
  std::uint32_t degree = 0;  // e = [F(r):F]
  std::vector<Value> orbit;  // r, pi(r), pi^2(r), ...
  bool on_unit_circle = false;  // e odd and r on U_{F(r)}
  std::size_t size() const { return orbit.size(); }
  nlohmann::ordered_json to_json(const Field& host) const;
};

OrbitReport pi_orbit(const Field& base, const Field& host, Value r);

struct ClosedSetSum {
  std::size_t set_size = 0;
  std::uint32_t orbit_count = 0;
  Value s = 0;             // in the host
  bool tau_fixed = false;  // S lies in H_F
  std::uint32_t trace = 0; // Tr_{H_F/F_2}(S)
  std::uint32_t expected_trace = 0;
  bool formula_holds() const { return tau_fixed && trace == expected_trace; }
  nlohmann::ordered_json to_json(const Field& host) const;
};

// Sum over unordered pairs of u v / (u - v)^2 for a pi_F-closed set R.
// Expected trace: C(|R|+1, 2) + t mod 2 (C(n-1, 2) when R is one orbit).
ClosedSetSum closed_set_sum(const Field& base, const Field& host, const std::vector<Value>& set);
// Sum over orbit1 x orbit2; expected trace |orbit1| |orbit2| mod 2.
ClosedSetSum cross_orbit_sum(const Field& base, const Field& host, const std::vector<Value>& orbit1,
                             const std::vector<Value>& orbit2);

// Tr_{H_F/F_2}(s) for s in H_F, evaluated in the host as s + s^2 + ... .
std::uint32_t half_field_trace(const Field& base, const Field& host, Value s);

struct SplitRoots {
  FieldPtr host;
  std::vector<Poly> factors;
  std::uint32_t host_degree = 1;  // lcm of factor degrees
  std::vector<Value> roots;       // ascending, in host
};

// All roots of a separable g in one extension of its field of degree lcm(factor degrees).
SplitRoots splitting_roots(const Poly& g, const SplitOptions& options = {});

struct PairSumCheck {
  std::string field;
  Value a = 0;
  std::string host;
  std::vector<Value> roots;
  Value s = 0;
  Value b = 0;        // prod_{i<j} (r_i - r_j)
  Value c_direct = 0; // c at the roots, by its defining product formula
  bool s_is_zero() const { return s == 0; }
  bool identity_holds = false;  // S b^2 = c
  std::uint32_t orbit_count = 0;
  nlohmann::ordered_json to_json() const;
};

// S over all pairs of roots of the (separable) key polynomial at a.
PairSumCheck key_pair_sum_check(const FieldPtr& f, Value a, const SplitOptions& options = {});

}  // namespace niho
