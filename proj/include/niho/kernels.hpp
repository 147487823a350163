#pragma once

#include <cstdint>
#include <vector>

#include "niho/field.hpp"

// Exhaustive inner loops, each in a plain serial form and an OpenMP form.
// The serial versions are the reference the tests hold the parallel ones to.
namespace niho::kernels {

// W(a) = sum_x (-1)^{Tr(x^d) + Tr(a x)} for every a, indexed by encoded value.
// Characteristic 2 only.
std::vector<std::int64_t> walsh_values_serial(const Field& f, std::uint64_t d);
std::vector<std::int64_t> walsh_values_parallel(const Field& f, std::uint64_t d);

// C(k) = sum_t (-1)^{u_{t+k} + v_t} for k = 0..n-1. Sequences are packed
// little-endian bit vectors of length n.
std::vector<std::int64_t> crosscorrelation_serial(const std::vector<std::uint64_t>& u,
                                                  const std::vector<std::uint64_t>& v, std::uint64_t n);
std::vector<std::int64_t> crosscorrelation_parallel(const std::vector<std::uint64_t>& u,
                                                    const std::vector<std::uint64_t>& v, std::uint64_t n);

// Z(a) for the degree 2s-1 Niho polynomial, every a in F (index = value).
std::vector<std::uint32_t> unit_root_counts_serial(const FieldPtr& f, std::uint32_t s);
std::vector<std::uint32_t> unit_root_counts_parallel(const FieldPtr& f, std::uint32_t s);

}  // namespace niho::kernels
