#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "niho/field.hpp"

namespace niho {

// Malformed user input. The CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldDescriptor {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
};

// "2^8", "9" (prime powers are factored), "3^2".
FieldDescriptor parse_field_descriptor(std::string_view text);
// "1,1,0,0,1" -> {1,1,0,0,1}, constant term first.
std::vector<std::uint32_t> parse_coefficients(std::string_view text);
std::uint64_t parse_u64(std::string_view text, std::string_view what);
std::vector<std::uint64_t> parse_u64_list(std::string_view text, std::string_view what);

FieldPtr field_from_text(std::string_view descriptor, std::string_view modulus = {}, FieldOptions options = {});

// "alpha^7", "a=alpha^7", "alpha", "0", or a coefficient vector "0,1,1".
Value parse_element(const Field& f, std::string_view text);
std::string render_element(const Field& f, Value v);  // "alpha^k" or "0"

}  // namespace niho
