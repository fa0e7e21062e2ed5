#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class Errc {
  invalid_modulus,
  no_inverse,
  not_unimodular,
  unsupported_dimension,
  shape_mismatch,
  parse_error,
  out_of_range,
  depth_too_small,
  unsolvable_pattern,
  not_bit_matrix,
  not_special,
  invariant_breach,
  too_large,
};

inline const char* to_string(Errc e) {
  switch (e) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::no_inverse: return "no-inverse";
    case Errc::not_unimodular: return "not-unimodular";
    case Errc::unsupported_dimension: return "unsupported-dimension";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::parse_error: return "parse-error";
    case Errc::out_of_range: return "out-of-range";
    case Errc::depth_too_small: return "depth-too-small";
    case Errc::unsolvable_pattern: return "unsolvable-pattern";
    case Errc::not_bit_matrix: return "not-bit-matrix";
    case Errc::not_special: return "not-special";
    case Errc::invariant_breach: return "invariant-breach";
    case Errc::too_large: return "too-large";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cayley
