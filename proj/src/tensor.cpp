#include "lgbridge/tensor.hpp"

#include <limits>

namespace lgbridge {

BasisCode basis_size(int site_dim, int sites) {
  if (site_dim < 1 || sites < 1) throw std::invalid_argument("basis_size: dimensions must be positive");
  BasisCode total = 1;
  for (int s = 0; s < sites; ++s) {
    if (total > std::numeric_limits<BasisCode>::max() / static_cast<BasisCode>(site_dim))
      throw std::length_error("tensor basis too large for 64-bit codes");
    total *= static_cast<BasisCode>(site_dim);
  }
  return total;
}

std::vector<int> decode_basis(BasisCode code, int site_dim, int sites) {
  std::vector<int> digits(static_cast<std::size_t>(sites));
  for (int s = sites - 1; s >= 0; --s) {
    digits[static_cast<std::size_t>(s)] = static_cast<int>(code % static_cast<BasisCode>(site_dim));
    code /= static_cast<BasisCode>(site_dim);
  }
  return digits;
}

BasisCode encode_basis(const std::vector<int>& digits, int site_dim) {
  BasisCode code = 0;
  for (int d : digits) {
    if (d < 0 || d >= site_dim) throw std::invalid_argument("encode_basis: digit out of range");
    code = code * static_cast<BasisCode>(site_dim) + static_cast<BasisCode>(d);
  }
  return code;
}

}  // namespace lgbridge
