#include "starfact/kernels/perm_kernels.hpp"

#include <cassert>
#include <cstddef>

namespace starfact::kernels::scalar {

void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs, std::span<PermWord> out) {
  assert(out.size() >= lhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    PermWord r;
    for (int i = 0; i < kWordSize; ++i) r.img[i] = rhs.img[lhs[k].img[i]];
    out[k] = r;
  }
}

void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs, std::span<PermWord> out) {
  assert(out.size() >= rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    PermWord r;
    for (int i = 0; i < kWordSize; ++i) r.img[i] = rhs[k].img[lhs.img[i]];
    out[k] = r;
  }
}

} // namespace starfact::kernels::scalar
