#include "starfact/kernels/perm_kernels.hpp"

#include <arm_neon.h>

#include <cstddef>

namespace starfact::kernels::neon {

void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs, std::span<PermWord> out) {
  const uint8x16_t table = vld1q_u8(rhs.img.data());
  for (std::size_t k = 0; k < lhs.size(); ++k)
    vst1q_u8(out[k].img.data(), vqtbl1q_u8(table, vld1q_u8(lhs[k].img.data())));
}

void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs, std::span<PermWord> out) {
  const uint8x16_t idx = vld1q_u8(lhs.img.data());
  for (std::size_t k = 0; k < rhs.size(); ++k)
    vst1q_u8(out[k].img.data(), vqtbl1q_u8(vld1q_u8(rhs[k].img.data()), idx));
}

} // namespace starfact::kernels::neon
