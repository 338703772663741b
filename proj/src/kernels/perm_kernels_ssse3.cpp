// Compiled with -mssse3.
#include "starfact/kernels/perm_kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace starfact::kernels::ssse3 {

void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs, std::span<PermWord> out) {
  const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(rhs.img.data()));
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(lhs[k].img.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].img.data()), _mm_shuffle_epi8(table, idx));
  }
}

void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs, std::span<PermWord> out) {
  const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(lhs.img.data()));
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(rhs[k].img.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].img.data()), _mm_shuffle_epi8(table, idx));
  }
}

} // namespace starfact::kernels::ssse3
