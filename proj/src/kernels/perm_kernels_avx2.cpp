// Compiled with -mavx2. vpshufb shuffles within 128-bit lanes, so each
// 256-bit register carries two independent permutation words.
#include "starfact/kernels/perm_kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace starfact::kernels::avx2 {

void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs, std::span<PermWord> out) {
  const __m128i t128 = _mm_load_si128(reinterpret_cast<const __m128i*>(rhs.img.data()));
  const __m256i table = _mm256_broadcastsi128_si256(t128);
  const std::size_t n = lhs.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs[k].img.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[k].img.data()), _mm256_shuffle_epi8(table, idx));
  }
  if (k < n) {
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(lhs[k].img.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].img.data()), _mm_shuffle_epi8(t128, idx));
  }
}

void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs, std::span<PermWord> out) {
  const __m128i i128 = _mm_load_si128(reinterpret_cast<const __m128i*>(lhs.img.data()));
  const __m256i idx = _mm256_broadcastsi128_si256(i128);
  const std::size_t n = rhs.size();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256i table = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs[k].img.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[k].img.data()), _mm256_shuffle_epi8(table, idx));
  }
  if (k < n) {
    const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(rhs[k].img.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].img.data()), _mm_shuffle_epi8(table, i128));
  }
}

} // namespace starfact::kernels::avx2
