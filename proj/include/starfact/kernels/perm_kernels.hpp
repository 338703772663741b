#pragma once

// Batched permutation products on fixed 16-byte image words.
//
// A word stores 0-based images; slots at or beyond the degree hold the
// identity so every kernel can treat words as permutations of 16 points.
// Products follow the left-to-right convention: (p * q)[i] = q[p[i]], which
// is exactly a byte shuffle of the table `q` by the indices `p`.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace starfact::kernels {

inline constexpr int kWordSize = 16;

struct alignas(16) PermWord {
  std::array<std::uint8_t, kWordSize> img;

  auto operator<=>(const PermWord&) const = default;
};

inline PermWord identity_word() {
  PermWord w{};
  for (int i = 0; i < kWordSize; ++i) w.img[i] = static_cast<std::uint8_t>(i);
  return w;
}

enum class Isa { scalar, ssse3, avx2, neon };

std::string_view isa_name(Isa isa);

// out[k] = lhs[k] * rhs  (apply lhs[k] first, then rhs)
using RightMultiplyFn = void (*)(std::span<const PermWord> lhs, const PermWord& rhs,
                                 std::span<PermWord> out);
// out[k] = lhs * rhs[k]
using LeftMultiplyFn = void (*)(const PermWord& lhs, std::span<const PermWord> rhs,
                                std::span<PermWord> out);

struct KernelTable {
  Isa isa;
  RightMultiplyFn right_multiply;
  LeftMultiplyFn left_multiply;
};

namespace scalar {
void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs, std::span<PermWord> out);
void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs, std::span<PermWord> out);
} // namespace scalar

/// ISAs compiled into this build and supported by the running CPU, best last.
std::vector<Isa> available_isas();

/// Kernel table for a specific ISA; throws if it is not available.
const KernelTable& kernels_for(Isa isa);

/// The table in use. Chosen on first call: the best available ISA, unless the
/// STARFACT_KERNEL environment variable names another available one.
const KernelTable& active_kernels();

/// Forces the active table (tests and benchmarking).
void set_active_isa(Isa isa);

inline void right_multiply(std::span<const PermWord> lhs, const PermWord& rhs,
                           std::span<PermWord> out) {
  active_kernels().right_multiply(lhs, rhs, out);
}

inline void left_multiply(const PermWord& lhs, std::span<const PermWord> rhs,
                          std::span<PermWord> out) {
  active_kernels().left_multiply(lhs, rhs, out);
}

} // namespace starfact::kernels
