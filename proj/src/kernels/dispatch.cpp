#include "starfact/kernels/perm_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace starfact::kernels {

#if defined(STARFACT_HAVE_X86_KERNELS)
namespace ssse3 {
void right_multiply(std::span<const PermWord>, const PermWord&, std::span<PermWord>);
void left_multiply(const PermWord&, std::span<const PermWord>, std::span<PermWord>);
} // namespace ssse3
namespace avx2 {
void right_multiply(std::span<const PermWord>, const PermWord&, std::span<PermWord>);
void left_multiply(const PermWord&, std::span<const PermWord>, std::span<PermWord>);
} // namespace avx2
#endif
#if defined(STARFACT_HAVE_NEON_KERNELS)
namespace neon {
void right_multiply(std::span<const PermWord>, const PermWord&, std::span<PermWord>);
void left_multiply(const PermWord&, std::span<const PermWord>, std::span<PermWord>);
} // namespace neon
#endif

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::right_multiply, &scalar::left_multiply};
#if defined(STARFACT_HAVE_X86_KERNELS)
constexpr KernelTable kSsse3{Isa::ssse3, &ssse3::right_multiply, &ssse3::left_multiply};
constexpr KernelTable kAvx2{Isa::avx2, &avx2::right_multiply, &avx2::left_multiply};
#endif
#if defined(STARFACT_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::neon, &neon::right_multiply, &neon::left_multiply};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
#if defined(STARFACT_HAVE_X86_KERNELS)
    case Isa::ssse3:
      return __builtin_cpu_supports("ssse3");
    case Isa::avx2:
      return __builtin_cpu_supports("avx2");
#endif
#if defined(STARFACT_HAVE_NEON_KERNELS)
    case Isa::neon:
      return true;
#endif
    default:
      return false;
  }
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
#if defined(STARFACT_HAVE_X86_KERNELS)
    case Isa::ssse3:
      return &kSsse3;
    case Isa::avx2:
      return &kAvx2;
#endif
#if defined(STARFACT_HAVE_NEON_KERNELS)
    case Isa::neon:
      return &kNeon;
#endif
    default:
      return nullptr;
  }
}

const KernelTable* choose_default() {
  const auto isas = available_isas();
  if (const char* env = std::getenv("STARFACT_KERNEL")) {
    for (Isa isa : isas)
      if (isa_name(isa) == env) return table_for(isa);
  }
  return table_for(isas.back());
}

std::atomic<const KernelTable*> g_active{nullptr};

} // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::ssse3: return "ssse3";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::ssse3, Isa::avx2, Isa::neon})
    if (table_for(isa) != nullptr && cpu_supports(isa)) out.push_back(isa);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr || !cpu_supports(isa))
    throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
  return *t;
}

const KernelTable& active_kernels() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const KernelTable* chosen = choose_default();
    g_active.compare_exchange_strong(t, chosen, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

void set_active_isa(Isa isa) { g_active.store(&kernels_for(isa), std::memory_order_release); }

} // namespace starfact::kernels
