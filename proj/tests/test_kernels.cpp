#include "starfact/kernels/perm_kernels.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace starfact::kernels;

namespace {

PermWord random_word(std::mt19937& rng, int degree) {
  PermWord w = identity_word();
  std::shuffle(w.img.begin(), w.img.begin() + degree, rng);
  return w;
}

PermWord reference_product(const PermWord& p, const PermWord& q) {
  PermWord r{};
  for (int i = 0; i < kWordSize; ++i) r.img[i] = q.img[p.img[i]];
  return r;
}

} // namespace

TEST_CASE("scalar kernels compose left to right") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 16;
    std::vector<PermWord> lhs(1 + trial % 9);
    for (auto& w : lhs) w = random_word(rng, n);
    const PermWord rhs = random_word(rng, n);
    std::vector<PermWord> out(lhs.size());
    scalar::right_multiply(lhs, rhs, out);
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(out[k] == reference_product(lhs[k], rhs));
    scalar::left_multiply(rhs, lhs, out);
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(out[k] == reference_product(rhs, lhs[k]));
  }
}

TEST_CASE("every available ISA matches the scalar kernels") {
  const auto isas = available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == Isa::scalar);
  std::mt19937 rng(11);
  for (Isa isa : isas) {
    CAPTURE(isa_name(isa));
    const KernelTable& k = kernels_for(isa);
    CHECK(k.isa == isa);
    // Batch sizes cover the vector tails.
    for (std::size_t batch : {0u, 1u, 2u, 3u, 5u, 8u, 17u, 64u, 101u}) {
      const int n = 1 + static_cast<int>(batch % 16);
      std::vector<PermWord> words(batch);
      for (auto& w : words) w = random_word(rng, n);
      const PermWord fixed = random_word(rng, n);
      std::vector<PermWord> want(batch), got(batch);
      scalar::right_multiply(words, fixed, want);
      k.right_multiply(words, fixed, got);
      CHECK(got == want);
      scalar::left_multiply(fixed, words, want);
      k.left_multiply(fixed, words, got);
      CHECK(got == want);
    }
  }
}

TEST_CASE("forcing the active ISA switches the dispatch table") {
  const Isa before = active_kernels().isa;
  for (Isa isa : available_isas()) {
    set_active_isa(isa);
    CHECK(active_kernels().isa == isa);
  }
  set_active_isa(before);
  CHECK_THROWS(kernels_for(static_cast<Isa>(99)));
}
