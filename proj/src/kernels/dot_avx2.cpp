#include "newton_mu/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define NEWTON_MU_HAVE_AVX2_PATH 1
#endif

namespace newton_mu::kernels {

#if NEWTON_MU_HAVE_AVX2_PATH

// Coordinates and weights fit in 32 bits, so _mm256_mul_epi32 on the low
// halves of the 64-bit lanes gives exact 64-bit products.
__attribute__((target("avx2"))) void dot_avx2(const LatticeBlock& block,
                                                std::span<const std::int64_t> w,
                                                std::span<std::int64_t> out) {
  const std::size_t full = block.size() / LatticeBlock::kLanes * LatticeBlock::kLanes;
  std::size_t i = 0;
  for (; i < full; i += LatticeBlock::kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < block.dim(); ++j) {
      const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(block.coord(j) + i));
      const __m256i wj = _mm256_set1_epi64x(w[j]);
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(c, wj));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
  }
  for (; i < block.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < block.dim(); ++j) s += w[j] * block.coord(j)[i];
    out[i] = s;
  }
}

#else

void dot_avx2(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out) {
  dot_scalar(block, w, out);
}

#endif

}  // namespace newton_mu::kernels
