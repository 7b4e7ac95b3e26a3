#pragma once

// Batched integer dot products of one weight vector against many lattice
// points. Used by the facet support checks, which evaluate <w, p> for every
// support point p and every candidate hyperplane w.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace newton_mu::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);

/// ISA chosen at first use: AVX2 when the CPU reports it, unless the
/// environment variable NEWTON_MU_SIMD is set to "scalar".
Isa active_isa();

/// Lattice points laid out coordinate-major and padded to a lane multiple.
/// Every coordinate must fit in a signed 32-bit integer.
class LatticeBlock {
 public:
  static constexpr std::size_t kLanes = 4;

  LatticeBlock(std::size_t dim, std::span<const std::vector<std::int64_t>> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t padded_size() const noexcept { return padded_; }
  const std::int64_t* coord(std::size_t j) const noexcept { return data_.data() + j * padded_; }
  std::int64_t max_abs() const noexcept { return max_abs_; }

 private:
  std::size_t dim_;
  std::size_t size_;
  std::size_t padded_;
  std::int64_t max_abs_ = 0;
  std::vector<std::int64_t> data_;
};

/// True when every <w, p> is computable without int64 overflow and each w_j
/// fits in 32 bits (the AVX2 path multiplies 32x32 -> 64).
bool fits(const LatticeBlock& block, std::span<const std::int64_t> w);

/// out[i] = <w, p_i> for i < block.size(). Preconditions: fits(block, w),
/// w.size() == block.dim(), out.size() >= block.size().
void dot_scalar(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out);
void dot_avx2(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out);
void dot(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out);

}  // namespace newton_mu::kernels
