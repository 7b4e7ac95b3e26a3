#include "newton_mu/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace newton_mu::kernels {

LatticeBlock::LatticeBlock(std::size_t dim, std::span<const std::vector<std::int64_t>> points)
    : dim_(dim), size_(points.size()) {
  padded_ = (size_ + kLanes - 1) / kLanes * kLanes;
  data_.assign(dim_ * padded_, 0);
  constexpr std::int64_t lim = std::numeric_limits<std::int32_t>::max();
  for (std::size_t i = 0; i < size_; ++i) {
    if (points[i].size() != dim_) throw std::invalid_argument("LatticeBlock: dimension mismatch");
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::int64_t c = points[i][j];
      if (c > lim || c < -lim) throw std::out_of_range("LatticeBlock: coordinate exceeds 32 bits");
      data_[j * padded_ + i] = c;
      max_abs_ = std::max(max_abs_, std::abs(c));
    }
  }
}

bool fits(const LatticeBlock& block, std::span<const std::int64_t> w) {
  if (w.size() != block.dim()) return false;
  constexpr std::int64_t lim = std::numeric_limits<std::int32_t>::max();
  __int128 bound = 0;
  for (auto x : w) {
    if (x > lim || x < -lim) return false;
    bound += static_cast<__int128>(std::abs(x)) * block.max_abs();
  }
  return bound < (static_cast<__int128>(1) << 62);
}

void dot_scalar(const LatticeBlock& block, std::span<const std::int64_t> w, std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < block.size(); ++i) out[i] = 0;
  for (std::size_t j = 0; j < block.dim(); ++j) {
    const std::int64_t* c = block.coord(j);
    for (std::size_t i = 0; i < block.size(); ++i) out[i] += w[j] * c[i];
  }
}

}  // namespace newton_mu::kernels
