#include "newton_mu/kernels.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace newton_mu::kernels;

namespace {

std::vector<std::vector<std::int64_t>> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(0, bound);
  std::vector<std::vector<std::int64_t>> pts(count, std::vector<std::int64_t>(dim));
  for (auto& p : pts)
    for (auto& c : p) c = coord(rng);
  return pts;
}

std::int64_t reference_dot(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& p) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * p[j];
  return s;
}

}  // namespace

TEST_CASE("block layout pads to the lane width") {
  const std::vector<std::vector<std::int64_t>> pts{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}};
  const LatticeBlock block(2, pts);
  CHECK(block.size() == 5);
  CHECK(block.padded_size() == 8);
  CHECK(block.coord(1)[4] == 10);
  CHECK(block.max_abs() == 10);
}

TEST_CASE("fits rejects weights outside 32 bits") {
  const std::vector<std::vector<std::int64_t>> pts{{1, 2}};
  const LatticeBlock block(2, pts);
  const std::vector<std::int64_t> small{3, -4};
  const std::vector<std::int64_t> wide{std::int64_t{1} << 40, 1};
  CHECK(fits(block, small));
  CHECK_FALSE(fits(block, wide));
}

TEST_CASE("scalar kernel matches a plain loop") {
  std::mt19937_64 rng(3);
  for (std::size_t dim = 1; dim <= 6; ++dim)
    for (std::size_t count : {1u, 3u, 4u, 7u, 64u}) {
      const auto pts = random_points(rng, count, dim, 40);
      const LatticeBlock block(dim, pts);
      std::vector<std::int64_t> w(dim);
      std::uniform_int_distribution<std::int64_t> wd(-1000, 1000);
      for (auto& x : w) x = wd(rng);
      std::vector<std::int64_t> out(block.padded_size());
      dot_scalar(block, w, out);
      for (std::size_t i = 0; i < count; ++i) CHECK(out[i] == reference_dot(w, pts[i]));
    }
}

TEST_CASE("AVX2 kernel is equivalent to the scalar kernel") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence skipped");
    return;
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + trial % 6;
    const std::size_t count = 1 + static_cast<std::size_t>(rng() % 70);
    const std::int64_t bound = trial % 3 == 0 ? 100000 : 64;
    const auto pts = random_points(rng, count, dim, bound);
    const LatticeBlock block(dim, pts);
    std::vector<std::int64_t> w(dim);
    const std::int64_t wmax = trial % 5 == 0 ? std::numeric_limits<std::int32_t>::max() : 5000;
    std::uniform_int_distribution<std::int64_t> wd(-wmax, wmax);
    for (auto& x : w) x = wd(rng);
    if (!fits(block, w)) continue;
    std::vector<std::int64_t> a(block.padded_size()), b(block.padded_size());
    dot_scalar(block, w, a);
    dot_avx2(block, w, b);
    for (std::size_t i = 0; i < count; ++i) REQUIRE(a[i] == b[i]);
  }
}

TEST_CASE("dispatch reports a usable ISA") {
  const Isa isa = active_isa();
  CHECK(isa_available(isa));
  CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
}
