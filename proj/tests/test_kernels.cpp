#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "tamaripop/bracket_vector.hpp"
#include "tamaripop/kernels/kernels.hpp"
#include "test_support.hpp"

namespace tamaripop::kernels {
namespace {

const KernelSet& avx2_or_skip() {
  static const KernelSet* k = avx2_kernels();
  return *k;
}

#define REQUIRE_AVX2()                                   \
  do {                                                   \
    if (avx2_kernels() == nullptr) GTEST_SKIP() << "no AVX2"; \
  } while (0)

std::vector<Lane> random_lanes(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-128, 127);
  std::vector<Lane> v(n);
  for (auto& x : v) x = static_cast<Lane>(d(rng));
  return v;
}

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < density; ++i) w &= rng();
  }
  return v;
}

TEST(Kernels, ScalarIsAlwaysAvailable) {
  EXPECT_STREQ(scalar_kernels().name, "scalar");
  EXPECT_NE(active_kernels().name, nullptr);
}

TEST(Kernels, ScalarPopEtaOnFigureVector) {
  const auto ctx = NuContext::make("ENNEEEENNE");
  const std::vector<Lane> v{1, 0, 1, 3, 3, 3, 2, 2, 3, 4, 4};
  std::vector<Lane> out(v.size());
  ASSERT_TRUE(scalar_kernels().pop_eta(v, ctx->height_lanes(), ctx->fixed_lanes(), out));
  EXPECT_EQ(out, (std::vector<Lane>{0, 0, 1, 3, 3, 2, 2, 2, 3, 4, 4}));
  EXPECT_EQ(scalar_kernels().descent_mask(v), (Word{1} << 0) | (Word{1} << 5));
}

TEST(KernelEquivalence, MeetAndLeqRandom) {
  REQUIRE_AVX2();
  const auto& s = scalar_kernels();
  const auto& a = avx2_or_skip();
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 130; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      auto x = random_lanes(rng, n);
      auto y = random_lanes(rng, n);
      std::vector<Lane> o1(n), o2(n);
      s.meet(x, y, o1);
      a.meet(x, y, o2);
      ASSERT_EQ(o1, o2);
      ASSERT_EQ(s.leq(x, y), a.leq(x, y));
      ASSERT_EQ(s.leq(o1, x), a.leq(o1, x));
      ASSERT_TRUE(a.leq(o1, y));
      if (n > 0) {
        auto z = x;
        z[rng() % n] -= 1;  // nearly equal pairs exercise the tail
        ASSERT_EQ(s.leq(x, z), a.leq(x, z));
        ASSERT_EQ(s.leq(z, x), a.leq(z, x));
      }
    }
  }
}

TEST(KernelEquivalence, DescentMaskRandom) {
  REQUIRE_AVX2();
  std::mt19937_64 rng(12);
  for (std::size_t n = 0; n <= 64; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      auto x = random_lanes(rng, n);
      for (auto& l : x) l = static_cast<Lane>(l & 3);
      ASSERT_EQ(scalar_kernels().descent_mask(x), avx2_or_skip().descent_mask(x)) << "n=" << n;
    }
  }
}

TEST(KernelEquivalence, BitsetsRandom) {
  REQUIRE_AVX2();
  const auto& s = scalar_kernels();
  const auto& a = avx2_or_skip();
  std::mt19937_64 rng(13);
  for (std::size_t n = 0; n <= 40; ++n) {
    for (int density = 0; density < 5; ++density) {
      auto x = random_words(rng, n, density);
      auto y = random_words(rng, n, density);
      std::vector<Word> o1(n), o2(n);
      s.bits_and(x, y, o1);
      a.bits_and(x, y, o2);
      ASSERT_EQ(o1, o2);
      ASSERT_EQ(s.bits_popcount(x), a.bits_popcount(x));
      ASSERT_EQ(s.bits_intersect(x, y), a.bits_intersect(x, y));
      ASSERT_EQ(s.bits_equal(x, y), a.bits_equal(x, y));
      ASSERT_TRUE(a.bits_equal(x, x));
      auto d1 = x, d2 = x;
      s.bits_or_into(d1, y);
      a.bits_or_into(d2, y);
      ASSERT_EQ(d1, d2);
    }
  }
}

void expect_pop_eta_equal(const NuContext& ctx, const std::vector<BracketVector>& vecs) {
  const auto& s = scalar_kernels();
  const auto& a = avx2_or_skip();
  std::vector<Lane> o1, o2;
  for (const auto& v : vecs) {
    o1.assign(v.size(), 0);
    o2.assign(v.size(), 0);
    const bool r1 = s.pop_eta(v.entries(), ctx.height_lanes(), ctx.fixed_lanes(), o1);
    const bool r2 = a.pop_eta(v.entries(), ctx.height_lanes(), ctx.fixed_lanes(), o2);
    ASSERT_TRUE(r1) << v.to_string();
    ASSERT_EQ(r1, r2);
    ASSERT_EQ(o1, o2) << ctx.nu().to_string() << " " << v.to_string();
  }
}

TEST(KernelEquivalence, PopEtaExhaustiveShortNu) {
  REQUIRE_AVX2();
  for (std::size_t ell = 1; ell <= 10; ++ell)
    for (const auto& nu : testing::all_paths(ell)) {
      const auto ctx = NuContext::make(nu);
      expect_pop_eta_equal(*ctx, enumerate_vectors(ctx));
    }
}

TEST(KernelEquivalence, PopEtaLongNu) {
  REQUIRE_AVX2();
  // Lengths on both sides of the 32-lane boundary; the AVX2 path falls back
  // to scalar above it, which must still agree.
  std::mt19937_64 rng(14);
  for (std::size_t ell : {16u, 20u, 24u, 30u, 31u, 32u, 33u, 40u}) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto ctx = NuContext::make(testing::random_path(rng, ell));
      std::vector<BracketVector> sample;
      // Random walks through the lattice: start from the minimum and apply up
      // covers chosen at random.
      auto mu = ctx->nu();
      for (int step = 0; step < 60; ++step) {
        sample.push_back(path_to_vector(mu, ctx));
        auto ups = covers_up(mu, *ctx);
        if (ups.empty()) break;
        mu = ups[rng() % ups.size()];
      }
      expect_pop_eta_equal(*ctx, sample);
    }
  }
}

}  // namespace
}  // namespace tamaripop::kernels
