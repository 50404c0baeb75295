#include <gtest/gtest.h>

#include <map>
#include <set>

#include "tamaripop/bracket_vector.hpp"
#include "tamaripop/hasse.hpp"
#include "test_support.hpp"

namespace tamaripop {
namespace {

const std::vector<int> kFigure{1, 0, 1, 3, 3, 3, 2, 2, 3, 4, 4};

NuContextPtr tam3() { return NuContext::make("ENENE"); }

BracketVector vec(const NuContextPtr& ctx, std::vector<int> e) { return BracketVector::from_entries(ctx, e); }

TEST(IsValid, Examples) {
  const auto ctx = NuContext::make("ENNEEEENNE");
  EXPECT_TRUE(is_valid(kFigure, *ctx));
  auto broken = kFigure;
  broken[1] = 1;
  EXPECT_FALSE(is_valid(broken, *ctx));
  EXPECT_TRUE(is_valid(std::vector<int>{2, 0, 2, 1, 2, 2}, *tam3()));
}

TEST(IsValid, LengthMismatchThrows) {
  EXPECT_THROW(is_valid(std::vector<int>{0, 0, 1}, *tam3()), std::invalid_argument);
}

TEST(IsValid, RejectsEachCondition) {
  const auto ctx = tam3();  // f = (1, 3, 5)
  EXPECT_FALSE(is_valid(std::vector<int>{0, 0, 1, 1, 2, 1}, *ctx));  // fixed entry
  EXPECT_FALSE(is_valid(std::vector<int>{3, 0, 1, 1, 2, 2}, *ctx));  // above the top
  EXPECT_FALSE(is_valid(std::vector<int>{1, 0, 0, 1, 2, 2}, *ctx));  // below the floor
  EXPECT_FALSE(is_valid(std::vector<int>{1, 0, 2, 1, 2, 2}, *ctx));  // 121 at indices 0, 2, 3
}

TEST(IsValid, AgreesWithIndependentFilter) {
  for (std::size_t ell = 1; ell <= 8; ++ell)
    for (const auto& nu : testing::all_paths(ell)) {
      const auto ctx = NuContext::make(nu);
      const auto f = ctx->fixed_positions();
      std::vector<int> v(ell + 1, 0);
      std::mt19937_64 rng(ell);
      for (int rep = 0; rep < 40; ++rep) {
        for (std::size_t i = 0; i <= ell; ++i) v[i] = static_cast<int>(rng() % (ctx->top() + 2)) - (rep % 5 == 0);
        for (std::size_t k = 0; k < f.size(); ++k)
          if (rng() % 4) v[static_cast<std::size_t>(f[k])] = static_cast<int>(k);
        EXPECT_EQ(is_valid(v, *ctx), testing::is_bracket_vector_121(v, *ctx)) << nu.to_string();
      }
    }
}

TEST(BracketVector, FactoryValidates) {
  EXPECT_THROW(vec(tam3(), {1, 1, 1, 1, 2, 2}), std::invalid_argument);
  EXPECT_THROW(vec(tam3(), {0, 0}), std::invalid_argument);
  EXPECT_EQ(vec(tam3(), {2, 0, 2, 1, 2, 2}).to_string(), "(2,0,2,1,2,2)");
  EXPECT_TRUE(BracketVector::minimum(tam3()).is_minimum());
}

TEST(PathToVector, FigureExample) {
  const auto ctx = NuContext::make("ENNEEEENNE");
  EXPECT_EQ(path_to_vector(parse_path("NENENEEENE"), ctx).to_ints(), kFigure);
}

TEST(PathToVector, MinimumIsHeights) {
  for (const auto& nu : testing::nu_corpus(12, 10, 3)) {
    const auto ctx = NuContext::make(nu);
    EXPECT_EQ(path_to_vector(nu, ctx).to_ints(), ctx->heights());
    EXPECT_TRUE(path_to_vector(nu, ctx).is_minimum());
  }
}

TEST(PathToVector, TopOfTam3) {
  const auto ctx = tam3();
  EXPECT_EQ(path_to_vector(top_path(*ctx), ctx).to_ints(), (std::vector<int>{2, 0, 2, 1, 2, 2}));
  EXPECT_EQ(top_path(*ctx).to_string(), "NNEEE");
}

TEST(PathToVector, RejectsPathsBelowNu) {
  EXPECT_THROW(path_to_vector(parse_path("ENN"), NuContext::make("NEN")), std::invalid_argument);
  EXPECT_THROW(path_to_vector(parse_path("NE"), tam3()), std::invalid_argument);
}

TEST(VectorToPath, Examples) {
  const auto ctx = NuContext::make("ENNEEEENNE");
  EXPECT_EQ(vector_to_path(vec(ctx, kFigure)).to_string(), "NENENEEENE");
  EXPECT_EQ(vector_to_path(BracketVector::minimum(ctx)), ctx->nu());
}

TEST(VectorToPath, RoundTripDyck4) {
  const auto ctx = NuContext::make(dyck_nu(4));
  const auto vs = enumerate_vectors(ctx);
  EXPECT_EQ(vs.size(), 14u);
  for (const auto& v : vs) EXPECT_EQ(path_to_vector(vector_to_path(v), ctx), v);
}

TEST(VectorToPath, AgreesWithEnumerationOracle) {
  // Fallback oracle: the inverse found by searching Tam(ν).
  for (const auto& nu : testing::nu_corpus(11, 15, 5)) {
    const auto ctx = NuContext::make(nu);
    std::map<std::string, std::string> by_key;
    for (const auto& mu : enumerate_tam(*ctx)) by_key[path_to_vector(mu, ctx).key()] = mu.to_string();
    for (const auto& v : enumerate_vectors(ctx)) {
      ASSERT_TRUE(by_key.count(v.key())) << v.to_string();
      EXPECT_EQ(vector_to_path(v).to_string(), by_key[v.key()]);
    }
  }
}

TEST(Meet, Examples) {
  const auto ctx = tam3();
  const auto top = vec(ctx, {2, 0, 2, 1, 2, 2});
  const auto mid = vec(ctx, {1, 0, 1, 1, 2, 2});
  EXPECT_EQ(meet(top, top), top);
  EXPECT_EQ(meet(BracketVector::minimum(ctx), top), BracketVector::minimum(ctx));
  EXPECT_EQ(meet(top, mid), mid);
}

TEST(Meet, ContextMismatchThrows) {
  const auto a = BracketVector::minimum(tam3());
  const auto b = BracketVector::minimum(NuContext::make("ENE"));
  EXPECT_THROW(meet(a, b), std::invalid_argument);
  EXPECT_THROW(leq(a, b), std::invalid_argument);
}

TEST(Meet, SameLatticeFromDistinctContexts) {
  const auto a = vec(NuContext::make("ENENE"), {2, 0, 2, 1, 2, 2});
  const auto b = vec(NuContext::make("ENENE"), {1, 0, 1, 1, 2, 2});
  EXPECT_EQ(meet(a, b).to_ints(), (std::vector<int>{1, 0, 1, 1, 2, 2}));
}

TEST(Leq, Examples) {
  const auto ctx = tam3();
  for (const auto& v : enumerate_vectors(ctx)) EXPECT_TRUE(leq(BracketVector::minimum(ctx), v));
  EXPECT_TRUE(leq(vec(ctx, {1, 0, 1, 1, 2, 2}), vec(ctx, {2, 0, 2, 1, 2, 2})));
  // The two incomparable middle elements of the pentagon.
  const auto left = vec(ctx, {2, 0, 1, 1, 2, 2});
  const auto right = vec(ctx, {0, 0, 2, 1, 2, 2});
  EXPECT_FALSE(leq(left, right));
  EXPECT_FALSE(leq(right, left));
}

TEST(EnumerateVectors, Examples) {
  const auto ene = NuContext::make("ENE");
  std::vector<std::vector<int>> got;
  for (const auto& v : enumerate_vectors(ene)) got.push_back(v.to_ints());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{0, 0, 1, 1}, {1, 0, 1, 1}}));
  EXPECT_EQ(enumerate_vectors(tam3()).size(), 5u);
  const auto e = enumerate_vectors(NuContext::make("E"));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].to_ints(), (std::vector<int>{0, 0}));
}

TEST(EnumerateVectors, CatalanNormalization) {
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(enumerate_vectors(NuContext::make(shifted_dyck_nu(n))).size(),
              testing::catalan_closed_form(static_cast<unsigned>(n)));
}

TEST(EnumerateVectors, MatchesBruteForceFilter) {
  for (std::size_t ell = 1; ell <= 9; ++ell)
    for (const auto& nu : testing::all_paths(ell)) {
      const auto ctx = NuContext::make(nu);
      if (testing::brute_force_box_size(*ctx) > 2e5) continue;
      std::vector<std::vector<int>> got;
      for (const auto& v : enumerate_vectors(ctx)) got.push_back(v.to_ints());
      EXPECT_EQ(got, testing::brute_force_vectors(*ctx)) << nu.to_string();
    }
}

TEST(EnumerateVectors, BoundGuard) {
  EXPECT_THROW(enumerate_vectors(NuContext::make(dyck_nu(14))), BoundError);
}

TEST(Invariants, BijectionAndOrder) {
  for (const auto& nu : testing::nu_corpus(12, 20, 9)) {
    const auto ctx = NuContext::make(nu);
    const auto paths = enumerate_tam(*ctx);
    const auto vecs = enumerate_vectors(ctx);
    ASSERT_EQ(paths.size(), vecs.size());
    std::set<std::string> images;
    for (const auto& mu : paths) images.insert(path_to_vector(mu, ctx).key());
    ASSERT_EQ(images.size(), vecs.size());
    for (const auto& v : vecs) EXPECT_TRUE(images.count(v.key()));
  }
}

TEST(Invariants, OrderAgreesWithCoverClosure) {
  for (const auto& nu : testing::nu_corpus(10, 10, 21)) {
    const auto ctx = NuContext::make(nu);
    const auto paths = enumerate_tam(*ctx);
    std::vector<BracketVector> vs;
    for (const auto& mu : paths) vs.push_back(path_to_vector(mu, ctx));
    for (std::size_t a = 0; a < paths.size(); ++a) {
      const auto below = testing::down_closure(paths[a], *ctx);
      for (std::size_t b = 0; b < paths.size(); ++b)
        ASSERT_EQ(below.count(paths[b].to_string()) == 1, leq(vs[b], vs[a]))
            << paths[b].to_string() << " vs " << paths[a].to_string();
    }
  }
}

TEST(Invariants, MeetIsHasseGreatestLowerBound) {
  for (const auto& nu : testing::nu_corpus(11, 12, 31)) {
    const auto ctx = NuContext::make(nu);
    const auto paths = enumerate_tam(*ctx);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i].to_string()] = i;
    std::vector<std::vector<FinitePoset::Index>> lower(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (const auto& c : covers_down(paths[i], *ctx)) lower[i].push_back(static_cast<FinitePoset::Index>(index.at(c.to_string())));
    const auto poset = FinitePoset::from_lower_covers(lower);
    std::vector<BracketVector> vs;
    for (const auto& mu : paths) vs.push_back(path_to_vector(mu, ctx));
    for (std::size_t a = 0; a < paths.size(); ++a)
      for (std::size_t b = a; b < paths.size(); ++b) {
        const auto g = poset.meet(static_cast<FinitePoset::Index>(a), static_cast<FinitePoset::Index>(b));
        ASSERT_TRUE(g.has_value());
        ASSERT_EQ(meet(vs[a], vs[b]), vs[*g]) << nu.to_string();
      }
  }
}

TEST(Invariants, MinClosureAndBlockMonotonicity) {
  for (const auto& nu : testing::nu_corpus(12, 10, 41)) {
    const auto ctx = NuContext::make(nu);
    const auto vs = enumerate_vectors(ctx);
    const auto& f = ctx->fixed_positions();
    for (const auto& v : vs) {
      int lo = 0;
      for (int fk : f) {
        for (int i = lo; i < fk; ++i) ASSERT_GE(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
        lo = fk + 1;
      }
    }
    std::mt19937_64 rng(nu.length());
    for (int rep = 0; rep < 200 && !vs.empty(); ++rep) {
      const auto& a = vs[rng() % vs.size()];
      const auto& b = vs[rng() % vs.size()];
      std::vector<int> m(a.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(a[i], b[i]);
      ASSERT_TRUE(testing::is_bracket_vector_121(m, *ctx));
    }
  }
}

}  // namespace
}  // namespace tamaripop
