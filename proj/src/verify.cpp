#include "tamaripop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "tamaripop/bounds.hpp"
#include "tamaripop/bracket_vector.hpp"
#include "tamaripop/hasse.hpp"
#include "tamaripop/kernels/kernels.hpp"
#include "tamaripop/permutation.hpp"
#include "tamaripop/pop.hpp"
#include "tamaripop/series.hpp"

namespace tamaripop {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  Json counterexample;
};

Outcome ok(std::string detail) { return {true, std::move(detail), nullptr}; }
Outcome bad(std::string detail, Json ce) { return {false, std::move(detail), std::move(ce)}; }

struct Check {
  std::string name;
  std::function<Outcome()> body;
};

struct Params {
  int max_n = 0;
  int max_t = 0;
  std::uint64_t seed = 1;
  Json to_json(bool with_t) const {
    Json j;
    j["max_n"] = max_n;
    if (with_t) j["max_t"] = max_t;
    j["seed"] = seed;
    return j;
  }
};

constexpr int kRandomNu = 50;
constexpr int kConfluenceTrials = 1000;

std::vector<LatticePath> nu_corpus(int max_ell, std::uint64_t seed) {
  std::vector<LatticePath> out;
  for (int n = 1; 2 * n <= max_ell; ++n) out.push_back(dyck_nu(n));
  for (int n = 1; 2 * n - 1 <= max_ell; ++n) out.push_back(shifted_dyck_nu(n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, max_ell);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < kRandomNu; ++i) {
    std::vector<Step> steps(static_cast<std::size_t>(len(rng)));
    for (auto& s : steps) s = coin(rng) ? Step::N : Step::E;
    out.emplace_back(std::move(steps));
  }
  return out;
}

std::string plural(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

Json vec_ints(const BracketVector& v) { return v.to_ints(); }

// ---------------------------------------------------------------- bijection

struct Lattice {
  NuContextPtr ctx;
  std::vector<LatticePath> paths;
  std::vector<BracketVector> vecs;
  FinitePoset poset;
};

FinitePoset cover_poset(const NuContext& ctx, const std::vector<LatticePath>& paths) {
  std::map<std::string, FinitePoset::Index> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i].to_string()] = static_cast<FinitePoset::Index>(i);
  std::vector<std::vector<FinitePoset::Index>> lower(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (const auto& c : covers_down(paths[i], ctx)) lower[i].push_back(index.at(c.to_string()));
  return FinitePoset::from_lower_covers(std::move(lower));
}

Lattice build_lattice(const LatticePath& nu) {
  auto ctx = NuContext::make(nu);
  auto paths = enumerate_tam(*ctx);
  auto poset = cover_poset(*ctx, paths);
  std::vector<BracketVector> vecs;
  for (const auto& mu : paths) vecs.push_back(path_to_vector(mu, ctx));
  return {std::move(ctx), std::move(paths), std::move(vecs), std::move(poset)};
}

std::vector<Check> bijection_checks(const Params& p) {
  auto corpus = std::make_shared<std::vector<LatticePath>>(nu_corpus(p.max_n, p.seed));
  std::vector<Check> out;
  out.push_back({"bijection.round-trip", [corpus] {
                   std::size_t count = 0;
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     const auto paths = enumerate_tam(*ctx);
                     auto vecs = enumerate_vectors(ctx);
                     std::vector<BracketVector> images;
                     for (const auto& mu : paths) {
                       images.push_back(path_to_vector(mu, ctx));
                       if (vector_to_path(images.back()) != mu)
                         return bad("vector_to_path does not invert path_to_vector",
                                    {{"nu", nu.to_string()}, {"path", mu.to_string()}});
                     }
                     std::sort(images.begin(), images.end());
                     if (images != vecs)
                       return bad("path images differ from Vec(nu)",
                                  {{"nu", nu.to_string()}, {"paths", paths.size()}, {"vectors", vecs.size()}});
                     count += paths.size();
                   }
                   return ok(plural(corpus->size(), "lattices") + ", " + plural(count, "elements"));
                 }});
  out.push_back({"bijection.order-and-meet", [corpus] {
                   std::size_t pairs = 0;
                   std::vector<kernels::Word> scratch;
                   for (const auto& nu : *corpus) {
                     const auto L = build_lattice(nu);
                     const auto n = static_cast<FinitePoset::Index>(L.paths.size());
                     for (FinitePoset::Index a = 0; a < n; ++a)
                       for (FinitePoset::Index b = 0; b < n; ++b) {
                         if (L.poset.leq(a, b) != leq(L.vecs[a], L.vecs[b]))
                           return bad("vector order disagrees with cover closure",
                                      {{"nu", nu.to_string()},
                                       {"lower", L.paths[a].to_string()},
                                       {"upper", L.paths[b].to_string()}});
                         if (b < a) continue;
                         const auto g = L.poset.meet(a, b, scratch);
                         if (!g || meet(L.vecs[a], L.vecs[b]) != L.vecs[*g])
                           return bad("termwise min is not the Hasse-diagram meet",
                                      {{"nu", nu.to_string()}, {"a", L.paths[a].to_string()}, {"b", L.paths[b].to_string()}});
                         ++pairs;
                       }
                   }
                   return ok(plural(pairs, "unordered pairs"));
                 }});
  out.push_back({"bijection.covers-inverse", [corpus] {
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     std::set<std::pair<std::string, std::string>> up, down;
                     for (const auto& mu : enumerate_tam(*ctx)) {
                       for (const auto& c : covers_up(mu, *ctx)) up.emplace(mu.to_string(), c.to_string());
                       for (const auto& c : covers_down(mu, *ctx)) down.emplace(c.to_string(), mu.to_string());
                     }
                     if (up != down) return bad("covers_up and covers_down disagree", {{"nu", nu.to_string()}});
                   }
                   return ok(plural(corpus->size(), "lattices"));
                 }});
  out.push_back({"bijection.catalan", [max_ell = p.max_n] {
                   for (int n = 1; 2 * n - 1 <= max_ell; ++n) {
                     const auto size = enumerate_vectors(tamari_context(n)).size();
                     if (BigInt(size) != catalan(static_cast<unsigned>(n)))
                       return bad("|Vec(E(NE)^{n-1})| != C_n", {{"n", n}, {"size", size}});
                   }
                   return ok("n <= " + std::to_string((max_ell + 1) / 2));
                 }});
  return out;
}

// ---------------------------------------------------------------- pop-oracle

std::vector<Check> pop_oracle_checks(const Params& p) {
  auto corpus = std::make_shared<std::vector<LatticePath>>(nu_corpus(p.max_n, p.seed));
  std::vector<Check> out;
  out.push_back({"pop-oracle.generic", [corpus] {
                   std::size_t count = 0;
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     for (const auto& mu : enumerate_tam(*ctx)) {
                       const auto via_vec = vector_to_path(pop_vector(path_to_vector(mu, ctx)));
                       const auto generic = pop_generic(mu, ctx);
                       if (via_vec != generic)
                         return bad("pop_generic != pop_vector",
                                    {{"nu", nu.to_string()},
                                     {"path", mu.to_string()},
                                     {"generic", generic.to_string()},
                                     {"vector", via_vec.to_string()}});
                       ++count;
                     }
                   }
                   return ok(plural(count, "elements"));
                 }});
  out.push_back({"pop-oracle.eta", [corpus] {
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     for (const auto& v : enumerate_vectors(ctx)) {
                       const auto pv = pop_vector(v);
                       for (std::size_t i = 0; i < v.size(); ++i)
                         if (pv[i] != eta(v, i))
                           return bad("kernel Pop differs from eta", {{"nu", nu.to_string()}, {"vector", vec_ints(v)}, {"i", i}});
                     }
                   }
                   return ok(plural(corpus->size(), "lattices"));
                 }});
  out.push_back({"pop-oracle.kernels", [corpus] {
                   const auto* simd = kernels::avx2_kernels();
                   if (simd == nullptr) return ok("no SIMD kernel on this machine");
                   const auto& ref = kernels::scalar_kernels();
                   std::vector<kernels::Lane> o1, o2;
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     for (const auto& v : enumerate_vectors(ctx)) {
                       o1.assign(v.size(), 0);
                       o2.assign(v.size(), 0);
                       const bool r1 = ref.pop_eta(v.entries(), ctx->height_lanes(), ctx->fixed_lanes(), o1);
                       const bool r2 = simd->pop_eta(v.entries(), ctx->height_lanes(), ctx->fixed_lanes(), o2);
                       if (r1 != r2 || o1 != o2 || ref.descent_mask(v.entries()) != simd->descent_mask(v.entries()))
                         return bad("SIMD kernel differs from scalar reference", {{"nu", nu.to_string()}, {"vector", vec_ints(v)}});
                     }
                   }
                   return ok(std::string("scalar vs ") + simd->name);
                 }});
  out.push_back({"pop-oracle.down-covers", [corpus] {
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     for (const auto& mu : enumerate_tam(*ctx)) {
                       std::set<std::string> a, b;
                       for (const auto& c : covers_down(mu, *ctx)) a.insert(path_to_vector(c, ctx).key());
                       for (const auto& c : down_cover_candidates(path_to_vector(mu, ctx))) b.insert(c.key());
                       if (a != b)
                         return bad("down_cover_candidates differ from covers_down",
                                    {{"nu", nu.to_string()}, {"path", mu.to_string()}});
                     }
                   }
                   return ok(plural(corpus->size(), "lattices"));
                 }});
  out.push_back({"pop-oracle.block-inequality", [corpus] {
                   for (const auto& nu : *corpus) {
                     const auto ctx = NuContext::make(nu);
                     const auto& f = ctx->fixed_positions();
                     for (const auto& v : enumerate_vectors(ctx)) {
                       const auto pv = pop_vector(v);
                       int lo = -1;
                       for (int fk : f) {
                         for (int i = lo + 1; i < fk; ++i)
                           if (pv[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i) + 1])
                             return bad("Pop entry below the next entry inside a block",
                                        {{"nu", nu.to_string()}, {"vector", vec_ints(v)}, {"i", i}});
                         lo = fk;
                       }
                     }
                   }
                   return ok(plural(corpus->size(), "lattices"));
                 }});
  return out;
}

// ------------------------------------------------------- decomposition, hash

// counts[n][t] = number of (irreducible) elements of Tam_n sortable within t.
std::vector<std::vector<std::uint64_t>> sortable_counts(int max_n, int max_t, bool irreducible_only) {
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(max_n) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(max_t) + 1, 0));
  for (int n = 1; n <= max_n; ++n)
    for (const auto& v : enumerate_vectors(tamari_context(n))) {
      if (irreducible_only && !is_irreducible(v)) continue;
      const int time = sortability_time(v);
      for (int t = std::max(time, 0); t <= max_t; ++t) ++counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
    }
  return counts;
}

IntSeries counted_series(const std::vector<std::vector<std::uint64_t>>& counts, int t) {
  IntSeries s(counts.size() - 1);
  for (std::size_t n = 1; n < counts.size(); ++n) s[n] = counts[n][static_cast<std::size_t>(t)];
  return s;
}

std::vector<Check> decomposition_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"decomposition.round-trip", [p] {
                   for (int n = 1; n <= p.max_n; ++n)
                     for (const auto& v : enumerate_vectors(tamari_context(n))) {
                       const auto parts = decompose_irreducible(v);
                       for (const auto& c : parts)
                         if (!is_irreducible(c)) return bad("component is not irreducible", {{"vector", vec_ints(v)}});
                       if (sum_irreducible(parts) != v) return bad("sum of components differs", {{"vector", vec_ints(v)}});
                     }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"decomposition.sortability", [p] {
                   for (int n = 1; n <= p.max_n; ++n)
                     for (const auto& v : enumerate_vectors(tamari_context(n))) {
                       const int whole = sortability_time(v);
                       std::vector<int> times;
                       for (const auto& c : decompose_irreducible(v)) times.push_back(sortability_time(c));
                       for (int t = 0; t <= p.max_t; ++t) {
                         const bool all = std::all_of(times.begin(), times.end(), [t](int x) { return x <= t; });
                         if ((whole <= t) != all)
                           return bad("t-sortability differs from its components", {{"vector", vec_ints(v)}, {"t", t}});
                       }
                     }
                   return ok("n <= " + std::to_string(p.max_n) + ", t <= " + std::to_string(p.max_t));
                 }});
  out.push_back({"decomposition.series", [p] {
                   const auto all = sortable_counts(p.max_n, p.max_t, false);
                   const auto irr = sortable_counts(p.max_n, p.max_t, true);
                   const auto N = static_cast<std::size_t>(p.max_n);
                   for (int t = 1; t <= p.max_t; ++t) {
                     const auto lhs = add(IntSeries::one(N), counted_series(all, t));
                     if (lhs != reciprocal_one_minus(counted_series(irr, t)))
                       return bad("1 + H_t != 1/(1 - G_t) on counted coefficients", {{"t", t}});
                   }
                   return ok("orders <= " + std::to_string(p.max_n));
                 }});
  return out;
}

std::vector<Check> hash_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"hash.monotone", [p] {
                   for (int n = 2; n <= p.max_n; ++n)
                     for (const auto& v : enumerate_vectors(tamari_context(n)))
                       if (sortability_time(hash_map(v)) > sortability_time(v))
                         return bad("hash image sorts slower", {{"vector", vec_ints(v)}});
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"hash.bijection", [p] {
                   for (int n = 2; n <= p.max_n; ++n) {
                     std::set<std::string> images;
                     for (const auto& v : enumerate_vectors(tamari_context(n)))
                       if (is_irreducible(v) && !images.insert(hash_map(v).key()).second)
                         return bad("hash map not injective on irreducibles", {{"vector", vec_ints(v)}});
                     if (images.size() != enumerate_vectors(tamari_context(n - 1)).size())
                       return bad("hash map not onto Vec(E(NE)^{n-2})", {{"n", n}, {"images", images.size()}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"hash.threshold", [p] {
                   for (int n = 2; n <= p.max_n; ++n)
                     for (const auto& v : enumerate_vectors(tamari_context(n))) {
                       if (!is_irreducible(v)) continue;
                       const auto h = hash_map(v);
                       const int x = static_cast<int>(decompose_irreducible(h).back().size() / 2);
                       const int tv = sortability_time(v), th = sortability_time(h);
                       for (int t = 1; t <= p.max_t; ++t)
                         if ((tv <= t) != (th <= t && t >= (n - 1) - x + 1))
                           return bad("irreducible sortability threshold fails", {{"vector", vec_ints(v)}, {"t", t}});
                     }
                   return ok("n <= " + std::to_string(p.max_n) + ", t <= " + std::to_string(p.max_t));
                 }});
  out.push_back({"hash.species", [p] {
                   const auto all = sortable_counts(p.max_n, p.max_t, false);
                   const auto irr = sortable_counts(p.max_n, p.max_t, true);
                   const auto N = static_cast<std::size_t>(p.max_n);
                   for (int t = 1; t <= p.max_t; ++t) {
                     const auto g = counted_series(irr, t);
                     IntSeries h_tilde(N);
                     for (std::size_t n = 1; n < static_cast<std::size_t>(t) && n <= N; ++n) h_tilde[n] = all[n][static_cast<std::size_t>(t)];
                     const auto rhs = multiply(IntSeries::monomial(N, 1),
                                               add(multiply(add(IntSeries::one(N), h_tilde), g), IntSeries::one(N)));
                     if (g != rhs) return bad("G_t != z((1 + H~_t) G_t + 1) on counted coefficients", {{"t", t}});
                   }
                   return ok("orders <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"hash.manypops", [p] {
                   for (int n = 1; n <= p.max_n; ++n) {
                     const auto census = sortability_census(n);
                     for (int t = n; t <= std::max(n, p.max_t); ++t)
                       if (BigInt(census.sortable_within(t)) != catalan(static_cast<unsigned>(n)))
                         return bad("some element of Tam_n needs more than n steps", {{"n", n}, {"t", t}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  return out;
}

// ---------------------------------------------------------------- theorem-1

std::vector<Check> theorem1_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"theorem-1.census", [p] {
                   const auto N = static_cast<std::size_t>(p.max_n);
                   for (int n = 1; n <= p.max_n; ++n) {
                     const auto census = sortability_census(n);
                     for (int t = 1; t <= p.max_t; ++t) {
                       const BigInt want = h_series(t, N)[static_cast<std::size_t>(n)];
                       if (BigInt(census.sortable_within(t)) != want)
                         return bad("census differs from h_series",
                                    {{"n", n}, {"t", t}, {"census", census.sortable_within(t)}, {"series", want.str()}});
                     }
                   }
                   return ok("n <= " + std::to_string(p.max_n) + ", t <= " + std::to_string(p.max_t));
                 }});
  out.push_back({"theorem-1.rational", [p] {
                   const int tmax = std::max(6, p.max_t);
                   for (int t = 1; t <= tmax; ++t)
                     if (h_series(t, 25) != h_series_rational(t, 25))
                       return bad("recurrence and rational expansion differ", {{"t", t}});
                   return ok("order 25, t <= " + std::to_string(tmax));
                 }});
  out.push_back({"theorem-1.series-identities", [p] {
                   const int tmax = std::max(6, p.max_t);
                   const std::size_t N = 25;
                   for (int t = 1; t <= tmax; ++t) {
                     const auto g = g_series(t, N);
                     if (add(IntSeries::one(N), h_series(t, N)) != reciprocal_one_minus(g))
                       return bad("1 + H_t != 1/(1 - G_t)", {{"t", t}});
                     const auto rhs = multiply(IntSeries::monomial(N, 1),
                                               add(multiply(add(IntSeries::one(N), h_tilde_series(t, N)), g), IntSeries::one(N)));
                     if (g != rhs) return bad("G_t != z((1 + H~_t) G_t + 1)", {{"t", t}});
                   }
                   return ok("order 25, t <= " + std::to_string(tmax));
                 }});
  return out;
}

// ------------------------------------------------------ permutation suites

Json perm_json(const Permutation& q) { return q.to_string(); }

std::vector<Check> congruence_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"congruence.pop", [p] {
                   for (int n = 1; n <= p.max_n; ++n) {
                     std::map<Permutation, BracketVector> iso;
                     try {
                       iso = tamari_perm_bijection(n);
                     } catch (const std::logic_error& e) {
                       return bad(std::string("isomorphism construction failed: ") + e.what(), {{"n", n}});
                     }
                     for (const auto& [q, v] : iso)
                       if (iso.at(pop_tamari_perm(q)) != pop_vector(v))
                         return bad("permutation Pop differs from vector Pop", {{"perm", perm_json(q)}, {"vector", vec_ints(v)}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"congruence.confluence", [p] {
                   std::mt19937_64 rng(p.seed);
                   const int top = std::min(p.max_n, 7);
                   for (int n = 1; n <= top; ++n) {
                     const auto all = enumerate_permutations(n);
                     for (int trial = 0; trial < kConfluenceTrials; ++trial) {
                       const auto& q = all[rng() % all.size()];
                       if (pi_down_random(q, rng) != pi_down(q))
                         return bad("swap order changes the class minimum", {{"perm", perm_json(q)}, {"trial", trial}});
                     }
                   }
                   return ok(std::to_string(kConfluenceTrials) + " trials per n <= " + std::to_string(top));
                 }});
  out.push_back({"congruence.pi-down-avoids-312", [p] {
                   const int top = std::min(p.max_n, 8);
                   for (int n = 1; n <= top; ++n)
                     for (const auto& q : enumerate_permutations(n))
                       if (!avoids(pi_down(q), Pattern::P312)) return bad("pi_down output contains 312", {{"perm", perm_json(q)}});
                   return ok("n <= " + std::to_string(top));
                 }});
  return out;
}

std::set<Permutation> perm_pop_image(int n) {
  std::set<Permutation> image;
  for (const auto& q : enumerate_av312(n)) image.insert(pop_tamari_perm(q));
  return image;
}

std::vector<Check> characterization_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"characterization.image", [p] {
                   for (int n = 1; n <= p.max_n; ++n) {
                     const auto image = perm_pop_image(n);
                     const auto shape = image_by_characterization(n);
                     if (std::set<Permutation>(shape.begin(), shape.end()) != image) {
                       Json ce{{"n", n}};
                       for (const auto& q : shape)
                         if (!image.count(q)) {
                           ce["only_in_characterization"] = perm_json(q);
                           break;
                         }
                       for (const auto& q : image)
                         if (!has_image_shape(q)) {
                           ce["only_in_image"] = perm_json(q);
                           break;
                         }
                       return bad("Pop image differs from the characterization", ce);
                     }
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"characterization.motzkin", [p] {
                   for (int n = 1; n <= p.max_n; ++n) {
                     const auto size = image_by_characterization(n).size();
                     if (BigInt(size) != motzkin(static_cast<unsigned>(n - 1)))
                       return bad("characterized set size is not M_{n-1}", {{"n", n}, {"size", size}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  return out;
}

std::vector<Check> theorem2_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"theorem-2.size", [p] {
                   for (int n = 1; n <= p.max_n; ++n) {
                     const auto size = pop_image(n).size();
                     if (BigInt(size) != motzkin(static_cast<unsigned>(n - 1)))
                       return bad("|Pop(Tam_n)| != M_{n-1}", {{"n", n}, {"size", size}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"theorem-2.qpoly", [p] {
                   for (int m = 1; m <= p.max_n; ++m) {
                     const int n = m - 1;
                     const auto poly = pop_polynomial(m);
                     std::uint64_t covered = 0;
                     for (int k = 0; 2 * k <= n; ++k) {
                       const auto it = poly.coeffs.find(n - k);
                       const std::uint64_t got = it == poly.coeffs.end() ? 0 : it->second;
                       covered += got;
                       if (BigInt(got) != a055151(n, k))
                         return bad("q-polynomial coefficient differs", {{"n", n}, {"k", k}, {"count", got}, {"formula", a055151(n, k).str()}});
                     }
                     if (covered != poly.image_size())
                       return bad("q-polynomial has exponents outside n-k", {{"n", n}});
                   }
                   return ok("Tam_m for m <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"theorem-2.ascent-histogram", [p] {
                   const int top = std::min(p.max_n, static_cast<int>(max_perm_n()));
                   for (int n = 1; n <= top; ++n) {
                     std::map<int, std::uint64_t> hist;
                     for (const auto& q : image_by_characterization(n)) ++hist[ascent_count(q)];
                     if (hist != pop_polynomial(n).coeffs)
                       return bad("ascent histogram differs from the up-cover histogram", {{"n", n}});
                   }
                   return ok("n <= " + std::to_string(top));
                 }});
  return out;
}

std::vector<Check> petersen_checks(const Params& p) {
  std::vector<Check> out;
  out.push_back({"petersen.counts", [p] {
                   for (int n = 0; n <= p.max_n; ++n)
                     for (int k = 0; 2 * k <= n + 1; ++k) {
                       const auto got = count_231_equal_descents_peaks(n, k);
                       if (BigInt(got) != a055151(n, k))
                         return bad("descent=peak count differs", {{"n", n}, {"k", k}, {"count", got}, {"formula", a055151(n, k).str()}});
                     }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  out.push_back({"petersen.r-map", [p] {
                   for (int n = 0; n <= p.max_n; ++n) {
                     std::set<Permutation> mapped;
                     for (const auto& q : image_by_characterization(n + 1)) {
                       const auto r = r_map(q);
                       if (ascent_count(q) != n - descent_count(r))
                         return bad("up-cover count is not n - k", {{"perm", perm_json(q)}});
                       mapped.insert(r);
                     }
                     std::set<Permutation> target;
                     for (const auto& q : enumerate_permutations(n + 1)) {
                       const auto s = perm_stats(q);
                       if (avoids(q, Pattern::P231) && s.descent_positions.size() == s.peak_positions.size()) target.insert(q);
                     }
                     if (mapped != target) return bad("r does not land on the descent=peak class", {{"n", n}});
                   }
                   return ok("n <= " + std::to_string(p.max_n));
                 }});
  return out;
}

// ------------------------------------------------------------------ driver

struct SuiteSpec {
  std::string name;
  int default_n;
  int default_t;
  bool uses_t;
  std::function<void(const Params&)> guard;
  std::function<std::vector<Check>(const Params&)> checks;
};

void guard_ell(std::size_t ell, const char* what) { check_ell_bound(ell, {}, what); }
void guard_perm(int n, const char* what) { check_perm_bound(static_cast<std::size_t>(std::max(n, 0)), {}, what); }

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> table{
      {"bijection", 14, 0, false, [](const Params& p) { guard_ell(static_cast<std::size_t>(p.max_n), "bijection"); },
       bijection_checks},
      {"pop-oracle", 12, 0, false, [](const Params& p) { guard_ell(static_cast<std::size_t>(p.max_n), "pop-oracle"); },
       pop_oracle_checks},
      {"decomposition", 8, 4, true, [](const Params& p) { guard_ell(static_cast<std::size_t>(2 * p.max_n - 1), "decomposition"); },
       decomposition_checks},
      {"hash", 8, 4, true, [](const Params& p) { guard_ell(static_cast<std::size_t>(2 * p.max_n - 1), "hash"); }, hash_checks},
      {"theorem-1", 11, 5, true, [](const Params& p) { guard_ell(static_cast<std::size_t>(2 * p.max_n - 1), "theorem-1"); },
       theorem1_checks},
      {"congruence", 8, 0, false, [](const Params& p) { guard_perm(p.max_n, "congruence"); }, congruence_checks},
      {"characterization", 9, 0, false, [](const Params& p) { guard_perm(p.max_n, "characterization"); },
       characterization_checks},
      {"theorem-2", 11, 0, false, [](const Params& p) { guard_ell(static_cast<std::size_t>(2 * p.max_n - 1), "theorem-2"); },
       theorem2_checks},
      {"petersen", 8, 0, false, [](const Params& p) { guard_perm(p.max_n + 1, "petersen"); }, petersen_checks},
  };
  return table;
}

Params resolve(const SuiteSpec& s, const VerifyOptions& opts) {
  Params p{opts.max_n.value_or(s.default_n), opts.max_t.value_or(s.default_t), opts.seed};
  if (p.max_n < 1) throw std::invalid_argument("verify: --max-n must be at least 1");
  if (s.uses_t && p.max_t < 1) throw std::invalid_argument("verify: --max-t must be at least 1");
  s.guard(p);
  return p;
}

CheckResult run_check(const Check& c) {
  CheckResult r;
  r.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto o = c.body();
    r.passed = o.ok;
    r.detail = std::move(o.detail);
    r.counterexample = std::move(o.counterexample);
  } catch (const BoundError&) {
    throw;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_all(const std::vector<Check>& checks) {
  std::vector<std::future<CheckResult>> futures;
  futures.reserve(checks.size());
  for (const auto& c : checks) futures.push_back(std::async(std::launch::async, run_check, std::cref(c)));
  std::vector<CheckResult> results;
  for (auto& f : futures) results.push_back(f.get());
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return results;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    out.push_back("all");
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = std::string(name);
  std::vector<Check> checks;
  if (name == "all") {
    report.parameters = Json::object();
    for (const auto& s : suites()) {
      const auto p = resolve(s, opts);
      report.parameters[s.name] = p.to_json(s.uses_t);
      for (auto& c : s.checks(p)) checks.push_back(std::move(c));
    }
  } else {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const SuiteSpec& s) { return s.name == name; });
    if (it == suites().end()) throw std::invalid_argument("verify: unknown suite \"" + std::string(name) + "\"");
    const auto p = resolve(*it, opts);
    report.parameters = p.to_json(it->uses_t);
    checks = it->checks(p);
  }
  report.checks = run_all(checks);
  return report;
}

Json report_to_json(const VerificationReport& report, bool timings) {
  Json j;
  j["suite"] = report.suite;
  j["parameters"] = report.parameters;
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["detail"] = c.detail;
    if (!c.passed) e["counterexample"] = c.counterexample;
    if (timings) e["wall_ms"] = c.wall_ms;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace tamaripop
