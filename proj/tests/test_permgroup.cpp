#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "geodex/autsearch.hpp"
#include "geodex/constructions.hpp"
#include "geodex/permgroup.hpp"
#include "geodex/permgroup_io.hpp"
#include "geodex/tuple_orbit.hpp"
#include "geodex/walks.hpp"
#include "oracles.hpp"

using namespace geodex;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Vertex>> cycles) { return Permutation::from_cycles(n, cycles); }

PermGroup sym(std::size_t n) {
  std::vector<Vertex> long_cycle(n);
  std::iota(long_cycle.begin(), long_cycle.end(), 0U);
  return schreier_sims({cyc(n, {{0, 1}}), cyc(n, {long_cycle})});
}

PermGroup dihedral(std::size_t n) {
  std::vector<Vertex> rot(n), refl(n);
  for (Vertex i = 0; i < n; ++i) {
    rot[i] = static_cast<Vertex>((i + 1) % n);
    refl[i] = static_cast<Vertex>((n - i) % n);
  }
  return schreier_sims({Permutation(rot), Permutation(refl)});
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::Overflow;
}

}  // namespace

TEST(Permutation, Basics) {
  const auto p = cyc(5, {{0, 1, 2}});
  EXPECT_EQ(p(0), 1U);
  EXPECT_EQ(p(2), 0U);
  EXPECT_TRUE(p.fixes(4));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  // (p*q)(x) = q(p(x))
  const auto q = cyc(5, {{1, 3}});
  EXPECT_EQ((p * q)(0), 3U);
  EXPECT_EQ(p.to_string(), "(0 1 2)");
  EXPECT_EQ(code_of([] { Permutation(std::vector<Vertex>{0, 0, 1}); }), Errc::InvalidPermutation);
  EXPECT_EQ(code_of([&] { (void)(p * Permutation(4)); }), Errc::DegreeMismatch);
}

TEST(Orbits, Examples) {
  const PermGroup c5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(orbit(c5, 0).size(), 5U);
  const PermGroup triv(5, {Permutation(5)});
  EXPECT_EQ(orbit(triv, 3), std::vector<Vertex>{3});
  EXPECT_EQ(orbit(automorphism_group(petersen()), 7).size(), 10U);

  EXPECT_EQ(orbit_partition(PermGroup(4, {Permutation(4)})).size(), 4U);
  const auto p = orbit_partition(PermGroup(4, {cyc(4, {{0, 1}, {2, 3}})}));
  EXPECT_EQ(p.cells, (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));

  std::vector<Vertex> comp(8);
  for (Vertex v = 0; v < 8; ++v) comp[v] = v ^ 7U;
  const auto anti = orbit_partition(PermGroup(8, {Permutation(comp)}));
  EXPECT_EQ(anti.size(), 4U);
  EXPECT_TRUE(anti.uniform());
}

TEST(SchreierSims, Orders) {
  EXPECT_EQ(schreier_sims({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}).order(), 6U);
  EXPECT_EQ(sym(10).order(), 3628800U);
  EXPECT_EQ(dihedral(7).order(), 14U);
  EXPECT_EQ(group_order(automorphism_group(petersen())), 120U);
  EXPECT_EQ(group_order(automorphism_group(hoffman_singleton())), 252000U);
  EXPECT_EQ(code_of([] { schreier_sims({}); }), Errc::ParameterOutOfRange);
}

TEST(SchreierSims, MembershipAndOverflow) {
  const auto s5 = sym(5);
  const auto a = cyc(5, {{0, 4}, {1, 2}});
  EXPECT_TRUE(s5.contains(a));
  const auto d5 = dihedral(5);
  EXPECT_FALSE(d5.contains(cyc(5, {{0, 1}})));
  EXPECT_TRUE(d5.contains(cyc(5, {{1, 4}, {2, 3}})));
  // |S_21| > 2^64
  EXPECT_EQ(code_of([] { (void)sym(21).order(); }), Errc::Overflow);
}

TEST(SchreierSims, RandomAgainstClosure) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vertex> img(n);
      std::iota(img.begin(), img.end(), 0U);
      // sparse permutations give a spread of group sizes
      for (std::size_t s = 0, swaps = 1 + rng() % 2; s < swaps; ++s) std::swap(img[rng() % n], img[rng() % n]);
      if (rng() % 2) std::rotate(img.begin(), img.begin() + 1, img.begin() + static_cast<long>(2 + rng() % (n - 1)));
      gens.emplace_back(img);
    }
    const auto G = schreier_sims(gens);
    const auto elements = oracle::group_elements(n, gens);
    ASSERT_EQ(G.order(), elements.size()) << "trial " << trial;
    // membership agrees on every permutation of the point set
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0U);
    do {
      ASSERT_EQ(G.contains(Permutation(p)), elements.count(p) == 1);
    } while (std::next_permutation(p.begin(), p.end()));
    // orbit-stabilizer at every point
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(stabilizer(G, v).order() * orbit(G, v).size(), G.order());
  }
}

TEST(SchreierSims, BasePrefixRespected) {
  const std::vector<Vertex> prefix{4, 2};
  const auto G = schreier_sims(sym(6).generators(), prefix);
  ASSERT_GE(G.bsgs().base.size(), 2U);
  EXPECT_EQ(G.bsgs().base[0], 4U);
  EXPECT_EQ(G.bsgs().base[1], 2U);
  EXPECT_EQ(G.order(), 720U);
}

TEST(Stabilizers, Examples) {
  EXPECT_EQ(stabilizer(sym(3), 0).order(), 2U);
  const auto aut = automorphism_group(petersen());
  for (Vertex v : {0U, 5U, 9U}) EXPECT_EQ(stabilizer(aut, v).order(), 12U);
  EXPECT_EQ(stabilizer(automorphism_group(hoffman_singleton()), 0).order(), 5040U);
  const std::vector<Vertex> pts{0, 1};
  const auto ps = pointwise_stabilizer(sym(5), pts);
  EXPECT_EQ(ps.order(), 6U);
  for (const auto& g : ps.generators()) {
    EXPECT_TRUE(g.fixes(0));
    EXPECT_TRUE(g.fixes(1));
  }
}

TEST(TupleOrbits, CycleArcs) {
  const auto c5 = cycle(5);
  const PermGroup rot(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  const std::vector<Vertex> seed{0, 1};
  const auto r = tuple_orbit(rot, seed, enumerate_s_arcs(c5, 1));
  EXPECT_FALSE(r.covers);
  EXPECT_EQ(r.orbit_size, 5U);
  EXPECT_EQ(r.universe_size, 10U);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(c5.adjacent((*r.witness)[0], (*r.witness)[1]), true);
  EXPECT_TRUE(tuple_orbit_covers(dihedral(5), seed, enumerate_s_arcs(c5, 1)));
}

TEST(TupleOrbits, HammingGeodesics) {
  const auto h = hamming_2(3);
  const auto aut = automorphism_group(h);
  const std::vector<Vertex> seed{0, 1, 3, 7};
  EXPECT_TRUE(tuple_orbit_covers(aut, seed, enumerate_s_geodesics(h, 3)));
  EXPECT_EQ(code_of([&] { tuple_orbit(aut, std::vector<Vertex>{0, 9}, enumerate_s_arcs(h, 1)); }), Errc::SeedNotInUniverse);
  EXPECT_EQ(code_of([&] { tuple_orbit(aut, seed, enumerate_s_geodesics(h, 3), 10); }), Errc::TupleBudgetExceeded);
}

TEST(TupleOrbits, AgreeWithExplicitGroup) {
  // a group on 6 points whose pair orbits are not all the same size
  const std::vector<Permutation> gens{cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}})};
  const PermGroup G(6, gens);
  const auto elements = oracle::group_elements(6, gens);
  std::vector<std::vector<Vertex>> pairs;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      if (a != b) pairs.push_back({a, b});
  for (const auto& seed : pairs) {
    const auto r = tuple_orbit(G, seed, VectorTupleStream(pairs));
    EXPECT_EQ(r.orbit_size, oracle::tuple_orbit(elements, seed).size());
    EXPECT_FALSE(r.covers);
  }
}

TEST(Blocks, Systems) {
  const PermGroup c4(4, {cyc(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(minimal_block_system(c4, 0, 2).cells, (std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(minimal_block_system(sym(4), 0, 3).size(), 1U);

  const auto h = hamming_2(3);
  const auto blocks = minimal_block_system(automorphism_group(h), 0, 7);
  EXPECT_EQ(blocks.size(), 4U);
  for (const auto& c : blocks.cells) EXPECT_EQ(c[0] ^ c[1], 7U);

  EXPECT_EQ(code_of([] { minimal_block_system(PermGroup(3, {cyc(3, {{0, 1}})}), 0, 1); }), Errc::NotTransitive);
}

TEST(Blocks, Primitivity) {
  const auto s3 = sym(3);
  EXPECT_TRUE(is_primitive(s3));
  EXPECT_TRUE(is_two_transitive(s3));
  EXPECT_TRUE(is_two_primitive(s3));
  EXPECT_FALSE(is_primitive(dihedral(4)));
  EXPECT_FALSE(is_two_transitive(dihedral(5)));
  EXPECT_TRUE(is_primitive(dihedral(5)));
  EXPECT_EQ(transitivity_degree(sym(6)), 6U);
  EXPECT_EQ(transitivity_degree(dihedral(6)), 1U);
  // A_5 is 3-transitive
  const auto a5 = schreier_sims({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(a5.order(), 60U);
  EXPECT_EQ(transitivity_degree(a5), 3U);
}

TEST(InducedActions, Examples) {
  const auto s3 = sym(3);
  EXPECT_TRUE(action_on_set(s3, {0, 1, 2}).faithful);
  const PermGroup g(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{2, 3}})});
  const auto a = action_on_set(g, {0, 1});
  EXPECT_EQ(a.image.order(), 2U);
  EXPECT_EQ(a.kernel_order, 2U);
  EXPECT_FALSE(a.faithful);
  EXPECT_EQ(code_of([&] { action_on_set(g, {0, 2}); }), Errc::SetNotInvariant);

  const auto hs = hoffman_singleton();
  const auto stab = stabilizer(automorphism_group(hs), 0);
  const auto local = action_on_set(stab, hs.neighbor_list(0));
  EXPECT_EQ(local.image.order(), 5040U);
  EXPECT_TRUE(local.faithful);
}

TEST(GroupIo, RoundTripAndCycles) {
  const auto aut = automorphism_group(petersen());
  std::stringstream ss;
  write_group(ss, aut);
  const auto back = read_group(ss);
  EXPECT_EQ(group_order(back), 120U);

  const auto j = nlohmann::json::parse(R"({"degree": 4, "generators": [[[0, 1, 2, 3]], [1, 0, 2, 3]]})");
  EXPECT_EQ(group_order(group_from_json(j)), 24U);
  EXPECT_EQ(code_of([] { group_from_json(nlohmann::json::parse(R"({"degree": 3, "generators": [[0, 1]]})")); }),
            Errc::DegreeMismatch);
  EXPECT_EQ(code_of([] { group_from_json(nlohmann::json::parse(R"({"generators": []})")); }), Errc::ParseError);
  std::istringstream bad("{nope");
  EXPECT_EQ(code_of([&] { read_group(bad); }), Errc::ParseError);
}

TEST(GroupIo, DataFile) {
  std::ifstream in(std::string(GEODEX_DATA_DIR) + "/petersen_aut.json");
  ASSERT_TRUE(in);
  const auto G = read_group(in);
  EXPECT_EQ(group_order(G), 120U);
  for (const auto& g : G.generators()) EXPECT_TRUE(is_automorphism(petersen(), g));
}
