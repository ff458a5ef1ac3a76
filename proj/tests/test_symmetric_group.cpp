#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace fermisep;
using testutil::make_rng;

TEST_CASE("enumerate_sn sizes and signs") {
  const auto s1 = enumerate_sn(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].is_identity());
  CHECK(s1[0].sign == 1);

  const auto s2 = enumerate_sn(2);
  REQUIRE(s2.size() == 2);
  int minus = 0;
  for (const auto& p : s2)
    if (p.sign == -1) ++minus;
  CHECK(minus == 1);

  const auto s4 = enumerate_sn(4);
  REQUIRE(s4.size() == 24);
  CHECK(std::count_if(s4.begin(), s4.end(),
                      [](const Permutation& p) { return p.sign == 1; }) == 12);

  CHECK_THROWS_AS(enumerate_sn(0), DomainError);
  CHECK_THROWS_AS(enumerate_sn(9), DomainError);
}

TEST_CASE("sign is a homomorphism") {
  auto rng = make_rng(21);
  const auto group = enumerate_sn(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation& a = group[rng() % group.size()];
    const Permutation& b = group[rng() % group.size()];
    CHECK(compose(a, b).sign == a.sign * b.sign);
  }
}

TEST_CASE("composition and inverse") {
  const auto group = enumerate_sn(4);
  auto rng = make_rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation& a = group[rng() % group.size()];
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
  }
}

TEST_CASE("dense permutation operators compose correctly") {
  auto rng = make_rng(23);
  for (int n = 2; n <= 4; ++n) {
    const auto group = enumerate_sn(n);
    for (int d = 2; d <= 3; ++d) {
      for (int trial = 0; trial < 4; ++trial) {
        const Permutation& a = group[rng() % group.size()];
        const Permutation& b = group[rng() % group.size()];
        const Matrix pa = dense(permutation_operator(a, d), n).entries;
        const Matrix pb = dense(permutation_operator(b, d), n).entries;
        const Matrix pab = dense(permutation_operator(compose(a, b), d), n).entries;
        CHECK(testutil::max_abs(pa * pb - pab) < 1e-14);
      }
    }
  }
}

TEST_CASE("permutation operator matches the defining action") {
  // identity
  const StateVector v = basis_state(2, 3, {1, 0, 1});
  const Permutation id = make_permutation({0, 1, 2});
  CHECK((apply(permutation_operator(id, 2), v).amplitudes - v.amplitudes).norm() <
        1e-15);

  // transposition on |0>|1>
  const Permutation swap = make_permutation({1, 0});
  const StateVector swapped =
      apply(permutation_operator(swap, 2), basis_state(2, 2, {0, 1}));
  CHECK(std::abs(swapped.amplitudes[encode_index(MultiIndex{{1, 0}}, 2, 2)] - 1.0) <
        1e-15);

  // 3-cycle against the dense oracle, all basis kets
  const Permutation cycle = make_permutation({1, 2, 0});
  const Matrix oracle = testutil::dense_permutation_oracle(cycle, 2, 3);
  CHECK(testutil::max_abs(dense(permutation_operator(cycle, 2), 3).entries - oracle) <
        1e-15);

  // pi_sigma . pi_{sigma^-1} = identity, densely
  const Matrix p = dense(permutation_operator(cycle, 2), 3).entries;
  const Matrix pinv = dense(permutation_operator(inverse(cycle), 2), 3).entries;
  CHECK(testutil::max_abs(p * pinv - Matrix::Identity(8, 8)) < 1e-15);
}

TEST_CASE("partition construction and validation") {
  const Partition gamma = make_partition({{1, 2}, {3}}, 3);
  CHECK(gamma.num_blocks() == 2);
  CHECK(gamma.multinomial() == 3);
  CHECK(make_partition({{1}, {2}}, 2).multinomial() == 2);
  CHECK(make_partition({{1, 2, 3, 4}}, 4).multinomial() == 1);

  CHECK_THROWS_AS(make_partition({{1, 2}, {2, 3}}, 3), DomainError);  // overlap
  CHECK_THROWS_AS(make_partition({{1, 2}}, 3), DomainError);          // not a cover
  CHECK_THROWS_AS(make_partition({{1}, {}}, 1), DomainError);         // empty block
  CHECK_THROWS_AS(make_partition({{0, 1}}, 2), DomainError);          // bad label
}

TEST_CASE("partition image under a permutation") {
  const Partition gamma = make_partition({{1}, {2}}, 2);
  const Permutation swap = make_permutation({1, 0});
  const Partition swapped = act_on_partition(swap, gamma);
  CHECK(swapped.blocks[0] == std::vector<int>{2});
  CHECK(swapped.blocks[1] == std::vector<int>{1});

  const Partition g2 = make_partition({{1, 2}, {3}}, 3);
  const Permutation t13 = make_permutation({2, 1, 0});
  const Partition img = act_on_partition(t13, g2);
  CHECK(img.blocks[0] == std::vector<int>{2, 3});
  CHECK(img.blocks[1] == std::vector<int>{1});

  const Permutation id3 = make_permutation({0, 1, 2});
  CHECK(act_on_partition(id3, g2) == g2);
}

TEST_CASE("blockwise stabilizer cardinality") {
  CHECK(stabilizer(make_partition({{1}, {2}, {3}}, 3)).size() == 1);
  CHECK(stabilizer(make_partition({{1, 2}, {3}}, 3)).size() == 2);

  // Equal-size blocks: the block exchange (1 3)(2 4) fixes Gamma as a set
  // but not blockwise, so it must be excluded.
  const auto stab = stabilizer(make_partition({{1, 2}, {3, 4}}, 4));
  CHECK(stab.size() == 4);
  for (const auto& sigma : stab) {
    CHECK((sigma.images[0] == 0 || sigma.images[0] == 1));
    CHECK((sigma.images[2] == 2 || sigma.images[2] == 3));
  }

  for (const auto& gamma : testutil::all_partitions(4)) {
    long expected = 1;
    for (const auto& block : gamma.blocks)
      for (size_t i = 2; i <= block.size(); ++i) expected *= static_cast<long>(i);
    CHECK(static_cast<long>(stabilizer(gamma).size()) == expected);
  }
}

TEST_CASE("coset representatives form an exact transversal") {
  CHECK(coset_representatives(make_partition({{1, 2, 3}}, 3)).size() == 1);
  CHECK(coset_representatives(make_partition({{1}, {2}}, 2)).size() == 2);
  CHECK(coset_representatives(make_partition({{1, 2}, {3}}, 3)).size() == 3);

  for (const auto& gamma : testutil::all_partitions(4)) {
    const auto reps = coset_representatives(gamma);
    CHECK(static_cast<long>(reps.size()) == gamma.multinomial());

    const auto stab = stabilizer(gamma);
    std::set<std::vector<int>> covered;
    for (const auto& rep : reps) {
      for (const auto& rho : stab) {
        const auto member = compose(rep, rho).images;
        CHECK(covered.insert(member).second);  // no element hit twice
        // representative is the lexicographically least coset member
        CHECK(!(member < rep.images));
      }
    }
    CHECK(covered.size() == 24);
  }
}
