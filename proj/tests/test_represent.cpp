#include <doctest.h>

#include <random>

#include "hermlat/represent.hpp"
#include "grids.hpp"
#include "support.hpp"

using namespace hermlat;
using support::gram;
using support::lat;

TEST_SUITE("represent") {
  TEST_CASE("examples") {
    Field f1 = Field::make(1), f2 = Field::make(2), f5 = Field::make(5);
    auto w = represents(lat(f1, "[[2,1],[1,2]]"), HermLattice::diagonal(f1, {1, 1, 1}));
    REQUIRE(w);
    CHECK(verify_witness(f1, gram(f1, "[[2,1],[1,2]]"), AlgMatrix::diagonal({1, 1, 1}), w->rows));
    CHECK(verify_witness(f1, gram(f1, "[[2,1],[1,2]]"), AlgMatrix::diagonal({1, 1, 1}),
                         AlgMatrix{{1, 1, 0}, {0, 1, 1}}));
    CHECK_FALSE(represents(HermLattice::diagonal(f5, {1, 3}), HermLattice::diagonal(f5, {1, 1, 1})));
    CHECK_FALSE(represents(lat(f2, "[[2,1],[1,2]]"), HermLattice::diagonal(f2, {1, 1})));
    Field f7 = Field::make(7);
    CHECK(represents(HermLattice::diagonal(f7, {1, 3}), HermLattice::diagonal(f7, {1, 1, 1})));
  }

  TEST_CASE("verify_witness rejects any perturbed entry") {
    Field f1 = Field::make(1);
    AlgMatrix target = gram(f1, "[[2,1],[1,2]]"), g = AlgMatrix::diagonal({1, 1, 1});
    AlgMatrix x{{1, 1, 0}, {0, 1, 1}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        AlgMatrix y = x;
        y(i, j) += AlgInt(1);
        CHECK_FALSE(verify_witness(f1, target, g, y));
      }
    CHECK_THROWS_AS(verify_witness(f1, target, g, AlgMatrix{{1, 1}, {0, 1}}), Error);
  }

  TEST_CASE("isometry") {
    Field f1 = Field::make(1), f11 = Field::make(11);
    CHECK(is_isometric(HermLattice::diagonal(f1, {1, 2}), HermLattice::diagonal(f1, {2, 1})));
    CHECK_FALSE(is_isometric(HermLattice::diagonal(f1, {1, 1}), HermLattice::diagonal(f1, {1, 2})));
    // -1 + w = -conj(w) over Q(sqrt(-11)), so swapping and negating one basis
    // vector maps one Gram to the other.
    HermLattice x = lat(f11, "[[2,\"w\"],[\"1-w\",2]]"), y = lat(f11, "[[2,\"-1+w\"],[\"-w\",2]]");
    CHECK(is_isometric(x, y));
    CHECK(oracle::isometric_binary(f11, x.gram(), y.gram()));
    CHECK(verify_witness(f11, y.gram(), x.gram(), AlgMatrix{{0, -1}, {1, 0}}));
  }

  TEST_CASE("represents agrees with the double-loop oracle") {
    auto r = grids::represents_grid();
    MESSAGE(grids::describe(r));
    CHECK(r.ok());
  }

  TEST_CASE("witnesses compose") {
    std::mt19937 rng(19);
    for (std::int64_t m : {1, 2, 3, 7}) {
      Field f = Field::make(m);
      HermLattice big = HermLattice::make(f, oracle::random_definite(f, rng, 3, 2, 1));
      for (int k = 0; k < 10; ++k) {
        // A sublattice spanned by two vectors of big, and a binary inside it.
        auto v1 = vectors_of_norm(big, 1 + k % 3), v2 = vectors_of_norm(big, 2 + k % 2);
        if (v1.empty() || v2.empty()) continue;
        AlgMatrix mid = gram_of(big, {v1[k % v1.size()], v2[(3 * k) % v2.size()]});
        if (is_positive(f, mid).kind != Positivity::Definite) continue;
        HermLattice middle = HermLattice::make(f, mid);
        auto inner = vectors_of_norm(middle, 3);
        if (inner.size() < 2) continue;
        AlgMatrix small = gram_of(middle, {inner[0], inner[inner.size() / 2]});
        if (is_positive(f, small).kind != Positivity::Definite) continue;
        auto w1 = represents(HermLattice::make(f, small), middle);
        auto w2 = represents(middle, big);
        REQUIRE(w1);
        REQUIRE(w2);
        CHECK(verify_witness(f, small, big.gram(), multiply(f, w1->rows, w2->rows)));
      }
    }
  }

  TEST_CASE("representation is invariant under a change of basis") {
    std::mt19937 rng(23);
    for (std::int64_t m : {1, 2, 3}) {
      Field f = Field::make(m);
      auto targets = grids::binary_targets(f);
      for (int k = 0; k < 4; ++k) {
        AlgMatrix g = oracle::random_definite(f, rng, 3, 3, 1);
        AlgMatrix u = oracle::random_unimodular(f, rng, 3);
        AlgMatrix h = multiply(f, multiply(f, u, g), conjugate_transpose(f, u));
        CHECK(is_isometric(HermLattice::make(f, g), HermLattice::make(f, h)));
        RepresentationSearch sg(HermLattice::make(f, g)), sh(HermLattice::make(f, h));
        for (std::size_t i = 0; i < targets.size(); i += 3) CHECK(sg.find(targets[i]).has_value() == sh.find(targets[i]).has_value());
      }
    }
  }

  TEST_CASE("isometry_representatives keeps the first of each class") {
    Field f1 = Field::make(1);
    std::vector<HermLattice> ls = {HermLattice::diagonal(f1, {1, 2}), HermLattice::diagonal(f1, {2, 1}),
                                   lat(f1, "[[2,1],[1,2]]"), HermLattice::diagonal(f1, {1, 1}),
                                   lat(f1, "[[2,\"w\"],[\"-w\",2]]")};
    CHECK(isometry_representatives(ls, 2) == std::vector<std::size_t>{0, 2, 3});
  }
}
