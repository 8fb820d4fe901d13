#include <doctest.h>

#include "hermlat/escalate.hpp"
#include "support.hpp"

using namespace hermlat;
using support::lat;

namespace {

std::vector<HermLattice> leaves(const EscalationTree& tree, std::size_t rank, NodeStatus status) {
  std::vector<HermLattice> out;
  for (std::size_t i : tree.select(rank, status)) out.push_back(tree.nodes[i].lat);
  return out;
}

bool same_classes(const std::vector<HermLattice>& got, const std::vector<HermLattice>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    int hits = 0;
    for (const auto& g : got) hits += is_isometric(g, w);
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("escalate") {
  TEST_CASE("escalations of small lattices") {
    Field f1 = Field::make(1), f5 = Field::make(5);
    auto e1 = escalations(HermLattice::diagonal(f1, {1}), 1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].gram() == AlgMatrix::diagonal({1, 1}));
    CHECK(escalations(HermLattice::zero(f1), 1).front().gram() == AlgMatrix::diagonal({1}));

    auto e5 = escalations(HermLattice::diagonal(f5, {1, 1}), 2);
    bool free_112 = false, pseudo = false;
    for (const auto& l : e5) {
      free_112 = free_112 || is_isometric(l, HermLattice::diagonal(f5, {1, 1, 2}));
      pseudo = pseudo || l.pseudo();
    }
    CHECK(free_112);
    CHECK(pseudo);
    CHECK_THROWS_AS(escalations(HermLattice::diagonal(f1, {1}), 0), Error);
  }

  TEST_CASE("escalations contain the parent and the escalating vector; no duplicates") {
    struct Case {
      std::int64_t m;
      std::string parent;
      int t;
    };
    for (const auto& c : std::vector<Case>{{1, "<1,1>", 2}, {5, "<1,1>", 2}, {3, "<1,1>", 2}, {7, "<1,1>", 2},
                                           {2, "<1,1,1>", 2}, {6, "<1,1>", 2}, {11, "<1,1,1>", 2}}) {
      Field f = Field::make(c.m);
      HermLattice parent = lat(f, c.parent);
      auto report = truant(parent, 3);
      REQUIRE(report.truant);
      auto kids = escalations(parent, c.t, 2);
      CAPTURE(c.m);
      CAPTURE(c.parent);
      CHECK_FALSE(kids.empty());
      for (const auto& k : kids) {
        CHECK(represents(parent, k));
        CHECK_FALSE(vectors_of_norm(k, c.t).empty());
        CHECK(k.rank() >= parent.rank());
      }
      for (std::size_t i = 0; i < kids.size(); ++i)
        for (std::size_t j = i + 1; j < kids.size(); ++j) CHECK_FALSE(is_isometric(kids[i], kids[j]));
    }
  }

  TEST_CASE("trees") {
    Field f3 = Field::make(3), f11 = Field::make(11), f5 = Field::make(5);
    auto t3 = escalation_tree(f3, 4, 3, true, 4);
    CHECK(same_classes(leaves(t3, 3, NodeStatus::CertifiedUpToCap),
                       {HermLattice::diagonal(f3, {1, 1, 1}), HermLattice::diagonal(f3, {1, 1, 2})}));

    auto t11 = escalation_tree(f11, 4, 3, true, 4);
    CHECK(t11.select(3, NodeStatus::CertifiedUpToCap).empty());
    bool named = false;
    HermLattice a = lat(f11, "[[2,\"w\"],[\"1-w\",2]]");
    for (std::size_t i : t11.select(3, NodeStatus::EliminatedBy)) {
      REQUIRE(t11.nodes[i].truant_class);
      named = named || is_isometric(t11.nodes[i].truant_class->lat, a);
    }
    CHECK(named);

    auto t5 = escalation_tree(f5, 4, 3, true, 4);
    CHECK(t5.select(3, NodeStatus::CertifiedUpToCap).empty());
    for (std::size_t i : t5.select(3, NodeStatus::EliminatedBy)) CHECK(t5.nodes[i].truant_class->s <= 3);

    // Children exist only under a truant, and each child contains its parent.
    for (const auto& n : t5.nodes) {
      if (!n.truant_class) CHECK(n.children.empty());
      for (std::size_t c : n.children) CHECK(represents(n.lat, t5.nodes[c].lat));
    }
    CHECK_THROWS_AS(escalation_tree(f5, 4, 6), Error);

    auto j = tree_json(t3);
    CHECK(j.at("root").at("rank") == 0);
    CHECK(tree_csv(t3).rfind("id,parent,rank,pseudo,gram,status,eliminator\n", 0) == 0);
  }
}
