#include <doctest.h>

#include "hermlat/io.hpp"

using namespace hermlat;

TEST_SUITE("io") {
  TEST_CASE("element expressions") {
    CHECK(parse_algint("3") == AlgInt(3));
    CHECK(parse_algint("w") == AlgInt(Int(0), Int(1)));
    CHECK(parse_algint("-w") == AlgInt(Int(0), Int(-1)));
    CHECK(parse_algint("2+3w") == AlgInt(Int(2), Int(3)));
    CHECK(parse_algint(" -1 + 2w ") == AlgInt(Int(-1), Int(2)));
    CHECK(to_string(AlgInt(Int(-1), Int(1))) == "-1+w");
    CHECK_THROWS_AS(parse_algint("1+x"), Error);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) CHECK(parse_algint(to_string(AlgInt(Int(a), Int(b)))) == AlgInt(Int(a), Int(b)));
  }

  TEST_CASE("lattice syntax") {
    Field f = Field::make(11);
    CHECK(parse_lattice(f, "<1,1,2>").gram() == AlgMatrix::diagonal({1, 1, 2}));
    CHECK(parse_lattice(f, "⟨1,1,2⟩").gram() == AlgMatrix::diagonal({1, 1, 2}));
    HermLattice l = parse_lattice(f, "[[2,\"w\"],[\"1-w\",2]]");
    CHECK(l.gram()(0, 1) == f.omega());
    CHECK(parse_lattice(f, format_gram(l.gram())).gram() == l.gram());
    CHECK(lattice_from_json(to_json(l)).gram() == l.gram());
    CHECK(parse_lattice(f, to_json(l).dump()).gram() == l.gram());
    CHECK_THROWS_AS(parse_lattice(f, "[[2,\"w\"],[\"w\",2]]"), Error);
    CHECK_THROWS_AS(parse_lattice(f, "[[1,2],[2,1]]"), Error);
    CHECK_THROWS_AS(parse_lattice(f, "<1,"), Error);
    CHECK_THROWS_AS(parse_lattice(Field::make(2), to_json(l).dump()), Error);

    Field f6 = Field::make(6);
    HermLattice p = parse_lattice(f6, "[[1,0,0,0],[0,1,0,0],[0,0,2,\"w\"],[0,0,\"-w\",3]]");
    auto j = to_json(p);
    CHECK(j.at("pseudo") == true);
    CHECK(lattice_from_json(j).pseudo());
    j["pseudo"] = false;
    CHECK_THROWS_AS(lattice_from_json(j), Error);
  }

  TEST_CASE("witness round trip") {
    Witness w{AlgMatrix{{1, 1, 0}, {0, 1, 1}}};
    CHECK(witness_from_json(to_json(w)).rows == w.rows);
    CHECK(to_json(w).at("rows").at(0).at(0) == nlohmann::json({1, 0}));
  }
}
