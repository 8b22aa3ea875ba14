#include "support.hpp"

#include "qb/orbit_catalog.hpp"
#include "qb/orbit_word.hpp"

using namespace qb;

TEST_CASE("orbit word parsing and validation") {
  OrbitWord w = OrbitWord::parse("0202");
  REQUIRE(w.length() == 4);
  REQUIRE(w.str() == "0202");
  REQUIRE(w.letter(0) == 0);
  REQUIRE(w.letter(5) == 2);  // cyclic indexing
  REQUIRE_THROWS_AS(OrbitWord::parse(""), std::invalid_argument);
  REQUIRE_THROWS_AS(OrbitWord::parse("01a2"), std::invalid_argument);
  REQUIRE_THROWS_AS(OrbitWord::parse("0112"), std::invalid_argument);
  REQUIRE_THROWS_AS(OrbitWord::fromLetters({0, 1, -1}), std::invalid_argument);
}

TEST_CASE("cyclic validity needs distinct wraparound letters") {
  REQUIRE(OrbitWord::parse("0202").cyclicallyValid());
  REQUIRE_FALSE(OrbitWord::parse("0120").cyclicallyValid());
  // a single letter wraps onto itself
  REQUIRE_FALSE(OrbitWord::parse("0").cyclicallyValid());
}

TEST_CASE("reversal and rotation") {
  OrbitWord w = OrbitWord::parse("0123");
  REQUIRE(w.reversed().str() == "3210");
  REQUIRE(w.rotatedBy(1).str() == "1230");
  REQUIRE(w.rotatedBy(-1).str() == "3012");
  REQUIRE(w.rotatedBy(4) == w);
  REQUIRE(canonicalRotation(OrbitWord::parse("2010")).str() == "0102");
  REQUIRE(canonicalRotation(OrbitWord::parse("1313")).str() == "1313");
}

TEST_CASE("relabeling by the dihedral action on edge labels") {
  OrbitWord rect = OrbitWord::parse("0202");
  REQUIRE(relabel(rect, 1, false, 4).str() == "1313");
  REQUIRE(relabel(rect, 0, true, 4).str() == "3131");
  OrbitWord a = OrbitWord::parse("01203213");
  REQUIRE(relabel(a, 2, false, 4).str() == "23021031");
  REQUIRE(relabel(a, 0, false, 4) == a);
  // reflected relabeling is an involution for mirrored rotation
  for (int rot = 0; rot < 4; ++rot) {
    OrbitWord once = relabel(a, rot, true, 4);
    REQUIRE(relabel(once, rot, true, 4) == a);
  }
  REQUIRE_THROWS_AS(relabel(a, 0, false, 3), std::invalid_argument);
}

TEST_CASE("orbit families produce the expected words") {
  REQUIRE(wordFor(OrbitFamily::rect()).str() == "0202");
  REQUIRE(wordFor(OrbitFamily::f()).str() == "012012");
  REQUIRE(wordFor(OrbitFamily::r()).str() == "012021");
  REQUIRE(wordFor(OrbitFamily::a()).str() == "01203213");
  REQUIRE(wordFor(OrbitFamily::y(2)).str() == "01313103");
  REQUIRE(wordFor(OrbitFamily::y(3)).str() == "0131313103");
  REQUIRE(wordFor(OrbitFamily::x(2)).str() == "01313013131310313103");
  REQUIRE(wordFor(OrbitFamily::x(3)).str() == "0131313013131313131031313103");
  REQUIRE_THROWS_AS(OrbitFamily::x(1), std::invalid_argument);
  REQUIRE_THROWS_AS(OrbitFamily::y(0), std::invalid_argument);
}

TEST_CASE("family word lengths follow the growth rules") {
  for (int n = 2; n <= 12; ++n) {
    REQUIRE(wordFor(OrbitFamily::x(n)).length() == 8 * n + 4);
    REQUIRE(wordFor(OrbitFamily::y(n)).length() == 2 * n + 4);
    REQUIRE(wordFor(OrbitFamily::x(n)).cyclicallyValid());
    REQUIRE(wordFor(OrbitFamily::y(n)).cyclicallyValid());
  }
}

TEST_CASE("family names") {
  REQUIRE(OrbitFamily::rect().name() == "Rect");
  REQUIRE(OrbitFamily::f().name() == "F");
  REQUIRE(OrbitFamily::r().name() == "R");
  REQUIRE(OrbitFamily::a().name() == "A");
  REQUIRE(OrbitFamily::x(2).name() == "X2");
  REQUIRE(OrbitFamily::y(7).name() == "Y7");
}

TEST_CASE("stability by the per-letter parity balance") {
  REQUIRE_FALSE(isStable(OrbitWord::parse("0202")));
  REQUIRE(isStable(OrbitWord::parse("012012")));
  REQUIRE_FALSE(isStable(OrbitWord::parse("012021")));
  REQUIRE(isStable(OrbitWord::parse("01203213")));
  for (int n = 2; n <= 8; ++n) {
    REQUIRE(isStable(wordFor(OrbitFamily::x(n))));
    REQUIRE_FALSE(isStable(wordFor(OrbitFamily::y(n))));
  }
  // odd-length words are never stable
  REQUIRE_FALSE(isStable(OrbitWord::parse("012")));
}

TEST_CASE("stability is invariant under rotation, reversal, relabeling") {
  OrbitWord x2 = wordFor(OrbitFamily::x(2));
  OrbitWord y3 = wordFor(OrbitFamily::y(3));
  for (int r = 0; r < static_cast<int>(x2.length()); ++r)
    REQUIRE(isStable(x2.rotatedBy(r)));
  for (int r = 0; r < static_cast<int>(y3.length()); ++r)
    REQUIRE_FALSE(isStable(y3.rotatedBy(r)));
  REQUIRE(isStable(x2.reversed()));
  for (int rot = 0; rot < 4; ++rot) {
    REQUIRE(isStable(relabel(x2, rot, false, 4)));
    REQUIRE(isStable(relabel(x2, rot, true, 4)));
    REQUIRE_FALSE(isStable(relabel(y3, rot, false, 4)));
  }
}

TEST_CASE("square word doubles a cyclic word") {
  OrbitWord w = OrbitWord::parse("012");
  REQUIRE(squareWord(w).str() == "012012");
  REQUIRE(squareWord(w).evenLength());
  REQUIRE_THROWS_AS(squareWord(OrbitWord::parse("0120")), std::invalid_argument);
}
