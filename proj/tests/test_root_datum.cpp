/*
  This is test_root_datum.cpp: lattice arithmetic against hand-computed
  values.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagvar/root_datum.hpp"

using namespace flagvar;

static RootDatum datum(char f, int n) { return build_root_datum(family_from_char(f), n); }

TEST_CASE("type validation") {
  CHECK_NOTHROW(datum('A', 1));
  CHECK_NOTHROW(datum('A', 8));
  CHECK_NOTHROW(datum('B', 2));
  CHECK_NOTHROW(datum('D', 4));
  CHECK_NOTHROW(datum('E', 6));
  CHECK_NOTHROW(datum('F', 4));
  CHECK_NOTHROW(datum('G', 2));
  CHECK_THROWS_AS(datum('A', 0), InvalidType);
  CHECK_THROWS_AS(datum('A', 9), InvalidType);
  CHECK_THROWS_AS(datum('B', 1), InvalidType);
  CHECK_THROWS_AS(datum('D', 3), InvalidType);
  CHECK_THROWS_AS(datum('E', 5), InvalidType);
  CHECK_THROWS_AS(datum('E', 9), InvalidType);
  CHECK_THROWS_AS(datum('F', 3), InvalidType);
  CHECK_THROWS_AS(datum('G', 3), InvalidType);
  CHECK_THROWS_AS(family_from_char('H'), InvalidType);
}

TEST_CASE("cartan matrices carry the asymmetry in the documented slots") {
  RootDatum a2 = datum('A', 2);
  CHECK(a2.cartan.at(0, 0) == 2);
  CHECK(a2.cartan.at(0, 1) == -1);
  CHECK(a2.cartan.at(1, 0) == -1);

  // B3: alpha_3 short, <alpha_2, alphacheck_3> = -2
  RootDatum b3 = datum('B', 3);
  CHECK(b3.cartan.at(2, 1) == -2);
  CHECK(b3.cartan.at(1, 2) == -1);

  // C3: alpha_3 long, <alpha_3, alphacheck_2> = -2
  RootDatum c3 = datum('C', 3);
  CHECK(c3.cartan.at(1, 2) == -2);
  CHECK(c3.cartan.at(2, 1) == -1);

  // F4: alpha_1, alpha_2 long; <alpha_2, alphacheck_3> = -2
  RootDatum f4 = datum('F', 4);
  CHECK(f4.cartan.at(2, 1) == -2);
  CHECK(f4.cartan.at(1, 2) == -1);

  // G2: alpha_1 short; <alpha_2, alphacheck_1> = -3
  RootDatum g2 = datum('G', 2);
  CHECK(g2.cartan.at(0, 1) == -3);
  CHECK(g2.cartan.at(1, 0) == -1);

  // D4 fork: node 2 adjacent to 1, 3, 4
  RootDatum d4 = datum('D', 4);
  CHECK(d4.cartan.at(1, 0) == -1);
  CHECK(d4.cartan.at(1, 2) == -1);
  CHECK(d4.cartan.at(1, 3) == -1);
  CHECK(d4.cartan.at(0, 2) == 0);

  // E7 edges: (1,3),(2,4),(3,4),(4,5),(5,6),(6,7)
  RootDatum e7 = datum('E', 7);
  CHECK(e7.cartan.at(0, 2) == -1);
  CHECK(e7.cartan.at(1, 3) == -1);
  CHECK(e7.cartan.at(0, 1) == 0);
  CHECK(e7.cartan.at(2, 3) == -1);
  CHECK(e7.cartan.at(4, 5) == -1);
  CHECK(e7.cartan.at(5, 6) == -1);
}

TEST_CASE("cartan determinants") {
  CHECK(datum('A', 5).cartan_det == 6);
  CHECK(datum('B', 4).cartan_det == 2);
  CHECK(datum('C', 3).cartan_det == 2);
  CHECK(datum('D', 6).cartan_det == 4);
  CHECK(datum('E', 6).cartan_det == 3);
  CHECK(datum('E', 7).cartan_det == 2);
  CHECK(datum('E', 8).cartan_det == 1);
  CHECK(datum('F', 4).cartan_det == 1);
  CHECK(datum('G', 2).cartan_det == 1);
}

TEST_CASE("positive root counts match closed forms for every supported type") {
  const char* families = "ABCDEFG";
  for (const char* f = families; *f; ++f) {
    for (int n = 1; n <= 8; ++n) {
      RootDatum d;
      try {
        d = datum(*f, n);
      } catch (const InvalidType&) {
        continue;
      }
      CHECK(static_cast<int>(d.positive_roots.size()) == positive_root_count(d.family, n));
      CHECK(d.positive_roots_fw.size() == d.positive_roots.size());
    }
  }
  CHECK(positive_root_count(Family::A, 5) == 15);
  CHECK(positive_root_count(Family::B, 3) == 9);
  CHECK(positive_root_count(Family::C, 3) == 9);
  CHECK(positive_root_count(Family::D, 6) == 30);
  CHECK(positive_root_count(Family::E, 6) == 36);
  CHECK(positive_root_count(Family::E, 7) == 63);
  CHECK(positive_root_count(Family::E, 8) == 120);
  CHECK(positive_root_count(Family::F, 4) == 24);
  CHECK(positive_root_count(Family::G, 2) == 6);
}

TEST_CASE("explicit positive root lists for B2 and G2") {
  RootDatum b2 = datum('B', 2);
  // sorted by height then lexicographically; alpha_2 is the short root
  std::vector<IVec> expect_b2 = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(b2.positive_roots == expect_b2);

  RootDatum g2 = datum('G', 2);
  std::vector<IVec> expect_g2 = {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(g2.positive_roots == expect_g2);
}

TEST_CASE("highest root sits at the adjoint node") {
  // the last root in height order is the highest root
  RootDatum g2 = datum('G', 2);
  CHECK(g2.positive_roots_fw.back() == IVec{0, 1});  // = pi_2
  RootDatum e7 = datum('E', 7);
  IVec expect(7, 0);
  expect[0] = 1;  // = pi_1
  CHECK(e7.positive_roots_fw.back() == expect);
  RootDatum a3 = datum('A', 3);
  CHECK(a3.positive_roots_fw.back() == IVec{1, 0, 1});
}

TEST_CASE("inverse cartan and adjugate are exact") {
  std::vector<std::pair<char, int>> cases = {{'A', 5}, {'B', 4}, {'C', 3}, {'D', 5},
                                             {'E', 7}, {'F', 4}, {'G', 2}};
  for (auto [f, n] : cases) {
    RootDatum d = datum(f, n);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        Rat s(0);
        for (int k = 0; k < d.rank; ++k) {
          Rat t = rat_ll(d.cartan.at(i, k)) * d.inverse_cartan.at(k, j);
          s += t;
        }
        CHECK(s == Rat(i == j ? 1 : 0));
        Rat scaled = d.inverse_cartan.at(i, j) * rat_ll(d.cartan_det);
        CHECK(scaled == rat_ll(d.cartan_adj.at(i, j)));
      }
  }
}

TEST_CASE("pairings of fundamental weights with fundamental coweights") {
  // A2: <pi_1, picheck_1> = 2/3; A5: <pi_3, picheck_3> = 3/2
  RootDatum a2 = datum('A', 2);
  CHECK(pairing(a2, fundamental_weight(a2, 1), fundamental_coweight(a2, 1)) == make_rat(2, 3));
  CHECK(pairing(a2, fundamental_weight(a2, 1), fundamental_coweight(a2, 2)) == make_rat(1, 3));
  RootDatum a5 = datum('A', 5);
  CHECK(pairing(a5, fundamental_weight(a5, 3), fundamental_coweight(a5, 3)) == make_rat(3, 2));
  RootDatum c3 = datum('C', 3);
  CHECK(pairing(c3, fundamental_weight(c3, 3), fundamental_coweight(c3, 3)) == make_rat(3, 2));
  RootDatum d6 = datum('D', 6);
  CHECK(pairing(d6, fundamental_weight(d6, 6), fundamental_coweight(d6, 6)) == make_rat(3, 2));
  RootDatum e7 = datum('E', 7);
  CHECK(pairing(e7, fundamental_weight(e7, 7), fundamental_coweight(e7, 7)) == make_rat(3, 2));
}

TEST_CASE("duality of fundamental and simple families") {
  RootDatum d = datum('B', 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(pairing(d, fundamental_weight(d, i), simple_coroot(d, j)) == Rat(i == j ? 1 : 0));
      CHECK(pairing(d, simple_root(d, i), fundamental_coweight(d, j)) == Rat(i == j ? 1 : 0));
      CHECK(pairing(d, simple_root(d, i), simple_coroot(d, j)) == rat_ll(d.cartan.at(j - 1, i - 1)));
    }
}

TEST_CASE("conversion between weight bases") {
  RootDatum d = datum('C', 3);
  // pi_2 in fundamental-weight coordinates is e_2
  Weight pi2 = fundamental_weight(d, 2);
  QVec fw = convert(d, pi2.sr, Basis::simple_root, Basis::fundamental_weight);
  CHECK(fw == QVec{Rat(0), Rat(1), Rat(0)});
  Weight back = weight_from(d, fw, Basis::fundamental_weight);
  CHECK(back.sr == pi2.sr);
  // mixing weight and coweight bases is refused
  CHECK_THROWS_AS(convert(d, fw, Basis::fundamental_weight, Basis::simple_coroot),
                  std::invalid_argument);
}

TEST_CASE("pairing against picheck_i reads off a simple-root coordinate") {
  RootDatum d = datum('A', 5);
  Weight mu = weight_from(d, QVec{Rat(1), Rat(-2), Rat(3), Rat(0), Rat(5)}, Basis::simple_root);
  for (int i = 1; i <= 5; ++i)
    CHECK(pairing(d, mu, fundamental_coweight(d, i)) == mu.sr[i - 1]);
}

TEST_CASE("dominance") {
  RootDatum d = datum('D', 4);
  CHECK(is_dominant(d, fundamental_weight(d, 2)));
  Weight rho = fundamental_weight(d, 1);
  for (int i = 2; i <= 4; ++i) {
    Weight f = fundamental_weight(d, i);
    for (int k = 0; k < 4; ++k) rho.sr[k] += f.sr[k];
  }
  CHECK(is_dominant(d, rho));
  Weight neg = rho;
  for (int k = 0; k < 4; ++k) neg.sr[k] = -neg.sr[k];
  CHECK(!is_dominant(d, neg));
  CHECK(!is_dominant(d, simple_root(d, 1)));  // <alpha_1, alphacheck_2> < 0
  CHECK(is_dominant(d, coweight_from(d, QVec{Rat(1), Rat(0), Rat(2), Rat(0)},
                                     Basis::fundamental_coweight)));
}

TEST_CASE("root sign classification in pairing coordinates") {
  RootDatum d = datum('A', 2);
  IVec a1_fw = {2, -1};  // column 1 of the cartan matrix
  CHECK(d.root_sign_fw(a1_fw) == 1);
  IVec neg = {-2, 1};
  CHECK(d.root_sign_fw(neg) == -1);
  IVec mixed = {3, -3};  // alpha_1 - alpha_2, not of definite sign
  CHECK_THROWS_AS(d.root_sign_fw(mixed), InternalContradiction);
}
