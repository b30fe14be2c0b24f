#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "i2g/molfile.hpp"
#include "i2g/molgraph.hpp"
#include "i2g/smiles.hpp"
#include "oracles.hpp"

using namespace i2g;

TEST_CASE("parse: single atoms") {
  MolGraph g = parse_smiles("C");
  REQUIRE(g.num_atoms() == 1);
  CHECK(g.num_bonds() == 0);
  CHECK(g.atom(0).label == "C");

  CHECK(parse_smiles("[R1]").atom(0).label == "R1");
  CHECK(parse_smiles("[CF3]").atom(0).label == "CF3");
  CHECK(parse_smiles("[t-Bu]").atom(0).label == "t-Bu");
  CHECK(parse_smiles("[NO2]").atom(0).label == "NO2");
  CHECK(parse_smiles("Br").atom(0).label == "Br");

  MolGraph charged = parse_smiles("[N+]");
  CHECK(charged.atom(0).label == "N");
  CHECK(charged.atom(0).charge == 1);
  CHECK(parse_smiles("[O-]").atom(0).charge == -1);
  CHECK(parse_smiles("[C+2]").atom(0).charge == 2);
  CHECK(parse_smiles("[Fe+3]").atom(0).label == "Fe");
}

TEST_CASE("parse: cyclohexane ring") {
  MolGraph g = parse_smiles("C1CCCCC1");
  REQUIRE(g.num_atoms() == 6);
  REQUIRE(g.num_bonds() == 6);
  // brute-force adjacency check: every node has exactly two neighbors and
  // the edges form a single 6-cycle
  for (int i = 0; i < 6; ++i) CHECK(g.degree(i) == 2);
  std::set<int> seen{0};
  int prev = -1, cur = 0;
  for (int step = 0; step < 5; ++step) {
    auto nb = g.adjacency()[cur];
    int next = (nb[0].first == prev) ? nb[1].first : nb[0].first;
    prev = cur;
    cur = next;
    CHECK_FALSE(seen.count(cur));
    seen.insert(cur);
  }
  CHECK(g.has_bond(cur, 0));
}

TEST_CASE("parse: bonds, branches, separators") {
  MolGraph g = parse_smiles("CC(=O)N");
  REQUIRE(g.num_atoms() == 4);
  CHECK(*g.bond_between(1, 2) == BondType::Double);
  CHECK(*g.bond_between(1, 3) == BondType::Single);

  CHECK(parse_smiles("C#N").bond_between(0, 1).value() == BondType::Triple);
  CHECK(parse_smiles("C:C").bond_between(0, 1).value() == BondType::Aromatic);
  CHECK(parse_smiles("C-C").bond_between(0, 1).value() == BondType::Single);

  MolGraph two = parse_smiles("C.O");
  CHECK(two.num_atoms() == 2);
  CHECK(two.num_bonds() == 0);
  CHECK_FALSE(two.connected());

  // ring-closure bond symbol on either side
  CHECK(parse_smiles("C=1CCCCC1").bond_between(0, 5).value() == BondType::Double);
  CHECK(parse_smiles("C1CCCCC=1").bond_between(0, 5).value() == BondType::Double);
  CHECK(parse_smiles("C=1CCCCC=1").bond_between(0, 5).value() == BondType::Double);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_smiles("C(("), ParseError);
  try {
    parse_smiles("C((");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }

  CHECK_THROWS_AS(parse_smiles(""), ParseError);
  CHECK_THROWS_AS(parse_smiles("C("), ParseError);
  CHECK_THROWS_AS(parse_smiles("C)"), ParseError);
  CHECK_THROWS_AS(parse_smiles("C=="), ParseError);
  CHECK_THROWS_AS(parse_smiles("C="), ParseError);
  CHECK_THROWS_AS(parse_smiles("=C"), ParseError);
  CHECK_THROWS_AS(parse_smiles("C(=)C"), ParseError);
  CHECK_THROWS_AS(parse_smiles("C11"), ParseError);       // ring bond to self
  CHECK_THROWS_AS(parse_smiles("C1C1"), ParseError);      // duplicate bond
  CHECK_THROWS_AS(parse_smiles("C=1CCCCC#1"), ParseError);  // closure bond mismatch
  CHECK_THROWS_AS(parse_smiles("C1CC"), UnbalancedRingClosure);
  CHECK_THROWS_AS(parse_smiles("x"), UnknownToken);
  CHECK_THROWS_AS(parse_smiles("C$C"), UnknownToken);
  CHECK_THROWS_AS(parse_smiles("K"), UnknownToken);  // needs brackets
  CHECK_THROWS_AS(parse_smiles("C[")  , ParseError);
  CHECK_THROWS_AS(parse_smiles("C[]C"), ParseError);
  CHECK_THROWS_AS(parse_smiles("C/C=C/C"), UnsupportedFeature);
  CHECK_THROWS_AS(parse_smiles("[C@H]"), UnsupportedFeature);
}

TEST_CASE("canonical writer basics") {
  MolGraph methane;
  methane.add_atom("C");
  CHECK(to_canonical_smiles(methane) == "C");

  MolGraph r1;
  r1.add_atom("R1");
  CHECK(to_canonical_smiles(r1) == "[R1]");

  MolGraph charged;
  charged.add_atom("N", 1);
  CHECK(to_canonical_smiles(charged) == "[N+]");

  MolGraph super;
  super.add_atom("t-Bu");
  CHECK(to_canonical_smiles(super) == "[t-Bu]");
}

TEST_CASE("ethanol canonical string identical for all 6 node orders") {
  MolGraph g;
  g.add_atom("C");
  g.add_atom("C");
  g.add_atom("O");
  g.add_bond(0, 1);
  g.add_bond(1, 2);

  std::set<std::string> strings;
  std::vector<int> perm = {0, 1, 2};
  do {
    strings.insert(to_canonical_smiles(g.permuted(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(strings.size() == 1);
  CHECK(strings.begin()->size() == 3);
}

TEST_CASE("round-trip: parse(to_canonical) is isomorphic, small exhaustive set") {
  // all connected topologies on up to 4 nodes, three deterministic labelings
  const std::vector<std::string> alphabet = {"C", "N", "O", "R1"};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& edges : oracle::connected_edge_sets(n)) {
      for (int scheme = 0; scheme < 3; ++scheme) {
        MolGraph g;
        for (int i = 0; i < n; ++i) g.add_atom(alphabet[(i * (scheme + 1)) % 4]);
        int k = 0;
        for (auto [u, v] : edges)
          g.add_bond(u, v, static_cast<BondType>((k++ * (scheme + 1)) % 3));
        MolGraph back = parse_smiles(to_canonical_smiles(g));
        CHECK(graphs_equal(back, g));
        CHECK(oracle::isomorphic_brute_force(back, g));
      }
    }
  }
}

TEST_CASE("round-trip: random graphs incl. superatoms, charges, rings") {
  Rng rng(31337);
  const std::vector<std::string> labels = {"C", "N", "O", "S", "Cl", "CF3", "R2", "t-Bu"};
  for (int it = 0; it < 500; ++it) {
    MolGraph g = oracle::random_graph(rng, 8, labels);
    std::string s = to_canonical_smiles(g);
    MolGraph back = parse_smiles(s);
    CHECK(graphs_equal(back, g));
    CHECK(to_canonical_smiles(back) == s);
  }
}

TEST_CASE("molfile: atoms, bonds, coordinates") {
  const std::string mol =
      "ethanol\n"
      "  test\n"
      "\n"
      "  3  2  0  0  0  0  0  0  0  0999 V2000\n"
      "    0.0000    0.0000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0\n"
      "    1.0000    0.5000    0.0000 C   0  0  0  0  0  0  0  0  0  0  0  0\n"
      "    2.0000    0.0000    0.0000 O   0  5  0  0  0  0  0  0  0  0  0  0\n"
      "  1  2  1  0\n"
      "  2  3  2  0\n"
      "M  END\n";
  MolGraph g = read_molfile_string(mol);
  REQUIRE(g.num_atoms() == 3);
  REQUIRE(g.num_bonds() == 2);
  CHECK(g.atom(2).label == "O");
  CHECK(g.atom(2).charge == -1);
  CHECK(*g.bond_between(1, 2) == BondType::Double);
  REQUIRE(g.atom(0).coord.has_value());
  // y axis flipped: molfile y up, image y down; atom 1 is highest on paper
  CHECK(g.atom(1).coord->y() < g.atom(0).coord->y());
  CHECK(g.atom(0).coord->x() == doctest::Approx(0.0));
  CHECK(g.atom(2).coord->x() == doctest::Approx(1.0));

  const std::string sdf = mol + "$$$$\n" + mol + "$$$$\n";
  std::istringstream in(sdf);
  auto mols = read_sdf(in);
  CHECK(mols.size() == 2);

  CHECK_THROWS_AS(read_molfile_string("junk\n"), UnsupportedFeature);
}
