#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "charfam/catalog.hpp"
#include "charfam/errors.hpp"
#include "charfam/isomorphism.hpp"
#include "charfam/subgroup.hpp"

using namespace charfam;

namespace {

// Brute-force subgroup oracle, independent of the layered cyclic-extension
// enumeration: grow the set of known subgroups by closing every known
// subgroup joined with every single element, until stable.
std::set<Bitset> subgroup_oracle(const GroupPtr& g) {
  auto close = [&](std::vector<int> gens) {
    Bitset b(g->order());
    b.set(0);
    for (int x : gens) b.set(x);
    bool grew = true;
    while (grew) {
      grew = false;
      auto mem = b.members();
      for (int x : mem)
        for (int y : mem) {
          int z = g->mul(x, y);
          if (!b.test(z)) {
            b.set(z);
            grew = true;
          }
        }
    }
    return b;
  };
  std::set<Bitset> found;
  found.insert(close({}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bitset> cur(found.begin(), found.end());
    for (const auto& s : cur)
      for (int x = 1; x < g->order(); ++x) {
        if (s.test(x)) continue;
        auto gens = s.members();
        gens.push_back(x);
        if (found.insert(close(gens)).second) grew = true;
      }
  }
  return found;
}

}  // namespace

TEST_CASE("catalog constructors") {
  auto c9 = make_cyclic(9);
  CHECK(c9->order() == 9);
  int order9 = 0, order3 = 0;
  for (int x = 0; x < 9; ++x) {
    if (c9->element_order(x) == 9) ++order9;
    if (c9->element_order(x) == 3) ++order3;
  }
  CHECK(order9 == 6);  // phi(9)
  CHECK(order3 == 2);

  auto h = make_heisenberg(3);
  CHECK(h->order() == 27);
  CHECK(h->exponent() == 3);
  CHECK(!h->is_abelian());

  auto e5 = make_extraspecial5(3);
  CHECK(e5->order() == 243);
  CHECK(e5->exponent() == 3);
  CHECK(center(e5).size() == 3);

  auto ea = make_elementary_abelian(3, 3);
  CHECK(ea->order() == 27);
  CHECK(ea->is_abelian());
  CHECK(ea->exponent() == 3);

  auto prod = build_group("product:cyclic:3,heisenberg:3");
  CHECK(prod->order() == 81);

  CHECK_THROWS_AS(make_cyclic(5000), OrderCapError);
  CHECK_THROWS_AS(build_group("nonsense:3"), ParseError);
}

TEST_CASE("group table validation") {
  // broken associativity: tweak one entry of cyclic(4)'s table
  std::vector<std::uint16_t> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = static_cast<std::uint16_t>((a + b) % 4);
  std::swap(t[1 * 4 + 1], t[1 * 4 + 2]);
  CHECK_THROWS_AS(Group::make("broken", 4, t), InvalidTableError);
}

TEST_CASE("group file round trip and permutation input") {
  auto h = make_heisenberg(3);
  std::stringstream ss;
  write_group(ss, *h);
  auto back = read_group(ss);
  CHECK(back->order() == 27);
  CHECK(back->exponent() == 3);

  std::stringstream ps("perm rot3 degree 3\n(1 2 3)\n");
  auto c3 = read_group(ps);
  CHECK(c3->order() == 3);
  CHECK(c3->element_order(1) == 3);

  std::stringstream bad("group g order 2\n0 1\n1 2\n");
  CHECK_THROWS(read_group(bad));
}

TEST_CASE("closure") {
  auto h = make_heisenberg(3);
  CHECK(closure(h, {}).size() == 1);
  auto c9 = make_cyclic(9);
  CHECK(closure(c9, {1}).size() == 9);
  CHECK(closure(h, {h->generators()[0], h->generators()[1]}).size() == 27);
}

TEST_CASE("center, centralizer, normalizer") {
  auto ea = make_elementary_abelian(3, 3);
  CHECK(center(ea).size() == 27);

  auto e5 = make_extraspecial5(3);
  SubgroupSet z = center(e5);
  CHECK(z.size() == 3);

  // Q = <Z(G), a> for a noncentral a; the centralizer has index p
  int a = -1;
  for (int x = 1; x < e5->order(); ++x)
    if (!z.contains(x)) {
      a = x;
      break;
    }
  std::vector<int> gens = z.elements();
  gens.push_back(a);
  SubgroupSet q = closure(e5, gens);
  CHECK(q.size() == 9);
  SubgroupSet cq = centralizer(e5, q);
  CHECK(e5->order() / cq.size() == 3);

  // containment of centralizer in normalizer, on a sample of subgroups
  auto h = make_heisenberg(3);
  for (const auto& s : all_subgroups(h)) {
    CHECK(centralizer(h, s).members.subset_of(normalizer(h, s).members));
  }
}

TEST_CASE("conjugacy classes against a direct orbit oracle") {
  auto h = make_heisenberg(3);
  auto part = conjugacy_classes(*h);
  CHECK(part.classes.size() == 11);
  std::multiset<std::size_t> sizes;
  for (const auto& c : part.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});

  // oracle: orbit of each element under conjugation, computed directly
  std::set<std::set<int>> oracle;
  for (int x = 0; x < h->order(); ++x) {
    std::set<int> orb;
    for (int g = 0; g < h->order(); ++g) orb.insert(h->conj(g, x));
    oracle.insert(orb);
  }
  CHECK(oracle.size() == part.classes.size());

  auto e5 = make_extraspecial5(3);
  auto part5 = conjugacy_classes(*e5);
  CHECK(part5.classes.size() == 83);
  int singletons = 0, threes = 0;
  for (const auto& c : part5.classes) {
    if (c.size() == 1) ++singletons;
    if (c.size() == 3) ++threes;
  }
  CHECK(singletons == 3);
  CHECK(threes == 80);

  // class equation
  std::size_t total = 0;
  for (const auto& c : part5.classes) {
    CHECK(e5->order() % c.size() == 0);
    total += c.size();
  }
  CHECK(total == 243);

  // abelian groups split into singletons
  auto ea = make_elementary_abelian(3, 2);
  CHECK(conjugacy_classes(*ea).classes.size() == 9);
}

TEST_CASE("subgroup enumeration against the closure oracle") {
  auto c9 = make_cyclic(9);
  CHECK(all_subgroups(c9).size() == 3);
  CHECK(subgroup_oracle(c9).size() == 3);

  auto ea = make_elementary_abelian(3, 3);
  auto subs = all_subgroups(ea);
  CHECK(subs.size() == 28);
  CHECK(subgroup_oracle(ea).size() == 28);

  auto h = make_heisenberg(3);
  auto hs = all_subgroups(h);
  CHECK(hs.size() == 19);
  CHECK(subgroup_oracle(h).size() == 19);

  // enumerated sets coincide with the oracle, not only in count
  std::set<Bitset> enumerated;
  for (const auto& s : hs) enumerated.insert(s.members);
  CHECK(enumerated == subgroup_oracle(h));

  // every enumerated subgroup is closed
  for (const auto& s : hs) {
    SubgroupSet c = closure(h, s.elements());
    CHECK(c.members == s.members);
  }

  // max_order cap
  CHECK(all_subgroups(h, 9).back().size() <= 9);
}

TEST_CASE("rank and elementary abelian detection") {
  auto ea = make_elementary_abelian(3, 3);
  CHECK(rank(full_subgroup(ea)) == 3);
  CHECK(is_elementary_abelian(full_subgroup(ea)));

  auto h = make_heisenberg(3);
  CHECK(rank(full_subgroup(h)) == 2);
  CHECK(!is_elementary_abelian(full_subgroup(h)));

  auto e5 = make_extraspecial5(3);
  CHECK(rank(full_subgroup(e5)) == 3);

  auto c6 = build_group("product:cyclic:3,cyclic:3");
  CHECK(rank(full_subgroup(c6)) == 2);

  auto mixed = make_direct_product({make_cyclic(2), make_cyclic(3)});
  CHECK_THROWS_AS(rank(full_subgroup(mixed)), MixedOrderError);

  // conjugation invariance on 100 seeded random conjugators
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, h->order() - 1);
  auto subs = all_subgroups(h);
  for (int t = 0; t < 100; ++t) {
    const auto& s = subs[t % subs.size()];
    int g = pick(rng);
    CHECK(rank(s) == rank(conjugate_subgroup(s, g)));
  }
}

TEST_CASE("omega1") {
  auto c9 = make_cyclic(9);
  SubgroupSet om = omega1(full_subgroup(c9));
  CHECK(om.size() == 3);
  auto c3 = make_cyclic(3);
  CHECK(omega1(full_subgroup(c3)).size() == 3);
  auto ea = make_elementary_abelian(3, 2);
  CHECK_THROWS_AS(omega1(full_subgroup(ea)), NotRankOneError);
}

TEST_CASE("as_group and embeddings") {
  auto h = make_heisenberg(3);
  AsGroup triv = as_group(trivial_subgroup(h));
  CHECK(triv.group->order() == 1);

  AsGroup zg = as_group(center(h));
  CHECK(zg.group->order() == 3);
  CHECK(isomorphic(zg.group, make_cyclic(3)));

  // every order-9 subgroup of the Heisenberg group is elementary abelian
  for (const auto& s : all_subgroups(h)) {
    if (s.size() != 9) continue;
    AsGroup asg = as_group(s);
    CHECK(asg.group->is_abelian());
    CHECK(is_elementary_abelian(s));
    GroupEmbedding emb = asg.embedding(h);
    CHECK(emb.map.size() == 9);
  }

  // a non-homomorphism table is rejected
  auto c3b = make_cyclic(3);
  CHECK_THROWS_AS(make_embedding(c3b, h, {0, 1, 2}, GroupEmbedding::Kind::Inclusion),
                  InvalidTableError);
}

TEST_CASE("semidirect construction") {
  // C_9 with the order-3 automorphism x -> 4x has order 27 and exponent 9
  auto g = make_semidirect(make_cyclic(9), {{4}});
  CHECK(g->order() == 27);
  CHECK(g->exponent() == 9);
  CHECK(!g->is_abelian());
  CHECK_THROWS_AS(make_semidirect(make_cyclic(9), {{3}}), InvalidTableError);
}
