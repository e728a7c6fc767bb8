#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "charfam/catalog.hpp"
#include "charfam/character_table.hpp"
#include "charfam/errors.hpp"

using namespace charfam;

TEST_CASE("inner products of standard characters") {
  auto h = make_heisenberg(3);
  ClassFunction one = trivial_character(h);
  CHECK(inner_product(one, one) == Cyclotomic::integer(1));
  ClassFunction reg = regular_character(h);
  CHECK(inner_product(reg, one) == Cyclotomic::integer(1));

  auto c9 = make_cyclic(9);
  CHECK_THROWS_AS(inner_product(trivial_character(c9), trivial_character(h)),
                  GroupMismatchError);
}

TEST_CASE("dixon prime choice") {
  CHECK(dixon_prime(27, 3) == 13);
  CHECK(dixon_prime(243, 3) == 37);  // 31 = 1 mod 3 but 31^2 < 4*243
  CHECK(dixon_prime(9, 9) == 19);
  CHECK(dixon_prime(27, 27) == 109);
}

TEST_CASE("character table of cyclic(3)") {
  auto c3 = make_cyclic(3);
  CharacterTable t = character_table(c3);
  REQUIRE(t.irreducibles.size() == 3);
  for (const auto& chi : t.irreducibles) CHECK(chi.degree() == Cyclotomic::integer(1));
  // values are exactly the three cube roots of unity at the generator class
  std::set<std::string> values;
  for (const auto& chi : t.irreducibles) values.insert(chi.value_at(1).str());
  CHECK(values.size() == 3);
  CHECK(values.count("1") == 1);
}

TEST_CASE("character table degree multisets") {
  auto h = make_heisenberg(3);
  CharacterTable th = character_table(h);
  REQUIRE(th.irreducibles.size() == 11);
  int lin = 0, deg3 = 0;
  Cyclotomic sum = Cyclotomic::integer(0);
  for (const auto& chi : th.irreducibles) {
    sum += chi.degree() * chi.degree();
    if (chi.degree() == Cyclotomic::integer(1)) ++lin;
    if (chi.degree() == Cyclotomic::integer(3)) ++deg3;
  }
  CHECK(lin == 9);
  CHECK(deg3 == 2);
  CHECK(sum == Cyclotomic::integer(27));

  auto e5 = make_extraspecial5(3);
  CharacterTable t5 = character_table(e5);
  REQUIRE(t5.irreducibles.size() == 83);
  int lin5 = 0, deg9 = 0;
  Cyclotomic sum5 = Cyclotomic::integer(0);
  for (const auto& chi : t5.irreducibles) {
    sum5 += chi.degree() * chi.degree();
    if (chi.degree() == Cyclotomic::integer(1)) ++lin5;
    if (chi.degree() == Cyclotomic::integer(9)) ++deg9;
  }
  CHECK(lin5 == 81);
  CHECK(deg9 == 2);
  CHECK(sum5 == Cyclotomic::integer(243));
}

TEST_CASE("orthogonality oracle on the heisenberg table") {
  auto h = make_heisenberg(3);
  CharacterTable t = character_table(h);
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    for (std::size_t j = 0; j < t.irreducibles.size(); ++j) {
      Cyclotomic ip = inner_product(t.irreducibles[i], t.irreducibles[j]);
      CHECK(ip == Cyclotomic::integer(i == j ? 1 : 0));
    }
}

TEST_CASE("restriction") {
  auto h = make_heisenberg(3);
  ClassFunction reg = regular_character(h);
  AsGroup triv = as_group(trivial_subgroup(h));
  ClassFunction r = restrict_to(reg, triv);
  CHECK(r.value_at(0) == Cyclotomic::integer(27));

  AsGroup zg = as_group(center(h));
  CHECK(restrict_to(trivial_character(h), zg) == trivial_character(zg.group));
}

TEST_CASE("induction basics") {
  auto h = make_heisenberg(3);
  // induction of the trivial character is the permutation character of G/H
  AsGroup zg = as_group(center(h));
  ClassFunction ind = induce(trivial_character(zg.group), h, zg.embedding(h));
  CHECK(ind.degree() == Cyclotomic::integer(9));
  CHECK(ind == perm_character(h, center(h)));

  // induction from the trivial subgroup gives the regular character
  AsGroup triv = as_group(trivial_subgroup(h));
  ClassFunction reg = induce(trivial_character(triv.group), h, triv.embedding(h));
  CHECK(reg == regular_character(h));

  // degree multiplies by the index
  auto c9 = make_cyclic(9);
  SubgroupSet c3in9 = closure(c9, {3});
  AsGroup c3g = as_group(c3in9);
  ClassFunction w = regular_character(c3g.group) - trivial_character(c3g.group);
  ClassFunction iw = induce(w, c9, c3g.embedding(c9));
  CHECK(iw.degree() == Cyclotomic::integer(3 * 2));
}

TEST_CASE("frobenius reciprocity on seeded random class functions") {
  auto h = make_heisenberg(3);
  auto subs = all_subgroups(h);
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> val(-3, 3);
  int done = 0;
  while (done < 50) {
    const auto& s = subs[rng() % subs.size()];
    AsGroup asg = as_group(s);
    GroupEmbedding emb = asg.embedding(h);
    std::vector<Cyclotomic> fv(asg.group->conjugacy().classes.size());
    for (auto& v : fv) v = Cyclotomic::integer(val(rng));
    ClassFunction f(asg.group, std::move(fv));
    std::vector<Cyclotomic> gv(h->conjugacy().classes.size());
    for (auto& v : gv) v = Cyclotomic::integer(val(rng));
    ClassFunction g(h, std::move(gv));
    CHECK(inner_product(induce(f, h, emb), g) == inner_product(f, restrict_to(g, asg)));
    ++done;
  }
}

TEST_CASE("permutation characters and reduced variants") {
  auto c9 = make_cyclic(9);
  // reduced regular representation of <a>: degree p-1 at the identity
  SubgroupSet triv = trivial_subgroup(c9);
  ClassFunction ired = reduced_perm_character(c9, triv);
  CHECK(ired.degree() == Cyclotomic::integer(8));

  // I_{G/G} vanishes
  ClassFunction zero = reduced_perm_character(c9, full_subgroup(c9));
  for (int k = 0; k < zero.num_classes(); ++k) CHECK(zero.value_on_class(k).is_zero());
}

TEST_CASE("W character case values") {
  // E = C_3 x C_3, C = first coordinate line: W = I_{E/C} + 2 I_{E/1}
  auto e = make_elementary_abelian(3, 2);
  SubgroupSet c = closure(e, {1});
  ClassFunction w = reduced_perm_character(e, c) +
                    reduced_perm_character(e, trivial_subgroup(e)).scaled(2);
  CHECK(w.degree() == Cyclotomic::integer((3 - 1) * 9));  // (p-1)p^2 = 18
  for (int x = 1; x < e->order(); ++x) {
    if (c.contains(x))
      CHECK(w.value_at(x).is_zero());
    else
      CHECK(w.value_at(x) == Cyclotomic::integer(-3));
  }
}

TEST_CASE("is_character") {
  auto c3 = make_cyclic(3);
  CharacterTable t = character_table(c3);

  ClassFunction two = trivial_character(c3).scaled(2);
  IsCharacterResult r = is_character(two, t);
  REQUIRE(r.ok);
  int nonzero = 0;
  for (const auto& m : r.multiplicities)
    if (m != 0) ++nonzero;
  CHECK(nonzero == 1);

  // f(1) = 1, f = 2 elsewhere: trivial multiplicity 5/3
  std::vector<Cyclotomic> fv{Cyclotomic::integer(1), Cyclotomic::integer(2),
                             Cyclotomic::integer(2)};
  ClassFunction f(c3, std::move(fv));
  IsCharacterResult bad = is_character(f, t);
  CHECK(!bad.ok);
  CHECK(bad.bad_value == Cyclotomic::rational(mpq_class(5, 3)));
}

TEST_CASE("fixed point freeness") {
  auto c3 = make_cyclic(3);
  ClassFunction red = regular_character(c3) - trivial_character(c3);
  CHECK(fixed_point_free(red));
  CHECK(!fixed_point_free(trivial_character(c3)));

  auto c9 = make_cyclic(9);
  CHECK(fixed_point_free(regular_character(c9) - trivial_character(c9)));

  // freeness forces zero trivial multiplicity on every nontrivial cyclic subgroup
  SubgroupSet c3in9 = closure(c9, {3});
  AsGroup sub = as_group(c3in9);
  ClassFunction res = restrict_to(regular_character(c9) - trivial_character(c9), sub);
  CHECK(inner_product(res, trivial_character(sub.group)).is_zero());
}

TEST_CASE("table row order is deterministic") {
  auto h = make_heisenberg(3);
  CharacterTable a = character_table(h);
  CharacterTable b = character_table(h);
  REQUIRE(a.irreducibles.size() == b.irreducibles.size());
  for (std::size_t i = 0; i < a.irreducibles.size(); ++i)
    CHECK(a.irreducibles[i] == b.irreducibles[i]);
  // degrees ascend
  for (std::size_t i = 1; i < a.irreducibles.size(); ++i)
    CHECK(Cyclotomic::compare(a.irreducibles[i - 1].degree(), a.irreducibles[i].degree()) <= 0);
}

TEST_CASE("class function serialization round trip") {
  auto c9 = make_cyclic(9);
  CharacterTable t = character_table(c9);
  for (const auto& chi : t.irreducibles) {
    std::stringstream ss;
    write_class_function(ss, chi);
    ClassFunction back = read_class_function(ss, c9);
    CHECK(back == chi);
  }
}

TEST_CASE("conjugation invariance of is_character verdicts") {
  auto h = make_heisenberg(3);
  CharacterTable t = character_table(h);
  const ClassFunction& chi = t.irreducibles.back();
  auto subs = all_subgroups(h);
  for (const auto& s : subs) {
    if (s.size() != 9) continue;
    AsGroup asg = as_group(s);
    IsCharacterResult r1 = is_character(restrict_to(chi, asg), character_table(asg.group));
    for (int g = 0; g < h->order(); g += 5) {
      SubgroupSet cs = conjugate_subgroup(s, g);
      AsGroup casg = as_group(cs);
      IsCharacterResult r2 = is_character(restrict_to(chi, casg), character_table(casg.group));
      CHECK(r1.ok == r2.ok);
      CHECK(r1.multiplicities == r2.multiplicities);
    }
    break;
  }
}
