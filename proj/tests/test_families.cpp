#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charfam/catalog.hpp"
#include "charfam/errors.hpp"
#include "charfam/jackson.hpp"

using namespace charfam;

namespace {

// spanning-tree oracle: simply connected iff DFS covers the graph without
// ever meeting a visited node along a non-tree edge
bool simply_connected_oracle(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes == 0) return false;
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<char> seen(nodes, 0);
  std::vector<std::pair<int, int>> stack{{0, -1}};  // (node, incoming edge)
  seen[0] = 1;
  int reached = 1;
  bool cycle = false;
  while (!stack.empty()) {
    auto [v, in_edge] = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (e == in_edge) continue;
      if (seen[w]) {
        cycle = true;
        continue;
      }
      seen[w] = 1;
      ++reached;
      stack.push_back({w, e});
    }
  }
  return reached == nodes && !cycle;
}

}  // namespace

TEST_CASE("family with trivial intersection") {
  auto h = make_heisenberg(3);
  auto lattice = all_subgroups(h);

  SubgroupFamily everything = family_trivial_intersection(h, trivial_subgroup(h), lattice);
  CHECK(everything.size() == 19);

  SubgroupFamily only_trivial = family_trivial_intersection(h, full_subgroup(h), lattice);
  CHECK(only_trivial.size() == 1);

  auto e5 = make_extraspecial5(3);
  auto lattice5 = all_subgroups(e5);
  SubgroupFamily fam = family_trivial_intersection(e5, center(e5), lattice5);
  for (const auto& s : fam.members) CHECK(rank(s) <= 2);
}

TEST_CASE("family closure violations are rejected") {
  auto h = make_heisenberg(3);
  auto lattice = all_subgroups(h);
  // a single nontrivial subgroup without its subgroups is not a family
  std::vector<SubgroupSet> bad{trivial_subgroup(h), lattice.back()};
  CHECK_THROWS_AS(make_family(h, bad, lattice, "bad"), NotClosedError);
}

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(make_poset({"a", "b", "c"}, {{0, 1}, {1, 2}}), NotOneDimensionalError);
  CHECK_THROWS_AS(make_poset({"a"}, {{0, 0}}), InvalidTableError);
  PosetDiagram star = make_poset({"1", "d1", "d2"}, {{0, 1}, {0, 2}});
  CHECK(star.one_dimensional);
}

TEST_CASE("simply connected graphs against the spanning-tree oracle") {
  CHECK(graph_simply_connected(1, {}));
  CHECK(!graph_simply_connected(0, {}));
  CHECK(!graph_simply_connected(2, {}));
  CHECK(graph_simply_connected(2, {{0, 1}}));
  CHECK(!graph_simply_connected(3, {{0, 1}, {1, 2}, {2, 0}}));

  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.push_back({a, b});
    CHECK(graph_simply_connected(n, edges) == simply_connected_oracle(n, edges));
  }
}

TEST_CASE("type classification on extraspecial5(3)") {
  auto g = make_extraspecial5(3);
  JacksonData data = build_jackson_data(g);

  // the trivial subgroup is type A
  CHECK(data.tags[0].primary == SubgroupType::A);

  long type_a = 0, type_b = 0, type_e = 0;
  for (std::size_t i = 0; i < data.family.members.size(); ++i) {
    const auto& h = data.family.members[i];
    switch (data.tags[i].primary) {
      case SubgroupType::A:
        ++type_a;
        CHECK(h.members.subset_of(data.cgq.members));
        break;
      case SubgroupType::B:
        ++type_b;
        CHECK(is_cyclic(h));
        break;
      case SubgroupType::E:
        ++type_e;
        CHECK(!is_cyclic(h));
        break;
    }
    // members meeting Q nontrivially are forced into type A
    if (h.members.intersect(data.q.members).count() > 1)
      CHECK(data.tags[i].primary == SubgroupType::A);
  }
  CHECK(type_e > 0);
  CHECK(type_a + type_b + type_e == static_cast<long>(data.family.members.size()));

  // every noncyclic member outside the centralizer has exactly one rank-two
  // elementary abelian subgroup
  for (std::size_t i = 0; i < data.family.members.size(); ++i) {
    if (data.tags[i].primary != SubgroupType::E) continue;
    int count = 0;
    for (const auto& cand : data.family.members)
      if (cand.members.subset_of(data.family.members[i].members) &&
          is_elementary_abelian(cand) && cand.size() == 9)
        ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("type E representatives are nonconjugate and every type E member sits over one") {
  auto g = make_extraspecial5(3);
  JacksonData data = build_jackson_data(g);
  const auto& reps = data.e_reps;
  CHECK(!reps.empty());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK(!are_conjugate(reps[i], reps[j]));

  for (std::size_t i = 0; i < data.family.members.size(); ++i) {
    if (data.tags[i].primary != SubgroupType::E) continue;
    int over = 0;
    for (const auto& e : reps) {
      bool found = false;
      for (int x = 0; x < g->order() && !found; ++x)
        if (conjugate_subgroup(e, x).members.subset_of(data.family.members[i].members))
          found = true;
      if (found) ++over;
    }
    CHECK(over == 1);
  }
}

TEST_CASE("subposet membership") {
  auto g = make_extraspecial5(3);
  JacksonData data = build_jackson_data(g);

  // the trivial subgroup belongs to every node
  PosetDiagram d0 = poset_DH(data.subfamilies.poset, data.subfamilies.subfamilies,
                             data.family.members[0]);
  CHECK(d0.num_nodes() == data.subfamilies.poset.num_nodes());

  // a noncyclic type A member belongs to the a node alone
  for (std::size_t i = 0; i < data.family.members.size(); ++i) {
    if (data.tags[i].primary != SubgroupType::A) continue;
    if (is_cyclic(data.family.members[i])) continue;
    PosetDiagram dh = poset_DH(data.subfamilies.poset, data.subfamilies.subfamilies,
                               data.family.members[i]);
    CHECK(dh.num_nodes() == 1);
    break;
  }

  // a type C member inside a type E subgroup belongs to at least two nodes
  bool found_c = false;
  for (std::size_t i = 0; i < data.family.members.size() && !found_c; ++i) {
    if (!data.tags[i].type_c) continue;
    if (!data.subfamilies.subfamilies[0].contains(data.family.members[i].members)) continue;
    PosetDiagram dh = poset_DH(data.subfamilies.poset, data.subfamilies.subfamilies,
                               data.family.members[i]);
    if (dh.num_nodes() >= 2) found_c = true;
  }
  CHECK(found_c);
}

TEST_CASE("compatible family checks") {
  auto h = make_heisenberg(3);
  auto lattice = all_subgroups(h);
  SubgroupFamily fam = family_trivial_intersection(h, center(h), lattice);
  FamilyContext ctx = build_family_context(fam);

  CharacterTable t = character_table(h);
  const ClassFunction& chi = t.irreducibles.back();
  CompatibleFamily v = restrict_family(chi, ctx);
  CHECK(check_compatible_family(ctx, v).passed());

  // swapping one member representation for a different same-degree character breaks it
  int target = -1;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    if (fam.members[i].size() == 3) {
      target = static_cast<int>(i);
      break;
    }
  REQUIRE(target >= 0);
  CharacterTable sub_table = character_table(ctx.as_groups[target].group);
  for (const auto& alt : sub_table.irreducibles) {
    if (alt == v[target]) continue;
    if (!(alt.degree() == v[target].degree())) continue;
    CompatibleFamily broken = v;
    broken[target] = alt;
    Verdict verdict = check_compatible_family(ctx, broken);
    CHECK(!verdict.passed());
    CHECK(!verdict.witness.empty());
    break;
  }
}

TEST_CASE("connectivity checkers on hand-built diagrams") {
  auto h = make_heisenberg(3);
  auto lattice = all_subgroups(h);
  SubgroupFamily fam = make_family(
      h, {trivial_subgroup(h), closure(h, {center(h).elements()[1]})}, lattice, "tiny");

  // two incomparable nodes both holding the noncyclic... use cyclic member:
  // the discrete two-node diagram with the order-3 member in both nodes is
  // fine almost-strongly but fails strong connectivity
  SubfamilyDiagram diag;
  diag.poset = make_poset({"x", "y"}, {});
  diag.subfamilies = {fam, fam};
  CHECK(!strongly_connected(diag, fam).passed());
  CHECK(almost_strongly_connected(diag, fam).passed());
  CHECK(covers_family(diag, fam).passed());

  // a genuine star is strongly connected
  SubfamilyDiagram star;
  star.poset = make_poset({"1", "d"}, {{0, 1}});
  SubgroupFamily trivfam = make_family(h, {trivial_subgroup(h)}, lattice, "triv");
  star.subfamilies = {trivfam, fam};
  CHECK(strongly_connected(star, fam).passed());
}
