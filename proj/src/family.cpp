#include "charfam/family.hpp"

#include <algorithm>
#include <set>

#include "charfam/errors.hpp"

namespace charfam {

bool SubgroupFamily::contains(const Bitset& b) const { return index_of(b) >= 0; }

int SubgroupFamily::index_of(const Bitset& b) const {
  int count = b.count();
  auto it = std::lower_bound(members.begin(), members.end(), std::make_pair(count, b),
                             [](const SubgroupSet& s, const std::pair<int, Bitset>& key) {
                               if (s.members.count() != key.first)
                                 return s.members.count() < key.first;
                               return s.members.precedes(key.second);
                             });
  if (it == members.end() || !(it->members == b)) return -1;
  return static_cast<int>(it - members.begin());
}

namespace {

void sort_members(std::vector<SubgroupSet>& members) {
  std::sort(members.begin(), members.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members.precedes(b.members);
  });
  members.erase(std::unique(members.begin(), members.end(),
                            [](const SubgroupSet& a, const SubgroupSet& b) {
                              return a.members == b.members;
                            }),
                members.end());
}

}  // namespace

SubgroupFamily make_family(const GroupPtr& g, std::vector<SubgroupSet> members,
                           const std::vector<SubgroupSet>& lattice, std::string label) {
  sort_members(members);
  SubgroupFamily fam{g, std::move(members), std::move(label)};
  if (fam.members.empty()) return fam;
  if (fam.members.front().size() != 1)
    throw InvalidTableError("family '" + fam.label + "' misses the trivial subgroup");
  for (const auto& h : fam.members) {
    for (int x = 0; x < g->order(); ++x)
      if (!fam.contains(conjugate_subgroup(h, x).members))
        throw NotClosedError("family '" + fam.label + "' is not closed under conjugation");
  }
  for (const auto& l : lattice) {
    if (fam.contains(l.members)) continue;
    for (const auto& h : fam.members)
      if (l.members.subset_of(h.members))
        throw NotClosedError("family '" + fam.label + "' is not closed under subgroups");
  }
  return fam;
}

SubgroupFamily family_trivial_intersection(const GroupPtr& g, const SubgroupSet& z0,
                                           const std::vector<SubgroupSet>& lattice) {
  std::vector<SubgroupSet> members;
  for (const auto& h : lattice)
    if (h.members.intersect(z0.members).count() == 1) members.push_back(h);
  return make_family(g, std::move(members), lattice, "trivial-intersection");
}

PosetDiagram make_poset(std::vector<std::string> objects,
                        std::vector<std::pair<int, int>> relations) {
  PosetDiagram p;
  p.objects = std::move(objects);
  int n = p.num_nodes();
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : relations) {
    if (x < 0 || x >= n || y < 0 || y >= n) throw InvalidTableError("poset relation out of range");
    if (x == y) throw InvalidTableError("poset relation is reflexive");
    if (seen.count({y, x})) throw InvalidTableError("poset relation is not antisymmetric");
    seen.insert({x, y});
  }
  p.relations.assign(seen.begin(), seen.end());
  // one-dimensional: sources and targets of the strict relations are disjoint
  std::vector<char> is_low(n, 0), is_high(n, 0);
  for (auto [x, y] : p.relations) {
    is_low[x] = 1;
    is_high[y] = 1;
  }
  p.one_dimensional = true;
  for (int i = 0; i < n; ++i)
    if (is_low[i] && is_high[i]) p.one_dimensional = false;
  if (!p.one_dimensional) throw NotOneDimensionalError("poset has a chain of length two");
  return p;
}

PosetDiagram poset_DH(const PosetDiagram& poset, const std::vector<SubgroupFamily>& subfamilies,
                      const SubgroupSet& h, std::vector<int>* node_ids) {
  std::vector<int> keep;
  std::vector<int> new_id(poset.num_nodes(), -1);
  std::vector<std::string> objects;
  for (int d = 0; d < poset.num_nodes(); ++d) {
    if (!subfamilies[d].contains(h.members)) continue;
    new_id[d] = static_cast<int>(objects.size());
    objects.push_back(poset.objects[d]);
    keep.push_back(d);
  }
  std::vector<std::pair<int, int>> rel;
  for (auto [x, y] : poset.relations)
    if (new_id[x] >= 0 && new_id[y] >= 0) rel.emplace_back(new_id[x], new_id[y]);
  if (node_ids) *node_ids = keep;
  PosetDiagram out;
  out.objects = std::move(objects);
  out.relations = std::move(rel);
  out.one_dimensional = poset.one_dimensional;
  return out;
}

bool graph_simply_connected(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes == 0) return false;
  // connected?
  std::vector<std::vector<int>> adj(nodes);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != nodes) return false;
  return nodes - static_cast<int>(edges.size()) == 1;
}

const char* type_name(SubgroupType t) {
  switch (t) {
    case SubgroupType::A: return "A";
    case SubgroupType::B: return "B";
    case SubgroupType::E: return "E";
  }
  return "?";
}

std::vector<TypeInfo> classify_types(const SubgroupFamily& family, const SubgroupSet& q,
                                     const SubgroupSet& cgq) {
  (void)q;
  std::vector<TypeInfo> tags(family.members.size());
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& h = family.members[i];
    TypeInfo info;
    if (h.members.subset_of(cgq.members)) {
      info.primary = SubgroupType::A;
      info.literal_reading = SubgroupType::A;
    } else {
      info.primary = is_cyclic(h) ? SubgroupType::B : SubgroupType::E;
      SubgroupSet k{family.group, h.members.intersect(cgq.members)};
      info.literal_reading = is_cyclic(k) ? SubgroupType::B : SubgroupType::E;
    }
    tags[i] = info;
  }
  // C marks: members of C_G(Q) contained in some B or E member
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (tags[i].primary != SubgroupType::A) continue;
    for (std::size_t j = 0; j < family.members.size(); ++j) {
      if (tags[j].primary == SubgroupType::A) continue;
      if (family.members[i].members.subset_of(family.members[j].members)) {
        tags[i].type_c = true;
        break;
      }
    }
  }
  return tags;
}

std::vector<SubgroupSet> typeE_max_elementary(const SubgroupFamily& family,
                                              const std::vector<TypeInfo>& tags) {
  const GroupPtr& g = family.group;
  std::set<Bitset> reps;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (tags[i].primary != SubgroupType::E) continue;
    // the unique rank-two elementary abelian subgroup of this member
    std::vector<SubgroupSet> found;
    for (const auto& cand : family.members)
      if (cand.size() > 1 && cand.members.subset_of(family.members[i].members) &&
          is_elementary_abelian(cand) && rank(cand) == 2)
        found.push_back(cand);
    // keep only the maximal ones (rank two that are not inside a larger one
    // cannot happen; uniqueness is the structural claim being used)
    if (found.size() != 1)
      throw InvalidTableError("type E member without a unique rank-two elementary abelian");
    reps.insert(canonical_conjugate(found.front()).members);
  }
  std::vector<SubgroupSet> out;
  for (const auto& b : reps) out.push_back(SubgroupSet{g, b});
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members.precedes(b.members);
  });
  return out;
}

SubfamilyDiagram build_jackson_subfamilies(const SubgroupFamily& family,
                                           const std::vector<TypeInfo>& tags,
                                           const std::vector<SubgroupSet>& e_reps,
                                           const SubgroupSet& cgq,
                                           const std::vector<SubgroupSet>& lattice) {
  (void)cgq;
  std::vector<std::string> objects{"a"};
  for (std::size_t i = 0; i < e_reps.size(); ++i) objects.push_back("e" + std::to_string(i + 1));
  SubfamilyDiagram diagram;
  diagram.poset = make_poset(std::move(objects), {});

  // node a: all type A members
  {
    std::vector<SubgroupSet> mem;
    for (std::size_t i = 0; i < family.members.size(); ++i)
      if (tags[i].primary == SubgroupType::A) mem.push_back(family.members[i]);
    diagram.subfamilies.push_back(make_family(family.group, std::move(mem), lattice, "H_a"));
  }

  // node e_i: type E members over E_i, closed under subgroups within the family
  for (std::size_t e = 0; e < e_reps.size(); ++e) {
    std::vector<SubgroupSet> mem;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      if (tags[i].primary != SubgroupType::E) continue;
      // E_e <=_G member?
      bool over = false;
      for (int x = 0; x < family.group->order() && !over; ++x)
        if (conjugate_subgroup(e_reps[e], x).members.subset_of(family.members[i].members))
          over = true;
      if (!over) continue;
      mem.push_back(family.members[i]);
    }
    // subgroup closure by fiat
    std::size_t base = mem.size();
    for (std::size_t i = 0; i < base; ++i)
      for (const auto& l : family.members)
        if (l.members.subset_of(mem[i].members)) mem.push_back(l);
    if (mem.empty())
      throw InvalidTableError("NotClosed: empty type E node");
    diagram.subfamilies.push_back(
        make_family(family.group, std::move(mem), lattice, "H_e" + std::to_string(e + 1)));
  }
  return diagram;
}

namespace {

Verdict connectivity_check(const SubfamilyDiagram& diagram, const SubgroupFamily& family,
                           bool almost) {
  if (!diagram.poset.one_dimensional)
    throw NotOneDimensionalError("connectivity check needs a one-dimensional poset");
  long exempt = 0;
  for (const auto& h : family.members) {
    PosetDiagram dh = poset_DH(diagram.poset, diagram.subfamilies, h);
    bool cyclic_pp = prime_power_order(h).has_value() && is_cyclic(h);
    if (almost && cyclic_pp) {
      // empty or a disjoint union of points
      if (!dh.relations.empty())
        return Verdict::fail("cyclic prime-power member with related nodes in its subposet: " +
                             std::to_string(h.size()) + "-element subgroup");
      ++exempt;
      continue;
    }
    if (!graph_simply_connected(dh.num_nodes(), dh.relations)) {
      std::string what = dh.num_nodes() == 0 ? "empty" : "not a tree";
      return Verdict::fail("subposet of a " + std::to_string(h.size()) +
                           "-element member is " + what);
    }
  }
  Verdict v = Verdict::pass();
  v.details["exempt_cyclic_members"] = exempt;
  return v;
}

}  // namespace

Verdict strongly_connected(const SubfamilyDiagram& diagram, const SubgroupFamily& family) {
  return connectivity_check(diagram, family, false);
}

Verdict almost_strongly_connected(const SubfamilyDiagram& diagram, const SubgroupFamily& family) {
  return connectivity_check(diagram, family, true);
}

Verdict covers_family(const SubfamilyDiagram& diagram, const SubgroupFamily& family) {
  std::vector<int> uncovered;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    bool covered = false;
    for (const auto& sub : diagram.subfamilies)
      if (sub.contains(family.members[i].members)) {
        covered = true;
        break;
      }
    if (!covered) uncovered.push_back(static_cast<int>(i));
  }
  if (uncovered.empty()) return Verdict::pass();
  Verdict v = Verdict::fail(std::to_string(uncovered.size()) + " members outside every subfamily");
  v.details["uncovered_count"] = uncovered.size();
  return v;
}

}  // namespace charfam
