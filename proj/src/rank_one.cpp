#include "charfam/rank_one.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "charfam/errors.hpp"
#include "charfam/parallel.hpp"

namespace charfam {

RankOneData build_rank_one_diagram(const GroupPtr& g, long n_override, unsigned jobs) {
  RankOneData data;
  data.group = g;
  const Group& G = *g;

  std::vector<SubgroupSet> lattice = all_subgroups(g);
  std::vector<SubgroupSet> members;
  data.all_prime_power_rank_one = true;
  for (const auto& s : lattice) {
    auto pk = prime_power_order(s);
    if (!pk) continue;
    if (s.size() == 1) {
      members.push_back(s);
      continue;
    }
    if (rank(s) == 1)
      members.push_back(s);
    else
      data.all_prime_power_rank_one = false;
  }
  data.family = make_family(g, std::move(members), lattice, "rank-one");
  data.ctx = build_family_context(data.family, jobs);

  // conjugacy classes of prime-order subgroups
  {
    std::set<Bitset> reps;
    for (const auto& s : data.family.members) {
      if (s.size() < 2) continue;
      int p = prime_power_order(s)->first;
      if (s.size() != p) continue;
      reps.insert(canonical_conjugate(s).members);
    }
    for (const auto& b : reps) data.d_reps.push_back(SubgroupSet{g, b});
    std::sort(data.d_reps.begin(), data.d_reps.end(),
              [](const SubgroupSet& a, const SubgroupSet& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a.members.precedes(b.members);
              });
  }

  long lcm_m = 1;
  for (const auto& d : data.d_reps) {
    long p = d.size();
    long m = normalizer(g, d).size() * (p - 1) / p;
    data.m_d.push_back(m);
    lcm_m = std::lcm(lcm_m, m);
  }
  if (n_override == 0) {
    data.n = lcm_m;
  } else {
    if (n_override <= 0 || n_override % lcm_m != 0)
      throw InvalidTableError("rank-one degree must be a positive multiple of lcm(m_d) = " +
                              std::to_string(lcm_m));
    data.n = n_override;
  }
  for (long m : data.m_d) data.n_d.push_back(data.n / m);

  // star poset: node 0 is the trivial node, leaves follow in rep order
  std::vector<std::string> objects{"1"};
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < data.d_reps.size(); ++i) {
    objects.push_back("d" + std::to_string(i + 1));
    rel.emplace_back(0, static_cast<int>(i + 1));
  }

  QuadrupleBundle bundle;
  bundle.group = g;
  bundle.diagram.poset = make_poset(std::move(objects), std::move(rel));

  // subfamily of node 0 is the trivial family; leaves collect members by the
  // class of their unique order-p subgroup
  bundle.diagram.subfamilies.push_back(
      make_family(g, {trivial_subgroup(g)}, lattice, "H_1"));
  for (std::size_t i = 0; i < data.d_reps.size(); ++i) {
    std::vector<SubgroupSet> mem{trivial_subgroup(g)};
    for (const auto& h : data.family.members) {
      if (h.size() < 2) continue;
      SubgroupSet om = omega1(h);
      if (canonical_conjugate(om).members == data.d_reps[i].members) mem.push_back(h);
    }
    bundle.diagram.subfamilies.push_back(
        make_family(g, std::move(mem), lattice, "H_d" + std::to_string(i + 1)));
  }

  // node 0: the trivial group with n copies of its trivial representation
  {
    QuadrupleNode node;
    node.gamma = trivial_subgroup(g);
    node.gamma_group = as_group(node.gamma);
    node.rho = trivial_character(node.gamma_group.group).scaled(data.n);
    node.witnesses.assign(bundle.diagram.subfamilies[0].members.size(), 0);
    bundle.nodes.push_back(std::move(node));
  }

  // leaves: Gamma_d = N_G(d), rho_d = n_d Ind_d^N (regular - trivial)
  for (std::size_t i = 0; i < data.d_reps.size(); ++i) {
    QuadrupleNode node;
    node.gamma = normalizer(g, data.d_reps[i]);
    node.gamma_group = as_group(node.gamma);
    Bitset inb(node.gamma_group.group->order());
    for (int x : data.d_reps[i].elements()) inb.set(node.gamma_group.from_parent[x]);
    AsGroup d_group = as_group(SubgroupSet{node.gamma_group.group, inb});
    ClassFunction w = regular_character(d_group.group) - trivial_character(d_group.group);
    node.rho = induce(w, node.gamma_group.group, d_group.embedding(node.gamma_group.group))
                   .scaled(data.n_d[i]);

    const SubgroupFamily& sub = bundle.diagram.subfamilies[i + 1];
    node.witnesses.resize(sub.members.size(), 0);
    for (std::size_t t = 0; t < sub.members.size(); ++t) {
      const auto& h = sub.members[t];
      if (h.size() < 2) continue;  // trivial member keeps the identity witness
      SubgroupSet om = omega1(h);
      int found = -1;
      for (int w2 = 0; w2 < G.order() && found < 0; ++w2)
        if (conjugate_subgroup(om, w2).members == data.d_reps[i].members) found = w2;
      if (found < 0) throw InvalidTableError("no witness conjugating omega1 onto the class rep");
      node.witnesses[t] = found;
    }
    bundle.nodes.push_back(std::move(node));
  }

  // edge maps: the trivial group into each leaf normalizer
  for (std::size_t i = 0; i < data.d_reps.size(); ++i)
    bundle.edge_maps.push_back(make_embedding(bundle.nodes[0].gamma_group.group,
                                              bundle.nodes[i + 1].gamma_group.group, {0},
                                              GroupEmbedding::Kind::Inclusion));
  data.bundle = std::move(bundle);
  return data;
}

Verdict verify_rank_one_freeness(const RankOneData& data, unsigned jobs) {
  const SubgroupFamily& fam = data.family;
  // V_H = rho_d after alpha_H^d: well defined across nodes and fixed point free
  std::size_t nmem = fam.members.size();
  std::vector<std::string> failures(nmem);
  std::vector<char> fpf_flags(nmem, 1);
  std::vector<char> cyclic_triv_zero(nmem, 1);
  parallel_for(nmem, jobs, [&](std::size_t i) {
    const auto& h = fam.members[i];
    const AsGroup& hg = data.ctx.as_groups[i];
    std::optional<ClassFunction> vh;
    for (std::size_t d = 0; d < data.bundle.nodes.size(); ++d) {
      const SubgroupFamily& sub = data.bundle.diagram.subfamilies[d];
      int si = sub.index_of(h.members);
      if (si < 0) continue;
      ClassFunction cand =
          pullback(data.bundle.nodes[d].rho,
                   assignment_embedding(data.bundle, static_cast<int>(d), si, hg));
      if (!vh) {
        vh = std::move(cand);
      } else if (!(*vh == cand)) {
        failures[i] = "member index " + std::to_string(i) +
                      ": representation depends on the node (" +
                      data.bundle.diagram.poset.objects[d] + ")";
        return;
      }
    }
    if (!vh) {
      failures[i] = "member index " + std::to_string(i) + " belongs to no node";
      return;
    }
    if (h.size() > 1) {
      CharacterTable table = character_table(hg.group);
      IsCharacterResult chr = is_character(*vh, table);
      if (!chr.ok) {
        failures[i] = "member index " + std::to_string(i) + ": V_H is not a character";
        return;
      }
      fpf_flags[i] = fixed_point_free(*vh) ? 1 : 0;
      if (is_cyclic(h))
        cyclic_triv_zero[i] =
            inner_product(*vh, trivial_character(hg.group)).is_zero() ? 1 : 0;
    }
  });
  for (std::size_t i = 0; i < nmem; ++i)
    if (!failures[i].empty()) return Verdict::fail(failures[i]);

  bool all_fpf = true, all_cyclic_zero = true;
  std::size_t first_bad = nmem;
  for (std::size_t i = 0; i < nmem; ++i) {
    if (!fpf_flags[i]) {
      all_fpf = false;
      if (first_bad == nmem) first_bad = i;
    }
    if (!cyclic_triv_zero[i]) all_cyclic_zero = false;
  }
  // the elementwise freeness and the cyclic trivial-multiplicity readings
  // must agree; compatibility makes them equivalent
  if (all_fpf != all_cyclic_zero)
    return Verdict::fail("freeness cross-check disagrees with the cyclic trivial multiplicities");
  if (!all_fpf)
    return Verdict::fail("member index " + std::to_string(first_bad) +
                         " carries a representation with fixed points");

  Verdict v = Verdict::pass();
  v.details["members"] = fam.members.size();
  return v;
}

Verdict verify_rank_one(const RankOneData& data, unsigned jobs) {
  struct Step {
    const char* name;
    std::function<Verdict()> run;
  };
  const Step steps[] = {
      {"covering", [&] { return covers_family(data.bundle.diagram, data.family); }},
      {"strong connectedness", [&] { return strongly_connected(data.bundle.diagram, data.family); }},
      {"diagram of representations", [&] { return check_diagram_of_reps(data.bundle); }},
      {"assignment compatibility",
       [&] { return check_assignment_compatibility(data.bundle, data.ctx, jobs); }},
      {"freeness", [&] { return verify_rank_one_freeness(data, jobs); }},
  };
  for (const auto& step : steps) {
    Verdict v = step.run();
    if (!v.passed()) {
      v.witness = std::string(step.name) + ": " + v.witness;
      return v;
    }
  }
  Verdict v = Verdict::pass();
  nlohmann::ordered_json md = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < data.d_reps.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["node"] = "d" + std::to_string(i + 1);
    entry["class_order"] = data.d_reps[i].size();
    entry["normalizer_order"] = normalizer(data.group, data.d_reps[i]).size();
    entry["m_d"] = data.m_d[i];
    entry["n_d"] = data.n_d[i];
    md.push_back(std::move(entry));
  }
  v.details["n"] = data.n;
  v.details["m_d"] = std::move(md);
  v.details["members"] = data.family.members.size();
  v.details["all_prime_power_rank_one"] = data.all_prime_power_rank_one;
  return v;
}

}  // namespace charfam
