#include "charfam/quadruple.hpp"

#include <algorithm>

#include "charfam/errors.hpp"
#include "charfam/parallel.hpp"

namespace charfam {

FamilyContext build_family_context(const SubgroupFamily& family, unsigned jobs) {
  FamilyContext ctx;
  ctx.family = &family;
  ctx.as_groups.resize(family.members.size());
  parallel_for(family.members.size(), jobs,
               [&](std::size_t i) { ctx.as_groups[i] = as_group(family.members[i]); });
  return ctx;
}

CompatibleFamily restrict_family(const ClassFunction& f, const FamilyContext& ctx, unsigned jobs) {
  (void)jobs;
  CompatibleFamily v;
  v.reserve(ctx.as_groups.size());
  for (const auto& asg : ctx.as_groups) v.push_back(restrict_to(f, asg));
  return v;
}

Verdict check_compatible_family(const FamilyContext& ctx, const CompatibleFamily& v,
                                unsigned jobs) {
  const SubgroupFamily& fam = *ctx.family;
  const Group& G = *fam.group;
  if (v.size() != fam.members.size())
    throw GroupMismatchError("compatible family size mismatch");

  std::size_t n = fam.members.size();
  std::vector<std::string> failures(n);

  // onto conjugations: V_{gHg^-1}(g h g^-1) = V_H(h)
  parallel_for(n, jobs, [&](std::size_t i) {
    const auto& h = fam.members[i];
    const auto& hg = ctx.as_groups[i];
    auto elems = h.elements();
    for (int g = 0; g < G.order(); ++g) {
      SubgroupSet k = conjugate_subgroup(h, g);
      int j = fam.index_of(k.members);
      if (j < 0) {
        failures[i] = "family not closed under conjugation";
        return;
      }
      const auto& kg = ctx.as_groups[j];
      for (int x : elems) {
        if (v[i].value_at(hg.from_parent[x]) != v[j].value_at(kg.from_parent[G.conj(g, x)])) {
          failures[i] = "conjugation by element " + std::to_string(g) + " from the " +
                        std::to_string(h.size()) + "-element member at index " +
                        std::to_string(i);
          return;
        }
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!failures[i].empty()) return Verdict::fail(failures[i]);

  // inclusions: V_H = V_K restricted to H
  parallel_for(n, jobs, [&](std::size_t i) {
    const auto& h = fam.members[i];
    const auto& hg = ctx.as_groups[i];
    auto elems = h.elements();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !h.members.subset_of(fam.members[j].members)) continue;
      const auto& kg = ctx.as_groups[j];
      for (int x : elems) {
        if (v[i].value_at(hg.from_parent[x]) != v[j].value_at(kg.from_parent[x])) {
          failures[i] = "inclusion of member index " + std::to_string(i) +
                        " into member index " + std::to_string(j);
          return;
        }
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!failures[i].empty()) return Verdict::fail(failures[i]);
  return Verdict::pass();
}

GroupEmbedding assignment_embedding(const QuadrupleBundle& bundle, int node, int member,
                                    const AsGroup& h_group) {
  const Group& G = *bundle.group;
  const QuadrupleNode& nd = bundle.nodes[node];
  int g = nd.witnesses[member];
  std::vector<int> map(h_group.group->order());
  for (int s = 0; s < h_group.group->order(); ++s) {
    int image = G.conj(g, h_group.to_parent[s]);
    int t = nd.gamma_group.from_parent[image];
    if (t < 0)
      throw InvalidTableError("assignment witness does not conjugate the member into the node group");
    map[s] = t;
  }
  return make_embedding(h_group.group, nd.gamma_group.group, std::move(map),
                        g == 0 ? GroupEmbedding::Kind::Inclusion
                               : GroupEmbedding::Kind::ConjugationInclusion,
                        g);
}

Verdict check_diagram_of_reps(const QuadrupleBundle& bundle) {
  for (std::size_t e = 0; e < bundle.diagram.poset.relations.size(); ++e) {
    auto [x, y] = bundle.diagram.poset.relations[e];
    const auto& rx = bundle.nodes[x].rho;
    const auto& ry = bundle.nodes[y].rho;
    if (rx.degree() != ry.degree())
      return Verdict::fail("degree mismatch on edge " + bundle.diagram.poset.objects[x] + " < " +
                           bundle.diagram.poset.objects[y] + ": " + rx.degree().str() + " vs " +
                           ry.degree().str());
    ClassFunction pulled = pullback(ry, bundle.edge_maps[e]);
    if (!(pulled == rx))
      return Verdict::fail("representations disagree along edge " +
                           bundle.diagram.poset.objects[x] + " < " +
                           bundle.diagram.poset.objects[y]);
  }
  return Verdict::pass();
}

namespace {

// parent-element evaluation of alpha_H^d
struct Assignment {
  const Group* G;
  const QuadrupleNode* node;
  int witness;
  int operator()(int parent_element) const {
    return node->gamma_group.from_parent[G->conj(witness, parent_element)];
  }
};

// exists gamma in Gamma_d with lhs(x) = gamma rhs(x) gamma^-1 on the given
// parent elements; values are Gamma_d group indices
bool inner_twist_exists(const Group& gamma, const std::vector<int>& lhs,
                        const std::vector<int>& rhs) {
  for (int c = 0; c < gamma.order(); ++c) {
    bool ok = true;
    for (std::size_t t = 0; t < lhs.size(); ++t)
      if (lhs[t] != gamma.conj(c, rhs[t])) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// generators of the member subgroup as parent elements
std::vector<int> member_generators(const FamilyContext& ctx, int family_index) {
  const AsGroup& asg = ctx.as_groups[family_index];
  std::vector<int> out;
  for (int s : asg.group->generators()) out.push_back(asg.to_parent[s]);
  if (out.empty()) out.push_back(0);
  return out;
}

}  // namespace

Verdict check_assignment_compatibility(const QuadrupleBundle& bundle, const FamilyContext& ctx,
                                       unsigned jobs) {
  const Group& G = *bundle.group;
  const SubgroupFamily& fam = *ctx.family;

  for (std::size_t d = 0; d < bundle.nodes.size(); ++d) {
    const QuadrupleNode& node = bundle.nodes[d];
    const SubgroupFamily& sub = bundle.diagram.subfamilies[d];
    const Group& Gamma = *node.gamma_group.group;
    std::size_t n = sub.members.size();
    std::vector<std::string> failures(n);

    parallel_for(n, jobs, [&](std::size_t i) {
      int fi = fam.index_of(sub.members[i].members);
      Assignment ai{&G, &node, node.witnesses[i]};
      std::vector<int> gens = member_generators(ctx, fi);
      // onto conjugations within the node subfamily
      for (int g = 0; g < G.order(); ++g) {
        SubgroupSet k = conjugate_subgroup(sub.members[i], g);
        int j = sub.index_of(k.members);
        if (j < 0) {
          failures[i] = "node subfamily not closed under conjugation";
          return;
        }
        Assignment aj{&G, &node, node.witnesses[j]};
        std::vector<int> lhs, rhs;
        for (int x : gens) {
          lhs.push_back(aj(G.conj(g, x)));
          rhs.push_back(ai(x));
        }
        if (!inner_twist_exists(Gamma, lhs, rhs)) {
          failures[i] = "node " + bundle.diagram.poset.objects[d] +
                        ": no inner twist for conjugation by " + std::to_string(g) +
                        " from member index " + std::to_string(i);
          return;
        }
      }
      // inclusions into larger members of the same node subfamily
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !sub.members[i].members.subset_of(sub.members[j].members)) continue;
        Assignment aj{&G, &node, node.witnesses[j]};
        std::vector<int> lhs, rhs;
        for (int x : gens) {
          lhs.push_back(aj(x));
          rhs.push_back(ai(x));
        }
        if (!inner_twist_exists(Gamma, lhs, rhs)) {
          failures[i] = "node " + bundle.diagram.poset.objects[d] +
                        ": no inner twist for the inclusion of member index " +
                        std::to_string(i) + " into member index " + std::to_string(j);
          return;
        }
      }
    });
    for (std::size_t i = 0; i < n; ++i)
      if (!failures[i].empty()) return Verdict::fail(failures[i]);
  }

  // edges: A_y restricted to H_x equals mu_{x,y} after A_x, up to Inn(Gamma_y)
  for (std::size_t e = 0; e < bundle.diagram.poset.relations.size(); ++e) {
    auto [x, y] = bundle.diagram.poset.relations[e];
    const SubgroupFamily& subx = bundle.diagram.subfamilies[x];
    const SubgroupFamily& suby = bundle.diagram.subfamilies[y];
    const GroupEmbedding& mu = bundle.edge_maps[e];
    const Group& GammaY = *bundle.nodes[y].gamma_group.group;
    for (std::size_t i = 0; i < subx.members.size(); ++i) {
      int j = suby.index_of(subx.members[i].members);
      if (j < 0)
        return Verdict::fail("edge " + bundle.diagram.poset.objects[x] + " < " +
                             bundle.diagram.poset.objects[y] +
                             ": lower subfamily not contained in the upper one");
      int fi = fam.index_of(subx.members[i].members);
      Assignment ax{&G, &bundle.nodes[x], bundle.nodes[x].witnesses[i]};
      Assignment ay{&G, &bundle.nodes[y], bundle.nodes[y].witnesses[j]};
      std::vector<int> lhs, rhs;
      for (int t : member_generators(ctx, fi)) {
        lhs.push_back(ay(t));
        rhs.push_back(mu.map[ax(t)]);
      }
      if (!inner_twist_exists(GammaY, lhs, rhs))
        return Verdict::fail("edge " + bundle.diagram.poset.objects[x] + " < " +
                             bundle.diagram.poset.objects[y] +
                             ": no inner twist for member index " + std::to_string(i));
    }
  }
  return Verdict::pass();
}

Verdict check_factorization(const CompatibleFamily& v, const QuadrupleBundle& bundle,
                            const FamilyContext& ctx, unsigned jobs) {
  const Group& G = *bundle.group;
  const SubgroupFamily& fam = *ctx.family;
  for (std::size_t d = 0; d < bundle.nodes.size(); ++d) {
    const QuadrupleNode& node = bundle.nodes[d];
    const SubgroupFamily& sub = bundle.diagram.subfamilies[d];
    std::size_t n = sub.members.size();
    std::vector<std::string> failures(n);
    parallel_for(n, jobs, [&](std::size_t i) {
      int fi = fam.index_of(sub.members[i].members);
      const AsGroup& hg = ctx.as_groups[fi];
      Assignment a{&G, &node, node.witnesses[i]};
      for (int x : sub.members[i].elements()) {
        const Cyclotomic& lhs = v[fi].value_at(hg.from_parent[x]);
        const Cyclotomic& rhs = node.rho.value_at(a(x));
        if (lhs != rhs) {
          failures[i] = "node " + bundle.diagram.poset.objects[d] + ", member index " +
                        std::to_string(i) + " (order " + std::to_string(sub.members[i].size()) +
                        "): value " + lhs.str() + " vs " + rhs.str() + " at element " +
                        std::to_string(x);
          return;
        }
      }
    });
    for (std::size_t i = 0; i < n; ++i)
      if (!failures[i].empty()) return Verdict::fail(failures[i]);
  }
  return Verdict::pass();
}

}  // namespace charfam
