#include "charfam/jackson.hpp"

#include <algorithm>

#include "charfam/catalog.hpp"
#include "charfam/errors.hpp"
#include "charfam/isomorphism.hpp"
#include "charfam/parallel.hpp"

namespace charfam {

namespace {

int group_prime(const Group& g) {
  if (g.order() == 1) return 0;
  int n = g.order();
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  while (n % p == 0) n /= p;
  return n == 1 ? p : -1;  // -1: not a prime power
}

SubgroupSet cyclic_span(const GroupPtr& g, int x) {
  Bitset b(g->order());
  int acc = 0;
  do {
    b.set(acc);
    acc = g->mul(acc, x);
  } while (acc != 0);
  return SubgroupSet{g, b};
}

}  // namespace

NormalQ find_normal_Q(const GroupPtr& g, int p, const std::vector<SubgroupSet>& lattice) {
  if (p == 2) throw EvenPrimeError("find_normal_Q: the construction assumes an odd prime");
  if (is_cyclic(full_subgroup(g))) throw NoSuchQError("find_normal_Q: group is cyclic");
  for (const auto& s : lattice) {
    if (s.size() != p * p) continue;
    if (!is_elementary_abelian(s)) continue;
    if (normalizer(g, s).size() != g->order()) continue;
    // least bitset wins; lattice is sorted, so the first hit is it
    SubgroupSet zg = center(g);
    Bitset zq = s.members.intersect(zg.members);
    int c = -1;
    for (int x : zq.members())
      if (x != 0 && g->element_order(x) == p) {
        c = x;
        break;
      }
    if (c < 0) {
      // center meets Q trivially only when Q is noncentral in a group with
      // larger center; any order-p element of Q then serves as the line
      for (int x : s.elements())
        if (x != 0) {
          c = x;
          break;
        }
    }
    SubgroupSet cline = cyclic_span(g, c);
    int a = -1;
    for (int x : s.elements())
      if (!cline.contains(x)) {
        a = x;
        break;
      }
    return NormalQ{s, c, a};
  }
  throw NoSuchQError("find_normal_Q: no normal C_p x C_p found");
}

ClassFunction jackson_chi(const GroupPtr& g, const SubgroupSet& q, const SubgroupSet& cgq) {
  int p = group_prime(*g);
  if (p <= 0) throw HypothesisViolationError("p-group", "group order is not a prime power");
  if (p == 2) throw HypothesisViolationError("odd-prime", "the construction assumes p odd");
  if (rank(full_subgroup(g)) != 3)
    throw HypothesisViolationError("rank-three", "group rank is not three");
  SubgroupSet z = center(g);
  if (!is_cyclic(z)) throw HypothesisViolationError("cyclic-center", "center is not cyclic");

  long n = g->order();
  // sequential dispatch: Z(G) meet Q is the central line <c>, so the cases
  // partition G exactly as displayed
  return ClassFunction::from_elements(g, [&, p, n](int x) -> Cyclotomic {
    if (x == 0) return Cyclotomic::integer(p * (p - 1) * n);
    if (z.contains(x)) return Cyclotomic::integer(0);
    if (q.contains(x)) return Cyclotomic::integer(-p * n);
    if (cgq.contains(x)) return Cyclotomic::integer(0);
    if (g->element_order(x) == p) return Cyclotomic::integer(-n);
    return Cyclotomic::integer(0);
  });
}

JacksonData build_jackson_data(const GroupPtr& g, unsigned jobs) {
  JacksonData data;
  data.group = g;
  data.p = group_prime(*g);
  if (data.p <= 0) throw HypothesisViolationError("p-group", "group order is not a prime power");
  if (data.p == 2) throw HypothesisViolationError("odd-prime", "the construction assumes p odd");
  data.z = center(g);
  if (!is_cyclic(data.z))
    throw HypothesisViolationError("cyclic-center", "center is not cyclic");
  if (rank(full_subgroup(g)) != 3)
    throw HypothesisViolationError("rank-three", "group rank is not three");

  data.lattice = all_subgroups(g);
  NormalQ nq = find_normal_Q(g, data.p, data.lattice);
  data.q = nq.q;
  data.c = nq.c;
  data.a = nq.a;
  data.cgq = centralizer(g, data.q);

  data.family = family_trivial_intersection(g, data.z, data.lattice);
  data.ctx = build_family_context(data.family, jobs);
  data.chi = jackson_chi(g, data.q, data.cgq);
  data.v_chi = restrict_family(*data.chi, data.ctx, jobs);
  data.tags = classify_types(data.family, data.q, data.cgq);
  data.e_reps = typeE_max_elementary(data.family, data.tags);
  for (const auto& e : data.e_reps)
    data.c_reps.push_back(SubgroupSet{g, e.members.intersect(data.cgq.members)});
  data.subfamilies =
      build_jackson_subfamilies(data.family, data.tags, data.e_reps, data.cgq, data.lattice);

  data.n_a = static_cast<long>(data.p) * data.p * data.p;
  for (const auto& e : data.e_reps) {
    long norm = normalizer(g, e).size();
    long num = static_cast<long>(data.p) * g->order();
    if (num % norm != 0)
      throw HypothesisViolationError("multiplier", "p|G| is not divisible by |N_G(E_i)|");
    data.n_e.push_back(num / norm);
  }
  return data;
}

std::pair<Verdict, Verdict> verify_prop52(const JacksonData& data, unsigned jobs) {
  const SubgroupFamily& fam = data.family;
  std::size_t n = fam.members.size();

  // (i): nonnegative integer multiplicities for every member
  std::vector<std::string> fail_i(n);
  std::vector<nlohmann::ordered_json> mults(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    CharacterTable table = character_table(data.ctx.as_groups[i].group);
    IsCharacterResult res = is_character(data.v_chi[i], table);
    if (!res.ok) {
      fail_i[i] = "member index " + std::to_string(i) + " (order " +
                  std::to_string(fam.members[i].size()) + "): inner product " +
                  res.bad_value.str() + " with irreducible " + std::to_string(res.bad_index);
      return;
    }
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& m : res.multiplicities) row.push_back(m.get_str());
    mults[i] = std::move(row);
  });
  Verdict vi = Verdict::pass();
  for (std::size_t i = 0; i < n; ++i)
    if (!fail_i[i].empty()) {
      vi = Verdict::fail(fail_i[i]);
      break;
    }
  if (vi.passed()) {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      nlohmann::ordered_json entry;
      entry["member"] = i;
      entry["order"] = fam.members[i].size();
      entry["multiplicities"] = mults[i];
      table.push_back(std::move(entry));
    }
    vi.details["multiplicity_tables"] = std::move(table);
    vi.details["members"] = n;
  }

  // (ii): zero trivial multiplicity on every rank-two elementary abelian member
  Verdict vii = Verdict::pass();
  long checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = fam.members[i];
    if (!(is_elementary_abelian(h) && h.size() == data.p * data.p)) continue;
    ++checked;
    Cyclotomic ip = inner_product(data.v_chi[i], trivial_character(data.ctx.as_groups[i].group));
    if (!ip.is_zero()) {
      vii = Verdict::fail("member index " + std::to_string(i) +
                          ": trivial multiplicity " + ip.str());
      break;
    }
  }
  if (vii.passed()) vii.details["rank_two_members"] = checked;
  return {vi, vii};
}

Verdict verify_lemma53(const JacksonData& data) {
  const Group& G = *data.group;
  SubgroupSet aline = cyclic_span(data.group, data.a);
  long checked = 0;
  for (const auto& h : data.family.members) {
    if (h.members.intersect(data.q.members).count() == 1) continue;
    ++checked;
    if (!h.members.subset_of(data.cgq.members))
      return Verdict::fail("member of order " + std::to_string(h.size()) +
                           " meets Q nontrivially but is not in the centralizer of Q");
    bool witness = false;
    for (int g = 0; g < G.order() && !witness; ++g)
      if (conjugate_subgroup(h, g).members.intersect(data.q.members) == aline.members)
        witness = true;
    if (!witness)
      return Verdict::fail("member of order " + std::to_string(h.size()) +
                           " has no conjugate meeting Q exactly in <a>");
  }
  Verdict v = Verdict::pass();
  v.details["members_meeting_q"] = checked;
  return v;
}

Verdict verify_lemma54(const JacksonData& data) {
  const GroupPtr& g = data.group;
  long cyclic_count = 0, split_count = 0, twisted_count = 0;
  for (std::size_t i = 0; i < data.family.members.size(); ++i) {
    const auto& h = data.family.members[i];
    if (h.members.subset_of(data.cgq.members)) continue;
    // outside the centralizer the intersection with Q must already be trivial
    if (h.members.intersect(data.q.members).count() != 1)
      return Verdict::fail("member of order " + std::to_string(h.size()) +
                           " outside the centralizer meets Q nontrivially");
    SubgroupSet k{g, h.members.intersect(data.cgq.members)};
    if (!is_cyclic(k))
      return Verdict::fail("member of order " + std::to_string(h.size()) +
                           " has noncyclic intersection with the centralizer of Q");
    const GroupPtr& hg = data.ctx.as_groups[i].group;
    if (is_cyclic(data.family.members[i])) {
      ++cyclic_count;
      continue;
    }
    long korder = k.size();
    if (isomorphic(hg, make_direct_product({make_cyclic(static_cast<int>(korder)),
                                            make_cyclic(data.p)}))) {
      ++split_count;
      continue;
    }
    // K cyclic of order p^n acted on by k -> k^{1+p^{n-1}}, n >= 2
    int pn = static_cast<int>(korder);
    int pn1 = pn / data.p;
    bool twisted = false;
    if (pn1 >= data.p) {
      auto model = make_semidirect(make_cyclic(pn), {{1 + pn1}});
      twisted = isomorphic(hg, model);
    }
    if (twisted) {
      ++twisted_count;
      continue;
    }
    return Verdict::fail("member of order " + std::to_string(h.size()) +
                         " matches none of the three shapes");
  }
  Verdict v = Verdict::pass();
  v.details["cyclic"] = cyclic_count;
  v.details["split_product"] = split_count;
  v.details["twisted_product"] = twisted_count;
  return v;
}

Verdict verify_lemma55(const JacksonData& data) {
  Verdict conn = almost_strongly_connected(data.subfamilies, data.family);
  if (!conn.passed()) return conn;

  // uncovered members must be cyclic (they are the type B remainder)
  long uncovered = 0;
  for (const auto& h : data.family.members) {
    bool covered = false;
    for (const auto& sub : data.subfamilies.subfamilies)
      if (sub.contains(h.members)) {
        covered = true;
        break;
      }
    if (covered) continue;
    ++uncovered;
    if (!is_cyclic(h))
      return Verdict::fail("noncyclic member of order " + std::to_string(h.size()) +
                           " lies outside every subfamily");
  }

  // pairwise intersections of distinct E-nodes contain only cyclic members,
  // and the a-node meets every E-node in type C members only
  const auto& subs = data.subfamilies.subfamilies;
  for (std::size_t i = 1; i < subs.size(); ++i) {
    for (const auto& h : subs[i].members) {
      int fi = data.family.index_of(h.members);
      for (std::size_t j = 1; j < i; ++j)
        if (subs[j].contains(h.members) && !is_cyclic(h))
          return Verdict::fail("noncyclic member shared by nodes e" + std::to_string(j) +
                               " and e" + std::to_string(i));
      if (subs[0].contains(h.members)) {
        if (!is_cyclic(h))
          return Verdict::fail("noncyclic member shared by node a and node e" +
                               std::to_string(i));
        if (!data.tags[fi].type_c)
          return Verdict::fail("member shared by node a and node e" + std::to_string(i) +
                               " is not type C");
      }
    }
  }

  // every E-node member has a conjugate inside the normalizer of its E_i
  const Group& G = *data.group;
  for (std::size_t e = 0; e < data.e_reps.size(); ++e) {
    SubgroupSet n = normalizer(data.group, data.e_reps[e]);
    for (const auto& h : subs[e + 1].members) {
      bool inside = false;
      for (int g = 0; g < G.order() && !inside; ++g)
        if (conjugate_subgroup(h, g).members.subset_of(n.members)) inside = true;
      if (!inside)
        return Verdict::fail("member of node e" + std::to_string(e + 1) +
                             " has no conjugate inside the normalizer of its E");
    }
  }

  // E_i are pairwise nonconjugate canonical representatives
  for (std::size_t i = 0; i < data.e_reps.size(); ++i)
    for (std::size_t j = i + 1; j < data.e_reps.size(); ++j)
      if (are_conjugate(data.e_reps[i], data.e_reps[j]))
        return Verdict::fail("E representatives " + std::to_string(i) + " and " +
                             std::to_string(j) + " are conjugate");

  Verdict v = Verdict::pass();
  v.details = conn.details;
  v.details["uncovered_cyclic_members"] = uncovered;
  v.details["e_nodes"] = data.e_reps.size();
  long divergent = 0;
  for (const auto& t : data.tags)
    if (t.primary != t.literal_reading) ++divergent;
  v.details["literal_reading_divergences"] = divergent;
  return v;
}

namespace {

// subgroup of a relabeled group picked out by parent elements
SubgroupSet map_into(const AsGroup& host, const SubgroupSet& parent_sub) {
  Bitset b(host.group->order());
  for (int x : parent_sub.elements()) {
    int t = host.from_parent[x];
    if (t < 0) throw InvalidTableError("subgroup does not lie inside the host");
    b.set(t);
  }
  return SubgroupSet{host.group, b};
}

}  // namespace

QuadrupleBundle build_jackson_quadruple(const JacksonData& data, unsigned jobs) {
  const GroupPtr& g = data.group;
  const Group& G = *g;
  QuadrupleBundle bundle;
  bundle.group = g;
  bundle.diagram = data.subfamilies;

  // node a
  {
    QuadrupleNode node;
    node.gamma = data.cgq;
    node.gamma_group = as_group(data.cgq);
    SubgroupSet aline = cyclic_span(g, data.a);
    SubgroupSet a_in = map_into(node.gamma_group, aline);
    AsGroup a_group = as_group(a_in);
    ClassFunction ia = regular_character(a_group.group) - trivial_character(a_group.group);
    ClassFunction rho =
        induce(ia, node.gamma_group.group, a_group.embedding(node.gamma_group.group))
            .scaled(data.n_a);
    node.rho = std::move(rho);

    const SubgroupFamily& sub = bundle.diagram.subfamilies[0];
    node.witnesses.resize(sub.members.size(), 0);
    for (std::size_t i = 0; i < sub.members.size(); ++i) {
      const auto& h = sub.members[i];
      if (h.members.intersect(data.q.members).count() == 1) continue;  // identity witness
      for (int w = 0; w < G.order(); ++w) {
        SubgroupSet k = conjugate_subgroup(h, w);
        if (k.members.intersect(data.q.members) == aline.members &&
            k.members.subset_of(data.cgq.members)) {
          node.witnesses[i] = w;
          break;
        }
      }
    }
    bundle.nodes.push_back(std::move(node));
  }

  // nodes e_i
  for (std::size_t e = 0; e < data.e_reps.size(); ++e) {
    QuadrupleNode node;
    node.gamma = normalizer(g, data.e_reps[e]);
    node.gamma_group = as_group(node.gamma);
    SubgroupSet e_in = map_into(node.gamma_group, data.e_reps[e]);
    AsGroup e_group = as_group(e_in);
    SubgroupSet c_in = map_into(e_group, map_into(node.gamma_group, data.c_reps[e]));
    ClassFunction w_char = reduced_perm_character(e_group.group, c_in) +
                           reduced_perm_character(e_group.group, trivial_subgroup(e_group.group))
                               .scaled(data.p - 1);
    node.rho = induce(w_char, node.gamma_group.group,
                      e_group.embedding(node.gamma_group.group))
                   .scaled(data.n_e[e]);

    const SubgroupFamily& sub = bundle.diagram.subfamilies[e + 1];
    node.witnesses.resize(sub.members.size(), 0);
    parallel_for(sub.members.size(), jobs, [&](std::size_t i) {
      const auto& h = sub.members[i];
      int found = -1;
      if (!is_cyclic(h)) {
        // conjugate the unique rank-two elementary abelian onto E_i
        for (int w = 0; w < G.order() && found < 0; ++w) {
          SubgroupSet k = conjugate_subgroup(h, w);
          if (!data.e_reps[e].members.subset_of(k.members)) continue;
          if (k.members.subset_of(node.gamma.members)) found = w;
        }
      } else {
        for (int w = 0; w < G.order() && found < 0; ++w)
          if (conjugate_subgroup(h, w).members.subset_of(data.e_reps[e].members)) found = w;
      }
      if (found < 0)
        for (int w = 0; w < G.order() && found < 0; ++w)
          if (conjugate_subgroup(h, w).members.subset_of(node.gamma.members)) found = w;
      if (found < 0)
        throw InvalidTableError("no conjugating witness into the node group");
      node.witnesses[i] = found;
    });
    bundle.nodes.push_back(std::move(node));
  }
  return bundle;
}

Verdict verify_lemma56(const JacksonData& data, unsigned jobs) {
  if (!data.quadruple_built)
    throw InvalidTableError("verify_lemma56 needs the quadruple to be built");
  const QuadrupleBundle& bundle = data.quadruple;
  const Group& G = *data.group;

  Verdict compat = check_compatible_family(data.ctx, data.v_chi, jobs);
  if (!compat.passed()) return compat;

  Verdict factor = check_factorization(data.v_chi, bundle, data.ctx, jobs);
  if (!factor.passed()) return factor;

  Verdict assign = check_assignment_compatibility(bundle, data.ctx, jobs);
  if (!assign.passed()) return assign;

  // identity at the a node: n_a Ind I_{<a>/1} equals p(p-1)|G| at 1, -p|G| on
  // <a> \ 1, and 0 elsewhere on the centralizer
  {
    const QuadrupleNode& node = bundle.nodes[0];
    SubgroupSet aline = cyclic_span(data.group, data.a);
    long n = G.order();
    for (int s = 0; s < node.gamma_group.group->order(); ++s) {
      int x = node.gamma_group.to_parent[s];
      Cyclotomic expect = Cyclotomic::integer(0);
      if (x == 0)
        expect = Cyclotomic::integer(static_cast<long>(data.p) * (data.p - 1) * n);
      else if (aline.contains(x))
        expect = Cyclotomic::integer(-static_cast<long>(data.p) * n);
      if (node.rho.value_at(s) != expect)
        return Verdict::fail("a-node induced character value " + node.rho.value_at(s).str() +
                             " differs from " + expect.str() + " at element " + std::to_string(x));
    }
  }

  // identities at the e nodes: the induced character doubles the W values on
  // E_i by the index and vanishes at orders above p
  for (std::size_t e = 0; e < data.e_reps.size(); ++e) {
    const QuadrupleNode& node = bundle.nodes[e + 1];
    const Group& N = *node.gamma_group.group;
    long index = N.order() / data.e_reps[e].size();
    SubgroupSet e_in = map_into(node.gamma_group, data.e_reps[e]);
    AsGroup e_group = as_group(e_in);
    SubgroupSet c_in = map_into(e_group, map_into(node.gamma_group, data.c_reps[e]));
    ClassFunction w_char = reduced_perm_character(e_group.group, c_in) +
                           reduced_perm_character(e_group.group, trivial_subgroup(e_group.group))
                               .scaled(data.p - 1);
    ClassFunction ind =
        induce(w_char, node.gamma_group.group, e_group.embedding(node.gamma_group.group));
    for (int s = 0; s < N.order(); ++s) {
      if (N.element_order(s) > data.p) {
        if (!ind.value_at(s).is_zero())
          return Verdict::fail("induced character at node e" + std::to_string(e + 1) +
                               " does not vanish at an element of order above p");
        continue;
      }
      if (!e_in.contains(s)) continue;
      int t = e_group.from_parent[s];
      Cyclotomic expect = w_char.value_at(t) * mpq_class(index);
      if (ind.value_at(s) != expect)
        return Verdict::fail("induced character at node e" + std::to_string(e + 1) +
                             " misses the index multiple of the W value");
      // the W values themselves: 0 on C_i \ 1, -p outside the centralizer
      if (s != 0) {
        bool in_c = c_in.contains(t);
        Cyclotomic wexpect = in_c ? Cyclotomic::integer(0) : Cyclotomic::integer(-data.p);
        if (w_char.value_at(t) != wexpect)
          return Verdict::fail("W value at node e" + std::to_string(e + 1) +
                               " differs from the case formula");
      }
    }
  }

  Verdict v = Verdict::pass();
  v.details["compatible_family"] = "pass";
  v.details["factorization"] = "pass";
  v.details["assignment_compatibility"] = "pass";
  v.details["nodes"] = bundle.nodes.size();
  return v;
}

Verdict noncyclic_center_reduction(const GroupPtr& g) {
  int p = group_prime(*g);
  if (p <= 0) return Verdict::inapplicable("group order is not a prime power");
  SubgroupSet z = center(g);
  // two independent central order-p elements
  int c = -1, c2 = -1;
  for (int x : z.elements())
    if (x != 0 && g->element_order(x) == p) {
      c = x;
      break;
    }
  if (c >= 0) {
    SubgroupSet cline = cyclic_span(g, c);
    for (int x : z.elements())
      if (x != 0 && g->element_order(x) == p && !cline.contains(x)) {
        c2 = x;
        break;
      }
  }
  if (c < 0 || c2 < 0) return Verdict::inapplicable("center has p-rank below two");

  SubgroupSet plane = closure(g, {c, c2});
  long scanned = 0;
  for (const auto& h : all_subgroups(g)) {
    if (h.members.intersect(plane.members).count() != 1) continue;
    ++scanned;
    if (rank(h) > 1)
      return Verdict::fail("subgroup of order " + std::to_string(h.size()) +
                           " meets <c, c'> trivially but has rank above one");
  }
  Verdict v = Verdict::pass();
  v.details["central_pair"] = {c, c2};
  v.details["subgroups_scanned"] = scanned;
  return v;
}

}  // namespace charfam
