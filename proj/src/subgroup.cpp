#include "charfam/subgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charfam/errors.hpp"

namespace charfam {

SubgroupSet make_subgroup(const GroupPtr& g, const Bitset& members) {
  if (members.size_bits() != g->order()) throw InvalidTableError("subgroup bitset size mismatch");
  if (!members.test(0)) throw InvalidTableError("subgroup must contain the identity");
  auto elems = members.members();
  for (int a : elems) {
    if (!members.test(g->inv(a))) throw InvalidTableError("subgroup not closed under inverse");
    for (int b : elems)
      if (!members.test(g->mul(a, b))) throw InvalidTableError("subgroup not closed under product");
  }
  if (g->order() % static_cast<int>(elems.size()) != 0)
    throw InvalidTableError("subgroup size violates Lagrange");
  return SubgroupSet{g, members};
}

SubgroupSet trivial_subgroup(const GroupPtr& g) {
  Bitset b(g->order());
  b.set(0);
  return SubgroupSet{g, b};
}

SubgroupSet full_subgroup(const GroupPtr& g) {
  Bitset b(g->order());
  for (int i = 0; i < g->order(); ++i) b.set(i);
  return SubgroupSet{g, b};
}

SubgroupSet subgroup_from_elements(const GroupPtr& g, const std::vector<int>& elements) {
  Bitset b(g->order());
  for (int x : elements) b.set(x);
  return make_subgroup(g, b);
}

SubgroupSet closure(const GroupPtr& g, const std::vector<int>& gens) {
  Bitset b(g->order());
  b.set(0);
  std::vector<int> frontier{0};
  for (int x : gens)
    if (!b.test(x)) {
      b.set(x);
      frontier.push_back(x);
    }
  std::vector<int> have = b.members();
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : have) {
        for (int z : {g->mul(x, y), g->mul(y, x)}) {
          if (!b.test(z)) {
            b.set(z);
            next.push_back(z);
          }
        }
      }
    for (int x : next) have.push_back(x);
    // products among the new elements as well
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < next.size(); ++j) {
        int z = g->mul(next[i], next[j]);
        if (!b.test(z)) {
          b.set(z);
          next.push_back(z);
          have.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  return SubgroupSet{g, b};
}

SubgroupSet center(const GroupPtr& g) { return centralizer(g, full_subgroup(g)); }

SubgroupSet centralizer(const GroupPtr& g, const SubgroupSet& s) {
  auto elems = s.elements();
  Bitset b(g->order());
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int y : elems)
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) b.set(x);
  }
  return SubgroupSet{g, b};
}

SubgroupSet normalizer(const GroupPtr& g, const SubgroupSet& s) {
  auto elems = s.elements();
  Bitset b(g->order());
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int y : elems)
      if (!s.contains(g->conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) b.set(x);
  }
  return SubgroupSet{g, b};
}

SubgroupSet conjugate_subgroup(const SubgroupSet& s, int g) {
  const auto& G = *s.parent;
  Bitset b(G.order());
  for (int y : s.elements()) b.set(G.conj(g, y));
  return SubgroupSet{s.parent, b};
}

SubgroupSet canonical_conjugate(const SubgroupSet& s) {
  SubgroupSet best = s;
  for (int g = 0; g < s.parent->order(); ++g) {
    SubgroupSet c = conjugate_subgroup(s, g);
    if (c.members.precedes(best.members)) best = c;
  }
  return best;
}

bool are_conjugate(const SubgroupSet& a, const SubgroupSet& b) {
  return conjugating_element(a, b).has_value();
}

std::optional<int> conjugating_element(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.parent != b.parent) throw GroupMismatchError("conjugating_element: different parents");
  if (a.size() != b.size()) return std::nullopt;
  for (int g = 0; g < a.parent->order(); ++g)
    if (conjugate_subgroup(a, g).members == b.members) return g;
  return std::nullopt;
}

std::vector<SubgroupSet> all_subgroups(const GroupPtr& g, int max_order) {
  if (g->order() > Group::kOrderCap) throw OrderCapError("all_subgroups: order above cap");
  int cap = max_order > 0 ? max_order : g->order();

  std::set<Bitset> found;
  std::vector<SubgroupSet> out;
  std::vector<SubgroupSet> layer{trivial_subgroup(g)};
  found.insert(layer[0].members);
  out.push_back(layer[0]);

  // Extend each subgroup H by normalizer elements whose class in N/H has
  // prime order; every subgroup of a solvable group arises this way from a
  // normal maximal chain.
  std::size_t done = 0;
  while (done < out.size()) {
    SubgroupSet h = out[done++];
    if (h.size() >= cap) continue;
    SubgroupSet n = normalizer(g, h);
    for (int x : n.elements()) {
      if (h.contains(x)) continue;
      // least e > 0 with x^e in H; extension is valid when e is prime
      int e = 1, acc = x;
      while (!h.contains(acc)) {
        acc = g->mul(acc, x);
        ++e;
      }
      bool prime = e >= 2;
      for (int d = 2; d * d <= e; ++d)
        if (e % d == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      long new_order = static_cast<long>(h.size()) * e;
      if (new_order > cap) continue;
      Bitset b(g->order());
      int coset = 0;  // x^i
      for (int i = 0; i < e; ++i) {
        for (int y : h.elements()) b.set(g->mul(coset, y));
        coset = g->mul(coset, x);
      }
      if (found.insert(b).second) out.push_back(SubgroupSet{g, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members.precedes(b.members);
  });
  return out;
}

std::optional<std::pair<int, int>> prime_power_order(const SubgroupSet& h) {
  int n = h.size();
  if (n == 1) return std::make_pair(0, 0);  // trivial: vacuous prime
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

int rank(const SubgroupSet& h) {
  auto pk = prime_power_order(h);
  if (!pk) throw MixedOrderError("rank: subgroup order is not a prime power");
  if (h.size() == 1) return 0;
  int p = pk->first;
  const auto& G = *h.parent;

  // order-p elements of h
  std::vector<int> ordp;
  for (int x : h.elements())
    if (G.element_order(x) == p) ordp.push_back(x);

  // grow elementary abelian subgroups one commuting order-p generator at a time
  std::set<Bitset> level;
  for (int x : ordp) {
    Bitset b(G.order());
    int acc = 0;
    for (int i = 0; i < p; ++i) {
      b.set(acc);
      acc = G.mul(acc, x);
    }
    level.insert(b);
  }
  int r = level.empty() ? 0 : 1;
  while (!level.empty()) {
    std::set<Bitset> next;
    for (const auto& eb : level) {
      auto emem = eb.members();
      for (int x : ordp) {
        if (eb.test(x)) continue;
        bool commutes = true;
        for (int y : emem)
          if (G.mul(x, y) != G.mul(y, x)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        Bitset b(G.order());
        int acc = 0;
        for (int i = 0; i < p; ++i) {
          for (int y : emem) b.set(G.mul(acc, y));
          acc = G.mul(acc, x);
        }
        next.insert(b);
      }
    }
    if (next.empty()) break;
    ++r;
    level = std::move(next);
  }
  return r;
}

bool is_elementary_abelian(const SubgroupSet& h) {
  auto pk = prime_power_order(h);
  if (!pk) return false;
  if (h.size() == 1) return true;
  const auto& G = *h.parent;
  auto elems = h.elements();
  for (int x : elems)
    if (x != 0 && G.element_order(x) != pk->first) return false;
  for (int x : elems)
    for (int y : elems)
      if (G.mul(x, y) != G.mul(y, x)) return false;
  return true;
}

bool is_cyclic(const SubgroupSet& h) {
  const auto& G = *h.parent;
  for (int x : h.elements())
    if (G.element_order(x) == h.size()) return true;
  return false;
}

SubgroupSet omega1(const SubgroupSet& h) {
  auto pk = prime_power_order(h);
  if (!pk || h.size() == 1)
    throw NotRankOneError("omega1: subgroup is trivial or not a p-group");
  int p = pk->first;
  const auto& G = *h.parent;
  std::set<Bitset> ordp_subgroups;
  for (int x : h.elements())
    if (G.element_order(x) == p) {
      Bitset b(G.order());
      int acc = 0;
      for (int i = 0; i < p; ++i) {
        b.set(acc);
        acc = G.mul(acc, x);
      }
      ordp_subgroups.insert(b);
    }
  if (ordp_subgroups.size() != 1)
    throw NotRankOneError("omega1: " + std::to_string(ordp_subgroups.size()) +
                          " subgroups of prime order");
  return SubgroupSet{h.parent, *ordp_subgroups.begin()};
}

GroupEmbedding make_embedding(const GroupPtr& source, const GroupPtr& target,
                              std::vector<int> map, GroupEmbedding::Kind kind, int witness) {
  if (static_cast<int>(map.size()) != source->order())
    throw InvalidTableError("embedding map has wrong size");
  std::vector<char> hit(target->order(), 0);
  for (int v : map) {
    if (v < 0 || v >= target->order()) throw InvalidTableError("embedding image out of range");
    if (hit[v]) throw InvalidTableError("embedding is not injective");
    hit[v] = 1;
  }
  if (map[0] != 0) throw InvalidTableError("embedding must fix the identity");
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        throw InvalidTableError("embedding is not a homomorphism");
  return GroupEmbedding{source, target, std::move(map), kind, witness};
}

AsGroup as_group(const SubgroupSet& h) {
  auto elems = h.elements();  // ascending, so the identity lands at index 0
  int n = static_cast<int>(elems.size());
  const auto& G = *h.parent;
  std::vector<int> from_parent(G.order(), -1);
  for (int i = 0; i < n; ++i) from_parent[elems[i]] = i;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(from_parent[G.mul(elems[a], elems[b])]);
  GroupPtr sub = Group::make(h.parent->label() + "|sub" + std::to_string(n), n, std::move(table));
  return AsGroup{h, sub, elems, std::move(from_parent)};
}

GroupEmbedding AsGroup::embedding(const GroupPtr& parent) const {
  return make_embedding(group, parent, to_parent, GroupEmbedding::Kind::Inclusion);
}

}  // namespace charfam
