#include "charfam/biset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charfam/errors.hpp"
#include "charfam/parallel.hpp"

namespace charfam {

namespace {

// least representative of each coset xH, indexed by element
std::vector<int> coset_min_table(const Group& g, const SubgroupSet& h) {
  std::vector<int> cmin(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (cmin[x] >= 0) continue;
    for (int y : h.elements()) {
      int z = g.mul(x, y);
      if (cmin[z] < 0) cmin[z] = x;
    }
  }
  return cmin;
}

bool conjugates_into(const Group& g, const SubgroupSet& l, int x, const SubgroupSet& h) {
  // x^-1 L x <= H
  int xi = g.inv(x);
  for (int y : l.elements())
    if (!h.contains(g.conj(xi, y))) return false;
  return true;
}

}  // namespace

FixedCosetSet fixed_cosets(const GroupPtr& gp, const SubgroupSet& h, const SubgroupSet& l) {
  if (h.parent != gp || l.parent != gp)
    throw GroupMismatchError("fixed_cosets: subgroups of a different group");
  const Group& g = *gp;
  FixedCosetSet f{gp, h, l, {}, {}, {}};
  std::vector<int> cmin = coset_min_table(g, h);
  for (int x = 0; x < g.order(); ++x) {
    if (cmin[x] != x) continue;  // not the least representative
    if (conjugates_into(g, l, x, h)) f.cosets.push_back(x);
  }
  SubgroupSet n = normalizer(gp, h);
  std::vector<int> wmin = coset_min_table(g, h);  // nH cosets use the same table
  for (int x : n.elements())
    if (wmin[x] == x) f.weyl.push_back(x);

  std::map<int, int> coset_index;
  for (std::size_t i = 0; i < f.cosets.size(); ++i) coset_index[f.cosets[i]] = static_cast<int>(i);
  f.action.assign(f.cosets.size(), std::vector<int>(f.weyl.size(), -1));
  for (std::size_t i = 0; i < f.cosets.size(); ++i)
    for (std::size_t j = 0; j < f.weyl.size(); ++j) {
      int target = cmin[g.mul(f.cosets[i], f.weyl[j])];
      auto it = coset_index.find(target);
      if (it == coset_index.end())
        throw InvalidTableError("Weyl action leaves the fixed coset set");
      f.action[i][j] = it->second;
    }
  // well-definedness: the image may not depend on the representative chosen
  for (std::size_t i = 0; i < f.cosets.size(); ++i)
    for (int y : h.elements())
      for (std::size_t j = 0; j < f.weyl.size(); ++j) {
        int alt = cmin[g.mul(g.mul(f.cosets[i], y), f.weyl[j])];
        if (alt != f.cosets[f.action[i][j]])
          throw InvalidTableError("Weyl action is not well defined");
      }
  return f;
}

Verdict check_weyl_freeness(const FixedCosetSet& f) {
  for (std::size_t i = 0; i < f.cosets.size(); ++i)
    for (std::size_t j = 0; j < f.weyl.size(); ++j) {
      if (f.weyl[j] == 0) continue;
      if (f.action[i][j] == static_cast<int>(i))
        return Verdict::fail("Weyl element " + std::to_string(f.weyl[j]) + " fixes coset " +
                             std::to_string(f.cosets[i]));
    }
  Verdict v = Verdict::pass();
  long orbits = f.weyl.empty()
                    ? static_cast<long>(f.cosets.size())
                    : static_cast<long>(f.cosets.size()) / static_cast<long>(f.weyl.size());
  v.details["orbits"] = orbits;
  v.details["fixed_cosets"] = f.cosets.size();
  v.details["weyl_order"] = f.weyl.size();
  return v;
}

Verdict check_mu_bijection(const GroupPtr& gp, const SubgroupSet& h, const SubgroupSet& k,
                           const SubgroupSet& l) {
  const Group& g = *gp;
  // shape: H cyclic of prime-power order with K its index-p subgroup, L <= K
  auto pk = prime_power_order(h);
  if (!pk || pk->second < 1 || !is_cyclic(h))
    throw BadShapeError("check_mu_bijection: H must be cyclic of prime-power order");
  int p = pk->first;
  if (!k.members.subset_of(h.members) || k.size() * p != h.size())
    throw BadShapeError("check_mu_bijection: K must be the index-p subgroup of H");
  if (!l.members.subset_of(k.members)) throw BadShapeError("check_mu_bijection: L must lie in K");

  FixedCosetSet ghk = fixed_cosets(gp, h, k);
  FixedCosetSet gkl = fixed_cosets(gp, k, l);
  FixedCosetSet ghl = fixed_cosets(gp, h, l);

  SubgroupSet nh = normalizer(gp, h);
  SubgroupSet nk = normalizer(gp, k);
  SubgroupSet nl = normalizer(gp, l);

  // chain L <= H <= N_G(H) <= N_G(L)
  if (!l.members.subset_of(h.members) || !h.members.subset_of(nh.members) ||
      !nh.members.subset_of(nl.members))
    return Verdict::fail("normalizer chain L <= H <= N_G(H) <= N_G(L) fails");

  // (G/H)^L = N_G(L)/H in the cyclic setting
  {
    std::set<int> from_nl;
    std::vector<int> cmin = coset_min_table(g, h);
    for (int x : nl.elements()) from_nl.insert(cmin[x]);
    std::set<int> fixed(ghl.cosets.begin(), ghl.cosets.end());
    if (from_nl != fixed) return Verdict::fail("(G/H)^L differs from N_G(L)/H");
  }

  Verdict free_h = check_weyl_freeness(ghl);
  if (!free_h.passed()) return free_h;
  Verdict free_x = check_weyl_freeness(ghk);
  if (!free_x.passed()) return free_x;
  Verdict free_y = check_weyl_freeness(gkl);
  if (!free_y.passed()) return free_y;

  long s = nk.size() / nh.size();
  long t = nl.size() / nk.size();
  long m = nl.size() / nh.size();
  if (free_x.details["orbits"] != s || free_y.details["orbits"] != t ||
      free_h.details["orbits"] != m)
    return Verdict::fail("orbit counts differ from the normalizer indices");
  if (s * t != m) return Verdict::fail("orbit counting identity s*t = m fails");

  // fiber product over W_G(K): orbits of (xH, yK) -> (n x H, y n^-1 K)
  std::vector<int> cmin_h = coset_min_table(g, h);
  std::vector<int> cmin_k = coset_min_table(g, k);
  std::map<std::pair<int, int>, int> pair_index;
  std::vector<std::pair<int, int>> pairs;
  for (int x : ghk.cosets)
    for (int y : gkl.cosets) {
      pair_index[{x, y}] = static_cast<int>(pairs.size());
      pairs.emplace_back(x, y);
    }
  std::vector<int> orbit(pairs.size(), -1);
  int norbits = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (orbit[i] >= 0) continue;
    int id = norbits++;
    std::vector<std::size_t> stack{i};
    orbit[i] = id;
    while (!stack.empty()) {
      auto [x, y] = pairs[stack.back()];
      stack.pop_back();
      for (int nrm : nk.elements()) {
        int nx = cmin_h[g.mul(nrm, x)];
        int ny = cmin_k[g.mul(y, g.inv(nrm))];
        auto it = pair_index.find({nx, ny});
        if (it == pair_index.end())
          return Verdict::fail("fiber-product action leaves the pair set");
        if (orbit[it->second] < 0) {
          orbit[it->second] = id;
          stack.push_back(it->second);
        }
      }
    }
  }

  // mu maps the class of (xH, yK) to yxH; well defined on orbits, bijective
  std::vector<int> image(norbits, -1);
  std::set<int> hit;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    int target = cmin_h[g.mul(y, x)];
    if (std::find(ghl.cosets.begin(), ghl.cosets.end(), target) == ghl.cosets.end())
      return Verdict::fail("mu image leaves (G/H)^L");
    if (image[orbit[i]] < 0)
      image[orbit[i]] = target;
    else if (image[orbit[i]] != target)
      return Verdict::fail("mu is not constant on a fiber-product orbit");
    hit.insert(target);
  }
  if (norbits != static_cast<int>(ghl.cosets.size()))
    return Verdict::fail("fiber product size differs from the fixed coset count");
  if (hit.size() != ghl.cosets.size()) return Verdict::fail("mu is not surjective");
  {
    std::set<int> images(image.begin(), image.end());
    if (images.size() != static_cast<std::size_t>(norbits))
      return Verdict::fail("mu is not injective");
  }

  Verdict v = Verdict::pass();
  v.details["s"] = s;
  v.details["t"] = t;
  v.details["m"] = m;
  v.details["pairs"] = pairs.size();
  return v;
}

Verdict sweep_mu(const GroupPtr& g, unsigned jobs) {
  if (g->order() > 256) throw OrderCapError("sweep_mu: exhaustive sweep capped at order 256");
  std::vector<SubgroupSet> lattice = all_subgroups(g);
  struct Triple {
    int h, k, l;
  };
  std::vector<Triple> triples;
  for (std::size_t hi = 0; hi < lattice.size(); ++hi) {
    const auto& h = lattice[hi];
    auto pk = prime_power_order(h);
    if (!pk || pk->second < 1 || !is_cyclic(h)) continue;
    int p = pk->first;
    // the unique index-p subgroup of the cyclic group
    int ki = -1;
    for (std::size_t j = 0; j < lattice.size(); ++j)
      if (lattice[j].size() * p == h.size() && lattice[j].members.subset_of(h.members)) {
        ki = static_cast<int>(j);
        break;
      }
    if (ki < 0) throw BadShapeError("cyclic subgroup without an index-p subgroup");
    for (std::size_t li = 0; li < lattice.size(); ++li)
      if (lattice[li].members.subset_of(lattice[ki].members))
        triples.push_back({static_cast<int>(hi), ki, static_cast<int>(li)});
  }

  std::vector<std::string> failures(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t i) {
    Verdict v = check_mu_bijection(g, lattice[triples[i].h], lattice[triples[i].k],
                                   lattice[triples[i].l]);
    if (!v.passed())
      failures[i] = "triple H=" + std::to_string(triples[i].h) +
                    " K=" + std::to_string(triples[i].k) + " L=" + std::to_string(triples[i].l) +
                    ": " + v.witness;
  });
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (!failures[i].empty()) return Verdict::fail(failures[i]);
  Verdict v = Verdict::pass();
  v.details["triples"] = triples.size();
  return v;
}

}  // namespace charfam
