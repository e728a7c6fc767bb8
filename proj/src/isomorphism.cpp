#include "charfam/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace charfam {

namespace {

// extend the partial map by the product closure of the mapped generators;
// returns false on any inconsistency
bool close_map(const Group& A, const Group& B, std::vector<int>& map) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < A.order(); ++x) {
      if (map[x] < 0) continue;
      for (int y = 0; y < A.order(); ++y) {
        if (map[y] < 0) continue;
        int z = A.mul(x, y);
        int img = B.mul(map[x], map[y]);
        if (map[z] < 0) {
          map[z] = img;
          changed = true;
        } else if (map[z] != img) {
          return false;
        }
      }
    }
  }
  return true;
}

bool extend(const Group& A, const Group& B, const std::vector<int>& gens, std::size_t next,
            std::vector<int> map) {
  if (!close_map(A, B, map)) return false;
  if (next == gens.size()) {
    std::vector<char> hit(B.order(), 0);
    for (int v : map) {
      if (v < 0) return false;
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }
  int g = gens[next];
  if (map[g] >= 0) return extend(A, B, gens, next + 1, std::move(map));
  int want = A.element_order(g);
  for (int b = 0; b < B.order(); ++b) {
    if (B.element_order(b) != want) continue;
    bool taken = false;
    for (int v : map)
      if (v == b) taken = true;
    if (taken) continue;
    std::vector<int> m2 = map;
    m2[g] = b;
    if (extend(A, B, gens, next + 1, std::move(m2))) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const GroupPtr& a, const GroupPtr& b) {
  const Group& A = *a;
  const Group& B = *b;
  if (A.order() != B.order()) return false;
  // order statistics must agree
  std::map<int, int> sa, sb;
  for (int x = 0; x < A.order(); ++x) sa[A.element_order(x)]++;
  for (int x = 0; x < B.order(); ++x) sb[B.element_order(x)]++;
  if (sa != sb) return false;
  std::vector<int> map(A.order(), -1);
  map[0] = 0;
  return extend(A, B, A.generators(), 0, std::move(map));
}

}  // namespace charfam
