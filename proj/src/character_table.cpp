#include "charfam/character_table.hpp"

#include <algorithm>

#include "charfam/errors.hpp"

namespace charfam {

namespace {

using u64 = std::uint64_t;

struct Fp {
  long p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, static_cast<u64>(p - 2)); }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// reduced row echelon form in place, returns pivot columns
std::vector<int> rref(Mat& m, const Fp& F) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = F.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

// characteristic polynomial via Hessenberg reduction, valid over any field
Vec char_poly(Mat a, const Fp& F) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[c + 1]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][c + 1]);
    u64 inv = F.inv(a[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (a[i][c] == 0) continue;
      u64 f = F.mul(a[i][c], inv);
      for (std::size_t j = 0; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j) a[j][c + 1] = F.add(a[j][c + 1], F.mul(f, a[j][i]));
    }
  }
  // p_k(x) = det(xI - A_k) over leading k x k Hessenberg blocks
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_i (prod of subdiagonals) * a[i][k-1] * p_i
    Vec cur(k + 1, 0);
    for (std::size_t j = 0; j < p[k - 1].size(); ++j) {
      cur[j + 1] = F.add(cur[j + 1], p[k - 1][j]);
      cur[j] = F.sub(cur[j], F.mul(a[k - 1][k - 1], p[k - 1][j]));
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = F.mul(prod, a[i + 1][i]);
      if (prod == 0) break;
      u64 coeff = F.mul(prod, a[i][k - 1]);
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < p[i].size(); ++j)
        cur[j] = F.sub(cur[j], F.mul(coeff, p[i][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

u64 eval_poly(const Vec& poly, u64 x, const Fp& F) {
  u64 r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = F.add(F.mul(r, x), poly[i]);
  return r;
}

// deflate (x - root) from poly as many times as it divides; returns multiplicity
int deflate_root(Vec& poly, u64 root, const Fp& F) {
  int mult = 0;
  while (poly.size() > 1 && eval_poly(poly, root, F) == 0) {
    Vec q(poly.size() - 1, 0);
    // synthetic division by (x - root)
    u64 carry = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = F.add(poly[i], F.mul(root, carry));
    }
    poly = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace

long dixon_prime(int order, int exponent) {
  long l = exponent + 1;
  auto is_prime = [](long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  // least l = 1 (mod exponent) with l*l > 4*|G| (i.e. l > 2*sqrt(|G|))
  while (!(is_prime(l) && l * l > 4L * order)) l += exponent;
  return l;
}

CharacterTable character_table(const GroupPtr& gp) {
  const Group& G = *gp;
  if (G.order() > Group::kOrderCap) throw OrderCapError("character_table: order above cap");
  const auto& part = G.conjugacy();
  const int k = static_cast<int>(part.classes.size());
  const int n = G.order();
  const int expo = G.exponent();
  Fp F{dixon_prime(n, expo)};

  // Structure constants c_{ijt} = #{(x,y) in C_i x C_j : x y = z_t} for a
  // fixed representative z_t. Each central character w satisfies
  // w_i w_j = sum_t c_{ijt} w_t, so storing the matrix transposed,
  // a[t][j] = c_{ijt}, makes the w's left eigenvectors: w a = w_i w.
  auto class_matrix = [&](int i) {
    std::vector<std::vector<long>> counts(k, std::vector<long>(k, 0));
    for (int x : part.classes[i])
      for (int y = 0; y < n; ++y) counts[part.class_of[y]][part.class_of[G.mul(x, y)]]++;
    Mat a(k, Vec(k, 0));
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t) {
        long c = counts[j][t] / static_cast<long>(part.classes[t].size());
        a[t][j] = static_cast<u64>(c % F.p);
      }
    return a;
  };

  // split the class algebra into common eigenspaces, one per irreducible
  std::vector<Mat> spaces;
  {
    Mat full(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_done = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_done = false;
    if (all_done) break;
    Mat ai = class_matrix(i);
    std::vector<Mat> next;
    for (auto& s : spaces) {
      if (s.size() <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t dim = s.size();
      // restriction of A_i to the (invariant) subspace: basis rows are in
      // RREF, so coordinates are read off at the pivot columns
      Mat sm = s;
      auto pivots = rref(sm, F);
      Mat b(dim, Vec(dim, 0));
      for (std::size_t r = 0; r < dim; ++r) {
        Vec img(k, 0);
        for (int c = 0; c < k; ++c) {
          if (sm[r][c] == 0) continue;
          for (int t = 0; t < k; ++t) img[t] = F.add(img[t], F.mul(sm[r][c], ai[c][t]));
        }
        // row-vector action: coordinates of img in the RREF basis
        for (std::size_t q = 0; q < dim; ++q) b[r][q] = img[pivots[q]];
      }
      Vec poly = char_poly(b, F);
      std::vector<std::pair<u64, int>> roots;
      {
        Vec rem = poly;
        for (u64 lam = 0; lam < static_cast<u64>(F.p) && rem.size() > 1; ++lam) {
          int mult = deflate_root(rem, lam, F);
          if (mult > 0) roots.emplace_back(lam, mult);
        }
        if (rem.size() > 1)
          throw LiftFailureError("class matrix spectrum does not split over the Dixon field");
      }
      for (auto [lam, mult] : roots) {
        // left null space of (B - lam I): rows v with v B = lam v, mapped
        // back to ambient coordinates
        Mat bm(dim, Vec(dim, 0));
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t q = 0; q < dim; ++q) bm[q][r] = b[r][q];
        for (std::size_t d = 0; d < dim; ++d) bm[d][d] = F.sub(bm[d][d], lam);
        Mat ker;
        {
          Mat red = bm;
          auto piv = rref(red, F);
          std::vector<char> is_pivot(dim, 0);
          for (int c : piv) is_pivot[c] = 1;
          for (std::size_t c = 0; c < dim; ++c) {
            if (is_pivot[c]) continue;
            Vec v(dim, 0);
            v[c] = 1;
            for (std::size_t r = 0; r < piv.size(); ++r)
              v[piv[r]] = F.sub(0, red[r][c]);
            ker.push_back(std::move(v));
          }
        }
        if (static_cast<int>(ker.size()) != mult)
          throw LiftFailureError("eigenspace dimension mismatch");
        // ambient vectors: combinations of the subspace basis rows
        Mat amb;
        for (const auto& v : ker) {
          Vec w(k, 0);
          for (std::size_t q = 0; q < dim; ++q) {
            if (v[q] == 0) continue;
            for (int c = 0; c < k; ++c) w[c] = F.add(w[c], F.mul(v[q], sm[q][c]));
          }
          amb.push_back(std::move(w));
        }
        rref(amb, F);
        next.push_back(std::move(amb));
      }
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.size() != 1) throw LiftFailureError("class algebra splitting incomplete");

  // identity class index (representative 0) is class 0 by construction
  std::vector<int> inverse_class(k);
  for (int j = 0; j < k; ++j)
    inverse_class[j] = part.class_of[G.inv(part.representatives[j])];

  // primitive exponent-th root of unity mod l
  u64 z = 0;
  {
    std::vector<int> prime_factors;
    int e = expo;
    for (int d = 2; d * d <= e; ++d)
      if (e % d == 0) {
        prime_factors.push_back(d);
        while (e % d == 0) e /= d;
      }
    if (e > 1) prime_factors.push_back(e);
    for (u64 u = 2; u < static_cast<u64>(F.p); ++u) {
      u64 cand = F.pow(u, static_cast<u64>((F.p - 1) / expo));
      bool primitive = cand != 1 || expo == 1;
      for (int q : prime_factors)
        if (F.pow(cand, static_cast<u64>(expo / q)) == 1) primitive = false;
      if (primitive) {
        z = cand;
        break;
      }
    }
    if (z == 0 && expo == 1) z = 1;
    if (z == 0) throw LiftFailureError("no primitive root of unity in the Dixon field");
  }

  // recover each character from its central-character eigenvector
  std::vector<std::vector<u64>> modular_rows;
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw LiftFailureError("central character vanishes on the identity class");
    u64 norm = F.inv(w[0]);
    for (auto& v : w) v = F.mul(v, norm);
    // 1/d^2 = sum_j w_j * w_{jbar} / (|C_j| * |G|)
    u64 acc = 0;
    for (int j = 0; j < k; ++j) {
      u64 t = F.mul(w[j], w[inverse_class[j]]);
      t = F.mul(t, F.inv(static_cast<u64>(part.classes[j].size() % F.p)));
      acc = F.add(acc, t);
    }
    u64 d2 = F.mul(static_cast<u64>(n % F.p), F.inv(acc));
    long degree = 0;
    for (long d = 1; static_cast<long>(d) * d <= n; ++d)
      if (F.mul(static_cast<u64>(d), static_cast<u64>(d)) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw LiftFailureError("irreducible degree not found");
    std::vector<u64> chi(k);
    for (int j = 0; j < k; ++j)
      chi[j] = F.mul(F.mul(w[j], static_cast<u64>(degree % F.p)),
                     F.inv(static_cast<u64>(part.classes[j].size() % F.p)));
    modular_rows.push_back(std::move(chi));
  }

  // lift: chi(g) = sum_t m_t zeta_o^t with m_t the eigenvalue multiplicities
  std::vector<ClassFunction> irreducibles;
  for (const auto& chi : modular_rows) {
    long degree = static_cast<long>(chi[0]);
    std::vector<Cyclotomic> vals(k, Cyclotomic::zero(expo));
    for (int j = 0; j < k; ++j) {
      int g = part.representatives[j];
      int o = G.element_order(g);
      u64 zo = F.pow(z, static_cast<u64>(expo / o));
      u64 inv_o = F.inv(static_cast<u64>(o % F.p));
      Cyclotomic v = Cyclotomic::zero(expo);
      long mt_sum = 0;
      for (int t = 0; t < o; ++t) {
        u64 acc = 0;
        int gs = 0;
        for (int s = 0; s < o; ++s) {
          u64 term = F.mul(chi[part.class_of[gs]],
                           F.pow(zo, static_cast<u64>((static_cast<long>(o) - t) * s % o)));
          acc = F.add(acc, term);
          gs = G.mul(gs, g);
        }
        u64 mt = F.mul(acc, inv_o);
        if (mt > static_cast<u64>(degree))
          throw LiftFailureError("eigenvalue multiplicity exceeds the degree");
        mt_sum += static_cast<long>(mt);
        if (mt != 0)
          v += Cyclotomic::root_of_unity(expo, static_cast<long>(expo / o) * t) *
               mpq_class(static_cast<long>(mt));
      }
      if (mt_sum != degree) throw LiftFailureError("multiplicities do not sum to the degree");
      vals[j] = std::move(v);
    }
    irreducibles.emplace_back(gp, std::move(vals));
  }

  std::sort(irreducibles.begin(), irreducibles.end(),
            [&](const ClassFunction& a, const ClassFunction& b) {
              int c = Cyclotomic::compare(a.degree(), b.degree());
              if (c != 0) return c < 0;
              for (int j = 0; j < k; ++j) {
                c = Cyclotomic::compare(a.value_on_class(j), b.value_on_class(j));
                if (c != 0) return c < 0;
              }
              return false;
            });

  CharacterTable table{gp, std::move(irreducibles)};

  // exact verification: count, degree sum, row and column orthogonality
  if (static_cast<int>(table.irreducibles.size()) != k)
    throw LiftFailureError("wrong number of irreducibles");
  {
    Cyclotomic dsum = Cyclotomic::integer(0);
    for (const auto& chi : table.irreducibles) dsum += chi.degree() * chi.degree();
    if (dsum != Cyclotomic::integer(n)) throw LiftFailureError("degree sum violated");
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
        if (ip != Cyclotomic::integer(i == j ? 1 : 0))
          throw LiftFailureError("row orthogonality violated");
      }
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        Cyclotomic sum = Cyclotomic::zero(expo);
        for (const auto& chi : table.irreducibles)
          sum += chi.value_on_class(a) * chi.value_on_class(b).conjugate();
        Cyclotomic expect =
            a == b ? Cyclotomic::integer(n / static_cast<long>(part.classes[a].size()))
                   : Cyclotomic::integer(0);
        if (sum != expect) throw LiftFailureError("column orthogonality violated");
      }
  }
  return table;
}

IsCharacterResult is_character(const ClassFunction& f, const CharacterTable& table) {
  if (f.group() != table.group) throw GroupMismatchError("is_character: table of a different group");
  IsCharacterResult res;
  res.multiplicities.reserve(table.irreducibles.size());
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    Cyclotomic ip = inner_product(f, table.irreducibles[i]);
    if (!ip.is_nonnegative_integer()) {
      res.ok = false;
      res.bad_index = static_cast<int>(i);
      res.bad_value = ip;
      return res;
    }
    res.multiplicities.push_back(mpz_class(ip.rational_value().get_num()));
  }
  res.ok = true;
  return res;
}

bool fixed_point_free(const ClassFunction& f) {
  const auto& G = *f.group();
  for (int x = 1; x < G.order(); ++x) {
    Cyclotomic dim = fixed_subspace_dim(f, x);
    if (!dim.is_nonnegative_integer())
      throw NotCharacterError("fixed subspace dimension is not a nonnegative integer");
    if (!dim.is_zero()) return false;
  }
  return true;
}

}  // namespace charfam
