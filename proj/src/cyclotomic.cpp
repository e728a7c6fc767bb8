#include "charfam/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "charfam/errors.hpp"

namespace charfam {

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::map<int, std::vector<mpz_class>>& poly_registry() {
  static std::map<int, std::vector<mpz_class>> reg;
  return reg;
}
std::mutex& poly_mutex() {
  static std::mutex mu;
  return mu;
}

// remainder of a rational polynomial modulo the monic Phi_m, truncated or
// padded to exactly phi(m) coefficients
std::vector<mpq_class> reduce_mod_phi(int m, std::vector<mpq_class> poly) {
  const auto& phi = cyclotomic_polynomial(m);
  std::size_t deg_phi = phi.size() - 1;
  if (poly.size() > deg_phi) {
    for (std::size_t i = poly.size(); i-- > deg_phi;) {
      mpq_class c = poly[i];
      if (c != 0)
        for (std::size_t j = 0; j < phi.size(); ++j)
          poly[i - deg_phi + j] -= c * mpq_class(phi[j]);
    }
  }
  poly.resize(deg_phi, 0);
  return poly;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
  std::lock_guard<std::mutex> lk(poly_mutex());
  auto& reg = poly_registry();
  auto it = reg.find(m);
  if (it != reg.end()) return it->second;
  // Phi_m = (x^m - 1) / prod Phi_d over proper divisors d; fill the registry
  // for all divisors in ascending order so each step only needs entries that
  // already exist.
  std::vector<int> todo;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0 && !reg.count(d)) todo.push_back(d);
  for (int d : todo) {
    if (reg.count(d)) continue;
    // divisors of d are already present (ascending order)
    if (d == 1) {
      reg[1] = {-1, 1};
      continue;
    }
    std::vector<mpz_class> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    std::vector<mpz_class> den{1};
    for (int e = 1; e < d; ++e) {
      if (d % e) continue;
      const auto& phi_e = reg.at(e);
      std::vector<mpz_class> next(den.size() + phi_e.size() - 1, 0);
      for (std::size_t i = 0; i < den.size(); ++i)
        for (std::size_t j = 0; j < phi_e.size(); ++j) next[i + j] += den[i] * phi_e[j];
      den = std::move(next);
    }
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    std::vector<mpz_class> rem = num;
    for (std::size_t i = quot.size(); i-- > 0;) {
      mpz_class c = rem[i + den.size() - 1];
      quot[i] = c;
      if (c != 0)
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    reg[d] = std::move(quot);
  }
  return reg.at(m);
}

Cyclotomic Cyclotomic::zero(int m) {
  Cyclotomic c;
  c.m_ = m;
  c.coeffs_.assign(euler_phi(m), 0);
  return c;
}

Cyclotomic Cyclotomic::integer(long v) {
  Cyclotomic c;
  c.coeffs_[0] = v;
  return c;
}

Cyclotomic Cyclotomic::rational(const mpq_class& v) {
  Cyclotomic c;
  c.coeffs_[0] = v;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
  long r = k % m;
  if (r < 0) r += m;
  std::vector<mpq_class> poly(static_cast<std::size_t>(r) + 1, 0);
  poly[static_cast<std::size_t>(r)] = 1;
  return from_coeffs(m, std::move(poly));
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<mpq_class> coeffs) {
  Cyclotomic c;
  c.m_ = m;
  c.coeffs_ = reduce_mod_phi(m, std::move(coeffs));
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw LiftFailureError("rational_value on irrational cyclotomic");
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
  return is_rational() && coeffs_[0].get_den() == 1;
}

bool Cyclotomic::is_nonnegative_integer() const { return is_integer() && coeffs_[0] >= 0; }

Cyclotomic Cyclotomic::lifted(int conductor_multiple) const {
  if (conductor_multiple == m_) return *this;
  if (conductor_multiple % m_ != 0)
    throw LiftFailureError("lifted: target conductor is not a multiple");
  int step = conductor_multiple / m_;
  std::vector<mpq_class> poly(static_cast<std::size_t>(conductor_multiple), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  return from_coeffs(conductor_multiple, std::move(poly));
}

Cyclotomic Cyclotomic::to_conductor(int d) const {
  if (d == m_) return *this;
  if (m_ % d != 0) {
    // allowed when the value happens to live in Q(zeta_gcd); lift then solve
    return lifted(std::lcm(m_, d)).to_conductor(d);
  }
  int step = m_ / d;
  int rows = euler_phi(m_), cols = euler_phi(d);
  // columns: zeta_d^j = zeta_m^{j*step} written in the canonical basis
  std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1, 0));
  for (int j = 0; j < cols; ++j) {
    auto col = root_of_unity(m_, static_cast<long>(j) * step);
    for (int i = 0; i < rows; ++i) mat[i][j] = col.coeffs_[i];
  }
  for (int i = 0; i < rows; ++i) mat[i][cols] = coeffs_[i];
  // Gaussian elimination; consistency decides subfield membership
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (mat[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(mat[piv], mat[r]);
    mpq_class inv = 1 / mat[r][c];
    for (int j = c; j <= cols; ++j) mat[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || mat[i][c] == 0) continue;
      mpq_class f = mat[i][c];
      for (int j = c; j <= cols; ++j) mat[i][j] -= f * mat[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (mat[i][cols] != 0)
      throw LiftFailureError("to_conductor: value not contained in the target subfield");
  std::vector<mpq_class> sol(cols, 0);
  for (int i = 0; i < r; ++i) sol[pivot_col[i]] = mat[i][cols];
  Cyclotomic out;
  out.m_ = d;
  out.coeffs_ = std::move(sol);
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int m = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  int m = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int m = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<mpq_class> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return from_coeffs(m, std::move(prod));
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
  Cyclotomic a = *this;
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

Cyclotomic Cyclotomic::operator/(const mpq_class& s) const {
  Cyclotomic a = *this;
  for (auto& c : a.coeffs_) c /= s;
  return a;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<mpq_class> poly(static_cast<std::size_t>(m_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    poly[j == 0 ? 0 : static_cast<std::size_t>(m_) - j] += coeffs_[j];
  return from_coeffs(m_, std::move(poly));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (m_ == o.m_) return coeffs_ == o.coeffs_;
  int m = std::lcm(m_, o.m_);
  return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  int m = std::lcm(a.m_, b.m_);
  Cyclotomic x = a.lifted(m), y = b.lifted(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] < y.coeffs_[i]) return -1;
    if (y.coeffs_[i] < x.coeffs_[i]) return 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    mpq_class c = coeffs_[j];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (j == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << m_;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace charfam
