#include "charfam/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "charfam/errors.hpp"

namespace charfam {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupPtr from_mul(std::string label, int n, const std::vector<int>& gens,
                  const std::function<int(int, int)>& mul) {
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(mul(a, b));
  return Group::make(std::move(label), n, std::move(table), gens);
}

}  // namespace

GroupPtr make_cyclic(int n) {
  if (n < 1 || n > Group::kOrderCap) throw OrderCapError("cyclic order out of range");
  return from_mul("cyclic:" + std::to_string(n), n, n > 1 ? std::vector<int>{1} : std::vector<int>{},
                  [n](int a, int b) { return (a + b) % n; });
}

GroupPtr make_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw InvalidTableError("elemab: p must be prime");
  if (k < 1) throw InvalidTableError("elemab: k must be positive");
  long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > Group::kOrderCap) throw OrderCapError("elemab order above cap");
  }
  int order = static_cast<int>(n);
  std::vector<int> gens;
  long step = 1;
  for (int i = 0; i < k; ++i, step *= p) gens.push_back(static_cast<int>(step));
  auto mul = [p, k](int a, int b) {
    int out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  };
  return from_mul("elemab:" + std::to_string(p) + "," + std::to_string(k), order, gens, mul);
}

GroupPtr make_heisenberg(int p) {
  if (!is_prime(p) || p == 2) throw InvalidTableError("heisenberg: p must be an odd prime");
  long n = static_cast<long>(p) * p * p;
  if (n > Group::kOrderCap) throw OrderCapError("heisenberg order above cap");
  // elements (x, y, z), product (x+x', y+y', z+z'+x*y'); exponent p for odd p
  auto idx = [p](int x, int y, int z) { return x + p * y + p * p * z; };
  auto mul = [p, idx](int a, int b) {
    int ax = a % p, ay = (a / p) % p, az = a / (p * p);
    int bx = b % p, by = (b / p) % p, bz = b / (p * p);
    return idx((ax + bx) % p, (ay + by) % p, (az + bz + ax * by) % p);
  };
  return from_mul("heisenberg:" + std::to_string(p), static_cast<int>(n), {idx(1, 0, 0), idx(0, 1, 0)},
                  mul);
}

GroupPtr make_extraspecial5(int p) {
  if (!is_prime(p) || p == 2) throw InvalidTableError("extraspecial5: p must be an odd prime");
  long n = 1;
  for (int i = 0; i < 5; ++i) n *= p;
  if (n > Group::kOrderCap) throw OrderCapError("extraspecial5 order above cap");
  // central product of two Heisenberg blocks: (x1,y1,x2,y2,z) with
  // z-cocycle x1*y1' + x2*y2'
  auto digit = [p](int a, int i) {
    for (int j = 0; j < i; ++j) a /= p;
    return a % p;
  };
  auto mul = [p, digit](int a, int b) {
    int c[5];
    for (int i = 0; i < 5; ++i) c[i] = (digit(a, i) + digit(b, i)) % p;
    c[4] = (c[4] + digit(a, 0) * digit(b, 1) + digit(a, 2) * digit(b, 3)) % p;
    int out = 0, place = 1;
    for (int i = 0; i < 5; ++i, place *= p) out += c[i] * place;
    return out;
  };
  int pp = p * p, ppp = pp * p;
  return from_mul("extraspecial5:" + std::to_string(p), static_cast<int>(n), {1, p, pp, ppp},
                  mul);
}

GroupPtr make_direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw InvalidTableError("empty product");
  long n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > Group::kOrderCap) throw OrderCapError("product order above cap");
  }
  int order = static_cast<int>(n);
  auto mul = [&factors](int a, int b) {
    int out = 0, place = 1;
    for (const auto& f : factors) {
      int m = f->order();
      out += f->mul(a % m, b % m) * place;
      a /= m;
      b /= m;
      place *= m;
    }
    return out;
  };
  std::vector<int> gens;
  {
    int place = 1;
    for (const auto& f : factors) {
      for (int g : f->generators()) gens.push_back(g * place);
      place *= f->order();
    }
  }
  std::string label = "product:";
  for (std::size_t i = 0; i < factors.size(); ++i)
    label += (i ? "," : "") + factors[i]->label();
  return from_mul(label, order, gens, mul);
}

GroupPtr make_semidirect(const GroupPtr& base, const std::vector<std::vector<int>>& action) {
  if (!base->is_abelian()) throw InvalidTableError("semidirect: base must be abelian");
  const auto& gens = base->generators();
  if (action.size() != gens.size()) throw InvalidTableError("semidirect: action rank mismatch");

  // Build the automorphism by BFS over generator words, mapping each
  // generator g_i to the image its action row prescribes.
  std::vector<int> images(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int img = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      img = base->mul(img, base->power(gens[j], action[i][j]));
    images[i] = img;
  }
  int n0 = base->order();
  std::vector<int> phi(n0, -1);
  phi[0] = 0;
  std::vector<int> word_from(n0, -1), word_gen(n0, -1);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        int y = base->mul(x, gens[j]);
        if (phi[y] < 0) {
          phi[y] = base->mul(phi[x], images[j]);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  for (int x = 0; x < n0; ++x)
    if (phi[x] < 0) throw InvalidTableError("semidirect: generators do not generate the base");
  {
    std::vector<char> hit(n0, 0);
    for (int x = 0; x < n0; ++x) hit[phi[x]] = 1;
    for (int x = 0; x < n0; ++x)
      if (!hit[x]) throw InvalidTableError("semidirect: action is not an automorphism");
    for (int a = 0; a < n0; ++a)
      for (int b = 0; b < n0; ++b)
        if (phi[base->mul(a, b)] != base->mul(phi[a], phi[b]))
          throw InvalidTableError("semidirect: action is not a homomorphism");
  }

  // order of the automorphism
  int d = 1;
  {
    std::vector<int> cur = phi, id(n0);
    for (int x = 0; x < n0; ++x) id[x] = x;
    while (cur != id) {
      std::vector<int> nxt(n0);
      for (int x = 0; x < n0; ++x) nxt[x] = phi[cur[x]];
      cur = std::move(nxt);
      ++d;
      if (d > n0) throw InvalidTableError("semidirect: automorphism order overflow");
    }
  }

  long n = static_cast<long>(n0) * d;
  if (n > Group::kOrderCap) throw OrderCapError("semidirect order above cap");

  // powers of phi
  std::vector<std::vector<int>> phi_pow(d, std::vector<int>(n0));
  for (int x = 0; x < n0; ++x) phi_pow[0][x] = x;
  for (int i = 1; i < d; ++i)
    for (int x = 0; x < n0; ++x) phi_pow[i][x] = phi[phi_pow[i - 1][x]];

  // (b, t^i)(b', t^j) = (b * phi^i(b'), t^{i+j})
  auto mul = [&](int a, int b) {
    int ab = a % n0, ai = a / n0;
    int bb = b % n0, bi = b / n0;
    return base->mul(ab, phi_pow[ai][bb]) + n0 * ((ai + bi) % d);
  };
  std::vector<int> gg;
  for (int g : gens) gg.push_back(g);
  gg.push_back(n0);  // t
  return from_mul("semidirect:" + base->label(), static_cast<int>(n), gg, mul);
}

GroupPtr make_from_permutations(const std::string& label, int degree,
                                const std::vector<std::vector<int>>& generators) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw InvalidTableError("perm: wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]) throw InvalidTableError("perm: not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(x) = a(b(x))
    std::vector<int> c(degree);
    for (int x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elts;
  index[identity] = 0;
  elts.push_back(identity);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier)
      for (const auto& g : generators) {
        auto prod = compose(elts[i], g);
        if (!index.count(prod)) {
          if (static_cast<int>(elts.size()) >= Group::kOrderCap)
            throw OrderCapError("permutation closure above order cap");
          int id = static_cast<int>(elts.size());
          index[prod] = id;
          elts.push_back(prod);
          next.push_back(id);
        }
      }
    frontier = std::move(next);
  }

  int n = static_cast<int>(elts.size());
  std::vector<int> gen_ids;
  for (const auto& g : generators)
    if (g != identity) gen_ids.push_back(index.at(g));
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  auto mul = [&](int a, int b) { return index.at(compose(elts[a], elts[b])); };
  return from_mul(label, n, gen_ids, mul);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in number '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("expected a number, got '" + s + "'");
  }
}

// Parses one `name:params` unit out of comma-separated tokens, consuming as
// many numeric tokens as the constructor takes.
GroupPtr parse_atom(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw ParseError("missing group spec");
  auto head = split(tokens[pos], ':');
  const std::string& name = head[0];
  ++pos;
  auto take_extra = [&](std::size_t needed) {
    std::vector<int> nums;
    for (std::size_t i = 1; i < head.size(); ++i) nums.push_back(parse_int(head[i]));
    while (nums.size() < needed) {
      if (pos >= tokens.size() || tokens[pos].find(':') != std::string::npos)
        throw ParseError(name + ": missing parameter");
      nums.push_back(parse_int(tokens[pos]));
      ++pos;
    }
    if (nums.size() != needed) throw ParseError(name + ": too many parameters");
    return nums;
  };
  if (name == "cyclic") return make_cyclic(take_extra(1)[0]);
  if (name == "elemab") {
    auto v = take_extra(2);
    return make_elementary_abelian(v[0], v[1]);
  }
  if (name == "heisenberg") return make_heisenberg(take_extra(1)[0]);
  if (name == "extraspecial5") return make_extraspecial5(take_extra(1)[0]);
  throw ParseError("unknown group spec '" + name + "'");
}

}  // namespace

GroupPtr build_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_group_file(spec.substr(5));
  if (spec.rfind("product:", 0) == 0) {
    auto tokens = split(spec.substr(8), ',');
    std::vector<GroupPtr> factors;
    std::size_t pos = 0;
    while (pos < tokens.size()) factors.push_back(parse_atom(tokens, pos));
    if (factors.size() < 2) throw ParseError("product needs at least two factors");
    return make_direct_product(factors);
  }
  auto tokens = split(spec, ',');
  std::size_t pos = 0;
  GroupPtr g = parse_atom(tokens, pos);
  if (pos != tokens.size()) throw ParseError("trailing input in group spec '" + spec + "'");
  return g;
}

std::vector<std::string> catalog_specs() {
  return {"cyclic:3",  "cyclic:9",  "cyclic:27",       "elemab:3,2",
          "elemab:3,3", "heisenberg:3", "extraspecial5:3"};
}

GroupPtr read_group(std::istream& in) {
  std::string kind;
  if (!(in >> kind)) throw ParseError("empty group file");
  if (kind == "group") {
    std::string label, kw;
    int n;
    if (!(in >> label >> kw >> n) || kw != "order") throw ParseError("bad group header");
    if (n < 1 || n > Group::kOrderCap) throw OrderCapError("group file order out of range");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      long v;
      if (!(in >> v)) throw ParseError("group file table truncated");
      if (v < 0 || v >= n) throw InvalidTableError("group file entry out of range");
      table[i] = static_cast<std::uint16_t>(v);
    }
    return Group::make(label, n, std::move(table));
  }
  if (kind == "perm") {
    std::string label, kw;
    int d;
    if (!(in >> label >> kw >> d) || kw != "degree") throw ParseError("bad perm header");
    if (d < 1) throw ParseError("bad perm degree");
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<int>> gens;
    while (std::getline(in, line)) {
      std::string trimmed;
      for (char c : line)
        if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
      while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
      if (trimmed.empty()) continue;
      std::vector<int> perm(d);
      for (int i = 0; i < d; ++i) perm[i] = i;
      std::size_t i = 0;
      while (i < trimmed.size()) {
        if (trimmed[i] != '(') throw ParseError("cycle must start with '('");
        std::size_t close = trimmed.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed cycle");
        std::istringstream cs(trimmed.substr(i + 1, close - i - 1));
        std::vector<int> cyc;
        int pt;
        while (cs >> pt) {
          if (pt < 1 || pt > d) throw ParseError("cycle point out of range");
          cyc.push_back(pt - 1);
        }
        for (std::size_t j = 0; j < cyc.size(); ++j) perm[cyc[j]] = cyc[(j + 1) % cyc.size()];
        i = close + 1;
        while (i < trimmed.size() && isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
      }
      gens.push_back(perm);
    }
    if (gens.empty()) throw ParseError("perm file has no generators");
    return make_from_permutations(label, d, gens);
  }
  throw ParseError("unknown group file kind '" + kind + "'");
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  return read_group(in);
}

void write_group(std::ostream& out, const Group& g) {
  out << "group " << g.label() << " order " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
}

}  // namespace charfam
