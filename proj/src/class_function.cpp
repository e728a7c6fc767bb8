#include "charfam/class_function.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "charfam/errors.hpp"

namespace charfam {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  const auto& part = group_->conjugacy();
  if (values_.size() != part.classes.size())
    throw GroupMismatchError("class function has wrong number of values");
  int m = group_->exponent();
  for (auto& v : values_) v = v.conductor() == m ? v : v.to_conductor(m);
}

ClassFunction ClassFunction::from_elements(const GroupPtr& group,
                                           const std::function<Cyclotomic(int)>& value_at) {
  const auto& part = group->conjugacy();
  std::vector<Cyclotomic> vals;
  vals.reserve(part.classes.size());
  for (const auto& cls : part.classes) {
    Cyclotomic v = value_at(cls.front());
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (value_at(cls[i]) != v)
        throw GroupMismatchError("element function is not constant on a conjugacy class");
    vals.push_back(std::move(v));
  }
  return ClassFunction(group, std::move(vals));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group_ != o.group_) throw GroupMismatchError("class function sum over distinct groups");
  std::vector<Cyclotomic> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i] + o.values_[i];
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (group_ != o.group_) throw GroupMismatchError("class function difference over distinct groups");
  std::vector<Cyclotomic> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i] - o.values_[i];
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::scaled(const mpq_class& s) const {
  std::vector<Cyclotomic> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = values_[i] * s;
  return ClassFunction(group_, std::move(vals));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (group_ != o.group_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != o.values_[i]) return false;
  return true;
}

ClassFunction trivial_character(const GroupPtr& g) {
  std::vector<Cyclotomic> vals(g->conjugacy().classes.size(), Cyclotomic::integer(1));
  return ClassFunction(g, std::move(vals));
}

ClassFunction regular_character(const GroupPtr& g) {
  const auto& part = g->conjugacy();
  std::vector<Cyclotomic> vals(part.classes.size(), Cyclotomic::integer(0));
  vals[0] = Cyclotomic::integer(g->order());
  return ClassFunction(g, std::move(vals));
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.group() != h.group()) throw GroupMismatchError("inner product over distinct groups");
  const auto& part = f.group()->conjugacy();
  Cyclotomic sum = Cyclotomic::zero(f.group()->exponent());
  for (int k = 0; k < f.num_classes(); ++k) {
    Cyclotomic term = f.value_on_class(k) * h.value_on_class(k).conjugate();
    sum += term * mpq_class(static_cast<long>(part.classes[k].size()));
  }
  return sum / mpq_class(static_cast<long>(f.group()->order()));
}

ClassFunction restrict_to(const ClassFunction& f, const AsGroup& asg) {
  if (asg.sub.parent != f.group())
    throw GroupMismatchError("restrict_to: subgroup of a different group");
  return ClassFunction::from_elements(
      asg.group, [&](int s) { return f.value_at(asg.to_parent[s]); });
}

ClassFunction pullback(const ClassFunction& f, const GroupEmbedding& emb) {
  if (emb.target != f.group()) throw GroupMismatchError("pullback: embedding target mismatch");
  return ClassFunction::from_elements(emb.source,
                                      [&](int s) { return f.value_at(emb.map[s]); });
}

ClassFunction induce(const ClassFunction& f, const GroupPtr& big, const GroupEmbedding& emb) {
  if (emb.source != f.group() || emb.target != big)
    throw GroupMismatchError("induce: embedding does not match");
  const auto& G = *big;
  std::vector<int> from_big(G.order(), -1);
  for (int s = 0; s < emb.source->order(); ++s) from_big[emb.map[s]] = s;
  long h_order = emb.source->order();

  const auto& part = G.conjugacy();
  std::vector<Cyclotomic> vals;
  vals.reserve(part.classes.size());
  for (int k = 0; k < static_cast<int>(part.classes.size()); ++k) {
    int g = part.representatives[k];
    Cyclotomic sum = Cyclotomic::zero(big->exponent());
    for (int x = 0; x < G.order(); ++x) {
      int y = G.conj(G.inv(x), g);  // x^-1 g x
      if (from_big[y] >= 0) sum += f.value_at(from_big[y]).lifted(big->exponent());
    }
    vals.push_back(sum / mpq_class(h_order));
  }
  return ClassFunction(big, std::move(vals));
}

ClassFunction perm_character(const GroupPtr& g, const SubgroupSet& h) {
  if (h.parent != g) throw GroupMismatchError("perm_character: subgroup of a different group");
  const auto& G = *g;
  // minimal representative per coset
  std::vector<int> coset_min(G.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (coset_min[x] >= 0) continue;
    for (int y : h.elements()) coset_min[G.mul(x, y)] = x;
    reps.push_back(x);
  }
  return ClassFunction::from_elements(g, [&](int a) {
    long fixed = 0;
    for (int r : reps)
      if (coset_min[G.mul(a, r)] == r) ++fixed;
    return Cyclotomic::integer(fixed);
  });
}

ClassFunction reduced_perm_character(const GroupPtr& g, const SubgroupSet& h) {
  return perm_character(g, h) - trivial_character(g);
}

Cyclotomic fixed_subspace_dim(const ClassFunction& f, int element) {
  const auto& G = *f.group();
  int o = G.element_order(element);
  Cyclotomic sum = Cyclotomic::zero(G.exponent());
  int acc = 0;
  for (int i = 0; i < o; ++i) {
    sum += f.value_at(acc);
    acc = G.mul(acc, element);
  }
  return sum / mpq_class(o);
}

void write_class_function(std::ostream& out, const ClassFunction& f) {
  int m = f.group()->exponent();
  out << "conductor " << m << "\n";
  const auto& part = f.group()->conjugacy();
  for (int k = 0; k < f.num_classes(); ++k) {
    out << part.representatives[k];
    const auto& v = f.value_on_class(k);
    for (const auto& c : v.lifted(m).coeffs()) out << " " << c.get_str();
    out << "\n";
  }
}

ClassFunction read_class_function(std::istream& in, const GroupPtr& g) {
  std::string kw;
  int m;
  if (!(in >> kw >> m) || kw != "conductor") throw ParseError("expected conductor line");
  const auto& part = g->conjugacy();
  int phi = euler_phi(m);
  std::vector<Cyclotomic> vals(part.classes.size(), Cyclotomic::zero(m));
  for (std::size_t k = 0; k < part.classes.size(); ++k) {
    int rep;
    if (!(in >> rep)) throw ParseError("class function block truncated");
    if (rep != part.representatives[k]) throw ParseError("unexpected class representative");
    std::vector<mpq_class> coeffs(phi);
    for (int j = 0; j < phi; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("class function coefficients truncated");
      coeffs[j] = mpq_class(tok);
      coeffs[j].canonicalize();
    }
    vals[k] = Cyclotomic::from_coeffs(m, std::move(coeffs));
  }
  return ClassFunction(g, std::move(vals));
}

}  // namespace charfam
