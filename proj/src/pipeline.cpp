#include "charfam/pipeline.hpp"

#include <chrono>
#include <functional>

#include "charfam/biset.hpp"
#include "charfam/errors.hpp"
#include "charfam/jackson.hpp"
#include "charfam/rank_one.hpp"

namespace charfam {

namespace {

using Clock = std::chrono::steady_clock;

CheckSection timed(const RunOptions& opts, std::string name, std::string anchor,
                   const std::function<Verdict()>& run) {
  CheckSection s;
  s.name = std::move(name);
  s.anchor = std::move(anchor);
  auto t0 = Clock::now();
  s.verdict = run();
  if (opts.timings)
    s.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return s;
}

VerificationReport base_report(const GroupPtr& g) {
  VerificationReport r;
  r.group_label = g->label();
  r.group_order = g->order();
  auto pk = prime_power_order(full_subgroup(g));
  r.prime = pk && g->order() > 1 ? pk->first : 0;
  return r;
}

void append(VerificationReport& into, const VerificationReport& from) {
  for (const auto& s : from.hypotheses) into.hypotheses.push_back(s);
  for (const auto& s : from.checks) into.checks.push_back(s);
}

}  // namespace

VerificationReport run_check_chi(const GroupPtr& g, const RunOptions& opts) {
  VerificationReport r = base_report(g);

  std::string blocker;
  {
    auto hyp = [&](std::string name, std::string anchor, bool ok, std::string note) {
      CheckSection s;
      s.name = std::move(name);
      s.anchor = std::move(anchor);
      s.verdict = ok ? Verdict::pass() : Verdict::inapplicable(note);
      if (!ok && blocker.empty()) blocker = s.name + ": " + note;
      r.hypotheses.push_back(std::move(s));
    };
    bool is_p = r.prime > 0;
    hyp("p-group", "the group order is a power of a single prime", is_p,
        "order " + std::to_string(g->order()) + " is not a prime power");
    bool odd = is_p && r.prime % 2 == 1;
    hyp("odd-prime", "the prime is odd", odd,
        is_p ? "p = " + std::to_string(r.prime) : "no prime");
    int rk = is_p && g->order() > 1 ? rank(full_subgroup(g)) : 0;
    hyp("rank-three", "the group has rank three", is_p && rk == 3,
        "rank = " + std::to_string(rk));
    bool zc = is_cyclic(center(g));
    hyp("cyclic-center", "the center is cyclic", zc, "center is not cyclic");
  }

  if (!blocker.empty()) {
    for (const char* name : {"prop52i", "prop52ii", "lemma53", "lemma54", "lemma55", "lemma56"}) {
      CheckSection s;
      s.name = name;
      s.anchor = "skipped";
      s.verdict = Verdict::inapplicable(blocker);
      r.checks.push_back(std::move(s));
    }
  } else {
    JacksonData data = build_jackson_data(g, opts.jobs);
    data.quadruple = build_jackson_quadruple(data, opts.jobs);
    data.quadruple_built = true;

    std::pair<Verdict, Verdict> p52{Verdict::pass(), Verdict::pass()};
    r.checks.push_back(timed(opts, "prop52i",
                             "the restriction of chi to every family member is a character",
                             [&] {
                               p52 = verify_prop52(data, opts.jobs);
                               Verdict v = p52.first;
                               v.details["chi_degree"] =
                                   data.chi->degree().rational_value().get_str();
                               v.details["family_size"] = data.family.size();
                               return v;
                             }));
    r.checks.push_back(
        timed(opts, "prop52ii",
              "the restriction of chi to every rank-two elementary abelian member has "
              "trivial multiplicity zero",
              [&] { return p52.second; }));
    r.checks.push_back(
        timed(opts, "lemma53",
              "members meeting Q nontrivially centralize Q and conjugate the "
              "intersection onto the chosen line",
              [&] { return verify_lemma53(data); }));
    r.checks.push_back(timed(opts, "lemma54",
                             "members outside the centralizer of Q have cyclic intersection "
                             "with it and match one of three shapes",
                             [&] { return verify_lemma54(data); }));
    r.checks.push_back(timed(opts, "lemma55",
                             "the subfamily diagram is almost strongly connected and "
                             "uncovered members are cyclic",
                             [&] { return verify_lemma55(data); }));
    r.checks.push_back(timed(opts, "lemma56",
                             "the compatible family factors through the quadruple and the "
                             "induced-character identities hold exactly",
                             [&] { return verify_lemma56(data, opts.jobs); }));
  }

  r.checks.push_back(timed(opts, "reduction",
                           "with two independent central order-p elements, subgroups "
                           "meeting their span trivially have rank at most one",
                           [&] { return noncyclic_center_reduction(g); }));
  return r;
}

VerificationReport run_check_rank1(const GroupPtr& g, const RunOptions& opts) {
  VerificationReport r = base_report(g);
  RankOneData data = build_rank_one_diagram(g, opts.rank1_n, opts.jobs);

  {
    CheckSection s;
    s.name = "rank-one-isotropy-cover";
    s.anchor = "every prime-power subgroup has rank at most one";
    s.verdict = data.all_prime_power_rank_one
                    ? Verdict::pass()
                    : Verdict::inapplicable(
                          "higher-rank prime-power subgroups exist; the family omits them");
    r.hypotheses.push_back(std::move(s));
  }
  {
    CheckSection s;
    s.name = "rank1-construction";
    s.anchor = "star diagram data: normalizer orders, m_d, degree n";
    Verdict v = Verdict::pass();
    v.details["n"] = data.n;
    nlohmann::ordered_json md = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < data.d_reps.size(); ++i) {
      nlohmann::ordered_json entry;
      entry["node"] = "d" + std::to_string(i + 1);
      entry["class_order"] = data.d_reps[i].size();
      entry["m_d"] = data.m_d[i];
      entry["n_d"] = data.n_d[i];
      md.push_back(std::move(entry));
    }
    v.details["m_d"] = std::move(md);
    s.verdict = std::move(v);
    r.hypotheses.push_back(std::move(s));
  }

  r.checks.push_back(timed(opts, "rank1-covering", "the subfamilies cover the family",
                           [&] { return covers_family(data.bundle.diagram, data.family); }));
  r.checks.push_back(timed(opts, "rank1-connectivity",
                           "every member subposet is simply connected",
                           [&] { return strongly_connected(data.bundle.diagram, data.family); }));
  r.checks.push_back(timed(opts, "rank1-reps",
                           "representations agree along every edge of the star",
                           [&] { return check_diagram_of_reps(data.bundle); }));
  r.checks.push_back(
      timed(opts, "rank1-assignments", "assignments commute with conjugation maps",
            [&] { return check_assignment_compatibility(data.bundle, data.ctx, opts.jobs); }));
  r.checks.push_back(timed(opts, "rank1-freeness",
                           "every member representation is well defined and fixed point free",
                           [&] { return verify_rank_one_freeness(data, opts.jobs); }));
  return r;
}

VerificationReport run_check_biset(const GroupPtr& g, const RunOptions& opts) {
  VerificationReport r = base_report(g);
  r.checks.push_back(timed(opts, "biset-sweep",
                           "the fixed-coset composition map is a bijection for every "
                           "cyclic prime-power (H, K, L) triple",
                           [&]() -> Verdict {
                             try {
                               return sweep_mu(g, opts.jobs);
                             } catch (const OrderCapError& e) {
                               return Verdict::inapplicable(e.what());
                             }
                           }));
  return r;
}

VerificationReport run_check_all(const GroupPtr& g, const RunOptions& opts) {
  VerificationReport r = base_report(g);
  append(r, run_check_chi(g, opts));
  append(r, run_check_rank1(g, opts));
  append(r, run_check_biset(g, opts));
  return r;
}

}  // namespace charfam
