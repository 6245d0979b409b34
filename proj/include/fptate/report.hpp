#pragma once

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fptate/singer.hpp"
#include "fptate/version.hpp"

namespace fptate {

using ordered_json = nlohmann::ordered_json;

struct RunOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  long leibniz_trials = 500;
  long formula_trials = 100;
  long warn_basis_threshold = 200000; // stderr warning above this size estimate
};

struct Verdict {
  std::string name;
  bool pass = true;
  ordered_json details = ordered_json::object();
};

inline ordered_json window_json(const Window& w) {
  return ordered_json{{"s", {w.s_min, w.s_max}}, {"t", {w.t_min, w.t_max}}};
}

inline ordered_json table_json(const BigradedDimTable& t) {
  ordered_json entries = ordered_json::array();
  const Window& w = t.window();
  for (int s = w.s_min; s <= w.s_max; ++s)
    for (int u = w.t_min; u <= w.t_max; ++u) entries.push_back({s, u, t.at(s, u)});
  return ordered_json{{"window", window_json(w)}, {"entries", std::move(entries)}};
}

inline ordered_json graded_table_json(const std::vector<long>& dims) {
  ordered_json out = ordered_json::object();
  out["max_degree"] = static_cast<long>(dims.size()) - 1;
  out["dims"] = dims;
  return out;
}

/// Deterministic run report: metadata, named tables, named verdicts. The
/// JSON form is byte-identical across runs with identical inputs; nothing
/// time- or host-dependent is recorded.
class Report {
public:
  Report(std::string command, ordered_json metadata) : meta_(std::move(metadata)) {
    meta_["tool"] = k_tool_name;
    meta_["version"] = k_version;
    meta_["command"] = std::move(command);
  }

  ordered_json& metadata() { return meta_; }

  void add_table(const std::string& name, const BigradedDimTable& t) {
    tables_.push_back({name, table_json(t)});
  }
  void add_graded_table(const std::string& name, const std::vector<long>& dims) {
    tables_.push_back({name, graded_table_json(dims)});
  }
  void add_json_table(const std::string& name, ordered_json j) {
    tables_.push_back({name, std::move(j)});
  }

  void add_verdict(Verdict v) { verdicts_.push_back(std::move(v)); }

  const std::vector<Verdict>& verdicts() const { return verdicts_; }

  bool all_pass() const {
    for (const Verdict& v : verdicts_)
      if (!v.pass) return false;
    return true;
  }

  ordered_json to_json() const {
    ordered_json out;
    out["metadata"] = meta_;
    ordered_json tables = ordered_json::object();
    for (const auto& [name, t] : tables_) tables[name] = t;
    out["tables"] = std::move(tables);
    ordered_json verdicts = ordered_json::array();
    for (const Verdict& v : verdicts_) {
      ordered_json vj;
      vj["name"] = v.name;
      vj["pass"] = v.pass;
      if (!v.details.empty()) vj["details"] = v.details;
      verdicts.push_back(std::move(vj));
    }
    out["verdicts"] = std::move(verdicts);
    return out;
  }

  std::string to_json_text() const { return to_json().dump(2) + "\n"; }

  /// Flat CSV of all tables: bigraded rows as table,s,t,value and graded
  /// rows as table,,degree,value.
  std::string to_csv() const {
    std::string out = "table,s,t,value\n";
    for (const auto& [name, t] : tables_) {
      if (t.contains("entries")) {
        for (const auto& e : t["entries"])
          out += name + "," + e[0].dump() + "," + e[1].dump() + "," + e[2].dump() + "\n";
      } else if (t.contains("dims")) {
        const auto& dims = t["dims"];
        for (std::size_t d = 0; d < dims.size(); ++d)
          out += name + ",," + std::to_string(d) + "," + dims[d].dump() + "\n";
      }
    }
    return out;
  }

  /// 0 when every verdict passed, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }

private:
  ordered_json meta_;
  std::vector<std::pair<std::string, ordered_json>> tables_;
  std::vector<Verdict> verdicts_;
};

namespace detail {

/// Crude upper bound on the largest per-bidegree basis inside a window,
/// used only to decide whether to warn about runtime.
inline long basis_size_bound(const AlgebraPresentation& a, const Window& w) {
  long bound = 1;
  for (const GeneratorSpec& g : a.generators()) {
    if (g.kind == GeneratorKind::exterior)
      bound *= 2;
    else if (g.kind == GeneratorKind::polynomial)
      bound *= 1 + std::max(0, w.t_max) / g.degree.t;
    if (bound > (1L << 40)) return 1L << 40;
  }
  return bound;
}

inline Monomial random_monomial(const AlgebraPresentation& a, std::mt19937_64& rng) {
  std::vector<Monomial::Entry> entries;
  for (int i = 0; i < a.size(); ++i) {
    int e = 0;
    switch (a.gen(i).kind) {
      case GeneratorKind::exterior:
        e = static_cast<int>(rng() % 2);
        break;
      case GeneratorKind::laurent:
        e = static_cast<int>(rng() % 7) - 3;
        break;
      case GeneratorKind::polynomial:
        e = static_cast<int>(rng() % 4);
        break;
    }
    if (e != 0) entries.push_back({i, e});
  }
  return Monomial::from_entries(std::move(entries));
}

/// Leibniz consistency on one random split m = m1 * m2 (exponents divided
/// arbitrarily, laurent ones possibly past zero).
inline bool leibniz_split_holds(const AlgebraPresentation& a, const DifferentialSpec& d,
                                std::mt19937_64& rng, std::string* witness) {
  Monomial m = random_monomial(a, rng);
  std::vector<Monomial::Entry> e1, e2;
  for (const auto& [idx, e] : m.entries()) {
    int lo = std::min(0, e), hi = std::max(0, e);
    int a1 = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    if (a1 != 0) e1.push_back({idx, a1});
    if (e - a1 != 0) e2.push_back({idx, e - a1});
  }
  Monomial m1 = Monomial::from_entries(std::move(e1));
  Monomial m2 = Monomial::from_entries(std::move(e2));
  const PrimeField& f = a.field();

  // d(m1 m2) computed directly, against the two-term Leibniz expansion.
  Element prod = multiply(Element::term(m1, 1, f), Element::term(m2, 1, f), a);
  Element lhs;
  for (const auto& [mono, c] : prod.terms()) lhs = add(lhs, scale(leibniz_extend(d, mono, a), c, f), f);
  Element rhs = multiply(leibniz_extend(d, m1, a), Element::term(m2, 1, f), a);
  int sign = parity_sign(bidegree(m1, a).total());
  Element second = multiply(Element::term(m1, 1, f), leibniz_extend(d, m2, a), a);
  rhs = add(rhs, scale(second, sign, f), f);
  if (lhs == rhs) return true;
  if (witness)
    *witness = "split " + to_string(m1, a) + " | " + to_string(m2, a) + ": " + to_string(lhs, a) +
               " vs " + to_string(rhs, a);
  return false;
}

inline Verdict periodicity_verdict(const std::string& name, const BigradedDimTable& table,
                                   int period) {
  Verdict v{name};
  v.details["period"] = period;
  const Window& w = table.window();
  for (int s = w.s_min + period; s <= w.s_max; ++s)
    for (int t = w.t_min; t <= w.t_max; ++t)
      if (table.at(s, t) != table.at(s - period, t)) {
        v.pass = false;
        v.details["witness"] = ordered_json{{"s", s},
                                            {"t", t},
                                            {"dim", table.at(s, t)},
                                            {"dim_shifted", table.at(s - period, t)}};
        return v;
      }
  return v;
}

inline Verdict compare_verdict(const std::string& name, const BigradedDimTable& lhs,
                               const BigradedDimTable& rhs) {
  Verdict v{name};
  CompareReport cmp = compare_tables(lhs, rhs);
  v.details["window"] = window_json(cmp.overlap);
  v.pass = cmp.agree();
  if (!cmp.agree()) {
    const TableMismatch& m = cmp.mismatches.front();
    v.details["witness"] =
        ordered_json{{"s", m.s}, {"t", m.t}, {"lhs_dim", m.lhs}, {"rhs_dim", m.rhs}};
    v.details["mismatch_count"] = static_cast<long>(cmp.mismatches.size());
  }
  return v;
}

} // namespace detail

/// Hochschild pipeline: closed form dims by degree, optionally checked
/// against the bar-complex oracle.
inline Report run_hh(const Preset& preset, std::uint32_t p, int max_degree, bool with_oracle,
                     const RunOptions& opts = {}) {
  ordered_json meta{{"preset", preset.label}, {"p", p}, {"max_degree", max_degree},
                    {"oracle", with_oracle}, {"seed", opts.seed}, {"threads", opts.threads}};
  Report report("hh", std::move(meta));
  AlgebraPresentation h = preset_homology(preset, p);
  AlgebraPresentation hh = hh_closed_form(h);
  report.metadata()["bokstedt_collapses"] = bokstedt_e2(h).collapses;
  std::vector<long> closed = graded_dims(hh, max_degree);
  report.add_graded_table("hh_closed_form", closed);
  if (with_oracle) {
    std::vector<long> oracle = bar_hh_oracle(h, max_degree);
    report.add_graded_table("hh_bar_oracle", oracle);
    Verdict v{"oracle_matches_closed_form"};
    for (std::size_t d = 0; d < closed.size(); ++d)
      if (closed[d] != oracle[d]) {
        v.pass = false;
        v.details["witness"] = ordered_json{{"degree", d},
                                            {"closed_form_dim", closed[d]},
                                            {"oracle_dim", oracle[d]}};
        break;
      }
    report.add_verdict(std::move(v));
  }
  return report;
}

/// Tate pipeline: E2, d2, E3 over the window, with the structural verdicts.
inline Report run_tate(const Preset& preset, std::uint32_t p, Window window,
                       const RunOptions& opts = {}) {
  ordered_json meta{{"preset", preset.label}, {"p", p}, {"window", window_json(window)},
                    {"seed", opts.seed}, {"threads", opts.threads}};
  Report report("tate", std::move(meta));

  AlgebraPresentation e2 = preset_tate_e2(preset, p);
  if (detail::basis_size_bound(e2, window) > opts.warn_basis_threshold)
    std::fprintf(stderr, "warning: basis size bound exceeds %ld, this may take a while\n",
                 opts.warn_basis_threshold);
  DifferentialSpec d2 = preset_d2(preset, p);
  TatePage page = compute_tate_page(e2, d2, window, opts.threads);

  BigradedDimTable e2_table = poincare_table(e2, window);
  BigradedDimTable e2_safe = poincare_table(e2, page.safe);
  AlgebraPresentation einfty = einfty_closed_form(preset, p);
  BigradedDimTable einfty_table = poincare_table(einfty, page.safe);

  report.add_table("e2", e2_table);
  report.add_table("e3", page.dims);
  report.add_table("einfty", einfty_table);

  {
    Verdict v{"d2_squared_zero"};
    v.details["window"] = window_json(page.safe);
    auto witness = d_squared_witness(e2, d2, page.safe);
    if (witness) {
      v.pass = false;
      v.details["witness"] = *witness;
    }
    report.add_verdict(std::move(v));
  }
  {
    Verdict v{"leibniz_random_splits"};
    v.details["trials"] = opts.leibniz_trials;
    std::mt19937_64 rng(opts.seed);
    std::string witness;
    for (long i = 0; i < opts.leibniz_trials; ++i)
      if (!detail::leibniz_split_holds(e2, d2, rng, &witness)) {
        v.pass = false;
        v.details["witness"] = witness;
        break;
      }
    report.add_verdict(std::move(v));
  }
  const int period = p == 2 ? 1 : 2;
  report.add_verdict(detail::periodicity_verdict("t_periodicity_e2", e2_table, period));
  report.add_verdict(detail::periodicity_verdict("t_periodicity_e3", page.dims, period));
  {
    // Boundary-corrected Euler characteristic: over the safe window the
    // alternating sums of E2 and E3 dims differ exactly by the ranks of the
    // d2 arrows crossing the window boundary, signed by the total degree of
    // the endpoint inside. For a window no arrow crosses this is the plain
    // equality of Euler characteristics.
    Verdict v{"euler_characteristic"};
    const Window& s = page.safe;
    long chi2 = 0, chi3 = 0, correction = 0;
    for (int si = s.s_min; si <= s.s_max; ++si)
      for (int t = s.t_min; t <= s.t_max; ++t) {
        int sign = parity_sign(si + t);
        chi2 += sign * e2_safe.at(si, t);
        chi3 += sign * page.dims.at(si, t);
        if (!s.contains(si - 2, t + 1)) correction += sign * page.ranks.at(si, t);
        if (!s.contains(si + 2, t - 1)) correction += sign * page.ranks.at(si + 2, t - 1);
      }
    v.details["chi_e2"] = chi2;
    v.details["chi_e3"] = chi3;
    v.details["boundary_rank_correction"] = correction;
    v.pass = (chi2 - chi3 == correction);
    report.add_verdict(std::move(v));
  }
  report.add_verdict(detail::compare_verdict("e3_matches_einfty_closed_form", page.dims, einfty_table));
  return report;
}

/// Singer pipeline: the basis bijection plus the two closed formulas.
inline Report run_singer(const Preset& preset, std::uint32_t p, int max_degree,
                         const RunOptions& opts = {}) {
  ordered_json meta{{"preset", preset.label}, {"p", p}, {"max_degree", max_degree},
                    {"seed", opts.seed}, {"threads", opts.threads}};
  Report report("singer", std::move(meta));
  BijectionReport bij = verify_bijection(preset, p, max_degree);

  ordered_json counts = ordered_json::array();
  for (std::size_t d = 0; d < bij.counts_by_degree.size(); ++d)
    counts.push_back({d, bij.counts_by_degree[d][0], bij.counts_by_degree[d][1]});
  report.add_json_table("singer_counts_by_degree",
                        ordered_json{{"columns", {"total_degree", "source", "target"}},
                                     {"rows", std::move(counts)}});

  {
    Verdict v{"tensor_power_bijection"};
    v.details["max_total_degree"] = bij.max_total_degree;
    v.details["s_window"] = ordered_json::array({bij.s_lo, bij.s_hi});
    v.details["filtration_shift_per_exterior_factor"] = -static_cast<int>(p - 1);
    v.pass = bij.pass();
    if (!bij.pass()) v.details["witness"] = bij.witness;
    report.add_verdict(std::move(v));
  }
  {
    Verdict v{"s_shift_formula"};
    v.details["trials"] = opts.formula_trials;
    std::mt19937_64 rng(opts.seed);
    for (long i = 0; i < opts.formula_trials && v.pass; ++i) {
      int r = static_cast<int>(rng() % 5);
      std::vector<int> indices;
      int next = 1;
      for (int j = 0; j < r; ++j) {
        next += static_cast<int>(rng() % 3);
        indices.push_back(next);
        ++next;
      }
      long sum = 0;
      for (int l : indices) sum += 2L * l;
      long expected = -static_cast<long>(p - 1) * (sum + r);
      long got = s_shift(indices, p);
      if (got != expected) {
        v.pass = false;
        v.details["witness"] = ordered_json{{"indices", indices}, {"got", got}, {"expected", expected}};
      }
    }
    report.add_verdict(std::move(v));
  }
  {
    Verdict v{"singer_index_formula"};
    v.details["trials"] = opts.formula_trials;
    std::mt19937_64 rng(opts.seed + 1);
    for (long i = 0; i < opts.formula_trials && v.pass; ++i) {
      long k = static_cast<long>(rng() % 60);
      long d = k == 0 ? 0 : static_cast<long>(rng() % static_cast<unsigned long>(k + 1));
      long expected = static_cast<long>(p) * (k - d) + d;
      long got = singer_index(k, d, p);
      if (got != expected || got < k) {
        v.pass = false;
        v.details["witness"] = ordered_json{{"k", k}, {"d", d}, {"got", got}, {"expected", expected}};
      }
    }
    report.add_verdict(std::move(v));
  }
  return report;
}

/// Combined pipeline behind the `report` command: all three stages for one
/// preset and prime, merged into a single report.
inline Report run_full(const Preset& preset, std::uint32_t p, int max_degree, Window window,
                       bool with_oracle, const RunOptions& opts = {}) {
  ordered_json meta{{"preset", preset.label}, {"p", p}, {"max_degree", max_degree},
                    {"window", window_json(window)}, {"oracle", with_oracle},
                    {"seed", opts.seed}, {"threads", opts.threads}};
  Report merged("report", std::move(meta));
  Report hh = run_hh(preset, p, max_degree, with_oracle, opts);
  Report tate = run_tate(preset, p, window, opts);
  Report singer = run_singer(preset, p, max_degree, opts);
  ordered_json hj = hh.to_json(), tj = tate.to_json(), sj = singer.to_json();
  for (const Report* r : {&hh, &tate, &singer})
    for (const Verdict& v : r->verdicts()) merged.add_verdict(v);
  for (const auto& [name, t] : hj["tables"].items()) merged.add_json_table(name, t);
  for (const auto& [name, t] : tj["tables"].items()) merged.add_json_table(name, t);
  for (const auto& [name, t] : sj["tables"].items()) merged.add_json_table(name, t);
  merged.metadata()["bokstedt_collapses"] = hj["metadata"]["bokstedt_collapses"];
  return merged;
}

} // namespace fptate
