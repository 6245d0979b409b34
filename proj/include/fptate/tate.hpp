#pragma once

#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fptate/hochschild.hpp"
#include "fptate/linalg.hpp"
#include "fptate/presets.hpp"

namespace fptate {

/// Coefficient ring of the cyclic-group Tate construction:
///   p = 2:  P(t, t^-1) with |t| = (-1, 0)
///   p > 2:  E(h) (x) P(t, t^-1) with |h| = (-1, 0), |t| = (-2, 0)
inline AlgebraPresentation tate_coefficients(std::uint32_t p) {
  PrimeField field(p);
  std::vector<GeneratorSpec> gens;
  if (p == 2) {
    gens.push_back({"t", GeneratorKind::laurent, {-1, 0}});
  } else {
    gens.push_back({"h", GeneratorKind::exterior, {-1, 0}});
    gens.push_back({"t", GeneratorKind::laurent, {-2, 0}});
  }
  return AlgebraPresentation::make(field, std::move(gens));
}

/// E2 page of the Tate spectral sequence: coefficients tensor the regraded
/// homology input H (all of H in filtration 0). The coefficient names are
/// reserved; H reusing them is a NameClash.
inline AlgebraPresentation tate_e2(const AlgebraPresentation& h, std::uint32_t p) {
  if (h.p() != p) raise(errc::precondition, "input presentation is over a different prime");
  AlgebraPresentation coeff = tate_coefficients(p);
  for (const GeneratorSpec& g : coeff.generators())
    if (h.has(g.name))
      raise(errc::name_clash, "input reuses reserved coefficient name '" + g.name + "'");
  for (const GeneratorSpec& g : h.generators())
    if (g.degree.s != 0)
      raise(errc::precondition, "input generator '" + g.name + "' is not in filtration 0");
  return tensor(coeff, h);
}

/// A page-r differential, given by its values on generators. Generators
/// absent from `values` are sent to zero. The bidegree shift is
/// (s, t) -> (s - r, t + r - 1); total degree drops by one, so the Leibniz
/// extension uses the odd-derivation sign.
struct DifferentialSpec {
  int r = 2;
  AlgebraPresentation algebra;
  std::map<std::string, Element> values;

  Bidegree shift() const { return {-r, r - 1}; }
};

/// Check a differential against its presentation: known generator names and
/// homogeneous values in the shifted bidegree.
inline void validate_differential(const DifferentialSpec& d) {
  for (const auto& [name, value] : d.values) {
    int idx = d.algebra.index_of(name);
    if (value.is_zero()) continue;
    for (const auto& [m, c] : value.terms()) {
      (void)c;
      validate_monomial(m, d.algebra);
    }
    auto deg = bidegree_if_homogeneous(value, d.algebra);
    Bidegree want = d.algebra.gen(idx).degree + d.shift();
    if (!deg || *deg != want)
      raise(errc::precondition, "differential value on '" + name + "' is not homogeneous of bidegree " +
                                    to_string(want));
  }
}

/// Extend the differential from generators to a monomial by the graded
/// Leibniz rule d(xy) = d(x) y + (-1)^{|x|} x d(y), walking the canonical
/// factorization. The result is independent of how the monomial is split
/// into factors; tests exercise random splits.
inline Element leibniz_extend(const DifferentialSpec& d, const Monomial& m,
                              const AlgebraPresentation& a) {
  if (!(a == d.algebra)) raise(errc::foreign_generator, "monomial from a different presentation");
  validate_monomial(m, a);
  const PrimeField& f = a.field();
  Element out;
  int prefix_parity = 0;
  const auto& entries = m.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [idx, exp] = entries[i];
    const GeneratorSpec& g = a.gen(idx);
    auto it = d.values.find(g.name);
    if (it != d.values.end() && !it->second.is_zero()) {
      long long c = f.reduce(exp);
      if (c != 0) {
        if (prefix_parity) c = -c;
        std::vector<Monomial::Entry> left(entries.begin(), entries.begin() + static_cast<long>(i));
        if (exp - 1 != 0) left.push_back({idx, exp - 1});
        std::vector<Monomial::Entry> right(entries.begin() + static_cast<long>(i) + 1, entries.end());
        Element term = multiply(Element::term(Monomial::from_entries(std::move(left)), c, f),
                                multiply(it->second,
                                         Element::term(Monomial::from_entries(std::move(right)), 1, f), a),
                                a);
        out = add(out, term, f);
      }
    }
    if (is_odd(g.degree.total()) && exp % 2 != 0) prefix_parity ^= 1;
  }
  return out;
}

inline Element apply_differential(const DifferentialSpec& d, const Element& e,
                                  const AlgebraPresentation& a) {
  Element out;
  for (const auto& [m, c] : e.terms()) out = add(out, scale(leibniz_extend(d, m, a), c, a.field()), a.field());
  return out;
}

/// Dense matrix of the differential from the component at `src`, columns
/// indexed by the domain basis, rows by the codomain basis.
inline FpMatrix differential_matrix(const AlgebraPresentation& a, const DifferentialSpec& d,
                                    Bidegree src) {
  std::vector<Monomial> dom = basis(a, src);
  std::vector<Monomial> cod = basis(a, src + d.shift());
  FpMatrix m(cod.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Element e = leibniz_extend(d, dom[j], a);
    for (const auto& [mono, c] : e.terms()) {
      auto it = std::lower_bound(cod.begin(), cod.end(), mono);
      if (it == cod.end() || !(*it == mono))
        raise(errc::precondition, "differential image leaves the expected bidegree");
      m.at(static_cast<std::size_t>(it - cod.begin()), j) = c;
    }
  }
  return m;
}

/// One computed page of the spectral sequence over a requested window.
/// `safe` is the sub-rectangle whose incoming and outgoing differential
/// components lie inside the assembled region, so the reported dims are
/// exact; `ranks` stores the rank of the outgoing differential for every
/// source bidegree the page needed (a superset of `safe`).
struct TatePage {
  AlgebraPresentation algebra;
  DifferentialSpec differential;
  Window requested;
  Window safe;
  BigradedDimTable dims;  // homology dims over `safe`
  BigradedDimTable ranks; // outgoing-differential ranks over its own window
};

inline TatePage compute_tate_page(const AlgebraPresentation& a, const DifferentialSpec& d,
                                  Window requested, int threads = 1) {
  if (!(a == d.algebra)) raise(errc::foreign_generator, "differential built over a different presentation");
  validate_differential(d);
  const int r = d.r;
  Window safe = requested.shrink(r, r - 1);
  if (safe.empty())
    raise(errc::window_too_small, "window " + to_string(requested) + " has no safe bidegree");

  // Bases for every bidegree the matrices touch; all of them lie inside the
  // requested window by construction of `safe`.
  std::map<std::pair<int, int>, std::vector<Monomial>> bases;
  auto basis_at = [&](int s, int t) -> const std::vector<Monomial>& {
    auto it = bases.find({s, t});
    if (it == bases.end()) it = bases.emplace(std::make_pair(s, t), basis(a, {s, t})).first;
    return it->second;
  };

  // Outgoing ranks are needed at every safe bidegree and at every source one
  // arrow upstream of one.
  Window rank_win{safe.s_min, safe.s_max + r, safe.t_min - (r - 1), safe.t_max};
  std::vector<std::pair<int, int>> cells;
  for (int s = rank_win.s_min; s <= rank_win.s_max; ++s)
    for (int t = rank_win.t_min; t <= rank_win.t_max; ++t) cells.push_back({s, t});
  for (const auto& [s, t] : cells) {
    basis_at(s, t);
    basis_at(s - r, t + r - 1);
  }

  std::vector<long> ranks(cells.size(), 0);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [s, t] = cells[i];
      const std::vector<Monomial>& dom = bases.at({s, t});
      const std::vector<Monomial>& cod = bases.at({s - r, t + r - 1});
      if (dom.empty() || cod.empty()) continue;
      SparseFpMatrix m(dom.size(), cod.size());
      for (std::size_t j = 0; j < dom.size(); ++j) {
        Element e = leibniz_extend(d, dom[j], a);
        SparseFpMatrix::Row row;
        row.reserve(e.term_count());
        for (const auto& [mono, c] : e.terms()) {
          auto it = std::lower_bound(cod.begin(), cod.end(), mono);
          if (it == cod.end() || !(*it == mono))
            raise(errc::precondition, "differential image leaves the expected bidegree");
          row.push_back({static_cast<std::size_t>(it - cod.begin()), c});
        }
        m.set_row(j, std::move(row));
      }
      ranks[i] = static_cast<long>(rank_nullity(std::move(m), a.field()).rank);
    }
  };
  if (threads <= 1 || cells.size() < 2) {
    run(0, cells.size());
  } else {
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), cells.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nt; ++w) {
      std::size_t begin = cells.size() * w / nt;
      std::size_t end = cells.size() * (w + 1) / nt;
      pool.emplace_back(run, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  BigradedDimTable rank_table(rank_win);
  for (std::size_t i = 0; i < cells.size(); ++i) rank_table.set(cells[i].first, cells[i].second, ranks[i]);

  BigradedDimTable dims(safe);
  for (int s = safe.s_min; s <= safe.s_max; ++s)
    for (int t = safe.t_min; t <= safe.t_max; ++t) {
      long dim = static_cast<long>(bases.at({s, t}).size());
      long out_rank = rank_table.at(s, t);
      long in_rank = rank_table.at(s + r, t - (r - 1));
      dims.set(s, t, dim - out_rank - in_rank);
    }

  return {a, d, requested, safe, std::move(dims), std::move(rank_table)};
}

/// Homology of the page at every safe bidegree of the window.
inline BigradedDimTable page_homology(const AlgebraPresentation& a, const DifferentialSpec& d,
                                      Window requested, int threads = 1) {
  return compute_tate_page(a, d, requested, threads).dims;
}

/// E2 page for a preset: Tate coefficients tensor the regraded Hochschild
/// closed form of the preset's homology ring.
inline AlgebraPresentation preset_tate_e2(const Preset& preset, std::uint32_t p) {
  return tate_e2(hh_closed_form(preset_homology(preset, p)), p);
}

/// The d2 differential on that page: d2(x_i) = t^2 sigma-x_i at p = 2 and
/// d2(x_i) = t sigma-x_i at odd p (unit normalized to 1); the coefficient
/// classes and all sigma-classes are cycles.
inline DifferentialSpec preset_d2(const Preset& preset, std::uint32_t p) {
  AlgebraPresentation e2 = preset_tate_e2(preset, p);
  DifferentialSpec d{2, e2, {}};
  const int t_exp = p == 2 ? 2 : 1;
  const int t_idx = e2.index_of("t");
  for (int i = 1; i <= preset.n; ++i) {
    const std::string base = preset.base_name(i);
    const int s_idx = e2.index_of(SigmaTag{base}.name());
    Monomial value = Monomial::from_entries({{t_idx, t_exp}, {s_idx, 1}});
    d.values.emplace(base, Element::term(std::move(value), 1, e2.field()));
  }
  validate_differential(d);
  return d;
}

/// Closed-form E-infinity page for a preset:
///   p = 2:  P(t,t^-1) (x)_i P(x_i^2) (x) E(x_i sigma-x_i)
///   p > 2:  E(h) (x) P(t,t^-1) (x)_i P(x_i^p) (x) E(x_i^{p-1} sigma-x_i)
/// with the evident internal degrees p*|x_i| and p*|x_i| + 1.
inline AlgebraPresentation einfty_closed_form(const Preset& preset, std::uint32_t p) {
  AlgebraPresentation coeff = tate_coefficients(p);
  std::vector<GeneratorSpec> gens = coeff.generators();
  for (int i = 1; i <= preset.n; ++i) {
    const std::string base = preset.base_name(i);
    const int tb = preset.generator_degree(i, p);
    std::string power_name = base + "^" + std::to_string(p);
    std::string pair_name =
        p == 2 ? base + "s" + base : base + "^" + std::to_string(p - 1) + "s" + base;
    gens.push_back({std::move(power_name), GeneratorKind::polynomial, {0, static_cast<int>(p) * tb}});
    gens.push_back({std::move(pair_name), GeneratorKind::exterior, {0, static_cast<int>(p) * tb + 1}});
  }
  return AlgebraPresentation::make(coeff.field(), std::move(gens));
}

struct TableMismatch {
  int s = 0;
  int t = 0;
  long lhs = 0;
  long rhs = 0;
};

struct CompareReport {
  Window overlap;
  std::vector<TableMismatch> mismatches;

  bool agree() const { return mismatches.empty(); }
};

/// Compare two dim tables on the overlap of their windows.
inline CompareReport compare_tables(const BigradedDimTable& a, const BigradedDimTable& b) {
  Window overlap = a.window().intersect(b.window());
  if (overlap.empty()) raise(errc::disjoint_windows, "tables share no bidegree");
  CompareReport report{overlap, {}};
  for (int s = overlap.s_min; s <= overlap.s_max; ++s)
    for (int t = overlap.t_min; t <= overlap.t_max; ++t)
      if (a.at(s, t) != b.at(s, t)) report.mismatches.push_back({s, t, a.at(s, t), b.at(s, t)});
  return report;
}

/// First basis monomial in the window whose d(d(m)) fails to vanish, if any.
inline std::optional<std::string> d_squared_witness(const AlgebraPresentation& a,
                                                    const DifferentialSpec& d, Window cells) {
  for (int s = cells.s_min; s <= cells.s_max; ++s)
    for (int t = cells.t_min; t <= cells.t_max; ++t)
      for (const Monomial& m : basis(a, {s, t})) {
        Element once = leibniz_extend(d, m, a);
        Element twice = apply_differential(d, once, a);
        if (!twice.is_zero())
          return to_string(m, a) + " at " + to_string(Bidegree{s, t}) + " maps to " +
                 to_string(twice, a);
      }
  return std::nullopt;
}

} // namespace fptate
