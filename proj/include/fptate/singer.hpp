#pragma once

#include <array>
#include <string>
#include <vector>

#include "fptate/tate.hpp"

namespace fptate {

/// Continuous-homology presentation built from tensor-power classes: for
/// each preset generator x_i of internal degree t_i it carries a polynomial
/// class x_i@p at (0, p t_i) and an exterior class sx_i@p at (0, p(t_i+1)),
/// over the Tate coefficient ring.
struct SingerPresentation {
  AlgebraPresentation algebra;
};

inline std::string tensor_power_name(const std::string& base, std::uint32_t p) {
  return base + "@" + std::to_string(p);
}

inline AlgebraPresentation singer_presentation_algebra(const Preset& preset, std::uint32_t p) {
  AlgebraPresentation coeff = tate_coefficients(p);
  std::vector<GeneratorSpec> gens = coeff.generators();
  for (int i = 1; i <= preset.n; ++i) {
    const std::string base = preset.base_name(i);
    const int tb = preset.generator_degree(i, p);
    gens.push_back({tensor_power_name(base, p), GeneratorKind::polynomial,
                    {0, static_cast<int>(p) * tb}});
    gens.push_back({tensor_power_name(SigmaTag{base}.name(), p), GeneratorKind::exterior,
                    {0, static_cast<int>(p) * (tb + 1)}});
  }
  return AlgebraPresentation::make(coeff.field(), std::move(gens));
}

inline SingerPresentation singer_presentation(const Preset& preset, std::uint32_t p) {
  return {singer_presentation_algebra(preset, p)};
}

/// The basis-monomial correspondence between the closed-form E-infinity
/// page and the tensor-power presentation. Images: coefficient classes map
/// to themselves, x_i^p to x_i@p, and each exterior pair class
/// x_i^{p-1} sigma-x_i to t^m sx_i@p with m = (p-1)/2 at odd p and m = 1 at
/// p = 2, the power forced by total-degree preservation. Each exterior
/// factor therefore shifts filtration by -(p-1).
struct SingerMap {
  AlgebraPresentation source; // einfty_closed_form
  SingerPresentation target;
  std::uint32_t p = 2;
  int n = 0;
  int t_power = 1;                // m above, per exterior factor
  std::vector<int> image_index;   // source gen index -> target gen index
  std::vector<bool> is_pair_gen;  // source gen index -> carries the t-shift
  int target_t_index = 0;

  int filtration_shift_per_factor() const { return -static_cast<int>(p - 1); }
};

inline SingerMap make_singer_map(const Preset& preset, std::uint32_t p) {
  SingerMap map;
  map.source = einfty_closed_form(preset, p);
  map.target = singer_presentation(preset, p);
  map.p = p;
  map.n = preset.n;
  map.t_power = p == 2 ? 1 : static_cast<int>((p - 1) / 2);
  map.target_t_index = map.target.algebra.index_of("t");
  map.image_index.assign(static_cast<std::size_t>(map.source.size()), -1);
  map.is_pair_gen.assign(static_cast<std::size_t>(map.source.size()), false);
  const AlgebraPresentation coeff = tate_coefficients(p);
  for (const GeneratorSpec& g : coeff.generators())
    map.image_index[static_cast<std::size_t>(map.source.index_of(g.name))] =
        map.target.algebra.index_of(g.name);
  for (int i = 1; i <= preset.n; ++i) {
    const std::string base = preset.base_name(i);
    const std::string power_name = base + "^" + std::to_string(p);
    const std::string pair_name =
        p == 2 ? base + "s" + base : base + "^" + std::to_string(p - 1) + "s" + base;
    map.image_index[static_cast<std::size_t>(map.source.index_of(power_name))] =
        map.target.algebra.index_of(tensor_power_name(base, p));
    const int pair_idx = map.source.index_of(pair_name);
    map.image_index[static_cast<std::size_t>(pair_idx)] =
        map.target.algebra.index_of(tensor_power_name(SigmaTag{base}.name(), p));
    map.is_pair_gen[static_cast<std::size_t>(pair_idx)] = true;
  }
  return map;
}

/// Number of exterior pair factors in a source monomial.
inline int pair_factor_count(const Monomial& m, const SingerMap& map) {
  int r = 0;
  for (const auto& [idx, exp] : m.entries()) {
    if (idx < 0 || idx >= map.source.size())
      raise(errc::foreign_generator, "monomial references generator index " + std::to_string(idx));
    if (map.is_pair_gen[static_cast<std::size_t>(idx)]) r += exp;
  }
  return r;
}

/// Image of a source basis monomial. Multiplicative, injective on the
/// basis, total-degree preserving.
inline Monomial phi(const Monomial& m, const SingerMap& map) {
  std::vector<Monomial::Entry> out;
  int r = 0;
  for (const auto& [idx, exp] : m.entries()) {
    if (idx < 0 || idx >= map.source.size())
      raise(errc::foreign_generator, "monomial references generator index " + std::to_string(idx));
    out.push_back({map.image_index[static_cast<std::size_t>(idx)], exp});
    if (map.is_pair_gen[static_cast<std::size_t>(idx)]) r += exp;
  }
  if (r != 0) out.push_back({map.target_t_index, map.t_power * r});
  return Monomial::from_entries(std::move(out));
}

/// Filtration shift of the image of a monomial whose exterior pair factors
/// carry indices L = (l_1 < ... < l_r): -(p-1) * (2 l_1 + ... + 2 l_r + r).
/// Entries must be strictly increasing and at least 1.
inline long s_shift(const std::vector<int>& indices, std::uint32_t p) {
  PrimeField field(p); // validates the prime
  long sum = 0;
  int prev = 0;
  for (int l : indices) {
    if (l < 1 || l <= prev)
      raise(errc::non_increasing, "index sequence must be strictly increasing and >= 1");
    sum += 2L * l;
    prev = l;
  }
  sum += static_cast<long>(indices.size());
  return -static_cast<long>(p - 1) * sum;
}

/// Reindexing of a weight-d element in stem k under the construction:
/// N(k, d) = p (k - d) + d.
inline long singer_index(long k, long d, std::uint32_t p) {
  PrimeField field(p);
  if (d < 0 || d > k) raise(errc::precondition, "need 0 <= d <= k");
  return static_cast<long>(p) * (k - d) + d;
}

struct BijectionReport {
  int max_total_degree = 0;
  int s_lo = 0;
  int s_hi = 0;
  bool degree_preserved = true;
  bool shift_ok = true;
  bool bijective = true;
  std::vector<std::array<long, 2>> counts_by_degree; // [source, target] per total degree
  std::string witness;

  bool pass() const { return degree_preserved && shift_ok && bijective; }
};

/// Enumerate both sides and check that phi restricts to a bijection on every
/// total degree in [0, D]: source monomials with filtration in [s_lo, s_hi],
/// split by the number r of exterior pair factors, against target monomials
/// with r tensor-power exterior factors and filtration in the window shifted
/// by -r(p-1). The sector split is exactly the closure the per-factor shift
/// demands.
inline BijectionReport verify_bijection(const Preset& preset, std::uint32_t p, int max_degree,
                                        int s_lo, int s_hi) {
  if (s_lo > s_hi) raise(errc::window_too_small, "empty filtration window");
  if (max_degree < 0) raise(errc::precondition, "negative degree bound");
  SingerMap map = make_singer_map(preset, p);
  const AlgebraPresentation& tgt = map.target.algebra;
  BijectionReport report;
  report.max_total_degree = max_degree;
  report.s_lo = s_lo;
  report.s_hi = s_hi;
  const int per_factor = map.filtration_shift_per_factor();

  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (report.witness.empty()) report.witness = msg;
  };

  for (int d = 0; d <= max_degree; ++d) {
    long src_total = 0, tgt_total = 0;
    for (int r = 0; r <= map.n; ++r) {
      std::vector<Monomial> images;
      for (int s = s_lo; s <= s_hi; ++s)
        for (const Monomial& m : basis(map.source, {s, d - s})) {
          if (pair_factor_count(m, map) != r) continue;
          ++src_total;
          Monomial img = phi(m, map);
          Bidegree img_deg = bidegree(img, tgt);
          if (img_deg.total() != d)
            fail(report.degree_preserved, "phi(" + to_string(m, map.source) + ") has total degree " +
                                              std::to_string(img_deg.total()) + ", expected " +
                                              std::to_string(d));
          if (img_deg.s != s + per_factor * r)
            fail(report.shift_ok, "phi(" + to_string(m, map.source) + ") lands in filtration " +
                                      std::to_string(img_deg.s) + ", expected " +
                                      std::to_string(s + per_factor * r));
          images.push_back(std::move(img));
        }
      std::sort(images.begin(), images.end());
      for (std::size_t i = 0; i + 1 < images.size(); ++i)
        if (images[i] == images[i + 1])
          fail(report.bijective, "phi is not injective at " + to_string(images[i], tgt));

      std::vector<Monomial> expected;
      for (int s = s_lo + per_factor * r; s <= s_hi + per_factor * r; ++s)
        for (const Monomial& m : basis(tgt, {s, d - s})) {
          int ext = 0;
          for (const auto& [idx, exp] : m.entries())
            if (tgt.gen(idx).kind == GeneratorKind::exterior && tgt.gen(idx).name != "h") ext += exp;
          if (ext == r) expected.push_back(m);
        }
      std::sort(expected.begin(), expected.end());
      tgt_total += static_cast<long>(expected.size());
      if (images != expected)
        fail(report.bijective, "sector r=" + std::to_string(r) + " at total degree " +
                                   std::to_string(d) + " has " + std::to_string(images.size()) +
                                   " images vs " + std::to_string(expected.size()) +
                                   " target monomials");
    }
    report.counts_by_degree.push_back({src_total, tgt_total});
  }
  return report;
}

inline BijectionReport verify_bijection(const Preset& preset, std::uint32_t p, int max_degree) {
  return verify_bijection(preset, p, max_degree, -max_degree, 0);
}

} // namespace fptate
