#pragma once

#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "fptate/basis.hpp"
#include "fptate/linalg.hpp"

namespace fptate {

/// Naming and regrading rule for the suspension class attached to a
/// polynomial generator x at (0, t):
///  - on the Bokstedt E2 page, sigma-x sits in bidegree (1, t);
///  - in the single-graded answer and as Tate input it is regraded to
///    (0, t + 1), folding the homological shift into the internal degree.
struct SigmaTag {
  std::string base;

  std::string name() const { return "s" + base; }
  static Bidegree bokstedt_degree(Bidegree d) { return {1, d.t}; }
  static Bidegree regraded_degree(Bidegree d) { return {0, d.t + 1}; }
};

namespace detail {

inline void require_polynomial(const AlgebraPresentation& a, const char* op) {
  for (const GeneratorSpec& g : a.generators())
    if (g.kind != GeneratorKind::polynomial)
      raise(errc::non_polynomial_input,
            std::string(op) + " requires a polynomial presentation, generator '" + g.name +
                "' is " + kind_name(g.kind));
}

} // namespace detail

/// Hochschild homology of a polynomial algebra, as a presentation: the
/// algebra itself tensored with an exterior class sigma-x for each
/// generator, regraded so everything lives in filtration 0.
inline AlgebraPresentation hh_closed_form(const AlgebraPresentation& a) {
  detail::require_polynomial(a, "hh_closed_form");
  std::vector<GeneratorSpec> gens = a.generators();
  for (const GeneratorSpec& g : a.generators()) {
    SigmaTag tag{g.name};
    gens.push_back({tag.name(), GeneratorKind::exterior, SigmaTag::regraded_degree(g.degree)});
  }
  return AlgebraPresentation::make(a.field(), std::move(gens));
}

/// Bokstedt-style E2 page of the same computation, with sigma-classes in
/// filtration 1. `collapses` records the degeneration criterion: every
/// algebra generator lives in filtration at most one, so differentials on
/// generators (and then, multiplicatively, everywhere) must vanish.
struct BokstedtPage {
  AlgebraPresentation algebra;
  bool collapses;
};

inline BokstedtPage bokstedt_e2(const AlgebraPresentation& a) {
  detail::require_polynomial(a, "bokstedt_e2");
  std::vector<GeneratorSpec> gens = a.generators();
  for (const GeneratorSpec& g : a.generators()) {
    SigmaTag tag{g.name};
    gens.push_back({tag.name(), GeneratorKind::exterior, SigmaTag::bokstedt_degree(g.degree)});
  }
  AlgebraPresentation page = AlgebraPresentation::make(a.field(), std::move(gens));
  bool collapses = true;
  for (const GeneratorSpec& g : page.generators())
    if (g.degree.s > 1) collapses = false;
  return {std::move(page), collapses};
}

struct BarOptions {
  long max_chain_dim = 200000; // cap on any single truncated chain group
};

/// Normalized cyclic bar complex of a polynomial presentation, truncated at
/// a maximum internal degree: C_k = A (x) Abar^(x k), with Abar the
/// positive-degree part. The boundary is the standard one, alternating face
/// signs plus the Koszul sign on the cyclic last face. Built once and
/// queried per (homological degree, internal degree) slot.
class BarComplex {
public:
  using Tuple = std::vector<Monomial>; // slot 0 unrestricted, slots 1..k positive degree

  BarComplex(const AlgebraPresentation& a, int max_internal, BarOptions opts = {})
      : a_(a), max_internal_(max_internal), opts_(opts) {
    detail::require_polynomial(a, "bar complex");
    if (max_internal_ < 0) raise(errc::precondition, "negative degree bound");
    monos_.resize(static_cast<std::size_t>(max_internal_) + 1);
    for (int u = 0; u <= max_internal_; ++u) monos_[static_cast<std::size_t>(u)] = basis(a, {0, u});
    int min_pos = 0;
    for (const GeneratorSpec& g : a.generators())
      if (min_pos == 0 || g.degree.t < min_pos) min_pos = g.degree.t;
    max_k_ = (min_pos == 0) ? 0 : max_internal_ / min_pos;
    levels_.resize(static_cast<std::size_t>(max_k_) + 1);
    for (int k = 0; k <= max_k_; ++k) build_level(k);
  }

  int max_internal() const { return max_internal_; }
  int max_k() const { return max_k_; }

  const std::vector<Tuple>& chains(int k, int u) const {
    static const std::vector<Tuple> none;
    if (k < 0 || k > max_k_ || u < 0 || u > max_internal_) return none;
    return levels_[static_cast<std::size_t>(k)].by_degree[static_cast<std::size_t>(u)];
  }

  /// Dense boundary C_k(u) -> C_{k-1}(u); rows index the codomain.
  FpMatrix boundary(int k, int u) const {
    const auto& dom = chains(k, u);
    const auto& cod = chains(k - 1, u);
    FpMatrix m(cod.size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j)
      for (const auto& [row, c] : boundary_column(k, u, dom[j])) m.at(row, j) = c;
    return m;
  }

  long boundary_rank(int k, int u) const {
    const auto& dom = chains(k, u);
    const auto& cod = chains(k - 1, u);
    if (dom.empty() || cod.empty()) return 0;
    // Rank of the transpose equals the rank; rows are the sparse columns.
    SparseFpMatrix m(dom.size(), cod.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
      SparseFpMatrix::Row row;
      for (const auto& [ci, v] : boundary_column(k, u, dom[j])) row.push_back({ci, v});
      m.set_row(j, std::move(row));
    }
    return static_cast<long>(rank_nullity(std::move(m), a_.field()).rank);
  }

private:
  struct Level {
    std::vector<std::vector<Tuple>> by_degree; // indexed by internal degree
    std::map<Tuple, std::size_t> index;        // within its degree slot
  };

  void build_level(int k) {
    Level& lvl = levels_[static_cast<std::size_t>(k)];
    lvl.by_degree.resize(static_cast<std::size_t>(max_internal_) + 1);
    Tuple acc;
    for (int u0 = 0; u0 <= max_internal_; ++u0)
      for (const Monomial& m0 : monos_[static_cast<std::size_t>(u0)]) {
        acc.push_back(m0);
        extend_tuple(k, u0, acc, lvl);
        acc.pop_back();
      }
    for (auto& slot : lvl.by_degree)
      if (static_cast<long>(slot.size()) > opts_.max_chain_dim)
        raise(errc::degree_budget_exceeded,
              "chain group of dimension " + std::to_string(slot.size()) + " exceeds cap " +
                  std::to_string(opts_.max_chain_dim));
  }

  void extend_tuple(int k, int used, Tuple& acc, Level& lvl) {
    const int slot = static_cast<int>(acc.size()) - 1;
    if (slot == k) {
      auto& bucket = lvl.by_degree[static_cast<std::size_t>(used)];
      lvl.index.emplace(acc, bucket.size());
      bucket.push_back(acc);
      return;
    }
    for (int d = 1; used + d <= max_internal_; ++d)
      for (const Monomial& m : monos_[static_cast<std::size_t>(d)]) {
        acc.push_back(m);
        extend_tuple(k, used + d, acc, lvl);
        acc.pop_back();
      }
  }

  /// Image of one generator tuple under the boundary, as (codomain index,
  /// coefficient) pairs. Coinciding faces are accumulated mod p.
  std::map<std::size_t, std::uint32_t> boundary_column(int k, int u, const Tuple& tup) const {
    std::map<std::size_t, std::uint32_t> out;
    if (k <= 0) return out;
    const Level& below = levels_[static_cast<std::size_t>(k - 1)];
    const PrimeField& f = a_.field();
    auto addface = [&](Tuple face, int sign) {
      auto it = below.index.find(face);
      assert(it != below.index.end());
      std::uint32_t v = f.reduce(sign);
      if (v == 0) return;
      auto [slot_it, inserted] = out.emplace(it->second, v);
      if (!inserted) {
        slot_it->second = f.add(slot_it->second, v);
        if (slot_it->second == 0) out.erase(slot_it);
      }
    };
    (void)u;
    for (int i = 0; i < k; ++i) {
      MonomialProduct pr = mono_mul(tup[static_cast<std::size_t>(i)], tup[static_cast<std::size_t>(i) + 1], a_);
      assert(!pr.zero);
      Tuple face;
      face.reserve(tup.size() - 1);
      for (int j = 0; j < static_cast<int>(tup.size()); ++j) {
        if (j == i)
          face.push_back(pr.mono);
        else if (j != i + 1)
          face.push_back(tup[static_cast<std::size_t>(j)]);
      }
      addface(std::move(face), ((i % 2) ? -1 : 1) * pr.sign);
    }
    // Cyclic face: rotate the last slot to the front, paying the Koszul
    // sign for moving it past everything else, then multiply into slot 0.
    int deg_last = bidegree(tup.back(), a_).total();
    int deg_rest = 0;
    for (std::size_t j = 0; j + 1 < tup.size(); ++j) deg_rest += bidegree(tup[j], a_).total();
    MonomialProduct pr = mono_mul(tup.back(), tup.front(), a_);
    assert(!pr.zero);
    Tuple face;
    face.reserve(tup.size() - 1);
    face.push_back(pr.mono);
    for (std::size_t j = 1; j + 1 < tup.size(); ++j) face.push_back(tup[j]);
    int sign = ((k % 2) ? -1 : 1) * pr.sign;
    if (is_odd(deg_last) && is_odd(deg_rest)) sign = -sign;
    addface(std::move(face), sign);
    return out;
  }

  AlgebraPresentation a_;
  int max_internal_;
  BarOptions opts_;
  int max_k_ = 0;
  std::vector<std::vector<Monomial>> monos_; // monomials by internal degree
  std::vector<Level> levels_;
};

/// Brute-force Hochschild dimensions from the truncated bar complex,
/// reported by single degree d = homological + internal, for d in [0, D].
/// This matches the regraded closed form degreewise: a sigma-exponent adds
/// one homological degree there and one internal degree here.
inline std::vector<long> bar_hh_oracle(const AlgebraPresentation& a, int max_degree,
                                       BarOptions opts = {}) {
  BarComplex bc(a, max_degree, opts);
  std::vector<long> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    long total = 0;
    for (int k = 0; k <= d && k <= bc.max_k(); ++k) {
      const int u = d - k;
      const long dim_ck = static_cast<long>(bc.chains(k, u).size());
      if (dim_ck == 0) continue;
      long hh = dim_ck - bc.boundary_rank(k, u) - bc.boundary_rank(k + 1, u);
      assert(hh >= 0);
      total += hh;
    }
    dims[static_cast<std::size_t>(d)] = total;
  }
  return dims;
}

/// Dimensions of a filtration-0 presentation by internal degree, the shape
/// the closed form is compared in.
inline std::vector<long> graded_dims(const AlgebraPresentation& a, int max_degree) {
  std::vector<long> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 0; d <= max_degree; ++d)
    dims[static_cast<std::size_t>(d)] = static_cast<long>(basis(a, {0, d}).size());
  return dims;
}

} // namespace fptate
