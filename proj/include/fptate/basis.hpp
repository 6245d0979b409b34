#pragma once

#include <algorithm>
#include <vector>

#include "fptate/monomial.hpp"

namespace fptate {

namespace detail {

/// Distribute the remaining internal degree over polynomial generators
/// (indices poly[from..]), all of which sit at (0, t) with t > 0.
inline void enumerate_polynomial_part(const AlgebraPresentation& a, const std::vector<int>& poly,
                                      std::size_t from, int rem_t,
                                      std::vector<Monomial::Entry>& acc,
                                      std::vector<Monomial>& out) {
  if (from == poly.size()) {
    if (rem_t == 0) out.push_back(Monomial::from_entries(acc));
    return;
  }
  const int idx = poly[from];
  const int tg = a.gen(idx).degree.t;
  const int max_e = rem_t / tg;
  for (int e = 0; e <= max_e; ++e) {
    if (e > 0) {
      if (e == 1)
        acc.push_back({idx, 1});
      else
        acc.back().second = e;
    }
    enumerate_polynomial_part(a, poly, from + 1, rem_t - e * tg, acc, out);
  }
  if (max_e > 0) acc.pop_back();
}

/// Choose exterior exponents (0/1 each), then hand the remainder to the
/// polynomial generators and let the laurent class absorb the remaining
/// filtration, whose exponent it pins exactly.
inline void enumerate_exterior_part(const AlgebraPresentation& a, const std::vector<int>& ext,
                                    const std::vector<int>& poly, std::size_t from, int rem_s,
                                    int rem_t, std::vector<Monomial::Entry>& acc,
                                    std::vector<Monomial>& out) {
  if (from == ext.size()) {
    if (rem_t < 0) return;
    const int li = a.laurent_index();
    if (li < 0) {
      if (rem_s != 0) return;
      enumerate_polynomial_part(a, poly, 0, rem_t, acc, out);
      return;
    }
    const int sl = a.gen(li).degree.s; // < 0
    if (rem_s % sl != 0) return;
    const int e = rem_s / sl;
    std::size_t mark = acc.size();
    if (e != 0) acc.push_back({li, e});
    enumerate_polynomial_part(a, poly, 0, rem_t, acc, out);
    acc.resize(mark);
    return;
  }
  const int idx = ext[from];
  const Bidegree d = a.gen(idx).degree;
  enumerate_exterior_part(a, ext, poly, from + 1, rem_s, rem_t, acc, out);
  acc.push_back({idx, 1});
  enumerate_exterior_part(a, ext, poly, from + 1, rem_s - d.s, rem_t - d.t, acc, out);
  acc.pop_back();
}

} // namespace detail

/// Complete monomial basis of the presentation in one bidegree, listed in
/// the canonical lexicographic order. Finiteness: exterior exponents are
/// 0/1, the laurent exponent is pinned by the filtration coordinate, and the
/// leftover internal degree is a bounded partition over polynomial
/// generators. The presentation invariants guarantee all three, so this
/// always terminates; UnboundedBasis fires only if they were bypassed.
inline std::vector<Monomial> basis(const AlgebraPresentation& a, Bidegree d) {
  std::vector<int> ext, poly;
  int laurent_count = 0;
  for (int i = 0; i < a.size(); ++i) {
    const GeneratorSpec& g = a.gen(i);
    switch (g.kind) {
      case GeneratorKind::exterior:
        ext.push_back(i);
        break;
      case GeneratorKind::polynomial:
        if (g.degree.t <= 0 || g.degree.s != 0)
          raise(errc::unbounded_basis, "polynomial generator '" + g.name + "' off the t-axis");
        poly.push_back(i);
        break;
      case GeneratorKind::laurent:
        if (g.degree.s >= 0 || g.degree.t != 0)
          raise(errc::unbounded_basis, "laurent generator '" + g.name + "' with s >= 0");
        if (++laurent_count > 1) raise(errc::unbounded_basis, "multiple laurent generators");
        break;
    }
  }
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> acc;
  detail::enumerate_exterior_part(a, ext, poly, 0, d.s, d.t, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Dimension table over a closed rectangle of bidegrees. Every cell inside
/// the window carries a value; there are no entries outside it.
class BigradedDimTable {
public:
  explicit BigradedDimTable(Window w) : win_(w), d_(static_cast<std::size_t>(w.cell_count()), 0) {}

  const Window& window() const { return win_; }

  long at(int s, int t) const { return d_[offset(s, t)]; }
  void set(int s, int t, long v) { d_[offset(s, t)] = v; }

  long total() const {
    long sum = 0;
    for (long v : d_) sum += v;
    return sum;
  }

  bool operator==(const BigradedDimTable& o) const { return win_ == o.win_ && d_ == o.d_; }

private:
  std::size_t offset(int s, int t) const {
    if (!win_.contains(s, t))
      raise(errc::precondition, "bidegree " + to_string(Bidegree{s, t}) + " outside table window");
    return static_cast<std::size_t>(s - win_.s_min) * (win_.t_max - win_.t_min + 1) +
           static_cast<std::size_t>(t - win_.t_min);
  }

  Window win_;
  std::vector<long> d_;
};

/// Bigraded Poincare series over a window: dim of each bidegree component.
inline BigradedDimTable poincare_table(const AlgebraPresentation& a, Window w) {
  if (w.empty()) raise(errc::window_too_small, "empty window " + to_string(w));
  BigradedDimTable table(w);
  for (int s = w.s_min; s <= w.s_max; ++s)
    for (int t = w.t_min; t <= w.t_max; ++t)
      table.set(s, t, static_cast<long>(basis(a, {s, t}).size()));
  return table;
}

} // namespace fptate
