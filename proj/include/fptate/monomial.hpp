#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fptate/presentation.hpp"

namespace fptate {

/// A monomial in the generators of one presentation: a sparse exponent
/// vector, stored as (generator index, exponent) pairs sorted by index with
/// all exponents nonzero. The empty monomial is the unit.
///
/// Ordering is lexicographic in the declared generator order, comparing
/// exponents coordinate by coordinate; this is the canonical order used for
/// basis listings and element printing.
class Monomial {
public:
  using Entry = std::pair<int, int>; // (generator index, exponent != 0)

  Monomial() = default;

  static Monomial unit() { return {}; }

  static Monomial generator(int index, int exponent = 1) {
    Monomial m;
    if (exponent != 0) m.e_.push_back({index, exponent});
    return m;
  }

  /// Build from arbitrary (index, exponent) pairs; merges duplicates, drops
  /// zeros, sorts by index.
  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const Entry& e : entries) {
      if (!m.e_.empty() && m.e_.back().first == e.first)
        m.e_.back().second += e.second;
      else
        m.e_.push_back(e);
      if (m.e_.back().second == 0) m.e_.pop_back();
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_unit() const { return e_.empty(); }

  int exponent(int index) const {
    for (const Entry& e : e_)
      if (e.first == index) return e.second;
    return 0;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool operator<(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
      int ia = i < e_.size() ? e_[i].first : INT_MAX_;
      int ib = j < o.e_.size() ? o.e_[j].first : INT_MAX_;
      if (ia == ib) {
        if (e_[i].second != o.e_[j].second) return e_[i].second < o.e_[j].second;
        ++i;
        ++j;
      } else if (ia < ib) {
        return e_[i].second < 0; // other side has exponent 0 here
      } else {
        return 0 < o.e_[j].second;
      }
    }
    return false;
  }

private:
  static constexpr int INT_MAX_ = 2147483647;
  std::vector<Entry> e_;
};

/// Validate a monomial against a presentation: indices in range, exterior
/// exponents in {0,1}, polynomial exponents nonnegative.
inline void validate_monomial(const Monomial& m, const AlgebraPresentation& a) {
  for (const auto& [idx, exp] : m.entries()) {
    if (idx < 0 || idx >= a.size())
      raise(errc::foreign_generator, "monomial references generator index " + std::to_string(idx));
    const GeneratorSpec& g = a.gen(idx);
    if (g.kind == GeneratorKind::exterior && (exp < 0 || exp > 1))
      raise(errc::precondition, "exterior generator '" + g.name + "' with exponent " + std::to_string(exp));
    if (g.kind == GeneratorKind::polynomial && exp < 0)
      raise(errc::precondition, "polynomial generator '" + g.name + "' with exponent " + std::to_string(exp));
  }
}

inline Bidegree bidegree(const Monomial& m, const AlgebraPresentation& a) {
  Bidegree d;
  for (const auto& [idx, exp] : m.entries()) {
    if (idx < 0 || idx >= a.size())
      raise(errc::foreign_generator, "monomial references generator index " + std::to_string(idx));
    d = d + a.gen(idx).degree * exp;
  }
  return d;
}

struct MonomialProduct {
  Monomial mono;
  int sign = 1;    // +1 or -1
  bool zero = false; // exterior square collapsed
};

/// Product of two monomials with the Koszul sign on total degree.
/// Both factors are read in canonical order; the sign counts the
/// transpositions of odd-total-degree generator factors needed to merge
/// them back into canonical order. An exterior generator appearing in both
/// factors kills the product.
inline MonomialProduct mono_mul(const Monomial& x, const Monomial& y, const AlgebraPresentation& a) {
  MonomialProduct out;
  long crossings = 0;
  if (a.p() != 2) {
    // Only odd-total-degree factors anticommute. For each pair (i in x,
    // j in y) with i > j and both odd, the j-factor passes the i-factor.
    for (const auto& [ix, ex] : x.entries()) {
      if (!is_odd(a.gen(ix).degree.total())) continue;
      for (const auto& [iy, ey] : y.entries()) {
        if (iy >= ix) break;
        if (!is_odd(a.gen(iy).degree.total())) continue;
        crossings += static_cast<long>(ex % 2 != 0) * static_cast<long>(ey % 2 != 0);
      }
    }
  }
  std::vector<Monomial::Entry> merged;
  merged.reserve(x.entries().size() + y.entries().size());
  std::size_t i = 0, j = 0;
  const auto& ex = x.entries();
  const auto& ey = y.entries();
  while (i < ex.size() || j < ey.size()) {
    if (j == ey.size() || (i < ex.size() && ex[i].first < ey[j].first)) {
      merged.push_back(ex[i++]);
    } else if (i == ex.size() || ey[j].first < ex[i].first) {
      merged.push_back(ey[j++]);
    } else {
      int idx = ex[i].first;
      int e = ex[i].second + ey[j].second;
      if (idx < 0 || idx >= a.size())
        raise(errc::foreign_generator, "monomial references generator index " + std::to_string(idx));
      if (a.gen(idx).kind == GeneratorKind::exterior && e >= 2) {
        out.zero = true;
        return out;
      }
      if (e != 0) merged.push_back({idx, e});
      ++i;
      ++j;
    }
  }
  out.mono = Monomial::from_entries(std::move(merged));
  out.sign = (crossings % 2 == 0) ? 1 : -1;
  return out;
}

/// F_p-linear combination of monomials. Coefficients are stored reduced in
/// [1, p); zero terms are never kept. The term map is ordered, so iteration
/// is deterministic.
class Element {
public:
  Element() = default;

  static Element zero() { return {}; }

  static Element term(Monomial m, long long c, const PrimeField& f) {
    Element e;
    e.add_term(std::move(m), c, f);
    return e;
  }

  void add_term(Monomial m, long long c, const PrimeField& f) {
    std::uint32_t r = f.reduce(c);
    if (r == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), r);
    } else {
      it->second = f.add(it->second, r);
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

  std::uint32_t coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

private:
  std::map<Monomial, std::uint32_t> terms_;
};

inline Element add(const Element& a, const Element& b, const PrimeField& f) {
  Element out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c, f);
  return out;
}

inline Element scale(const Element& a, long long c, const PrimeField& f) {
  Element out;
  for (const auto& [m, k] : a.terms()) out.add_term(m, static_cast<long long>(f.mul(k, f.reduce(c))), f);
  return out;
}

/// Bilinear product. Inputs are expected homogeneous; the formula is applied
/// termwise either way.
inline Element multiply(const Element& a, const Element& b, const AlgebraPresentation& alg) {
  Element out;
  const PrimeField& f = alg.field();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MonomialProduct pr = mono_mul(ma, mb, alg);
      if (pr.zero) continue;
      long long c = static_cast<long long>(f.mul(ca, cb)) * pr.sign;
      out.add_term(std::move(pr.mono), c, f);
    }
  }
  return out;
}

/// Bidegree shared by all terms, if the element is homogeneous and nonzero.
inline std::optional<Bidegree> bidegree_if_homogeneous(const Element& e, const AlgebraPresentation& a) {
  std::optional<Bidegree> d;
  for (const auto& [m, c] : e.terms()) {
    (void)c;
    Bidegree md = bidegree(m, a);
    if (!d)
      d = md;
    else if (*d != md)
      return std::nullopt;
  }
  return d;
}

inline std::string to_string(const Monomial& m, const AlgebraPresentation& a) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [idx, exp] : m.entries()) {
    if (!out.empty()) out += "*";
    out += a.gen(idx).name;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

inline std::string to_string(const Element& e, const AlgebraPresentation& a) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1 || m.is_unit()) {
      out += std::to_string(c);
      if (!m.is_unit()) out += "*";
    }
    if (!m.is_unit()) out += to_string(m, a);
  }
  return out;
}

} // namespace fptate
