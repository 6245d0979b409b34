#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fptate/fp.hpp"
#include "fptate/grading.hpp"

namespace fptate {

/// Generator kinds of a free bigraded-commutative presentation.
///  - polynomial: exponents 0,1,2,...; requires t > 0 and s = 0
///  - exterior:   exponents 0,1 (square-zero by decree, at every p)
///  - laurent:    exponents in Z; requires s < 0 and t = 0 (Tate classes)
enum class GeneratorKind { polynomial, exterior, laurent };

inline const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::polynomial: return "polynomial";
    case GeneratorKind::exterior: return "exterior";
    case GeneratorKind::laurent: return "laurent";
  }
  return "?";
}

struct GeneratorSpec {
  std::string name;
  GeneratorKind kind = GeneratorKind::polynomial;
  Bidegree degree;

  bool operator==(const GeneratorSpec&) const = default;
};

/// A free bigraded-commutative F_p algebra, described by its generator list.
/// The declared order is canonical: monomials, basis listings and sign
/// computations all refer to it. Presentations are immutable after
/// construction and safe to share across threads.
///
/// Validated invariants:
///  - generator names are unique and nonempty
///  - polynomial generators have t > 0 and s = 0
///  - laurent generators have s < 0 and t = 0, and there is at most one
///    (a unique negative-s class is what pins exponents and keeps every
///    bidegree finite-dimensional)
///  - at odd p every generator of odd total degree is exterior
class AlgebraPresentation {
public:
  /// The trivial algebra F_2 (no generators).
  AlgebraPresentation() : field_(2) {}

  static AlgebraPresentation make(PrimeField field, std::vector<GeneratorSpec> gens) {
    AlgebraPresentation a(std::move(field), std::move(gens));
    a.validate();
    return a;
  }

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }

  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorSpec& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }

  /// Index of a named generator; throws ForeignGenerator if absent.
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) raise(errc::foreign_generator, "no generator named '" + name + "'");
    return it->second;
  }

  bool has(const std::string& name) const { return index_.count(name) != 0; }

  /// Index of the unique laurent generator, or -1.
  int laurent_index() const { return laurent_; }

  bool operator==(const AlgebraPresentation& o) const {
    return field_ == o.field_ && gens_ == o.gens_;
  }

private:
  AlgebraPresentation(PrimeField field, std::vector<GeneratorSpec> gens)
      : field_(field), gens_(std::move(gens)) {}

  void validate() {
    const bool odd_p = field_.p() != 2;
    for (int i = 0; i < size(); ++i) {
      const GeneratorSpec& g = gens_[static_cast<std::size_t>(i)];
      if (g.name.empty()) raise(errc::duplicate_name, "generator with empty name");
      if (!index_.emplace(g.name, i).second)
        raise(errc::duplicate_name, "generator '" + g.name + "' declared twice");
      switch (g.kind) {
        case GeneratorKind::polynomial:
          if (g.degree.t <= 0 || g.degree.s != 0)
            raise(errc::unbounded_basis, "polynomial generator '" + g.name +
                                             "' must sit at (0, t) with t > 0, got " + to_string(g.degree));
          break;
        case GeneratorKind::laurent:
          if (g.degree.s >= 0 || g.degree.t != 0)
            raise(errc::unbounded_basis, "laurent generator '" + g.name +
                                             "' must sit at (s, 0) with s < 0, got " + to_string(g.degree));
          if (laurent_ >= 0)
            raise(errc::unbounded_basis, "second laurent generator '" + g.name +
                                             "' breaks the exponent-pinning argument");
          laurent_ = i;
          break;
        case GeneratorKind::exterior:
          break;
      }
      if (odd_p && g.kind != GeneratorKind::exterior && is_odd(g.degree.total()))
        raise(errc::parity_violation, "generator '" + g.name + "' has odd total degree " +
                                          std::to_string(g.degree.total()) +
                                          " but is not exterior (p odd)");
    }
  }

  PrimeField field_;
  std::vector<GeneratorSpec> gens_;
  std::map<std::string, int> index_;
  int laurent_ = -1;
};

inline AlgebraPresentation make_presentation(std::uint32_t p, std::vector<GeneratorSpec> gens) {
  return AlgebraPresentation::make(PrimeField(p), std::move(gens));
}

/// Tensor product over F_p: the concatenated generator list, left factors
/// first. Name collisions surface as DuplicateName.
inline AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.p() != b.p()) raise(errc::precondition, "tensor factors over different primes");
  std::vector<GeneratorSpec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return AlgebraPresentation::make(a.field(), std::move(gens));
}

} // namespace fptate
