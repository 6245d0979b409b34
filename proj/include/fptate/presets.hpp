#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fptate/presentation.hpp"

namespace fptate {

/// Built-in input families. Family X has polynomial generators b_1..b_n
/// with |b_i| = (0, 2i); family T has x_1..x_n with |x_i| = (0, 2p^i - 2),
/// so its degrees depend on the prime. MU@k and BP@k are aliases for X(k)
/// and T(k). n = 0 is the empty presentation.
struct Preset {
  enum class Family { X, T };

  Family family = Family::X;
  int n = 0;
  std::string label; // as parsed, kept for report metadata

  static Preset parse(std::string_view text) {
    Preset p;
    p.label = std::string(text);
    std::string_view rest;
    if (text.size() >= 1 && (text[0] == 'X' || text[0] == 'T')) {
      p.family = text[0] == 'X' ? Family::X : Family::T;
      rest = text.substr(1);
    } else if (text.substr(0, 3) == "MU@") {
      p.family = Family::X;
      rest = text.substr(3);
    } else if (text.substr(0, 3) == "BP@") {
      p.family = Family::T;
      rest = text.substr(3);
    } else {
      raise(errc::precondition, "unknown preset '" + p.label + "' (expected Xn, Tn, MU@k, BP@k)");
    }
    if (rest.empty()) raise(errc::precondition, "preset '" + p.label + "' is missing its index");
    long n = 0;
    for (char ch : rest) {
      if (ch < '0' || ch > '9')
        raise(errc::precondition, "preset index in '" + p.label + "' is not a number");
      n = n * 10 + (ch - '0');
      if (n > 64) raise(errc::precondition, "preset index in '" + p.label + "' is out of range");
    }
    p.n = static_cast<int>(n);
    return p;
  }

  std::string family_name() const { return family == Family::X ? "X" : "T"; }
  std::string base_name(int i) const {
    return (family == Family::X ? "b" : "x") + std::to_string(i);
  }

  /// Internal degree of the i-th generator (1-based) at the given prime.
  int generator_degree(int i, std::uint32_t p) const {
    if (family == Family::X) return 2 * i;
    long long d = 2;
    for (int k = 0; k < i; ++k) d *= p;
    return static_cast<int>(d - 2);
  }
};

/// The homology ring the preset stands for: a polynomial algebra on the
/// family's generators.
inline AlgebraPresentation preset_homology(const Preset& preset, std::uint32_t p) {
  PrimeField field(p);
  std::vector<GeneratorSpec> gens;
  gens.reserve(static_cast<std::size_t>(preset.n));
  for (int i = 1; i <= preset.n; ++i)
    gens.push_back({preset.base_name(i), GeneratorKind::polynomial,
                    {0, preset.generator_degree(i, p)}});
  return AlgebraPresentation::make(field, std::move(gens));
}

} // namespace fptate
