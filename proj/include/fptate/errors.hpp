#pragma once

#include <stdexcept>
#include <string>

namespace fptate {

/// Error conditions surfaced by the engine. Every throwing operation documents
/// which of these it can raise; the CLI maps any of them to exit code 2.
enum class errc {
  non_prime,              // characteristic is not a prime
  duplicate_name,         // two generators share a name
  parity_violation,       // odd p: non-exterior generator of odd total degree
  unbounded_basis,        // presentation admits infinite bases in some bidegree
  foreign_generator,      // monomial/element references an unknown generator
  non_polynomial_input,   // operation requires a purely polynomial presentation
  degree_budget_exceeded, // truncated complex grew past the configured cap
  name_clash,             // tensor factor reuses a reserved coefficient name
  window_too_small,       // no safe bidegree inside the requested window
  disjoint_windows,       // table comparison with empty window overlap
  non_increasing,         // index sequence not strictly increasing
  precondition,           // documented precondition violated
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "NonPrime";
    case errc::duplicate_name: return "DuplicateName";
    case errc::parity_violation: return "ParityViolation";
    case errc::unbounded_basis: return "UnboundedBasis";
    case errc::foreign_generator: return "ForeignGenerator";
    case errc::non_polynomial_input: return "NonPolynomialInput";
    case errc::degree_budget_exceeded: return "DegreeBudgetExceeded";
    case errc::name_clash: return "NameClash";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::disjoint_windows: return "DisjointWindows";
    case errc::non_increasing: return "NonIncreasing";
    case errc::precondition: return "Precondition";
  }
  return "Unknown";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace fptate
