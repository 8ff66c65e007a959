#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symporb/involution.hpp"

namespace symporb {

// A pattern together with host positions realizing it. The positions are
// increasing, closed under the host involution, and the host's values on
// them standardize to the pattern.
struct PatternWitness {
  FpfInvolution pattern;
  std::vector<int> indices;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// The 17 obstructions to rational smoothness, in their customary order:
// one of length 6, sixteen of length 8.
std::span<const FpfInvolution> bad_patterns();

// Lexicographically least witness of `pattern` inside `host`, if any. Only
// host-invariant index sets count, so the search runs over unions of arcs.
std::optional<PatternWitness> includes_pattern(const FpfInvolution& host,
                                               const FpfInvolution& pattern);

bool avoids_all_bad(const FpfInvolution& pi);

// Witness for the first bad pattern (in list order) that pi contains.
std::optional<PatternWitness> bad_pattern_witness(const FpfInvolution& pi);

bool is_valid_witness(const FpfInvolution& host, const PatternWitness& w);

// Rewrites the witness positions of pi as the decreasing involution on those
// positions and leaves the rest untouched. The result lies below pi and is
// an irregular vertex of BG_{mu,pi} whenever the pattern is bad. Throws
// DomainError if `w` is not a witness for pi.
FpfInvolution irregular_certificate(const FpfInvolution& pi, const PatternWitness& w);

// Raised by operations that only hold for pattern avoiders.
class NotAvoidingError : public DomainError {
 public:
  NotAvoidingError(const FpfInvolution& pi, PatternWitness witness);
  const PatternWitness& witness() const noexcept { return witness_; }

 private:
  PatternWitness witness_;
};

}  // namespace symporb
