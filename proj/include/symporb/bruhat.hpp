#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symporb/involution.hpp"

namespace symporb {

// Sorted prefixes of a word, flattened. Ordinary Bruhat comparison x <= y
// holds iff every sorted prefix of x is entrywise <= the one of y.
class BruhatKey {
 public:
  explicit BruhatKey(std::span<const int> word);
  explicit BruhatKey(const FpfInvolution& pi) : BruhatKey(pi.word()) {}

  // *this <= other in ordinary Bruhat order.
  bool bruhat_leq(const BruhatKey& other) const noexcept;

 private:
  std::vector<std::uint8_t> prefixes_;
};

// mu <= pi in reverse Bruhat order, i.e. the orbit of mu lies in the closure
// of the orbit of pi. Throws DomainError on mismatched degrees.
bool reverse_leq(const FpfInvolution& mu, const FpfInvolution& pi);

// Indices into a Catalog for an interval [bottom, top] in reverse order.
struct IndexedInterval {
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;
  std::vector<std::uint32_t> members;  // ascending, i.e. enumeration order
  std::vector<char> contains;          // one flag per catalog entry
};

// I_2n with ranks, Bruhat keys and index lookup precomputed. Immutable after
// construction, so one catalog can be shared by any number of workers.
class Catalog {
 public:
  explicit Catalog(int n, int degree_cap = kDefaultDegreeCap);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<FpfInvolution>& elements() const noexcept { return elements_; }
  const FpfInvolution& at(std::size_t i) const { return elements_[i]; }
  int rank_at(std::size_t i) const { return ranks_[i]; }

  std::optional<std::uint32_t> find(const FpfInvolution& pi) const;
  std::optional<std::uint32_t> find_packed(std::uint64_t key) const;
  // Same as find() but throws DomainError naming the element.
  std::uint32_t index_of(const FpfInvolution& pi) const;

  bool reverse_leq(std::uint32_t mu, std::uint32_t pi) const noexcept {
    return keys_[pi].bruhat_leq(keys_[mu]);
  }

  // [bottom, top]; throws DomainError when bottom is not below top.
  IndexedInterval interval(std::uint32_t bottom, std::uint32_t top) const;
  // [w0, top].
  IndexedInterval interval(std::uint32_t top) const { return interval(bottom_, top); }

  std::uint32_t bottom_index() const noexcept { return bottom_; }

 private:
  int n_;
  std::vector<FpfInvolution> elements_;
  std::vector<int> ranks_;
  std::vector<BruhatKey> keys_;
  std::vector<std::uint64_t> packed_;  // sorted, parallel to elements_
  std::uint32_t bottom_ = 0;
};

// Lower interval I_pi with ranks attached.
class Interval {
 public:
  Interval(FpfInvolution top, std::vector<FpfInvolution> members, std::vector<int> ranks);

  const FpfInvolution& top() const noexcept { return top_; }
  const std::vector<FpfInvolution>& members() const noexcept { return members_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const FpfInvolution& pi) const;
  // Throws DomainError if pi is not a member.
  int rank_of(const FpfInvolution& pi) const;

 private:
  FpfInvolution top_;
  std::vector<FpfInvolution> members_;  // enumeration order
  std::vector<int> ranks_;
};

Interval interval(const FpfInvolution& top, int degree_cap = kDefaultDegreeCap);

// Coefficients of the rank generating function, lowest degree first.
class RankPolynomial {
 public:
  // Throws DomainError on an empty sequence.
  explicit RankPolynomial(std::vector<std::uint64_t> coeffs);

  // prod_i (1 + q + ... + q^{t_i}); the empty product is 1.
  static RankPolynomial bracket_product(std::span<const int> exponents);
  // Histogram of ranks.
  static RankPolynomial from_ranks(std::span<const int> ranks);

  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t total() const noexcept;

  friend bool operator==(const RankPolynomial&, const RankPolynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

bool is_palindromic(const RankPolynomial& p);

RankPolynomial rank_poly(const FpfInvolution& pi, int degree_cap = kDefaultDegreeCap);
RankPolynomial rank_poly(const Catalog& catalog, const IndexedInterval& range);

// Palindromicity of P_pi.
bool is_rationally_smooth(const FpfInvolution& pi, int degree_cap = kDefaultDegreeCap);

// Bracket exponents [t_1, ..., t_n] with P_pi = prod (1 + ... + q^{t_i}),
// peeling off the arc through 1 when 2n - pi(1) <= pi(2n) - 1 and the arc
// through 2n otherwise. Throws NotAvoidingError (see patterns.hpp) when pi
// contains a bad pattern.
std::vector<int> factor_rank_poly(const FpfInvolution& pi);

}  // namespace symporb
