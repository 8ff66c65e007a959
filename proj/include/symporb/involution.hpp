#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symporb/errors.hpp"

namespace symporb {

// Largest 2n accepted by enumeration unless a caller raises the cap.
inline constexpr int kDefaultDegreeCap = 14;

// Flip of two positions a < d, 1-based. Conjugating an involution by it swaps
// both the two positions and the two values.
struct Transposition {
  int a = 1;
  int d = 2;

  Transposition() = default;
  Transposition(int first, int second);

  // "ij" when both fit in one digit, "i,j" otherwise.
  std::string label() const;
  static Transposition parse(std::string_view text);

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// Fixed-point-free involution of {1, ..., 2n} in one-line notation.
//
// Positions and values are 1-based at the interface; storage is a 0-indexed
// word holding the 1-based values. Ordering is lexicographic on the word,
// which is also the enumeration order.
class FpfInvolution {
 public:
  // Validates that `word` is a fixed-point-free involution of {1..size}.
  explicit FpfInvolution(std::vector<int> word);

  // Accepts "351624" (one digit per letter, 2n <= 9) or "10,9,...".
  static FpfInvolution parse(std::string_view text);

  // w0 = 2n ... 1, the bottom of the reverse Bruhat order.
  static FpfInvolution longest(int n);
  // 2143...(2n)(2n-1), the top.
  static FpfInvolution open_orbit(int n);

  int n() const noexcept { return static_cast<int>(word_.size()) / 2; }
  int size() const noexcept { return static_cast<int>(word_.size()); }

  // pi(i) for 1-based i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const noexcept { return word_; }

  // Pairs (i, pi(i)) with i < pi(i), ordered by left endpoint.
  std::vector<Transposition> arcs() const;
  bool has_arc(const Transposition& t) const;

  std::string to_string() const;

  // 4 bits per letter; unique for 2n <= 16.
  std::uint64_t packed() const noexcept;

  friend bool operator==(const FpfInvolution&, const FpfInvolution&) = default;
  friend auto operator<=>(const FpfInvolution& x, const FpfInvolution& y) {
    return x.word_ <=> y.word_;
  }

 private:
  struct Unchecked {};
  FpfInvolution(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend FpfInvolution conjugate(const FpfInvolution&, const Transposition&);
  friend FpfInvolution reverse_complement(const FpfInvolution&);
  friend FpfInvolution delete_pair_standardize(const FpfInvolution&,
                                               const Transposition&);
  friend std::vector<FpfInvolution> enumerate(int, int);

  std::vector<int> word_;
};

std::string format_word(std::span<const int> word);

// All of I_2n in lexicographic order. Throws SizeError when n < 1 or 2n
// exceeds `degree_cap`.
std::vector<FpfInvolution> enumerate(int n, int degree_cap = kDefaultDegreeCap);

// (2n-1)!!
std::uint64_t fpf_count(int n);

// Grading of the orbit poset: n^2 minus the sum over arcs (i, j) of
// j - i - #{k : i < k < j, pi(k) < i}. Zero at w0, n^2 - n at the top.
int rank(const FpfInvolution& pi);

// t pi t. Equal to pi exactly when t is an arc of pi.
FpfInvolution conjugate(const FpfInvolution& pi, const Transposition& t);

// w0 pi w0; the diagram automorphism.
FpfInvolution reverse_complement(const FpfInvolution& pi);

// Arcs (a, d) of pi with a < t.a and t.d < d.
int encapsulation_count(const FpfInvolution& pi, const Transposition& t);

// Removes the arc's two positions and two values, then renumbers the
// survivors order-preservingly. Throws DomainError if `arc` is not an arc of
// pi or pi has a single arc.
FpfInvolution delete_pair_standardize(const FpfInvolution& pi,
                                      const Transposition& arc);

}  // namespace symporb

template <>
struct std::hash<symporb::FpfInvolution> {
  std::size_t operator()(const symporb::FpfInvolution& pi) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : pi.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
