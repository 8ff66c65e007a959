#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symporb/involution.hpp"

namespace symporb {

using Rational = mpq_class;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Columns at which the rank of the column prefix grows, from a fraction-free
// (Bareiss) row echelon form over the integers. Rows are cleared of
// denominators first; scaling rows leaves the profile unchanged.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);
int matrix_rank(const RationalMatrix& m);

// J with J(i, 2n+1-i) = 1 for i <= n and -1 for i > n (1-based).
RationalMatrix standard_form(int n);

// Invertible 2n x 2n matrix whose row i spans V_i / V_{i-1}.
class FlagMatrix {
 public:
  // Throws DomainError unless `basis` is square of even size and invertible.
  explicit FlagMatrix(RationalMatrix basis);

  int n() const noexcept { return static_cast<int>(basis_.rows()) / 2; }
  const RationalMatrix& basis() const noexcept { return basis_; }

 private:
  RationalMatrix basis_;
};

// <b_i, b_j> for the flag's basis rows, i.e. F J F^T.
RationalMatrix gram_matrix(const FlagMatrix& flag);

// G_mu: entry (i, mu_i) is 1 when mu_i > i and -1 when mu_i < i, else 0.
RationalMatrix orbit_gram(const FpfInvolution& mu);

// r(i, j) = rank of the form on V_i x V_j, 0 <= i, j <= 2n.
class RankGrid {
 public:
  explicit RankGrid(int n2) : n2_(n2), values_(static_cast<std::size_t>((n2 + 1) * (n2 + 1)), 0) {}

  int degree() const noexcept { return n2_; }
  int& operator()(int i, int j) { return values_[static_cast<std::size_t>(i * (n2_ + 1) + j)]; }
  int operator()(int i, int j) const { return values_[static_cast<std::size_t>(i * (n2_ + 1) + j)]; }

  friend bool operator==(const RankGrid&, const RankGrid&) = default;

 private:
  int n2_;
  std::vector<int> values_;
};

RankGrid rank_grid(const FlagMatrix& flag);

// #{k <= i : pi(k) <= j}, the grid every flag in the orbit of pi has.
RankGrid orbit_rank_grid(const FpfInvolution& pi);

// Orbit of a flag under the symplectic group. Throws ConsistencyError if the
// recovered involution fails to reproduce the flag's full rank grid.
FpfInvolution classify_flag(const FlagMatrix& flag);

// Base point of the orbit of mu: signed standard basis vectors arranged so
// the Gram matrix is G_mu. Arcs (i, mu_i), taken by increasing i, receive the
// hyperbolic pairs (e_a, e_{2n+1-a}) for a = 1, 2, ...
FlagMatrix gram_basis_flag(const FpfInvolution& mu);

// x -> x + c <x, v> v as a matrix acting on row vectors.
RationalMatrix transvection(const std::vector<Rational>& v, const Rational& c);

bool is_symplectic(const RationalMatrix& s);

// Product of `count` transvections with integer vectors (entries in [-2, 2])
// and scalars from {+-1, +-1/2, +-2}, drawn from mt19937_64(seed).
RationalMatrix random_symplectic(int n, std::uint64_t seed, int count = 8);

// Flag with rows x S.
FlagMatrix act(const FlagMatrix& flag, const RationalMatrix& s);

// "p/q" or "p".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);

}  // namespace symporb
