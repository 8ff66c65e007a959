#include "symporb/geometry.hpp"

#include <array>
#include <optional>
#include <random>

namespace symporb {

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols_ != y.rows_) throw DomainError("matrix shapes do not match");
  RationalMatrix out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& a = x(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) out(r, c) += a * y(k, c);
    }
  }
  return out;
}

bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && sgn(at(p, col)) == 0) ++p;
    if (p == rows) continue;
    if (p != k) {
      for (std::size_t c = col; c < cols; ++c) swap(at(p, c), at(k, c));
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = at(k, col) * at(i, j) - at(i, col) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      at(i, col) = 0;
    }
    previous = at(k, col);
    pivots.push_back(col);
    ++k;
  }
  return pivots;
}

int matrix_rank(const RationalMatrix& m) { return static_cast<int>(pivot_columns(m).size()); }

RationalMatrix standard_form(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  const std::size_t n2 = static_cast<std::size_t>(2 * n);
  RationalMatrix j(n2, n2);
  for (std::size_t i = 0; i < n2; ++i) j(i, n2 - 1 - i) = (i < n2 / 2) ? 1 : -1;
  return j;
}

FlagMatrix::FlagMatrix(RationalMatrix basis) : basis_(std::move(basis)) {
  const std::size_t size = basis_.rows();
  if (size == 0 || size % 2 != 0 || basis_.cols() != size) {
    throw DomainError("flag matrix must be square of even size, got " +
                      std::to_string(basis_.rows()) + "x" + std::to_string(basis_.cols()));
  }
  const auto pivots = pivot_columns(basis_);
  if (pivots.size() != size) {
    throw DomainError("flag matrix is singular (rank " + std::to_string(pivots.size()) +
                      " of " + std::to_string(size) + ")");
  }
}

RationalMatrix gram_matrix(const FlagMatrix& flag) {
  const auto& f = flag.basis();
  return f * standard_form(flag.n()) * f.transpose();
}

RationalMatrix orbit_gram(const FpfInvolution& mu) {
  const std::size_t n2 = static_cast<std::size_t>(mu.size());
  RationalMatrix g(n2, n2);
  for (int i = 1; i <= mu.size(); ++i) {
    const int j = mu(i);
    g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = (j > i) ? 1 : -1;
  }
  return g;
}

RankGrid rank_grid(const FlagMatrix& flag) {
  const auto gram = gram_matrix(flag);
  const int n2 = 2 * flag.n();
  RankGrid grid(n2);
  for (int i = 1; i <= n2; ++i) {
    RationalMatrix top(static_cast<std::size_t>(i), static_cast<std::size_t>(n2));
    for (int r = 0; r < i; ++r) {
      for (int c = 0; c < n2; ++c) top(r, c) = gram(r, c);
    }
    // Rank of the leading i x j block = pivots among the first j columns.
    const auto pivots = pivot_columns(top);
    std::size_t next = 0;
    for (int j = 1; j <= n2; ++j) {
      while (next < pivots.size() && pivots[next] < static_cast<std::size_t>(j)) ++next;
      grid(i, j) = static_cast<int>(next);
    }
  }
  return grid;
}

RankGrid orbit_rank_grid(const FpfInvolution& pi) {
  const int n2 = pi.size();
  RankGrid grid(n2);
  for (int i = 1; i <= n2; ++i) {
    for (int j = 1; j <= n2; ++j) {
      grid(i, j) = grid(i - 1, j) + (pi(i) <= j ? 1 : 0);
    }
  }
  return grid;
}

FpfInvolution classify_flag(const FlagMatrix& flag) {
  const auto grid = rank_grid(flag);
  const int n2 = grid.degree();
  std::vector<int> word(static_cast<std::size_t>(n2), 0);
  for (int i = 1; i <= n2; ++i) {
    for (int j = 1; j <= n2; ++j) {
      const int jump = grid(i, j) - grid(i - 1, j) - grid(i, j - 1) + grid(i - 1, j - 1);
      if (jump == 0) continue;
      if (jump != 1 || word[static_cast<std::size_t>(i - 1)] != 0) {
        throw ConsistencyError("rank grid has an invalid jump at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
      }
      word[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  std::optional<FpfInvolution> pi;
  try {
    pi.emplace(std::move(word));
  } catch (const DomainError& e) {
    throw ConsistencyError(std::string("classified word is not a fixed-point-free involution: ") +
                           e.what());
  }
  if (!(orbit_rank_grid(*pi) == grid)) {
    throw ConsistencyError("rank grid of the flag does not match " + pi->to_string());
  }
  return *pi;
}

FlagMatrix gram_basis_flag(const FpfInvolution& mu) {
  const int n2 = mu.size();
  RationalMatrix basis(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
  int next = 1;
  for (const auto& arc : mu.arcs()) {
    basis(static_cast<std::size_t>(arc.a - 1), static_cast<std::size_t>(next - 1)) = 1;
    basis(static_cast<std::size_t>(arc.d - 1), static_cast<std::size_t>(n2 - next)) = 1;
    ++next;
  }
  FlagMatrix flag(std::move(basis));
  if (!(gram_matrix(flag) == orbit_gram(mu))) {
    throw ConsistencyError("base flag for " + mu.to_string() + " does not have Gram matrix G_mu");
  }
  return flag;
}

RationalMatrix transvection(const std::vector<Rational>& v, const Rational& c) {
  const std::size_t n2 = v.size();
  if (n2 == 0 || n2 % 2 != 0) throw DomainError("transvection vector must have even length");
  // x J v^T = sum_i x_i (J v^T)_i, so the matrix is I + c (J v^T) v.
  const auto j = standard_form(static_cast<int>(n2 / 2));
  std::vector<Rational> jv(n2);
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t k = 0; k < n2; ++k) jv[r] += j(r, k) * v[k];
  }
  auto t = RationalMatrix::identity(n2);
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t col = 0; col < n2; ++col) t(r, col) += c * jv[r] * v[col];
  }
  return t;
}

bool is_symplectic(const RationalMatrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) return false;
  const auto j = standard_form(static_cast<int>(s.rows() / 2));
  return s * j * s.transpose() == j;
}

RationalMatrix random_symplectic(int n, std::uint64_t seed, int count) {
  if (n < 1) throw DomainError("n must be at least 1");
  const std::size_t n2 = static_cast<std::size_t>(2 * n);
  static const std::array<Rational, 6> scalars = {Rational(1), Rational(-1), Rational(1, 2),
                                                  Rational(-1, 2), Rational(2), Rational(-2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, scalars.size() - 1);
  auto s = RationalMatrix::identity(n2);
  for (int step = 0; step < count; ++step) {
    std::vector<Rational> v(n2);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : v) {
        x = entry(rng);
        nonzero = nonzero || sgn(x) != 0;
      }
    }
    s = s * transvection(v, scalars[pick(rng)]);
  }
  if (!is_symplectic(s)) throw ConsistencyError("random transvection product is not symplectic");
  return s;
}

FlagMatrix act(const FlagMatrix& flag, const RationalMatrix& s) {
  return FlagMatrix(flag.basis() * s);
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational x;
  if (x.set_str(s, 10) != 0 || sgn(x.get_den()) == 0) {
    throw ParseError("bad rational '" + s + "'");
  }
  x.canonicalize();
  return x;
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace symporb
