#include "symporb/bruhat.hpp"

#include <algorithm>

#include "symporb/patterns.hpp"

namespace symporb {

BruhatKey::BruhatKey(std::span<const int> word) {
  // The full-length prefix is always 1..2n and carries no information.
  const std::size_t len = word.size();
  prefixes_.reserve(len * (len - 1) / 2);
  std::vector<std::uint8_t> sorted;
  sorted.reserve(len);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const auto v = static_cast<std::uint8_t>(word[i]);
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
    prefixes_.insert(prefixes_.end(), sorted.begin(), sorted.end());
  }
}

bool BruhatKey::bruhat_leq(const BruhatKey& other) const noexcept {
  const std::size_t len = prefixes_.size();
  if (len != other.prefixes_.size()) return false;
  const std::uint8_t* x = prefixes_.data();
  const std::uint8_t* y = other.prefixes_.data();
  for (std::size_t i = 0; i < len; ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool reverse_leq(const FpfInvolution& mu, const FpfInvolution& pi) {
  if (mu.size() != pi.size()) {
    throw DomainError("cannot compare " + mu.to_string() + " and " + pi.to_string() +
                      ": different degrees");
  }
  return BruhatKey(pi).bruhat_leq(BruhatKey(mu));
}

Catalog::Catalog(int n, int degree_cap)
    : n_(n), elements_(enumerate(n, std::min(degree_cap, 16))) {
  ranks_.reserve(elements_.size());
  keys_.reserve(elements_.size());
  packed_.reserve(elements_.size());
  for (const auto& pi : elements_) {
    ranks_.push_back(rank(pi));
    keys_.emplace_back(pi);
    packed_.push_back(pi.packed());
  }
  bottom_ = index_of(FpfInvolution::longest(n));
}

std::optional<std::uint32_t> Catalog::find_packed(std::uint64_t key) const {
  // Packing is order-preserving for a fixed length, so packed_ is sorted.
  auto it = std::lower_bound(packed_.begin(), packed_.end(), key);
  if (it == packed_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - packed_.begin());
}

std::optional<std::uint32_t> Catalog::find(const FpfInvolution& pi) const {
  if (pi.n() != n_) return std::nullopt;
  return find_packed(pi.packed());
}

std::uint32_t Catalog::index_of(const FpfInvolution& pi) const {
  if (auto i = find(pi)) return *i;
  throw DomainError(pi.to_string() + " is not in I_" + std::to_string(2 * n_));
}

IndexedInterval Catalog::interval(std::uint32_t bottom, std::uint32_t top) const {
  if (!reverse_leq(bottom, top)) {
    throw DomainError(at(bottom).to_string() + " is not below " + at(top).to_string());
  }
  IndexedInterval out;
  out.bottom = bottom;
  out.top = top;
  out.contains.assign(size(), 0);
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (reverse_leq(i, top) && reverse_leq(bottom, i)) {
      out.members.push_back(i);
      out.contains[i] = 1;
    }
  }
  return out;
}

Interval::Interval(FpfInvolution top, std::vector<FpfInvolution> members,
                   std::vector<int> ranks)
    : top_(std::move(top)), members_(std::move(members)), ranks_(std::move(ranks)) {}

bool Interval::contains(const FpfInvolution& pi) const {
  return std::binary_search(members_.begin(), members_.end(), pi);
}

int Interval::rank_of(const FpfInvolution& pi) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), pi);
  if (it == members_.end() || *it != pi) {
    throw DomainError(pi.to_string() + " is not below " + top_.to_string());
  }
  return ranks_[static_cast<std::size_t>(it - members_.begin())];
}

Interval interval(const FpfInvolution& top, int degree_cap) {
  const Catalog catalog(top.n(), degree_cap);
  const auto range = catalog.interval(catalog.index_of(top));
  std::vector<FpfInvolution> members;
  std::vector<int> ranks;
  members.reserve(range.members.size());
  ranks.reserve(range.members.size());
  for (auto i : range.members) {
    members.push_back(catalog.at(i));
    ranks.push_back(catalog.rank_at(i));
  }
  return Interval(top, std::move(members), std::move(ranks));
}

RankPolynomial::RankPolynomial(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("rank polynomial needs at least one coefficient");
}

RankPolynomial RankPolynomial::bracket_product(std::span<const int> exponents) {
  std::vector<std::uint64_t> acc{1};
  for (int t : exponents) {
    if (t < 0) throw DomainError("bracket exponent must be nonnegative");
    std::vector<std::uint64_t> next(acc.size() + static_cast<std::size_t>(t), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (int k = 0; k <= t; ++k) next[i + static_cast<std::size_t>(k)] += acc[i];
    }
    acc = std::move(next);
  }
  return RankPolynomial(std::move(acc));
}

RankPolynomial RankPolynomial::from_ranks(std::span<const int> ranks) {
  if (ranks.empty()) throw DomainError("no ranks given");
  const int top = *std::max_element(ranks.begin(), ranks.end());
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(top) + 1, 0);
  for (int r : ranks) ++coeffs[static_cast<std::size_t>(r)];
  return RankPolynomial(std::move(coeffs));
}

std::uint64_t RankPolynomial::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

bool is_palindromic(const RankPolynomial& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2),
                    c.rbegin());
}

RankPolynomial rank_poly(const Catalog& catalog, const IndexedInterval& range) {
  std::vector<int> ranks;
  ranks.reserve(range.members.size());
  for (auto i : range.members) ranks.push_back(catalog.rank_at(i));
  return RankPolynomial::from_ranks(ranks);
}

RankPolynomial rank_poly(const FpfInvolution& pi, int degree_cap) {
  return RankPolynomial::from_ranks(interval(pi, degree_cap).ranks());
}

bool is_rationally_smooth(const FpfInvolution& pi, int degree_cap) {
  return is_palindromic(rank_poly(pi, degree_cap));
}

std::vector<int> factor_rank_poly(const FpfInvolution& pi) {
  if (auto witness = bad_pattern_witness(pi)) {
    throw NotAvoidingError(pi, std::move(*witness));
  }
  std::vector<int> exponents;
  exponents.reserve(static_cast<std::size_t>(pi.n()));
  std::optional<FpfInvolution> current = pi;
  while (current) {
    const FpfInvolution& cur = *current;
    const int n2 = cur.size();
    const int first = cur(1);
    const int last = cur(n2);
    Transposition arc;
    if (n2 - first <= last - 1) {
      exponents.push_back(n2 - first);
      arc = Transposition(1, first);
    } else {
      exponents.push_back(last - 1);
      arc = Transposition(last, n2);
    }
    if (cur.n() == 1) {
      current.reset();
    } else {
      current = delete_pair_standardize(cur, arc);
    }
  }
  return exponents;
}

}  // namespace symporb
