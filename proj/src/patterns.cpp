#include "symporb/patterns.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace symporb {

namespace {

const std::vector<FpfInvolution>& bad_list() {
  static const std::vector<FpfInvolution> list = [] {
    constexpr std::array<const char*, 17> words = {
        "351624",   "64827153", "57681324", "53281764", "43218765", "65872143",
        "21654387", "21563487", "34127856", "43217856", "34128765", "36154287",
        "21754836", "63287154", "54821763", "46513287", "21768435",
    };
    std::vector<FpfInvolution> out;
    out.reserve(words.size());
    for (const char* w : words) out.push_back(FpfInvolution::parse(w));
    return out;
  }();
  return list;
}

// Standardizes host values at `indices` and compares with the pattern word.
bool matches(const FpfInvolution& host, const std::vector<int>& indices,
             const FpfInvolution& pattern) {
  const std::size_t m2 = indices.size();
  for (std::size_t j = 0; j < m2; ++j) {
    // The index set is host-invariant, so the j-th value's standardized form
    // is its position among the (sorted) indices.
    const int v = host(indices[j]);
    const auto where = std::lower_bound(indices.begin(), indices.end(), v);
    if (static_cast<int>(where - indices.begin()) + 1 != pattern.word()[j]) return false;
  }
  return true;
}

// Calls visit(indices) for every union of m arcs of host, stopping early when
// visit returns true.
template <typename Visit>
bool for_each_arc_subset(const FpfInvolution& host, int m, Visit&& visit) {
  const auto arcs = host.arcs();
  const int n = static_cast<int>(arcs.size());
  if (m > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = i;
  std::vector<int> indices;
  while (true) {
    indices.clear();
    for (int i : pick) {
      indices.push_back(arcs[i].a);
      indices.push_back(arcs[i].d);
    }
    std::sort(indices.begin(), indices.end());
    if (visit(indices)) return true;
    int k = m - 1;
    while (k >= 0 && pick[k] == n - m + k) --k;
    if (k < 0) return false;
    ++pick[k];
    for (int i = k + 1; i < m; ++i) pick[i] = pick[i - 1] + 1;
  }
}

bool contains(const FpfInvolution& host, const FpfInvolution& pattern) {
  if (pattern.size() > host.size()) return false;
  return for_each_arc_subset(host, pattern.n(), [&](const std::vector<int>& idx) {
    return matches(host, idx, pattern);
  });
}

}  // namespace

std::span<const FpfInvolution> bad_patterns() { return bad_list(); }

std::optional<PatternWitness> includes_pattern(const FpfInvolution& host,
                                               const FpfInvolution& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::optional<std::vector<int>> best;
  for_each_arc_subset(host, pattern.n(), [&](const std::vector<int>& idx) {
    if (matches(host, idx, pattern) && (!best || idx < *best)) best = idx;
    return false;
  });
  if (!best) return std::nullopt;
  return PatternWitness{pattern, std::move(*best)};
}

bool avoids_all_bad(const FpfInvolution& pi) {
  return std::none_of(bad_list().begin(), bad_list().end(),
                      [&](const FpfInvolution& b) { return contains(pi, b); });
}

std::optional<PatternWitness> bad_pattern_witness(const FpfInvolution& pi) {
  for (const auto& b : bad_list()) {
    if (contains(pi, b)) return includes_pattern(pi, b);
  }
  return std::nullopt;
}

bool is_valid_witness(const FpfInvolution& host, const PatternWitness& w) {
  const auto& idx = w.indices;
  if (static_cast<int>(idx.size()) != w.pattern.size()) return false;
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    return false;
  }
  if (idx.front() < 1 || idx.back() > host.size()) return false;
  for (int i : idx) {
    if (!std::binary_search(idx.begin(), idx.end(), host(i))) return false;
  }
  return matches(host, idx, w.pattern);
}

FpfInvolution irregular_certificate(const FpfInvolution& pi, const PatternWitness& w) {
  if (!is_valid_witness(pi, w)) {
    throw DomainError("not a witness of " + w.pattern.to_string() + " in " +
                      pi.to_string());
  }
  std::vector<int> word(pi.word().begin(), pi.word().end());
  const std::size_t m2 = w.indices.size();
  for (std::size_t j = 0; j < m2; ++j) {
    word[static_cast<std::size_t>(w.indices[j] - 1)] = w.indices[m2 - 1 - j];
  }
  return FpfInvolution(std::move(word));
}

namespace {

std::string index_set(const std::vector<int>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out += (i ? "," : "") + std::to_string(indices[i]);
  }
  return out + "}";
}

}  // namespace

NotAvoidingError::NotAvoidingError(const FpfInvolution& pi, PatternWitness witness)
    : DomainError(pi.to_string() + " contains the bad pattern " +
                  witness.pattern.to_string() + " at " +
                  index_set(witness.indices)),
      witness_(std::move(witness)) {}

}  // namespace symporb
