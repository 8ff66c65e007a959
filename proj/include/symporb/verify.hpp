#pragma once

#include <string>
#include <vector>

#include "symporb/involution.hpp"

namespace symporb {

// One orbit's three smoothness verdicts.
struct TheoremCase {
  FpfInvolution pi;
  bool avoids = false;
  bool palindromic = false;
  bool regular = false;

  bool consistent() const noexcept { return avoids == palindromic && palindromic == regular; }
};

struct DegreeSummary {
  int degree = 0;  // 2n
  std::size_t orbits = 0;
  std::size_t smooth = 0;  // orbits whose three verdicts all say smooth
  std::vector<TheoremCase> counterexamples;
};

// Pattern avoidance, palindromic P_pi and regular BG_pi for every pi in
// I_2n. Cases are computed in parallel and merged in enumeration order.
DegreeSummary verify_theorem_degree(int n, unsigned workers = 1);

// Every 2n = 2, 4, ..., max_degree.
std::vector<DegreeSummary> verify_theorem(int max_degree, unsigned workers = 1);

struct TableRow {
  FpfInvolution pattern;
  int published_rank = 0;
  std::vector<std::string> published_edges;
  int rank = 0;
  std::vector<std::string> edges;
  std::vector<std::string> missing;  // published but not computed
  std::vector<std::string> extra;    // computed but not published

  bool rank_matches() const noexcept { return rank == published_rank; }
  bool edges_match() const noexcept { return missing.empty() && extra.empty(); }
  bool matches() const noexcept { return rank_matches() && edges_match(); }
};

// Recomputes rank and bottom edge labels of each bad pattern and diffs them
// against the published table.
std::vector<TableRow> verify_table(unsigned workers = 1);

}  // namespace symporb
