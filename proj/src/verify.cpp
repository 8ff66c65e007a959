#include "symporb/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "symporb/bruhat.hpp"
#include "symporb/graph.hpp"
#include "symporb/parallel.hpp"
#include "symporb/patterns.hpp"

namespace symporb {

namespace {

struct PublishedRow {
  const char* pattern;
  int rank;
  const char* edges;
};

// Published edge table, transcribed verbatim. Do not correct entries here;
// disagreements are what verify_table reports.
constexpr std::array<PublishedRow, 17> kPublishedTable = {{
    {"351624", 4, "12,13,14,23,24"},
    {"64827153", 5, "12,13,23,24,25,34,35"},
    {"57681324", 5, "12,13,14,23,24,34"},
    {"53281764", 7, "12,13,14,23,24,25,34,35"},
    {"43218765", 8, "12,13,14,15,23,24,25,26,34,35"},
    {"65872143", 4, "12,13,23,24,34"},
    {"21654387", 10, "12,13,14,15,16,17,23,24,25,26,34,35"},
    {"21563487", 11, "12,13,14,15,16,17,23,24,25,26,34,35"},
    {"34127856", 10, "12,13,14,15,16,23,24,25,26,34,35"},
    {"43217856", 9, "12,13,14,15,23,24,25,26,34,35"},
    {"34128765", 9, "12,13,14,15,16,23,24,25,26,34,35"},
    {"36154287", 9, "12,13,14,15,16,23,24,25,26,34,35"},
    {"21754836", 9, "12,13,14,15,16,23,24,25,26,34,35"},
    {"63287154", 6, "12,13,23,24,25,34,35"},
    {"54821763", 6, "12,13,23,24,25,34,35"},
    {"46513287", 8, "12,13,14,15,23,24,25,34,35"},
    {"21768435", 8, "12,13,14,15,23,24,25,34,35"},
}};

std::vector<std::string> split_labels(const char* text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

DegreeSummary verify_theorem_degree(int n, unsigned workers) {
  const Catalog catalog(n);
  std::vector<TheoremCase> cases(catalog.size(), TheoremCase{catalog.at(0)});
  parallel_for(catalog.size(), workers, [&](std::size_t i) {
    const auto index = static_cast<std::uint32_t>(i);
    const auto lower = catalog.interval(index);
    TheoremCase c{catalog.at(i)};
    c.avoids = avoids_all_bad(c.pi);
    c.palindromic = is_palindromic(rank_poly(catalog, lower));
    c.regular = is_regular(catalog, lower);
    cases[i] = std::move(c);
  });

  DegreeSummary out;
  out.degree = 2 * n;
  out.orbits = cases.size();
  for (auto& c : cases) {
    if (!c.consistent()) {
      out.counterexamples.push_back(std::move(c));
    } else if (c.avoids) {
      ++out.smooth;
    }
  }
  return out;
}

std::vector<DegreeSummary> verify_theorem(int max_degree, unsigned workers) {
  std::vector<DegreeSummary> out;
  for (int n = 1; 2 * n <= max_degree; ++n) out.push_back(verify_theorem_degree(n, workers));
  return out;
}

std::vector<TableRow> verify_table(unsigned workers) {
  std::vector<TableRow> rows;
  rows.reserve(kPublishedTable.size());
  for (const auto& p : kPublishedTable) {
    rows.push_back(TableRow{FpfInvolution::parse(p.pattern), p.rank, split_labels(p.edges), 0, {}, {}, {}});
  }
  parallel_for(rows.size(), workers, [&](std::size_t i) {
    TableRow& row = rows[i];
    row.rank = rank(row.pattern);
    for (const auto& t : bottom_edge_labels(row.pattern)) row.edges.push_back(t.label());
    auto published = row.published_edges;
    auto computed = row.edges;
    std::sort(published.begin(), published.end());
    std::sort(computed.begin(), computed.end());
    std::set_difference(published.begin(), published.end(), computed.begin(), computed.end(),
                        std::back_inserter(row.missing));
    std::set_difference(computed.begin(), computed.end(), published.begin(), published.end(),
                        std::back_inserter(row.extra));
  });
  return rows;
}

}  // namespace symporb
