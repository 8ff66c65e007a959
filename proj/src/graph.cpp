#include "symporb/graph.hpp"

#include <algorithm>
#include <array>

#include "symporb/parallel.hpp"

namespace symporb {

namespace {

// Packed key of t v t computed straight from the word.
std::uint64_t packed_conjugate(std::span<const int> word, int a, int d) {
  auto flip = [a, d](int x) { return x == a ? d : x == d ? a : x; };
  std::uint64_t key = 0;
  const int n2 = static_cast<int>(word.size());
  for (int i = 1; i <= n2; ++i) {
    const int value = flip(word[static_cast<std::size_t>(flip(i) - 1)]);
    key = (key << 4) | static_cast<std::uint64_t>(value - 1);
  }
  return key;
}

}  // namespace

std::vector<Neighbor> neighbors_in(const Catalog& catalog, const IndexedInterval& range,
                                   std::uint32_t v) {
  const auto word = catalog.at(v).word();
  const int n2 = static_cast<int>(word.size());
  std::vector<Neighbor> out;
  for (int a = 1; a < n2; ++a) {
    for (int d = a + 1; d <= n2; ++d) {
      if (word[static_cast<std::size_t>(a - 1)] == d) continue;  // t is an arc of v
      const auto hit = catalog.find_packed(packed_conjugate(word, a, d));
      if (!hit || !range.contains[*hit]) continue;
      auto it = std::lower_bound(out.begin(), out.end(), *hit,
                                 [](const Neighbor& x, std::uint32_t i) { return x.index < i; });
      if (it == out.end() || it->index != *hit) it = out.insert(it, Neighbor{*hit, {}});
      it->labels.emplace_back(a, d);
    }
  }
  return out;
}

int degree_in(const Catalog& catalog, const IndexedInterval& range, std::uint32_t v) {
  const auto word = catalog.at(v).word();
  const int n2 = static_cast<int>(word.size());
  std::array<std::uint32_t, 128> seen{};
  std::size_t count = 0;
  for (int a = 1; a < n2; ++a) {
    for (int d = a + 1; d <= n2; ++d) {
      if (word[static_cast<std::size_t>(a - 1)] == d) continue;
      const auto hit = catalog.find_packed(packed_conjugate(word, a, d));
      if (!hit || !range.contains[*hit]) continue;
      if (std::find(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(count), *hit) ==
          seen.begin() + static_cast<std::ptrdiff_t>(count)) {
        seen[count++] = *hit;
      }
    }
  }
  return static_cast<int>(count);
}

BruhatGraph::BruhatGraph(FpfInvolution bottom, FpfInvolution top,
                         std::vector<FpfInvolution> vertices, std::vector<int> ranks,
                         std::vector<Edge> edges)
    : bottom_(std::move(bottom)),
      top_(std::move(top)),
      vertices_(std::move(vertices)),
      ranks_(std::move(ranks)),
      edges_(std::move(edges)),
      incident_(vertices_.size()) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

std::size_t BruhatGraph::position(const FpfInvolution& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw DomainError(v.to_string() + " is not a vertex of the graph on [" +
                      bottom_.to_string() + ", " + top_.to_string() + "]");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

int BruhatGraph::rank_gap() const noexcept { return rank(top_) - rank(bottom_); }

BruhatGraph build_graph(const FpfInvolution& bottom, const FpfInvolution& top,
                        const GraphOptions& options) {
  if (bottom.size() != top.size()) {
    throw DomainError("bottom and top have different degrees");
  }
  const Catalog catalog(top.n(), options.degree_cap);
  const auto range = catalog.interval(catalog.index_of(bottom), catalog.index_of(top));
  const auto& members = range.members;

  std::vector<std::vector<Neighbor>> adjacency(members.size());
  parallel_for(members.size(), options.workers, [&](std::size_t i) {
    adjacency[i] = neighbors_in(catalog, range, members[i]);
  });

  auto position_of = [&](std::uint32_t index) {
    return static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), index) - members.begin());
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto& nb : adjacency[i]) {
      const std::size_t j = position_of(nb.index);
      if (j > i) edges.push_back(Edge{i, j, std::move(nb.labels)});
    }
  }
  std::vector<FpfInvolution> vertices;
  std::vector<int> ranks;
  vertices.reserve(members.size());
  ranks.reserve(members.size());
  for (auto m : members) {
    vertices.push_back(catalog.at(m));
    ranks.push_back(catalog.rank_at(m));
  }
  return BruhatGraph(bottom, top, std::move(vertices), std::move(ranks), std::move(edges));
}

int degree(const BruhatGraph& g, const FpfInvolution& v) {
  return static_cast<int>(g.incident(g.position(v)).size());
}

std::vector<Transposition> bottom_edge_labels(const FpfInvolution& top, int degree_cap) {
  const Catalog catalog(top.n(), degree_cap);
  const auto range = catalog.interval(catalog.index_of(top));
  std::vector<Transposition> labels;
  for (const auto& nb : neighbors_in(catalog, range, catalog.bottom_index())) {
    labels.push_back(nb.labels.front());
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool is_regular(const Catalog& catalog, const IndexedInterval& lower) {
  const int r = catalog.rank_at(lower.top);
  return std::all_of(lower.members.begin(), lower.members.end(), [&](std::uint32_t v) {
    return degree_in(catalog, lower, v) == r;
  });
}

bool is_regular(const FpfInvolution& top, int degree_cap) {
  const Catalog catalog(top.n(), degree_cap);
  return is_regular(catalog, catalog.interval(catalog.index_of(top)));
}

LocalDegree local_degree_test(const Catalog& catalog, std::uint32_t mu, std::uint32_t pi) {
  const auto range = catalog.interval(mu, pi);
  LocalDegree out;
  out.degree = degree_in(catalog, range, mu);
  out.rank_gap = catalog.rank_at(pi) - catalog.rank_at(mu);
  out.irregular = out.degree > out.rank_gap;
  return out;
}

LocalDegree local_degree_test(const FpfInvolution& mu, const FpfInvolution& pi,
                              int degree_cap) {
  if (mu.size() != pi.size()) throw DomainError("mu and pi have different degrees");
  const Catalog catalog(pi.n(), degree_cap);
  return local_degree_test(catalog, catalog.index_of(mu), catalog.index_of(pi));
}

SingularLocus rationally_singular_locus(const FpfInvolution& pi, const GraphOptions& options) {
  const Catalog catalog(pi.n(), options.degree_cap);
  const auto top = catalog.index_of(pi);
  const auto lower = catalog.interval(top);
  std::vector<char> irregular(lower.members.size(), 0);
  parallel_for(lower.members.size(), options.workers, [&](std::size_t i) {
    irregular[i] = local_degree_test(catalog, lower.members[i], top).irregular;
  });

  SingularLocus out;
  std::vector<std::uint32_t> bad;
  for (std::size_t i = 0; i < irregular.size(); ++i) {
    if (irregular[i]) bad.push_back(lower.members[i]);
  }
  for (auto b : bad) {
    out.irregular.push_back(catalog.at(b));
    const bool dominated = std::any_of(bad.begin(), bad.end(), [&](std::uint32_t c) {
      return c != b && catalog.reverse_leq(b, c);
    });
    if (!dominated) out.maximal.push_back(catalog.at(b));
  }
  return out;
}

LemmaCheck lemma_check(const Catalog& catalog, const Catalog& reduced,
                       const FpfInvolution& mu, const FpfInvolution& pi,
                       const Transposition& t) {
  if (!mu.has_arc(t) || !pi.has_arc(t)) {
    throw DomainError(t.label() + " is not an arc of both " + mu.to_string() + " and " +
                      pi.to_string());
  }
  const auto mu_index = catalog.index_of(mu);
  const auto pi_index = catalog.index_of(pi);
  if (!catalog.reverse_leq(mu_index, pi_index)) {
    throw DomainError(mu.to_string() + " is not below " + pi.to_string());
  }
  LemmaCheck out{delete_pair_standardize(mu, t), delete_pair_standardize(pi, t)};
  out.rank_gap = catalog.rank_at(pi_index) - catalog.rank_at(mu_index);
  out.reduced_rank_gap = rank(out.reduced_pi) - rank(out.reduced_mu);
  out.nesting_mu = encapsulation_count(mu, t);
  out.nesting_pi = encapsulation_count(pi, t);
  out.rank_identity =
      out.rank_gap == out.reduced_rank_gap + 2 * (out.nesting_mu - out.nesting_pi);
  out.reduced_irregular = local_degree_test(reduced, reduced.index_of(out.reduced_mu),
                                            reduced.index_of(out.reduced_pi))
                              .irregular;
  out.irregular = local_degree_test(catalog, mu_index, pi_index).irregular;
  out.propagation = !out.reduced_irregular || out.irregular;
  return out;
}

LemmaCheck lemma_check(const FpfInvolution& mu, const FpfInvolution& pi,
                       const Transposition& t, int degree_cap) {
  if (mu.size() != pi.size()) throw DomainError("mu and pi have different degrees");
  if (pi.n() < 2) throw DomainError("the lemma needs n >= 2");
  const Catalog catalog(pi.n(), degree_cap);
  const Catalog reduced(pi.n() - 1, degree_cap);
  return lemma_check(catalog, reduced, mu, pi, t);
}

}  // namespace symporb
