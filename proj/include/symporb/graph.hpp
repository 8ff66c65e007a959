#pragma once

#include <cstdint>
#include <vector>

#include "symporb/bruhat.hpp"

namespace symporb {

// Neighbour of a vertex together with every transposition reaching it.
struct Neighbor {
  std::uint32_t index;  // catalog index
  std::vector<Transposition> labels;  // ascending
};

// All nu = t v t != v inside `range`, ordered by catalog index.
std::vector<Neighbor> neighbors_in(const Catalog& catalog, const IndexedInterval& range,
                                   std::uint32_t v);

// Number of distinct neighbours of v inside `range`.
int degree_in(const Catalog& catalog, const IndexedInterval& range, std::uint32_t v);

struct Edge {
  std::size_t u;  // vertex positions, u < v
  std::size_t v;
  std::vector<Transposition> labels;
};

// Bruhat graph on the reverse Bruhat interval [bottom, top]: vertices are
// the interval, nu ~ mu when nu = t mu t != mu for some transposition t.
// Vertices follow enumeration order, edges are sorted by (u, v).
class BruhatGraph {
 public:
  BruhatGraph(FpfInvolution bottom, FpfInvolution top, std::vector<FpfInvolution> vertices,
              std::vector<int> ranks, std::vector<Edge> edges);

  const FpfInvolution& bottom() const noexcept { return bottom_; }
  const FpfInvolution& top() const noexcept { return top_; }
  const std::vector<FpfInvolution>& vertices() const noexcept { return vertices_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Position of v among vertices(); DomainError if absent.
  std::size_t position(const FpfInvolution& v) const;
  // Edge positions incident to the vertex at `position`.
  const std::vector<std::size_t>& incident(std::size_t position) const {
    return incident_[position];
  }
  int rank_gap() const noexcept;

 private:
  FpfInvolution bottom_;
  FpfInvolution top_;
  std::vector<FpfInvolution> vertices_;
  std::vector<int> ranks_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct GraphOptions {
  int degree_cap = kDefaultDegreeCap;
  unsigned workers = 1;
};

// Throws DomainError when bottom is not below top.
BruhatGraph build_graph(const FpfInvolution& bottom, const FpfInvolution& top,
                        const GraphOptions& options = {});

// Distinct neighbours; DomainError when v is not a vertex.
int degree(const BruhatGraph& g, const FpfInvolution& v);

// Edge labels at w0 in BG_top, one per neighbour: the least transposition
// producing it (t and its mirror image give the same conjugate of w0).
std::vector<Transposition> bottom_edge_labels(const FpfInvolution& top,
                                              int degree_cap = kDefaultDegreeCap);

// Every vertex of BG_top has degree rank(top).
bool is_regular(const FpfInvolution& top, int degree_cap = kDefaultDegreeCap);
bool is_regular(const Catalog& catalog, const IndexedInterval& lower);

struct LocalDegree {
  int degree = 0;
  int rank_gap = 0;
  bool irregular = false;

  friend bool operator==(const LocalDegree&, const LocalDegree&) = default;
};

// Degree of mu in BG_{mu,pi} against rank(pi) - rank(mu).
LocalDegree local_degree_test(const FpfInvolution& mu, const FpfInvolution& pi,
                              int degree_cap = kDefaultDegreeCap);
LocalDegree local_degree_test(const Catalog& catalog, std::uint32_t mu, std::uint32_t pi);

struct SingularLocus {
  std::vector<FpfInvolution> irregular;  // every irregular mu <= pi
  std::vector<FpfInvolution> maximal;    // its maximal elements
};

SingularLocus rationally_singular_locus(const FpfInvolution& pi,
                                        const GraphOptions& options = {});

struct LemmaCheck {
  FpfInvolution reduced_mu;
  FpfInvolution reduced_pi;
  int rank_gap = 0;
  int reduced_rank_gap = 0;
  int nesting_mu = 0;
  int nesting_pi = 0;
  bool reduced_irregular = false;
  bool irregular = false;
  bool rank_identity = false;
  bool propagation = false;
};

// Deletes a common arc t from mu <= pi and checks the rank-gap identity
// gap = reduced gap + 2 (n_mu - n_pi) along with the propagation of
// irregularity from the reduced pair. DomainError when t is not an arc of
// both, mu is not below pi, or n < 2.
LemmaCheck lemma_check(const FpfInvolution& mu, const FpfInvolution& pi,
                       const Transposition& t, int degree_cap = kDefaultDegreeCap);
LemmaCheck lemma_check(const Catalog& catalog, const Catalog& reduced,
                       const FpfInvolution& mu, const FpfInvolution& pi,
                       const Transposition& t);

}  // namespace symporb
