#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "symporb/graph.hpp"

using namespace symporb;

namespace {
FpfInvolution w(const char* text) { return FpfInvolution::parse(text); }
std::vector<int> word_of(const FpfInvolution& pi) { return {pi.word().begin(), pi.word().end()}; }

std::vector<std::string> labels_of(const std::vector<Transposition>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.label());
  return out;
}
}  // namespace

TEST_CASE("point graph") {
  const auto g = build_graph(w("4321"), w("4321"));
  CHECK(g.vertices().size() == 1);
  CHECK(g.edges().empty());
  CHECK(degree(g, w("4321")) == 0);
}

TEST_CASE("graph on all of I_4 is a triangle") {
  // Adjacency and labels from brute-force conjugation over all six transpositions.
  const auto g = build_graph(w("4321"), w("2143"));
  REQUIRE(g.vertices().size() == 3);
  REQUIRE(g.edges().size() == 3);
  CHECK(g.vertices()[0] == w("2143"));
  CHECK(g.vertices()[1] == w("3412"));
  CHECK(g.vertices()[2] == w("4321"));
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(labels_of(g.edges()[0].labels) == std::vector<std::string>{"14", "23"});
  CHECK(g.edges()[1].u == 0);
  CHECK(g.edges()[1].v == 2);
  CHECK(labels_of(g.edges()[1].labels) == std::vector<std::string>{"13", "24"});
  CHECK(g.edges()[2].u == 1);
  CHECK(g.edges()[2].v == 2);
  CHECK(labels_of(g.edges()[2].labels) == std::vector<std::string>{"12", "34"});
  for (const auto& v : g.vertices()) CHECK(degree(g, v) == 2);
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(build_graph(w("2143"), w("4321")), DomainError);
  const auto g = build_graph(w("4321"), w("3412"));
  CHECK_THROWS_AS(degree(g, w("2143")), DomainError);
}

TEST_CASE("bottom degrees from the published table") {
  const auto g = build_graph(w("654321"), w("351624"));
  CHECK(degree(g, w("654321")) == 5);
  const auto h = build_graph(w("87654321"), w("21654387"));
  CHECK(degree(h, w("87654321")) == 12);
}

TEST_CASE("bottom edge labels") {
  CHECK(labels_of(bottom_edge_labels(w("351624"))) ==
        std::vector<std::string>{"12", "13", "14", "23", "24"});
  CHECK(labels_of(bottom_edge_labels(w("65872143"))) ==
        std::vector<std::string>{"12", "13", "23", "24", "34"});
  CHECK(bottom_edge_labels(w("4321")).empty());
}

TEST_CASE("regularity examples") {
  CHECK(is_regular(w("4321")));
  CHECK(is_regular(w("2143")));
  CHECK_FALSE(is_regular(w("351624")));
}

TEST_CASE("local degree test examples") {
  CHECK(local_degree_test(w("351624"), w("351624")) == LocalDegree{0, 0, false});
  CHECK(local_degree_test(w("654321"), w("351624")) == LocalDegree{5, 4, true});
  CHECK(local_degree_test(w("87654321"), w("65872143")) == LocalDegree{5, 4, true});
  CHECK_THROWS_AS(local_degree_test(w("2143"), w("4321")), DomainError);
}

TEST_CASE("local degrees agree with the brute-force graph") {
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate(n);
    for (const auto& pi : all) {
      for (const auto& mu : all) {
        if (!reverse_leq(mu, pi)) continue;
        const auto expected = oracle::neighbors(word_of(mu), word_of(mu), word_of(pi)).size();
        CHECK(local_degree_test(mu, pi).degree == static_cast<int>(expected));
      }
    }
  }
}

TEST_CASE("full graph edges agree with the oracle") {
  for (const char* top : {"351624", "2,1,6,5,4,3", "465132"}) {
    const auto pi = w(top);
    const auto g = build_graph(FpfInvolution::longest(3), pi);
    std::set<std::pair<std::vector<int>, std::vector<int>>> ours;
    for (const auto& e : g.edges()) {
      ours.insert({word_of(g.vertices()[e.u]), word_of(g.vertices()[e.v])});
      // Every label really conjugates one endpoint to the other.
      for (const auto& t : e.labels) CHECK(conjugate(g.vertices()[e.u], t) == g.vertices()[e.v]);
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> reference;
    const auto bottom = oracle::w0(6);
    for (const auto& v : oracle::interval(bottom, word_of(pi))) {
      for (const auto& nb : oracle::neighbors(v, bottom, word_of(pi))) {
        if (v < nb) reference.insert({v, nb});
      }
    }
    CHECK(ours == reference);
  }
}

TEST_CASE("degree never falls below the rank gap") {
  for (int n = 1; n <= 3; ++n) {
    const Catalog c(n);
    for (std::uint32_t pi = 0; pi < c.size(); ++pi) {
      for (std::uint32_t mu = 0; mu < c.size(); ++mu) {
        if (!c.reverse_leq(mu, pi)) continue;
        const auto test = local_degree_test(c, mu, pi);
        CHECK(test.degree >= test.rank_gap);
      }
    }
  }
}

TEST_CASE("singular locus") {
  CHECK(rationally_singular_locus(w("2143")).irregular.empty());
  CHECK(rationally_singular_locus(w("4321")).irregular.empty());
  const auto locus = rationally_singular_locus(w("351624"));
  CHECK(std::find(locus.irregular.begin(), locus.irregular.end(), w("654321")) !=
        locus.irregular.end());
  // Oracle: irregular vertices of BG_{mu,pi} over all mu <= pi.
  std::vector<FpfInvolution> reference;
  const auto pi = word_of(w("351624"));
  for (const auto& mu : oracle::interval(oracle::w0(6), pi)) {
    const auto deg = oracle::neighbors(mu, mu, pi).size();
    const int gap = rank(w("351624")) - rank(FpfInvolution(mu));
    if (static_cast<int>(deg) > gap) reference.emplace_back(mu);
  }
  CHECK(locus.irregular == reference);
  CHECK(locus.maximal == std::vector<FpfInvolution>{w("564312")});
}

TEST_CASE("parallel graph construction is deterministic") {
  const auto top = w("21654387");
  const auto bottom = FpfInvolution::longest(4);
  const auto serial = build_graph(bottom, top, GraphOptions{kDefaultDegreeCap, 1});
  const auto threaded = build_graph(bottom, top, GraphOptions{kDefaultDegreeCap, 4});
  CHECK(serial.vertices() == threaded.vertices());
  REQUIRE(serial.edges().size() == threaded.edges().size());
  for (std::size_t i = 0; i < serial.edges().size(); ++i) {
    CHECK(serial.edges()[i].u == threaded.edges()[i].u);
    CHECK(serial.edges()[i].v == threaded.edges()[i].v);
    CHECK(serial.edges()[i].labels == threaded.edges()[i].labels);
  }
}

TEST_CASE("lemma check examples") {
  const auto same = lemma_check(w("351624"), w("351624"), Transposition(2, 5));
  CHECK(same.rank_identity);
  CHECK(same.propagation);
  CHECK(same.rank_gap == 0);

  // Shared arc (2,5): gap 4 = reduced gap 2 + 2 (1 - 0).
  const auto check = lemma_check(w("654321"), w("351624"), Transposition(2, 5));
  CHECK(check.reduced_mu == w("4321"));
  CHECK(check.reduced_pi == w("2143"));
  CHECK(check.rank_gap == 4);
  CHECK(check.reduced_rank_gap == 2);
  CHECK(check.nesting_mu == 1);
  CHECK(check.nesting_pi == 0);
  CHECK_FALSE(check.reduced_irregular);
  CHECK(check.irregular);
  CHECK(check.rank_identity);
  CHECK(check.propagation);

  CHECK_THROWS_AS(lemma_check(w("654321"), w("351624"), Transposition(1, 6)), DomainError);
  CHECK_THROWS_AS(lemma_check(w("351624"), w("654321"), Transposition(2, 5)), DomainError);
}
