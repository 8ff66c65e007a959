// Thin string-based bindings: involutions cross the boundary as one-line words.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "symporb/bruhat.hpp"
#include "symporb/geometry.hpp"
#include "symporb/graph.hpp"
#include "symporb/patterns.hpp"
#include "symporb/serialize.hpp"
#include "symporb/verify.hpp"

namespace py = pybind11;
using namespace symporb;

namespace {

FpfInvolution parse(const std::string& word) { return FpfInvolution::parse(word); }

std::vector<std::string> words(const std::vector<FpfInvolution>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

py::object witness(const std::optional<PatternWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->pattern.to_string(), w->indices);
}

FlagMatrix flag_from_rows(const std::vector<std::vector<std::string>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DomainError("ragged flag matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c]);
  }
  return FlagMatrix(std::move(m));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symplectic orbits on the flag variety, indexed by fixed-point-free involutions";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<SizeError>(m, "SizeError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error);

  m.def("enumerate", [](int n) { return words(enumerate(n)); }, py::arg("n"));
  m.def("fpf_count", &fpf_count, py::arg("n"));
  m.def("rank", [](const std::string& w) { return rank(parse(w)); });
  m.def("reverse_leq", [](const std::string& mu, const std::string& pi) {
    return reverse_leq(parse(mu), parse(pi));
  });
  m.def("conjugate", [](const std::string& w, int a, int d) {
    return conjugate(parse(w), Transposition{a, d}).to_string();
  });
  m.def("reverse_complement", [](const std::string& w) {
    return reverse_complement(parse(w)).to_string();
  });
  m.def("interval", [](const std::string& top) { return words(interval(parse(top)).members()); });

  m.def("rank_poly", [](const std::string& w) { return rank_poly(parse(w)).coeffs(); });
  m.def("is_palindromic", [](const std::vector<std::uint64_t>& c) {
    return is_palindromic(RankPolynomial(c));
  });
  m.def("is_rationally_smooth", [](const std::string& w) { return is_rationally_smooth(parse(w)); });
  m.def("factor_rank_poly", [](const std::string& w) { return factor_rank_poly(parse(w)); });

  m.def("bad_patterns", [] {
    const auto list = bad_patterns();
    return words({list.begin(), list.end()});
  });
  m.def("includes_pattern", [](const std::string& host, const std::string& pattern) {
    return witness(includes_pattern(parse(host), parse(pattern)));
  });
  m.def("avoids_all_bad", [](const std::string& w) { return avoids_all_bad(parse(w)); });
  m.def("bad_pattern_witness", [](const std::string& w) { return witness(bad_pattern_witness(parse(w))); });

  m.def("is_regular", [](const std::string& w) { return is_regular(parse(w)); });
  m.def("local_degree_test", [](const std::string& mu, const std::string& pi) {
    const auto t = local_degree_test(parse(mu), parse(pi));
    return py::make_tuple(t.degree, t.rank_gap, t.irregular);
  });
  m.def("singular_locus", [](const std::string& w) {
    const auto locus = rationally_singular_locus(parse(w));
    return py::make_tuple(words(locus.irregular), words(locus.maximal));
  });
  m.def("graph_json", [](const std::string& bottom, const std::string& top) {
    return to_json(build_graph(parse(bottom), parse(top))).dump();
  });

  m.def("classify_flag", [](const std::vector<std::vector<std::string>>& rows) {
    return classify_flag(flag_from_rows(rows)).to_string();
  }, py::arg("rows"), "Rows are rationals written as \"p\" or \"p/q\".");
  m.def("gram_basis_flag", [](const std::string& w) {
    const auto flag = gram_basis_flag(parse(w));
    const auto& b = flag.basis();
    std::vector<std::vector<std::string>> rows(b.rows(), std::vector<std::string>(b.cols()));
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) rows[r][c] = format_rational(b(r, c));
    }
    return rows;
  });

  m.def("verify_theorem", [](int max_degree, unsigned workers) {
    py::list out;
    for (const auto& s : verify_theorem(max_degree, workers)) {
      out.append(py::dict(py::arg("degree") = s.degree, py::arg("orbits") = s.orbits,
                          py::arg("smooth") = s.smooth,
                          py::arg("counterexamples") = s.counterexamples.size()));
    }
    return out;
  }, py::arg("max_degree"), py::arg("workers") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a CLI subcommand in process; returns (exit_code, stdout, stderr).");
}
