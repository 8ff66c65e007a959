#include "symporb/serialize.hpp"

#include <sstream>

namespace symporb {

Json to_json(const RankPolynomial& p) { return Json(p.coeffs()); }

std::string to_text(const RankPolynomial& p) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = c[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(c[i]);
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Json to_json(const PatternWitness& w) {
  return Json{{"pattern", w.pattern.to_string()}, {"indices", w.indices}};
}

namespace {

bool graph_regular(const BruhatGraph& g) {
  const int gap = g.rank_gap();
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    if (static_cast<int>(g.incident(i).size()) != gap) return false;
  }
  return true;
}

std::string joined_labels(const Edge& e) {
  std::string out;
  for (const auto& t : e.labels) {
    if (!out.empty()) out += ' ';
    out += t.label();
  }
  return out;
}

}  // namespace

Json to_json(const BruhatGraph& g) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    vertices.push_back({{"word", g.vertices()[i].to_string()},
                        {"rank", g.ranks()[i]},
                        {"degree", g.incident(i).size()}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json labels = Json::array();
    for (const auto& t : e.labels) labels.push_back(t.label());
    edges.push_back({{"u", e.u}, {"v", e.v}, {"labels", labels}});
  }
  return Json{{"bottom", g.bottom().to_string()},
              {"top", g.top().to_string()},
              {"rank_gap", g.rank_gap()},
              {"regular", graph_regular(g)},
              {"vertices", vertices},
              {"edges", edges}};
}

std::string to_dot(const BruhatGraph& g) {
  std::ostringstream out;
  out << "graph bruhat {\n";
  out << "  graph [top=\"" << g.top().to_string() << "\", bottom=\"" << g.bottom().to_string()
      << "\", rank_gap=" << g.rank_gap() << ", regular=" << (graph_regular(g) ? "true" : "false")
      << "];\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    out << "  v" << i << " [label=\"" << g.vertices()[i].to_string() << "\\nr=" << g.ranks()[i]
        << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << joined_labels(e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const FlagMatrix& flag) {
  const auto& b = flag.basis();
  Json rows = Json::array();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(format_rational(b(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FlagMatrix flag_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) throw ParseError("flag must be a nonempty array of rows");
  const std::size_t size = doc.size();
  RationalMatrix basis(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const auto& row = doc[r];
    if (!row.is_array() || row.size() != size) {
      throw ParseError("row " + std::to_string(r + 1) + " must have " + std::to_string(size) +
                           " entries",
                       r + 1);
    }
    for (std::size_t c = 0; c < size; ++c) {
      const auto& cell = row[c];
      try {
        if (cell.is_number_integer()) {
          basis(r, c) = Rational(cell.get<long>());
        } else if (cell.is_string()) {
          basis(r, c) = parse_rational(cell.get<std::string>());
        } else {
          throw ParseError("entry must be a string or integer");
        }
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " at row " + std::to_string(r + 1) +
                             ", column " + std::to_string(c + 1),
                         r + 1);
      }
    }
  }
  return FlagMatrix(std::move(basis));
}

Json to_json(const RankGrid& grid) {
  Json rows = Json::array();
  for (int i = 1; i <= grid.degree(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= grid.degree(); ++j) row.push_back(grid(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace symporb
