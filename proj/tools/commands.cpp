#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "symporb/bruhat.hpp"
#include "symporb/geometry.hpp"
#include "symporb/graph.hpp"
#include "symporb/involution.hpp"
#include "symporb/patterns.hpp"
#include "symporb/serialize.hpp"
#include "symporb/verify.hpp"

namespace symporb::cli {

namespace {

Json with_schema(const std::string& command, Json body) {
  Json out{{"schema", "symporb/" + command + "/1"}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string exponents_text(const std::vector<int>& exponents) {
  std::string out = "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + "]";
}

std::string witness_text(const PatternWitness& w) {
  std::string out = w.pattern.to_string() + " at {";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w.indices[i]);
  }
  return out + "}";
}

class Session {
 public:
  Session(const RunConfig& config, int cap, std::ostream& out, std::ostream& err)
      : config_(config), cap_(cap), out_(out), err_(err) {}

  // Interval work refuses degrees above the cap.
  void require_cap(const FpfInvolution& pi) const {
    if (pi.size() > cap_) {
      throw SizeError("2n = " + std::to_string(pi.size()) + " exceeds the degree cap " +
                      std::to_string(cap_) + "; pass --max-degree-override to raise it");
    }
  }

  int enumerate_cmd(int degree) {
    if (degree < 2 || degree % 2 != 0) throw DomainError("--degree must be even and >= 2");
    if (degree > cap_) {
      throw SizeError("2n = " + std::to_string(degree) + " exceeds the degree cap " +
                      std::to_string(cap_));
    }
    const auto all = enumerate(degree / 2, cap_);
    if (json()) {
      Json words = Json::array();
      for (const auto& pi : all) words.push_back(pi.to_string());
      emit(with_schema("enumerate",
                       {{"degree", degree}, {"count", all.size()}, {"involutions", words}}));
    } else {
      for (const auto& pi : all) out_ << pi.to_string() << '\n';
    }
    return kOk;
  }

  int rank_cmd(const FpfInvolution& pi) {
    if (json()) {
      emit(with_schema("rank", {{"involution", pi.to_string()}, {"rank", rank(pi)}}));
    } else {
      out_ << rank(pi) << '\n';
    }
    return kOk;
  }

  int order_cmd(const FpfInvolution& mu, const FpfInvolution& pi) {
    const bool below = reverse_leq(mu, pi);
    if (json()) {
      emit(with_schema("order", {{"mu", mu.to_string()}, {"pi", pi.to_string()}, {"leq", below}}));
    } else {
      out_ << (below ? "true" : "false") << '\n';
    }
    return kOk;
  }

  int interval_cmd(const FpfInvolution& pi) {
    require_cap(pi);
    const auto range = interval(pi, cap_);
    if (json()) {
      Json members = Json::array();
      for (std::size_t i = 0; i < range.size(); ++i) {
        members.push_back({{"word", range.members()[i].to_string()}, {"rank", range.ranks()[i]}});
      }
      emit(with_schema("interval", {{"top", pi.to_string()}, {"size", range.size()},
                                    {"members", members}}));
    } else {
      for (std::size_t i = 0; i < range.size(); ++i) {
        out_ << range.members()[i].to_string() << ' ' << range.ranks()[i] << '\n';
      }
    }
    return kOk;
  }

  int poly_cmd(const FpfInvolution& pi) {
    require_cap(pi);
    const auto p = rank_poly(pi, cap_);
    if (json()) {
      emit(with_schema("poly", {{"involution", pi.to_string()}, {"coeffs", to_json(p)},
                                {"palindromic", is_palindromic(p)}}));
    } else {
      out_ << to_text(p) << '\n'
           << (is_palindromic(p) ? "palindromic" : "not palindromic") << '\n';
    }
    return kOk;
  }

  int factor_cmd(const FpfInvolution& pi) {
    try {
      const auto exponents = factor_rank_poly(pi);
      const auto product = RankPolynomial::bracket_product(exponents);
      if (json()) {
        emit(with_schema("factor", {{"involution", pi.to_string()}, {"exponents", exponents},
                                    {"product", to_json(product)}}));
      } else {
        out_ << exponents_text(exponents) << '\n' << to_text(product) << '\n';
      }
      return kOk;
    } catch (const NotAvoidingError& e) {
      if (json()) {
        emit(with_schema("factor", {{"involution", pi.to_string()},
                                    {"refused", true},
                                    {"witness", to_json(e.witness())}}));
      }
      err_ << "error: factorization refused: " << e.what() << '\n';
      return kInputError;
    }
  }

  int graph_cmd(const FpfInvolution& top, const std::optional<FpfInvolution>& bottom) {
    require_cap(top);
    const auto g = build_graph(bottom.value_or(FpfInvolution::longest(top.n())), top,
                               GraphOptions{cap_, config_.workers});
    switch (config_.output) {
      case Format::kDot:
        out_ << to_dot(g);
        break;
      case Format::kJson:
        emit(with_schema("graph", to_json(g)));
        break;
      case Format::kText: {
        const Json summary = to_json(g);
        out_ << "vertices " << g.vertices().size() << "\nedges " << g.edges().size()
             << "\nrank_gap " << g.rank_gap() << "\nregular "
             << (summary["regular"].get<bool>() ? "true" : "false") << '\n';
        const std::size_t b = g.position(g.bottom());
        out_ << "bottom_degree " << g.incident(b).size() << '\n';
        break;
      }
    }
    return kOk;
  }

  int avoid_cmd(const FpfInvolution& pi, const std::optional<FpfInvolution>& pattern) {
    const auto witness = pattern ? includes_pattern(pi, *pattern) : bad_pattern_witness(pi);
    if (json()) {
      Json body{{"involution", pi.to_string()}};
      if (pattern) body["pattern"] = pattern->to_string();
      body["avoids"] = !witness.has_value();
      body["witness"] = witness ? to_json(*witness) : Json(nullptr);
      emit(with_schema("avoid", body));
    } else if (witness) {
      out_ << "contains " << witness_text(*witness) << '\n';
    } else {
      out_ << (pattern ? "avoids " + pattern->to_string() : std::string("avoids all bad patterns"))
           << '\n';
    }
    return kOk;
  }

  int analyze_cmd(const FpfInvolution& pi) {
    require_cap(pi);
    const int r = rank(pi);
    const auto p = rank_poly(pi, cap_);
    const bool smooth = is_palindromic(p);
    const auto witness = bad_pattern_witness(pi);
    std::optional<std::vector<int>> exponents;
    if (!witness) exponents = factor_rank_poly(pi);
    const auto locus = rationally_singular_locus(pi, GraphOptions{cap_, config_.workers});

    if (config_.output == Format::kDot) {
      out_ << to_dot(build_graph(FpfInvolution::longest(pi.n()), pi,
                                 GraphOptions{cap_, config_.workers}));
      return kOk;
    }
    if (json()) {
      Json body{{"involution", pi.to_string()},
                {"rank", r},
                {"smooth", smooth},
                {"poly", to_json(p)},
                {"witness", witness ? to_json(*witness) : Json(nullptr)}};
      body["factors"] = exponents ? Json(*exponents) : Json(nullptr);
      Json irregular = Json::array();
      Json maximal = Json::array();
      for (const auto& mu : locus.irregular) irregular.push_back(mu.to_string());
      for (const auto& mu : locus.maximal) maximal.push_back(mu.to_string());
      body["singular_locus"] = {{"irregular", irregular}, {"maximal", maximal}};
      emit(with_schema("analyze", body));
      return kOk;
    }
    out_ << "involution " << pi.to_string() << '\n'
         << "rank " << r << '\n'
         << "verdict " << (smooth ? "rationally smooth" : "rationally singular") << '\n'
         << "P " << to_text(p) << '\n';
    if (witness) {
      out_ << "witness " << witness_text(*witness) << '\n'
           << "factors refused (contains a bad pattern)\n";
    } else {
      out_ << "factors " << exponents_text(*exponents) << '\n';
    }
    out_ << "singular_locus";
    for (const auto& mu : locus.irregular) out_ << ' ' << mu.to_string();
    out_ << "\nsingular_locus_maximal";
    for (const auto& mu : locus.maximal) out_ << ' ' << mu.to_string();
    out_ << '\n';
    return kOk;
  }

  int classify_cmd(const std::string& path, bool with_grid) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open flag file '" + path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("flag file is not valid JSON: ") + e.what(), e.byte);
    }
    const auto flag = flag_from_json(doc);
    const auto pi = classify_flag(flag);
    const int r = rank(pi);
    std::string where = "intermediate orbit";
    if (r == 0) where = "closed orbit";
    if (r == pi.n() * pi.n() - pi.n()) where = "open orbit";
    std::optional<bool> smooth;
    if (pi.size() <= cap_) smooth = is_rationally_smooth(pi, cap_);
    if (json()) {
      Json body{{"involution", pi.to_string()}, {"rank", r}, {"orbit", where}};
      body["smooth"] = smooth ? Json(*smooth) : Json(nullptr);
      if (with_grid) body["rank_grid"] = to_json(rank_grid(flag));
      emit(with_schema("classify", body));
    } else {
      out_ << pi.to_string() << '\n' << "rank " << r << " (" << where << ")\n";
      if (smooth) out_ << (*smooth ? "rationally smooth" : "rationally singular") << '\n';
      if (with_grid) {
        const auto grid = rank_grid(flag);
        for (int i = 1; i <= grid.degree(); ++i) {
          for (int j = 1; j <= grid.degree(); ++j) out_ << (j > 1 ? " " : "") << grid(i, j);
          out_ << '\n';
        }
      }
    }
    return kOk;
  }

  int verify_theorem_cmd(int max_degree) {
    if (max_degree < 2 || max_degree % 2 != 0) throw DomainError("--degree must be even and >= 2");
    if (max_degree > cap_) {
      throw SizeError("2n = " + std::to_string(max_degree) + " exceeds the degree cap " +
                      std::to_string(cap_) + "; pass --max-degree-override to raise it");
    }
    const auto summaries = verify_theorem(max_degree, config_.workers);
    bool holds = true;
    Json degrees = Json::array();
    for (const auto& s : summaries) {
      holds = holds && s.counterexamples.empty();
      Json bad = Json::array();
      for (const auto& c : s.counterexamples) {
        bad.push_back({{"involution", c.pi.to_string()},
                       {"avoids", c.avoids},
                       {"palindromic", c.palindromic},
                       {"regular", c.regular}});
      }
      degrees.push_back({{"degree", s.degree},
                         {"orbits", s.orbits},
                         {"smooth", s.smooth},
                         {"counterexamples", bad}});
      if (!json()) {
        out_ << "2n=" << s.degree << " orbits=" << s.orbits << " smooth=" << s.smooth
             << " counterexamples=" << s.counterexamples.size() << '\n';
        for (const auto& c : s.counterexamples) {
          out_ << "  counterexample " << c.pi.to_string() << " avoids=" << c.avoids
               << " palindromic=" << c.palindromic << " regular=" << c.regular << '\n';
        }
      }
    }
    if (json()) {
      emit(with_schema("verify-theorem", {{"max_degree", max_degree}, {"holds", holds},
                                          {"degrees", degrees}}));
    } else {
      out_ << (holds ? "equivalence holds" : "equivalence FAILS") << '\n';
    }
    return holds ? kOk : kMismatch;
  }

  int verify_table_cmd() {
    const auto rows = verify_table(config_.workers);
    std::size_t diffs = 0;
    Json table = Json::array();
    for (const auto& row : rows) {
      if (!row.matches()) ++diffs;
      table.push_back({{"pattern", row.pattern.to_string()},
                       {"published_rank", row.published_rank},
                       {"rank", row.rank},
                       {"published_edges", row.published_edges},
                       {"edges", row.edges},
                       {"missing", row.missing},
                       {"extra", row.extra},
                       {"match", row.matches()}});
      if (!json()) {
        out_ << (row.matches() ? "ok   " : "DIFF ") << row.pattern.to_string() << " rank "
             << row.rank;
        if (!row.rank_matches()) out_ << " (published " << row.published_rank << ")";
        out_ << " edges";
        for (const auto& e : row.edges) out_ << ' ' << e;
        for (const auto& e : row.missing) out_ << " -" << e;
        for (const auto& e : row.extra) out_ << " +" << e;
        out_ << '\n';
      }
    }
    if (json()) {
      emit(with_schema("verify-table", {{"rows", table}, {"diffs", diffs}}));
    } else {
      out_ << rows.size() - diffs << "/" << rows.size() << " rows match\n";
    }
    return diffs == 0 ? kOk : kMismatch;
  }

  int singular_locus_cmd(const FpfInvolution& pi) {
    require_cap(pi);
    const auto locus = rationally_singular_locus(pi, GraphOptions{cap_, config_.workers});
    if (json()) {
      Json irregular = Json::array();
      Json maximal = Json::array();
      for (const auto& mu : locus.irregular) irregular.push_back(mu.to_string());
      for (const auto& mu : locus.maximal) maximal.push_back(mu.to_string());
      emit(with_schema("singular-locus", {{"involution", pi.to_string()},
                                          {"irregular", irregular},
                                          {"maximal", maximal}}));
    } else {
      out_ << "irregular";
      for (const auto& mu : locus.irregular) out_ << ' ' << mu.to_string();
      out_ << "\nmaximal";
      for (const auto& mu : locus.maximal) out_ << ' ' << mu.to_string();
      out_ << '\n';
    }
    return kOk;
  }

  int export_bad_patterns_cmd() {
    Json list = Json::array();
    for (const auto& b : bad_patterns()) {
      const auto image = reverse_complement(b);
      list.push_back({{"pattern", b.to_string()},
                      {"length", b.size()},
                      {"rank", rank(b)},
                      {"reverse_complement", image.to_string()}});
      if (!json()) {
        out_ << b.to_string() << ' ' << (image == b ? "fixed" : "<-> " + image.to_string())
             << '\n';
      }
    }
    if (json()) emit(with_schema("bad-patterns", {{"patterns", list}}));
    return kOk;
  }

 private:
  bool json() const { return config_.output == Format::kJson; }
  void emit(const Json& doc) { out_ << doc.dump(2) << '\n'; }

  RunConfig config_;
  int cap_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of Sp(2n) on the flag variety of SL(2n), indexed by fixed-point-free "
               "involutions."};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<int> degree;
  int override_cap = 0;
  std::string output = "text";
  app.add_option("--degree", degree, "2n for enumerate; largest 2n for verify-theorem");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized work");
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-degree-override", override_cap,
                 "Raise the degree cap (default 10) up to 14");

  std::string first;
  std::string second;
  std::string pattern_text;
  std::string bottom_text;
  std::string path;
  bool with_grid = false;
  std::function<int(Session&)> action;

  auto involution_cmd = [&](const char* name, const char* help,
                            std::function<int(Session&, const FpfInvolution&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("involution", first, "One-line notation")->required();
    sub->callback([&, body] {
      action = [&, body](Session& s) { return body(s, FpfInvolution::parse(first)); };
    });
    return sub;
  };

  auto* enumerate_sub = app.add_subcommand("enumerate", "List I_2n in lexicographic order");
  enumerate_sub->fallthrough();
  enumerate_sub->callback([&] {
    action = [&](Session& s) {
      if (!degree) throw DomainError("enumerate needs --degree");
      return s.enumerate_cmd(*degree);
    };
  });

  involution_cmd("rank", "Rank of an involution",
                 [](Session& s, const FpfInvolution& pi) { return s.rank_cmd(pi); });

  auto* order_sub = app.add_subcommand("order", "Is mu below pi in reverse Bruhat order?");
  order_sub->fallthrough();
  order_sub->add_option("mu", first)->required();
  order_sub->add_option("pi", second)->required();
  order_sub->callback([&] {
    action = [&](Session& s) {
      return s.order_cmd(FpfInvolution::parse(first), FpfInvolution::parse(second));
    };
  });

  involution_cmd("interval", "Members of the lower interval with ranks",
                 [](Session& s, const FpfInvolution& pi) { return s.interval_cmd(pi); });
  involution_cmd("poly", "Rank generating polynomial",
                 [](Session& s, const FpfInvolution& pi) { return s.poly_cmd(pi); });
  involution_cmd("factor", "Bracket factorization for pattern avoiders",
                 [](Session& s, const FpfInvolution& pi) { return s.factor_cmd(pi); });

  auto* graph_sub = involution_cmd(
      "graph", "Bruhat graph of [bottom, top]", [&](Session& s, const FpfInvolution& top) {
        std::optional<FpfInvolution> bottom;
        if (!bottom_text.empty()) bottom = FpfInvolution::parse(bottom_text);
        return s.graph_cmd(top, bottom);
      });
  graph_sub->add_option("--bottom", bottom_text, "Bottom vertex (default w0)");

  auto* avoid_sub = involution_cmd(
      "avoid", "Bad-pattern witness, or inclusion of --pattern",
      [&](Session& s, const FpfInvolution& pi) {
        std::optional<FpfInvolution> pattern;
        if (!pattern_text.empty()) pattern = FpfInvolution::parse(pattern_text);
        return s.avoid_cmd(pi, pattern);
      });
  avoid_sub->add_option("--pattern", pattern_text, "Pattern to look for");

  involution_cmd("analyze", "Rank, verdict, witness, factorization and singular locus",
                 [](Session& s, const FpfInvolution& pi) { return s.analyze_cmd(pi); });
  involution_cmd("singular-locus", "Irregular vertices below pi",
                 [](Session& s, const FpfInvolution& pi) { return s.singular_locus_cmd(pi); });

  auto* classify_sub = app.add_subcommand("classify", "Orbit of a flag given as a JSON matrix");
  classify_sub->fallthrough();
  classify_sub->add_option("flag_file", path)->required();
  classify_sub->add_flag("--grid", with_grid, "Also print the rank grid");
  classify_sub->callback([&] {
    action = [&](Session& s) { return s.classify_cmd(path, with_grid); };
  });

  auto* theorem_sub = app.add_subcommand("verify-theorem",
                                         "Exhaustive avoidance/palindromicity/regularity check");
  theorem_sub->fallthrough();
  theorem_sub->callback([&] {
    action = [&](Session& s) { return s.verify_theorem_cmd(degree.value_or(config.max_degree)); };
  });
  app.add_subcommand("verify-table", "Recompute the bad-pattern edge table")
      ->fallthrough()
      ->callback([&] { action = [](Session& s) { return s.verify_table_cmd(); }; });
  app.add_subcommand("export-bad-patterns", "Print the bad-pattern list")
      ->fallthrough()
      ->callback([&] { action = [](Session& s) { return s.export_bad_patterns_cmd(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  config.output = output == "json" ? Format::kJson : output == "dot" ? Format::kDot : Format::kText;
  int cap = config.max_degree;
  if (override_cap != 0) {
    if (override_cap > kHardMaxDegree || override_cap < 2 || override_cap % 2 != 0) {
      err << "error: --max-degree-override must be even and between 2 and " << kHardMaxDegree
          << '\n';
      return kResourceCap;
    }
    if (override_cap > config.max_degree) {
      err << "warning: degree cap raised to " << override_cap
          << "; interval work grows quadratically in |I_2n|\n";
    }
    cap = override_cap;
  }

  Session session(config, cap, out, err);
  try {
    return action(session);
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.position() != 0) err << " (position " << e.position() << ")";
    err << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"symporb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace symporb::cli
