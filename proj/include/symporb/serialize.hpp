#pragma once

#include <json.hpp>

#include <string>

#include "symporb/bruhat.hpp"
#include "symporb/geometry.hpp"
#include "symporb/graph.hpp"
#include "symporb/patterns.hpp"

namespace symporb {

using Json = nlohmann::ordered_json;

// Integer array, lowest degree first.
Json to_json(const RankPolynomial& p);
// "1 + q + q^2"
std::string to_text(const RankPolynomial& p);

// {"pattern": "351624", "indices": [1, 2, ...]}
Json to_json(const PatternWitness& w);

Json to_json(const BruhatGraph& g);
// Vertices labelled by one-line word and rank, edges by transposition
// labels; graph attributes carry top, bottom, rank gap and regularity.
std::string to_dot(const BruhatGraph& g);

// Array of rows, each an array of "p/q" strings.
Json to_json(const FlagMatrix& flag);
// Accepts "p/q" or "p" strings and JSON integers. ParseError carries the
// 1-based row on shape or entry errors; singular matrices raise DomainError.
FlagMatrix flag_from_json(const Json& doc);

Json to_json(const RankGrid& grid);

}  // namespace symporb
