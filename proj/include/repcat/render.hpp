#pragma once

// Text and JSON forms of problems, solution sets and traces.
//
// JSON carries every integer as a decimal string so 64-bit values survive
// consumers that parse numbers as doubles.

#include "repcat/solver.hpp"

#include <json.hpp>

#include <string>

namespace repcat {

using Json = nlohmann::ordered_json;

/// "none", "all k ≥ 1", "k ≥ t", "k ∈ {…}" or "k ≡ c (mod M)[, k ≥ t]".
std::string to_text(const SolutionSet& s);

/// One line per step, labelled (I)..(XIV) or (CRT).
std::string to_text(const TraceLog& trace);

Json to_json(const CongruenceProblem& problem);
Json to_json(const SolutionSet& s);
Json to_json(const TraceLog& trace);

/// Inverse of to_json(SolutionSet). Throws DomainError on malformed input.
SolutionSet solution_from_json(const Json& j);

} // namespace repcat
