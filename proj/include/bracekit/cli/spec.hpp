#pragma once

// JSON wire format: group specifications in, brace and solution documents
// both ways.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"
#include "bracekit/ybe.hpp"

namespace bracekit::cli {

using json = nlohmann::json;

/// Parses a preset expression such as "heisenberg(3)", "semidirect(13,3,3)"
/// or "direct(alt(4),paper_7_3)".
FiniteGroup parse_preset(const std::string& expr);

/// Resolves any group specification: a preset string, {"preset"},
/// {"cayley", "labels"}, {"permutation": {"degree", "generators"}},
/// {"semidirect": {"normal", "acting", "action" | "exponent"}},
/// {"direct": [...]}, or a brace document (its multiplicative group).
/// The result always passes the full axiom sweep and the order cap.
FiniteGroup resolve(const json& spec, std::size_t max_order = kMaxGroupOrder);

json group_to_json(const FiniteGroup& g);
json brace_to_json(const Brace& b);
/// Reads a brace document without verifying it.
Brace brace_from_json(const json& doc, std::size_t max_order = kMaxGroupOrder);
json solution_to_json(const SetSolution& s);
SetSolution solution_from_json(const json& doc,
                               std::size_t max_order = kMaxGroupOrder);

/// "brace", "solution" or "group".
std::string document_type(const json& doc);

/// Lowercase hex SHA-256 of the order and the row-major table.
std::string fingerprint(std::size_t n, std::span<const Elem> table);

}  // namespace bracekit::cli
