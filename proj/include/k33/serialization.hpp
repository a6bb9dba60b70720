#pragma once

#include <string>

#include <json.hpp>

#include "k33/immersion.hpp"
#include "k33/multigraph.hpp"
#include "k33/structure.hpp"

namespace k33 {

// JSON documents exchanged by the CLI. Edge copies are [u, v, copy] triples
// and graphs are {"n": .., "edges": [[u, v, mult], ...]}.
// The *_from_json functions throw FormatError; the offset is the byte
// position of a syntax error, or 0 for a structural problem.

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const ImmersionEmbedding& emb);
ImmersionEmbedding embedding_from_json(const nlohmann::json& j);

/// Nested {kind, params, children, graph} objects starting at the root.
nlohmann::json tree_to_json(const DecompositionTree& tree);
DecompositionTree tree_from_json(const nlohmann::json& j);

/// Parses text, mapping syntax errors to FormatError.
nlohmann::json parse_json(const std::string& text);

}  // namespace k33
