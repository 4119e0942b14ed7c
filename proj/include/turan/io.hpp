#pragma once

#include <turan/hypergraph.hpp>

#include <string>

namespace turan {

/// Parse the canonical JSON document form
///   {"n":<int>,"edges":[[v,...],...],"loops":<bool, optional>}
/// Malformed JSON or wrong shapes raise ParseError; semantic violations
/// (duplicate edges, out-of-range vertices, undeclared loops) raise the
/// corresponding graph errors.
RGraph parse_graph(const std::string& text);

/// Emit the canonical document: keys in the order n, edges, loops; edges in
/// canonical order; no whitespace; "loops" present only when the flag is
/// set. parse_graph(serialize_graph(g)) == g, and serialize o parse is the
/// identity on canonical documents.
std::string serialize_graph(const RGraph& g);

/// Digit-string shorthand for graphs on at most 9 vertices:
/// "2;3;124;135;145" lists one edge per token, one digit per vertex.
/// n defaults to the largest digit mentioned; pass n explicitly to keep
/// trailing isolated vertices.
RGraph graph_from_shorthand(const std::string& text, int n = 0, bool allows_loops = false);

} // namespace turan
