#pragma once

// JSON documents exchanged by the command-line tool.
//
//   graph    { "n": 3, "side_info": [[1], [2], [0]] }
//   code     { "kind": "index" | "glrc" | "network", "n": 3, "p": 1, "k": 1,
//              "rows": ["111"], "links": [...] }      (links: network kind only)
//   network  { "nodes": [...], "links": [{"id", "tail" | null, "head"}],
//              "sources": [{"node", "destination", "source_links": [...]}] }
//   packing  { "value": "3/2", "cycles": [{"vertices": [...], "weight": "1/2"}] }
//
// Rationals are always "num/den" strings. Parse failures throw FormatError.

#include <string>
#include <string_view>
#include <vector>

#include "icdual/digraph.hpp"
#include "icdual/gf2.hpp"
#include "icdual/glrc.hpp"
#include "icdual/index_code.hpp"
#include "icdual/multiunicast.hpp"
#include "icdual/packing.hpp"

namespace icdual::formats {

[[nodiscard]] SideInfoDigraph parse_graph(std::string_view text);
[[nodiscard]] std::string dump_graph(const SideInfoDigraph& g);

enum class CodeKindTag { index, glrc, network };

struct CodeDocument {
  CodeKindTag kind = CodeKindTag::index;
  std::size_t n = 0;
  std::size_t p = 1;
  gf2::BitMatrix rows;
  std::vector<std::string> links;  // network kind only
};

/// Checks that "k" matches the row count and every row has n·p bits.
[[nodiscard]] CodeDocument parse_code(std::string_view text);
[[nodiscard]] std::string dump_code(const CodeDocument& doc);

[[nodiscard]] CodeDocument to_document(const IndexCode& code);
[[nodiscard]] CodeDocument to_document(const Glrc& code);
[[nodiscard]] CodeDocument to_document(const NetworkCode& code);
[[nodiscard]] IndexCode to_index_code(const CodeDocument& doc);
[[nodiscard]] Glrc to_glrc(const CodeDocument& doc);
[[nodiscard]] NetworkCode to_network_code(const CodeDocument& doc);

[[nodiscard]] Network parse_network(std::string_view text);
[[nodiscard]] std::string dump_network(const Network& net);

/// The packing document does not record the graph order; it is supplied here.
[[nodiscard]] CyclePacking parse_packing(std::string_view text, std::size_t graph_n);
[[nodiscard]] std::string dump_packing(const CyclePacking& packing);

/// Machine-readable bound report; artifacts are embedded as code, graph and
/// packing documents.
[[nodiscard]] std::string dump_bound_report(const BoundReport& report);

struct BoundSummary {
  std::size_t n_links = 0;
  Rational r;
  std::optional<std::size_t> fvs;
  std::optional<Rational> certified_upper;
  Rational formula_upper;
  CodeDocument index_code;
  CodeDocument glrc;
  CodeDocument network_code;
  SideInfoDigraph graph;
  CyclePacking packing;
};

[[nodiscard]] BoundSummary parse_bound_report(std::string_view text);

}  // namespace icdual::formats
