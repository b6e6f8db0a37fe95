#include "icdual/formats.hpp"

#include <json.hpp>

#include "icdual/error.hpp"

namespace icdual::formats {
namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) throw FormatError(std::string("expected an object holding '") + name + "'");
  const auto it = obj.find(name);
  if (it == obj.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t count_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_unsigned()) throw FormatError(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_value(const json& v, const char* what) {
  if (!v.is_string()) throw FormatError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
  return v;
}

Rational rational_value(const json& v, const char* what) {
  try {
    return Rational::parse(string_value(v, what));
  } catch (const InvalidInput& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

json graph_json(const SideInfoDigraph& g) {
  json sets = json::array();
  for (const auto& s : g.side_info_sets()) sets.push_back(s);
  return json{{"n", g.n()}, {"side_info", std::move(sets)}};
}

SideInfoDigraph graph_from_json(const json& doc) {
  const auto n = count_field(doc, "n");
  const auto& sets = array_field(doc, "side_info");
  std::vector<std::vector<Vertex>> parsed;
  for (const auto& s : sets) {
    if (!s.is_array()) throw FormatError("side_info entries must be arrays");
    std::vector<Vertex> set;
    for (const auto& v : s) {
      if (!v.is_number_unsigned()) throw FormatError("side_info indices must be non-negative integers");
      set.push_back(v.get<Vertex>());
    }
    parsed.push_back(std::move(set));
  }
  return SideInfoDigraph::from_side_info(n, std::move(parsed));
}

const char* kind_name(CodeKindTag kind) {
  switch (kind) {
    case CodeKindTag::index: return "index";
    case CodeKindTag::glrc: return "glrc";
    case CodeKindTag::network: return "network";
  }
  return "index";
}

json code_json(const CodeDocument& doc) {
  json out{{"kind", kind_name(doc.kind)}, {"n", doc.n}, {"p", doc.p}, {"k", doc.rows.rows()},
           {"rows", doc.rows.to_strings()}};
  if (doc.kind == CodeKindTag::network) out["links"] = doc.links;
  return out;
}

CodeDocument code_from_json(const json& doc) {
  CodeDocument out;
  const auto kind = string_value(field(doc, "kind"), "kind");
  if (kind == "index") {
    out.kind = CodeKindTag::index;
  } else if (kind == "glrc") {
    out.kind = CodeKindTag::glrc;
  } else if (kind == "network") {
    out.kind = CodeKindTag::network;
  } else {
    throw FormatError("unknown code kind '" + kind + "'");
  }
  out.n = count_field(doc, "n");
  out.p = count_field(doc, "p");
  if (out.p == 0) throw FormatError("p must be positive");
  const auto k = count_field(doc, "k");
  const auto& rows = array_field(doc, "rows");
  if (rows.size() != k) throw FormatError("k = " + std::to_string(k) + " but " + std::to_string(rows.size()) + " rows given");
  out.rows = gf2::BitMatrix(0, out.n * out.p);
  for (const auto& r : rows) {
    const auto bits = string_value(r, "code row");
    if (bits.size() != out.n * out.p) {
      throw FormatError("code row has " + std::to_string(bits.size()) + " bits, expected n*p = " +
                        std::to_string(out.n * out.p));
    }
    try {
      out.rows.append_row(gf2::BitVector::from_string(bits));
    } catch (const InvalidInput& e) {
      throw FormatError(e.what());
    }
  }
  if (out.kind == CodeKindTag::network) {
    for (const auto& id : array_field(doc, "links")) out.links.push_back(string_value(id, "link id"));
    if (out.links.size() != out.n) throw FormatError("network code lists " + std::to_string(out.links.size()) +
                                                     " links but n = " + std::to_string(out.n));
  }
  return out;
}

json packing_json(const CyclePacking& packing) {
  json cycles = json::array();
  for (const auto& e : packing.entries) {
    cycles.push_back(json{{"vertices", e.cycle}, {"weight", e.weight.to_string()}});
  }
  return json{{"value", packing.value.to_string()}, {"cycles", std::move(cycles)}};
}

CyclePacking packing_from_json(const json& doc, std::size_t graph_n) {
  CyclePacking packing;
  packing.graph_n = graph_n;
  packing.value = rational_value(field(doc, "value"), "packing value");
  for (const auto& c : array_field(doc, "cycles")) {
    PackedCycle entry;
    for (const auto& v : array_field(c, "vertices")) {
      if (!v.is_number_unsigned()) throw FormatError("cycle vertices must be non-negative integers");
      entry.cycle.push_back(v.get<Vertex>());
    }
    entry.weight = rational_value(field(c, "weight"), "cycle weight");
    packing.entries.push_back(std::move(entry));
  }
  return packing;
}

json network_json(const Network& net) {
  json links = json::array();
  for (const auto& l : net.links()) {
    links.push_back(json{{"id", l.id}, {"tail", l.tail ? json(*l.tail) : json(nullptr)}, {"head", l.head}});
  }
  json sources = json::array();
  for (const auto& s : net.sessions()) {
    sources.push_back(json{{"node", s.node}, {"destination", s.destination}, {"source_links", s.source_links}});
  }
  return json{{"nodes", net.nodes()}, {"links", std::move(links)}, {"sources", std::move(sources)}};
}

}  // namespace

SideInfoDigraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string dump_graph(const SideInfoDigraph& g) { return graph_json(g).dump(2); }

CodeDocument parse_code(std::string_view text) { return code_from_json(parse_json(text)); }

std::string dump_code(const CodeDocument& doc) { return code_json(doc).dump(2); }

CodeDocument to_document(const IndexCode& code) {
  return {CodeKindTag::index, code.n(), code.p(), code.generator(), {}};
}

CodeDocument to_document(const Glrc& code) { return {CodeKindTag::glrc, code.n(), code.p(), code.generator(), {}}; }

CodeDocument to_document(const NetworkCode& code) {
  return {CodeKindTag::network, code.link_ids().size(), code.p(), code.generator(), code.link_ids()};
}

IndexCode to_index_code(const CodeDocument& doc) { return IndexCode(doc.n, doc.p, doc.rows); }

Glrc to_glrc(const CodeDocument& doc) { return Glrc(doc.n, doc.p, doc.rows); }

NetworkCode to_network_code(const CodeDocument& doc) {
  if (doc.kind != CodeKindTag::network) throw FormatError("expected a code of kind 'network'");
  return NetworkCode(doc.links, doc.p, doc.rows);
}

Network parse_network(std::string_view text) {
  const auto doc = parse_json(text);
  std::vector<std::string> nodes;
  for (const auto& n : array_field(doc, "nodes")) nodes.push_back(string_value(n, "node id"));
  std::vector<Link> links;
  for (const auto& l : array_field(doc, "links")) {
    Link link;
    link.id = string_value(field(l, "id"), "link id");
    const auto& tail = field(l, "tail");
    if (!tail.is_null()) link.tail = string_value(tail, "link tail");
    link.head = string_value(field(l, "head"), "link head");
    links.push_back(std::move(link));
  }
  std::vector<Session> sessions;
  for (const auto& s : array_field(doc, "sources")) {
    Session session;
    session.node = string_value(field(s, "node"), "source node");
    session.destination = string_value(field(s, "destination"), "destination");
    for (const auto& id : array_field(s, "source_links")) session.source_links.push_back(string_value(id, "source link"));
    sessions.push_back(std::move(session));
  }
  return Network(std::move(nodes), std::move(links), std::move(sessions));
}

std::string dump_network(const Network& net) { return network_json(net).dump(2); }

CyclePacking parse_packing(std::string_view text, std::size_t graph_n) {
  return packing_from_json(parse_json(text), graph_n);
}

std::string dump_packing(const CyclePacking& packing) { return packing_json(packing).dump(2); }

std::string dump_bound_report(const BoundReport& report) {
  json dual = json::array();
  for (const auto& price : report.packing.dual_cover) dual.push_back(price.to_string());
  json doc{
      {"n_links", report.n_links},
      {"r", report.r.to_string()},
      {"fvs", report.fvs ? json(report.fvs->size) : json(nullptr)},
      {"certified_upper", report.certified_upper ? json(report.certified_upper->to_string()) : json(nullptr)},
      {"formula_upper", report.formula_upper_rounded.to_string()},
      {"formula_upper_decimal", report.formula_upper},
      {"heuristic_note", kHeuristicNote},
      {"greedy_packing", report.greedy.value.to_string()},
      {"dual_certificate", {{"value", report.packing.dual_value.to_string()}, {"vertex_weights", std::move(dual)}}},
      {"packing_lower_bound_only", report.packing.lower_bound_only},
      {"fvs_vertices", report.fvs ? json(report.fvs->vertices) : json(nullptr)},
      {"fvs_skipped_reason", report.fvs_skipped_reason ? json(*report.fvs_skipped_reason) : json(nullptr)},
      {"artifacts",
       {{"recoverability_graph", graph_json(report.graph)},
        {"packing", packing_json(report.packing.packing)},
        {"index_code", code_json(to_document(report.index_code))},
        {"glrc", code_json(to_document(report.glrc))},
        {"network_code", code_json(to_document(report.network_code))}}},
  };
  return doc.dump(2);
}

BoundSummary parse_bound_report(std::string_view text) {
  const auto doc = parse_json(text);
  BoundSummary out;
  out.n_links = count_field(doc, "n_links");
  out.r = rational_value(field(doc, "r"), "r");
  if (const auto& fvs = field(doc, "fvs"); !fvs.is_null()) out.fvs = count_field(doc, "fvs");
  if (const auto& c = field(doc, "certified_upper"); !c.is_null()) out.certified_upper = rational_value(c, "certified_upper");
  out.formula_upper = rational_value(field(doc, "formula_upper"), "formula_upper");
  const auto& artifacts = field(doc, "artifacts");
  out.graph = graph_from_json(field(artifacts, "recoverability_graph"));
  out.packing = packing_from_json(field(artifacts, "packing"), out.graph.n());
  out.index_code = code_from_json(field(artifacts, "index_code"));
  out.glrc = code_from_json(field(artifacts, "glrc"));
  out.network_code = code_from_json(field(artifacts, "network_code"));
  return out;
}

}  // namespace icdual::formats
