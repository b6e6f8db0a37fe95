#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "icdual/error.hpp"
#include "icdual/formats.hpp"
#include "icdual/glrc.hpp"
#include "icdual/index_code.hpp"
#include "icdual/multiunicast.hpp"
#include "icdual/packing.hpp"
#include "icdual/random_codes.hpp"

namespace icdual::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << content << '\n';
}

std::string column_name(std::size_t column, std::size_t p) {
  return "x[" + std::to_string(column / p) + "," + std::to_string(column % p) + "]";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out.empty() ? "0" : out;
}

std::string cycle_text(const Cycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
  return out + ")";
}

struct Options {
  std::string json_path;
  std::uint64_t seed = 1;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t max_fvs_n = kDefaultFvsNodeLimit;
};

CommandResult cmd_bound(const std::string& network_path, bool no_fvs, const std::string& emit_dir, const Options& opt) {
  const auto net = formats::parse_network(read_file(network_path));
  const auto verdict = validate_network(net);
  if (!verdict.valid) {
    std::string text = "network is not a valid multiple-unicast instance:\n";
    for (const auto& p : verdict.problems) text += "  " + p + "\n";
    return {1, text, json{{"valid", false}, {"problems", verdict.problems}}.dump(2)};
  }

  BoundOptions options;
  options.caps.max_cycles = opt.max_cycles;
  options.exact_fvs = !no_fvs;
  options.fvs_node_limit = opt.max_fvs_n;
  const auto report = compute_bound(net, options);

  std::ostringstream text;
  text << "links                 " << report.n_links << "\n";
  text << "cycles enumerated     " << report.packing.cycles_considered
       << (report.packing.lower_bound_only ? " (capped: r is a lower bound)" : "") << "\n";
  text << "greedy packing        " << report.greedy.value << "\n";
  text << "r (fractional)        " << report.r << "\n";
  text << "dual certificate      " << report.packing.dual_value << "\n";
  if (report.fvs) {
    std::vector<std::string> names;
    for (auto v : report.fvs->vertices) names.push_back(net.links()[v].id);
    text << "exact FVS             " << report.fvs->size << " {" << join(names, ", ") << "}\n";
    text << "certified_upper       " << *report.certified_upper << "\n";
  } else {
    text << "exact FVS             skipped: " << report.fvs_skipped_reason.value_or("") << "\n";
    text << "certified_upper       unavailable\n";
  }
  text << "formula_upper         " << std::fixed << std::setprecision(6) << report.formula_upper
       << " (heuristic)\n";
  text << "achievable code       index k=" << report.index_code.k() << " p=" << report.index_code.p()
       << ", GLRC k=" << report.glrc.k() << ", rate " << report.glrc.normalized_rate() << "\n";
  text << "note: " << kHeuristicNote << "\n";

  if (!emit_dir.empty()) {
    fs::create_directories(emit_dir);
    const fs::path dir(emit_dir);
    write_file(dir / "recoverability_graph.json", formats::dump_graph(report.graph));
    write_file(dir / "packing.json", formats::dump_packing(report.packing.packing));
    write_file(dir / "index_code.json", formats::dump_code(formats::to_document(report.index_code)));
    write_file(dir / "glrc.json", formats::dump_code(formats::to_document(report.glrc)));
    write_file(dir / "network_code.json", formats::dump_code(formats::to_document(report.network_code)));
    text << "artifacts written to " << emit_dir << "\n";
  }
  return {0, text.str(), formats::dump_bound_report(report)};
}

CommandResult cmd_transform(const std::string& network_path) {
  const auto net = formats::parse_network(read_file(network_path));
  const auto verdict = validate_network(net);
  const auto g = build_recoverability_graph(net);
  std::ostringstream text;
  if (!verdict.valid) text << "warning: network is not valid (" << verdict.problems.front() << ")\n";
  for (std::size_t e = 0; e < net.link_count(); ++e) {
    std::vector<std::string> names;
    for (auto a : g.side_info(e)) names.push_back(net.links()[a].id);
    text << e << " " << net.links()[e].id << " <- {" << (names.empty() ? "" : join(names, ", ")) << "}\n";
  }
  return {0, text.str(), formats::dump_graph(g)};
}

CommandResult cmd_pack(const std::string& graph_path, bool greedy, const Options& opt) {
  const auto g = formats::parse_graph(read_file(graph_path));
  std::ostringstream text;
  if (greedy) {
    const auto packing = greedy_integral_packing(g);
    text << "greedy integral packing value " << packing.value << "\n";
    for (const auto& e : packing.entries) text << "  " << cycle_text(e.cycle) << " weight " << e.weight << "\n";
    return {0, text.str(), formats::dump_packing(packing)};
  }
  PackingCaps caps;
  caps.max_cycles = opt.max_cycles;
  const auto result = fractional_cycle_packing(g, caps);
  text << "fractional packing value " << result.packing.value
       << (result.lower_bound_only ? " (cycle cap hit: lower bound)" : "") << "\n";
  for (const auto& e : result.packing.entries) text << "  " << cycle_text(e.cycle) << " weight " << e.weight << "\n";
  text << "dual certificate value " << result.dual_value << "\n  vertex weights:";
  for (const auto& w : result.dual_cover) text << " " << w;
  text << "\n";
  return {0, text.str(), formats::dump_packing(result.packing)};
}

CommandResult cmd_fvs(const std::string& graph_path, const Options& opt) {
  const auto g = formats::parse_graph(read_file(graph_path));
  const auto fvs = exact_fvs(g, opt.max_fvs_n);
  std::ostringstream text;
  text << "minimum feedback vertex set size " << fvs.size << "\n  vertices:";
  for (auto v : fvs.vertices) text << " " << v;
  text << "\n";
  return {0, text.str(), json{{"size", fvs.size}, {"vertices", fvs.vertices}, {"exact", fvs.exact}}.dump(2)};
}

CommandResult cmd_verify_index(const std::string& code_path, const std::string& graph_path) {
  const auto code = formats::to_index_code(formats::parse_code(read_file(code_path)));
  const auto g = formats::parse_graph(read_file(graph_path));
  const auto verdict = validate_index_code(code, g);
  std::ostringstream text;
  json doc{{"kind", "index"}, {"valid", verdict.valid}};
  if (!verdict.valid) {
    const auto [user, slot] = *verdict.first_failure;
    text << "INVALID: user " << user << " cannot decode subsymbol " << slot << "\n";
    doc["failure"] = {{"user", user}, {"slot", slot}};
    return {1, text.str(), doc.dump(2)};
  }
  text << "VALID index code: n=" << code.n() << " p=" << code.p() << " k=" << code.k()
       << ", broadcast rate " << code.broadcast_rate() << ", complementary rate " << code.complementary_rate() << "\n";
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) {
    std::vector<std::string> terms;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < code.k(); ++r) {
      if (w.transmissions.get(r)) {
        terms.push_back("y" + std::to_string(r));
        rows.push_back(r);
      }
    }
    for (auto c : w.side_columns) terms.push_back(column_name(c, code.p()));
    text << "  user " << w.user << ": " << column_name(subsymbol_column(w.user, w.slot, code.p()), code.p()) << " = "
         << join(terms, " + ") << "\n";
    witnesses.push_back({{"user", w.user}, {"slot", w.slot}, {"transmissions", rows}, {"side_columns", w.side_columns}});
  }
  doc["witnesses"] = std::move(witnesses);
  return {0, text.str(), doc.dump(2)};
}

CommandResult cmd_verify_glrc(const std::string& code_path, const std::string& graph_path) {
  const auto code = formats::to_glrc(formats::parse_code(read_file(code_path)));
  const auto g = formats::parse_graph(read_file(graph_path));
  const auto verdict = validate_glrc(code, g);
  std::ostringstream text;
  json doc{{"kind", "glrc"}, {"valid", verdict.valid}};
  if (!verdict.valid) {
    const auto [symbol, slot] = *verdict.first_failure;
    text << "INVALID: supersymbol " << symbol << " subsymbol " << slot << " is not recoverable from S_" << symbol
         << "\n";
    doc["failure"] = {{"symbol", symbol}, {"slot", slot}};
    return {1, text.str(), doc.dump(2)};
  }
  text << "VALID GLRC: n=" << code.n() << " p=" << code.p() << " k=" << code.k() << ", normalized rate "
       << code.normalized_rate() << "\n";
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) {
    std::vector<std::string> terms;
    for (auto c : w.source_columns) terms.push_back(column_name(c, code.p()));
    text << "  " << column_name(subsymbol_column(w.symbol, w.slot, code.p()), code.p()) << " = " << join(terms, " + ")
         << "\n";
    witnesses.push_back({{"symbol", w.symbol}, {"slot", w.slot}, {"source_columns", w.source_columns}});
  }
  doc["witnesses"] = std::move(witnesses);
  return {0, text.str(), doc.dump(2)};
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::encoding: return "encoding";
    case Condition::decoding: return "decoding";
    case Condition::independence: return "independence";
  }
  return "encoding";
}

CommandResult cmd_verify_network(const std::string& code_path, const std::string& network_path, bool correlated) {
  const auto code = formats::to_network_code(formats::parse_code(read_file(code_path)));
  const auto net = formats::parse_network(read_file(network_path));
  const auto kind = correlated ? CodeKind::correlated : CodeKind::multiple_unicast;
  const auto verdict = validate_network_code(net, code, kind);
  const char* kind_label = correlated ? "correlated unicast" : "multiple-unicast";
  std::ostringstream text;
  json doc{{"kind", correlated ? "correlated" : "multiple-unicast"},
           {"valid", verdict.valid},
           {"source_entropies", verdict.source_entropies}};
  if (!verdict.valid) {
    const auto& f = *verdict.failure;
    text << "INVALID " << kind_label << " code: " << condition_name(f.condition) << " condition fails";
    if (f.sessions) {
      text << " between sessions " << f.sessions->first << " and " << f.sessions->second << "\n";
      doc["failure"] = {{"condition", condition_name(f.condition)},
                        {"sessions", {f.sessions->first, f.sessions->second}}};
    } else {
      text << " at link " << net.links()[f.link].id << " slot " << f.slot << "\n";
      doc["failure"] = {{"condition", condition_name(f.condition)}, {"link", net.links()[f.link].id}, {"slot", f.slot}};
    }
    return {1, text.str(), doc.dump(2)};
  }
  text << "VALID " << kind_label << " code: k=" << code.k() << " p=" << code.p() << ", rate " << code.rate() << "\n";
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) {
    std::vector<std::string> terms;
    for (auto c : w.source_columns) terms.push_back("z[" + net.links()[c / code.p()].id + "," + std::to_string(c % code.p()) + "]");
    text << "  " << condition_name(w.condition) << " z[" << net.links()[w.link].id << "," << w.slot
         << "] = " << join(terms, " + ") << "\n";
    witnesses.push_back({{"link", net.links()[w.link].id},
                         {"slot", w.slot},
                         {"condition", condition_name(w.condition)},
                         {"source_columns", w.source_columns}});
  }
  doc["witnesses"] = std::move(witnesses);
  return {0, text.str(), doc.dump(2)};
}

CommandResult cmd_dualize(const std::string& code_path) {
  const auto doc = formats::parse_code(read_file(code_path));
  formats::CodeDocument dual;
  switch (doc.kind) {
    case formats::CodeKindTag::index:
      dual = formats::to_document(dual_glrc(formats::to_index_code(doc)));
      break;
    case formats::CodeKindTag::glrc:
      dual = formats::to_document(dual_index_code(formats::to_glrc(doc)));
      break;
    case formats::CodeKindTag::network:
      dual = formats::to_document(dual_index_code(to_glrc(formats::to_network_code(doc))));
      break;
  }
  const auto text = formats::dump_code(dual);
  return {0, text + "\n", text};
}

CommandResult cmd_minrank(const std::string& graph_path, std::size_t limit) {
  const auto g = formats::parse_graph(read_file(graph_path));
  const auto value = minrank_bruteforce(g, limit);
  return {0, std::to_string(value) + "\n", json{{"minrank", value}, {"n", g.n()}}.dump(2)};
}

// Cross-checks every exhaustive oracle against the polynomial pipeline on small
// digraphs: all digraphs for n ≤ 3, `samples` seeded random ones otherwise.
CommandResult cmd_oracle_scan(std::size_t n, std::size_t samples, const Options& opt) {
  if (n > 5) throw SizeLimitExceeded("oracle-scan supports n <= 5");
  std::vector<SideInfoDigraph> graphs;
  if (n <= 3) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0));
    for (std::uint64_t mask = 0; mask < total; ++mask) graphs.push_back(random::digraph_from_mask(n, mask));
  } else {
    random::Engine rng(opt.seed);
    for (std::size_t s = 0; s < samples; ++s) graphs.push_back(random::digraph(n, 0.5, rng));
  }

  std::size_t failures = 0;
  std::ostringstream text;
  auto fail = [&](std::size_t index, const std::string& what) {
    if (failures++ < 20) text << "graph " << index << ": " << what << "\n";
  };
  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    const auto& g = graphs[idx];
    const auto minrank = minrank_bruteforce(g);
    const auto frac = fractional_cycle_packing(g);
    const auto greedy = greedy_integral_packing(g);
    const auto fvs = exact_fvs(g);
    const Rational savings(static_cast<std::int64_t>(g.n() - minrank));
    if (n <= 4) {
      if (optimal_scalar_dim_subspace_search(g) != minrank) fail(idx, "minrank disagrees with subspace search");
      if (max_scalar_glrc_dim(g) + minrank != g.n()) fail(idx, "max GLRC dim + minrank != n");
    }
    if (!(greedy.value <= frac.packing.value)) fail(idx, "greedy exceeds fractional packing");
    if (frac.packing.value != frac.dual_value) fail(idx, "LP primal and dual values differ");
    if (!(frac.packing.value <= Rational(static_cast<std::int64_t>(fvs.size)))) fail(idx, "packing exceeds FVS");
    if (!(greedy.value <= savings && savings <= Rational(static_cast<std::int64_t>(fvs.size)))) {
      fail(idx, "scalar savings outside [greedy, FVS]");
    }
    const auto code = construct_from_packing(frac.packing, g);
    if (!validate_index_code(code, g).valid) fail(idx, "constructed index code invalid");
    if (!validate_glrc(dual_glrc(code), g).valid) fail(idx, "dual GLRC invalid");
  }
  text << "oracle-scan n=" << n << ": " << graphs.size() << " graphs, " << failures << " inconsistencies\n";
  return {failures == 0 ? 0 : 1, text.str(),
          json{{"n", n}, {"graphs", graphs.size()}, {"inconsistencies", failures}, {"seed", opt.seed}}.dump(2)};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Index coding / GLRC duality toolkit and multiple-unicast bound calculator", "icdual"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Options opt;
  std::string path_a, path_b, emit_dir;
  bool no_fvs = false, exact_fvs_flag = false, greedy = false, fractional = false;
  bool multiple_unicast = false, correlated = false;
  std::size_t minrank_limit = kDefaultMinrankFreeLimit;
  std::size_t scan_n = 3, scan_samples = 50;

  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", opt.json_path, "Write the machine-readable document here"); };

  auto* bound = app.add_subcommand("bound", "Bound the linear sum rate of a multiple-unicast network");
  bound->add_option("network", path_a, "Network document")->required();
  bound->add_flag("--exact-fvs", exact_fvs_flag, "Compute the exact feedback vertex set (default)");
  bound->add_flag("--no-exact-fvs", no_fvs, "Skip the exact feedback vertex set");
  bound->add_option("--emit-code", emit_dir, "Directory for the achievable code artifacts");
  bound->add_option("--max-cycles", opt.max_cycles, "Cycle enumeration cap");
  bound->add_option("--max-fvs-n", opt.max_fvs_n, "Largest graph for exact FVS");
  add_json(bound);

  auto* transform = app.add_subcommand("transform", "Emit the recoverability graph of a network");
  transform->add_option("network", path_a, "Network document")->required();
  add_json(transform);

  auto* pack = app.add_subcommand("pack", "Cycle packing of a digraph");
  pack->add_option("graph", path_a, "Graph document")->required();
  auto* frac_flag = pack->add_flag("--fractional", fractional, "Exact fractional packing (default)");
  pack->add_flag("--greedy", greedy, "Greedy integral packing")->excludes(frac_flag);
  pack->add_option("--max-cycles", opt.max_cycles, "Cycle enumeration cap");
  add_json(pack);

  auto* fvs = app.add_subcommand("fvs", "Exact minimum feedback vertex set");
  fvs->add_option("graph", path_a, "Graph document")->required();
  fvs->add_option("--max-fvs-n", opt.max_fvs_n, "Largest graph accepted");
  add_json(fvs);

  auto* verify = app.add_subcommand("verify", "Validate a code and print its linear decoders");
  verify->require_subcommand(1);
  auto* v_index = verify->add_subcommand("index-code", "Index code against a side-information graph");
  v_index->add_option("code", path_a)->required();
  v_index->add_option("graph", path_b)->required();
  add_json(v_index);
  auto* v_glrc = verify->add_subcommand("glrc", "GLRC against a recoverability graph");
  v_glrc->add_option("code", path_a)->required();
  v_glrc->add_option("graph", path_b)->required();
  add_json(v_glrc);
  auto* v_net = verify->add_subcommand("network-code", "Network code against a multiple-unicast network");
  v_net->add_option("code", path_a)->required();
  v_net->add_option("network", path_b)->required();
  auto* mu_flag = v_net->add_flag("--multiple-unicast", multiple_unicast, "Require source independence (default)");
  v_net->add_flag("--correlated", correlated, "Drop the source independence condition")->excludes(mu_flag);
  add_json(v_net);

  auto* dualize_cmd = app.add_subcommand("dualize", "Dual code: index code <-> GLRC");
  dualize_cmd->add_option("code", path_a, "Code document")->required();
  add_json(dualize_cmd);

  auto* minrank = app.add_subcommand("minrank", "Exhaustive binary minrank of a side-information graph");
  minrank->add_option("graph", path_a, "Graph document")->required();
  minrank->add_option("--limit", minrank_limit, "Maximum number of free matrix entries");
  add_json(minrank);

  auto* scan = app.add_subcommand("oracle-scan", "Exhaustive small-graph consistency sweep");
  scan->add_option("--n", scan_n, "Vertex count (<= 5)")->required();
  scan->add_option("--samples", scan_samples, "Random graphs when n >= 4");
  scan->add_option("--seed", opt.seed, "Seed for random graphs");
  scan->add_option("--max-cycles", opt.max_cycles, "Cycle enumeration cap");
  add_json(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n\n" + app.help(), ""};
  }

  CommandResult result;
  try {
    if (bound->parsed()) {
      result = cmd_bound(path_a, no_fvs, emit_dir, opt);
    } else if (transform->parsed()) {
      result = cmd_transform(path_a);
    } else if (pack->parsed()) {
      result = cmd_pack(path_a, greedy, opt);
    } else if (fvs->parsed()) {
      result = cmd_fvs(path_a, opt);
    } else if (v_index->parsed()) {
      result = cmd_verify_index(path_a, path_b);
    } else if (v_glrc->parsed()) {
      result = cmd_verify_glrc(path_a, path_b);
    } else if (v_net->parsed()) {
      result = cmd_verify_network(path_a, path_b, correlated);
    } else if (dualize_cmd->parsed()) {
      result = cmd_dualize(path_a);
    } else if (minrank->parsed()) {
      result = cmd_minrank(path_a, minrank_limit);
    } else if (scan->parsed()) {
      result = cmd_oracle_scan(scan_n, scan_samples, opt);
    }
  } catch (const FormatError& e) {
    return {2, std::string("malformed input: ") + e.what() + "\n", ""};
  } catch (const SizeLimitExceeded& e) {
    return {2, std::string("size limit: ") + e.what() + "\n", ""};
  } catch (const std::invalid_argument& e) {
    return {2, std::string("invalid input: ") + e.what() + "\n", ""};
  }

  if (!opt.json_path.empty() && !result.document.empty()) {
    try {
      write_file(opt.json_path, result.document);
    } catch (const FormatError& e) {
      return {2, std::string(e.what()) + "\n", result.document};
    }
  }
  return result;
}

}  // namespace icdual::cli
