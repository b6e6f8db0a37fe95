#include "icdual/multiunicast.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "icdual/error.hpp"

namespace icdual {

Network::Network(std::vector<std::string> nodes, std::vector<Link> links, std::vector<Session> sessions)
    : nodes_(std::move(nodes)), links_(std::move(links)), sessions_(std::move(sessions)) {
  std::set<std::string> seen_nodes(nodes_.begin(), nodes_.end());
  if (seen_nodes.size() != nodes_.size()) throw InvalidInput("duplicate node id");
  std::set<std::string> seen_links;
  for (const auto& l : links_) {
    if (!seen_links.insert(l.id).second) throw InvalidInput("duplicate link id '" + l.id + "'");
  }

  tails_.reserve(links_.size());
  heads_.reserve(links_.size());
  for (const auto& l : links_) {
    tails_.push_back(l.tail ? std::optional<std::size_t>(node_index(*l.tail)) : std::nullopt);
    heads_.push_back(node_index(l.head));
  }

  owner_.assign(links_.size(), std::nullopt);
  for (std::size_t i = 0; i < sessions_.size(); ++i) {
    static_cast<void>(node_index(sessions_[i].node));
    static_cast<void>(node_index(sessions_[i].destination));
    for (const auto& id : sessions_[i].source_links) {
      const auto e = link_index(id);
      if (owner_[e]) throw InvalidInput("link '" + id + "' is a source link of more than one session");
      owner_[e] = i;
    }
  }
}

std::size_t Network::node_index(const std::string& name) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end()) throw InvalidInput("unknown node '" + name + "'");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Network::link_index(const std::string& id) const {
  const auto it = std::find_if(links_.begin(), links_.end(), [&](const Link& l) { return l.id == id; });
  if (it == links_.end()) throw InvalidInput("unknown link '" + id + "'");
  return static_cast<std::size_t>(it - links_.begin());
}

std::vector<std::size_t> Network::links_into(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < links_.size(); ++e) {
    if (heads_[e] == node) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> Network::source_link_indices(std::size_t session) const {
  std::vector<std::size_t> out;
  for (const auto& id : sessions_[session].source_links) out.push_back(link_index(id));
  return out;
}

NetworkVerdict validate_network(const Network& net) {
  NetworkVerdict verdict;
  FlowGraph regular(net.nodes().size());
  for (std::size_t e = 0; e < net.link_count(); ++e) {
    const auto& link = net.links()[e];
    if (const auto tail = net.tail_index(e)) {
      regular.add_arc(*tail, net.head_index(e));
      if (net.session_of(e)) verdict.problems.push_back("source link '" + link.id + "' has a tail node");
    } else if (!net.session_of(e)) {
      verdict.problems.push_back("tail-less link '" + link.id + "' belongs to no session");
    }
  }
  if (!is_acyclic(regular)) verdict.problems.push_back("regular links contain a directed cycle");

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < net.sessions().size(); ++i) {
    const auto& session = net.sessions()[i];
    const auto s = net.node_index(session.node);
    const auto d = net.node_index(session.destination);
    if (s == d) {
      verdict.problems.push_back("session " + std::to_string(i) + ": source equals destination");
      verdict.mincuts.push_back(0);
      continue;
    }
    if (!pairs.emplace(s, d).second) {
      verdict.problems.push_back("session " + std::to_string(i) + ": repeated (source, destination) pair");
    }
    for (auto e : net.source_link_indices(i)) {
      if (net.head_index(e) != s) {
        verdict.problems.push_back("source link '" + net.links()[e].id + "' does not enter node '" + session.node + "'");
      }
    }
    const auto cut = max_flow(regular, s, d);
    verdict.mincuts.push_back(cut);
    if (session.source_links.size() != cut) {
      verdict.problems.push_back("session " + std::to_string(i) + ": " + std::to_string(session.source_links.size()) +
                                 " source links but mincut(" + session.node + ", " + session.destination +
                                 ") = " + std::to_string(cut));
    }
  }
  verdict.valid = verdict.problems.empty();
  return verdict;
}

namespace {

// Links whose columns may be combined to produce link e.
std::vector<std::size_t> recovery_links(const Network& net, std::size_t e) {
  if (const auto session = net.session_of(e)) {
    return net.links_into(net.node_index(net.sessions()[*session].destination));
  }
  if (const auto tail = net.tail_index(e)) return net.links_into(*tail);
  return {};
}

}  // namespace

SideInfoDigraph build_recoverability_graph(const Network& net) {
  std::vector<std::vector<Vertex>> sets(net.link_count());
  for (std::size_t e = 0; e < net.link_count(); ++e) sets[e] = recovery_links(net, e);
  return SideInfoDigraph::from_side_info(net.link_count(), std::move(sets));
}

NetworkCode::NetworkCode(std::vector<std::string> link_ids, std::size_t p, gf2::BitMatrix generator)
    : link_ids_(std::move(link_ids)), p_(p), generator_(std::move(generator)) {
  if (p_ == 0) throw InvalidInput("subsymbols per supersymbol must be positive");
  if (generator_.cols() != link_ids_.size() * p_) {
    throw InvalidInput("network code generator has " + std::to_string(generator_.cols()) +
                       " columns, expected links*p = " + std::to_string(link_ids_.size() * p_));
  }
  if (gf2::rank(generator_) != generator_.rows()) throw InvalidInput("network code generator rows are linearly dependent");
}

Rational NetworkCode::rate() const {
  return Rational(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(p_));
}

NetworkCodeVerdict validate_network_code(const Network& net, const NetworkCode& code, CodeKind kind) {
  std::vector<std::string> expected;
  for (const auto& l : net.links()) expected.push_back(l.id);
  if (expected != code.link_ids()) throw DimensionMismatch("network code link order differs from the network's");

  const std::size_t p = code.p();
  const auto& gen = code.generator();
  NetworkCodeVerdict verdict;

  for (std::size_t i = 0; i < net.sessions().size(); ++i) {
    gf2::BitMatrix cols(0, code.k());
    for (auto e : net.source_link_indices(i)) {
      for (std::size_t b = 0; b < p; ++b) cols.append_row(gen.column(subsymbol_column(e, b, p)));
    }
    verdict.source_entropies.push_back(gf2::rank(cols));
  }

  for (std::size_t e = 0; e < net.link_count(); ++e) {
    const auto session = net.session_of(e);
    const auto condition = session ? Condition::decoding : Condition::encoding;
    // Encoders read what arrives at the link's tail; decoders what arrives at the destination.
    std::vector<std::size_t> readable;
    if (session) {
      readable = net.links_into(net.node_index(net.sessions()[*session].destination));
    } else if (const auto tail = net.tail_index(e)) {
      readable = net.links_into(*tail);
    }
    std::vector<std::size_t> allowed;
    std::vector<gf2::BitVector> columns;
    for (auto a : readable) {
      for (std::size_t b = 0; b < p; ++b) {
        allowed.push_back(subsymbol_column(a, b, p));
        columns.push_back(gen.column(allowed.back()));
      }
    }
    for (std::size_t slot = 0; slot < p; ++slot) {
      const auto coeffs = gf2::express(columns, gen.column(subsymbol_column(e, slot, p)));
      if (!coeffs) {
        verdict.failure = NetworkCodeFailure{condition, e, slot, std::nullopt};
        verdict.witnesses.clear();
        return verdict;
      }
      LinkWitness w{e, slot, condition, {}};
      for (std::size_t t = 0; t < allowed.size(); ++t) {
        if (coeffs->get(t)) w.source_columns.push_back(allowed[t]);
      }
      verdict.witnesses.push_back(std::move(w));
    }
  }

  if (kind == CodeKind::multiple_unicast) {
    std::vector<gf2::Subspace> spans;
    for (std::size_t i = 0; i < net.sessions().size(); ++i) {
      gf2::BitMatrix cols(0, code.k());
      for (auto e : net.source_link_indices(i)) {
        for (std::size_t b = 0; b < p; ++b) cols.append_row(gen.column(subsymbol_column(e, b, p)));
      }
      spans.push_back(gf2::Subspace::span_of(cols));
    }
    for (std::size_t i = 0; i < spans.size(); ++i) {
      for (std::size_t j = i + 1; j < spans.size(); ++j) {
        if (gf2::intersection_dim(spans[i], spans[j]) != 0) {
          const auto links = net.source_link_indices(i);
          verdict.failure = NetworkCodeFailure{Condition::independence, links.empty() ? 0 : links.front(), 0,
                                               std::pair{i, j}};
          verdict.witnesses.clear();
          return verdict;
        }
      }
    }
  }
  verdict.valid = true;
  return verdict;
}

Glrc to_glrc(const NetworkCode& code) { return Glrc(code.link_ids().size(), code.p(), code.generator()); }

NetworkCode from_glrc(const Network& net, const Glrc& code) {
  if (code.n() != net.link_count()) throw DimensionMismatch("GLRC length differs from the network's link count");
  std::vector<std::string> ids;
  for (const auto& l : net.links()) ids.push_back(l.id);
  return NetworkCode(std::move(ids), code.p(), code.generator());
}

double formula_upper_bound(const Rational& r, std::size_t n_links) {
  double log_factor = 1.0;
  double loglog_factor = 1.0;
  if (n_links > 1) {
    const double l = std::log2(static_cast<double>(n_links));
    log_factor = std::max(1.0, l);
    loglog_factor = std::max(1.0, std::log2(l));
  }
  return r.to_double() * log_factor * loglog_factor;
}

BoundReport compute_bound(const Network& net, const BoundOptions& options) {
  const auto verdict = validate_network(net);
  if (!verdict.valid) throw InvalidInput("invalid network: " + verdict.problems.front());

  auto graph = build_recoverability_graph(net);
  auto packing = fractional_cycle_packing(graph, options.caps);
  auto greedy = greedy_integral_packing(graph);
  const Rational r = packing.packing.value;

  auto index_code = construct_from_packing(packing.packing, graph);
  if (!validate_index_code(index_code, graph).valid) {
    throw std::logic_error("constructed index code failed validation");
  }
  auto glrc = dual_glrc(index_code);
  if (!validate_glrc(glrc, graph).valid || glrc.normalized_rate() != r) {
    throw std::logic_error("dual GLRC failed validation or missed rate r");
  }
  auto network_code = from_glrc(net, glrc);

  std::optional<FvsResult> fvs;
  std::optional<Rational> certified;
  std::optional<std::string> skipped;
  if (!options.exact_fvs) {
    skipped = "exact FVS disabled";
  } else {
    try {
      fvs = exact_fvs(graph, options.fvs_node_limit);
      certified = Rational(static_cast<std::int64_t>(fvs->size));
    } catch (const SizeLimitExceeded& e) {
      skipped = e.what();
    }
  }

  const double formula = formula_upper_bound(r, net.link_count());
  const Rational rounded(static_cast<std::int64_t>(std::llround(formula * 1e6)), 1000000);

  return BoundReport{
      .n_links = net.link_count(),
      .graph = std::move(graph),
      .packing = std::move(packing),
      .greedy = std::move(greedy),
      .r = r,
      .fvs = std::move(fvs),
      .certified_upper = certified,
      .formula_upper = formula,
      .formula_upper_rounded = rounded,
      .fvs_skipped_reason = std::move(skipped),
      .index_code = std::move(index_code),
      .glrc = std::move(glrc),
      .network_code = std::move(network_code),
  };
}

}  // namespace icdual
