#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icdual/digraph.hpp"
#include "icdual/gf2.hpp"
#include "icdual/glrc.hpp"
#include "icdual/index_code.hpp"
#include "icdual/packing.hpp"
#include "icdual/rational.hpp"

namespace icdual {

/// Unit-capacity link. A link without a tail is a source link feeding `head`.
struct Link {
  std::string id;
  std::optional<std::string> tail;
  std::string head;
};

/// One unicast session: source node, destination node and its source links.
struct Session {
  std::string node;
  std::string destination;
  std::vector<std::string> source_links;
};

/// Multiple-unicast instance. Construction resolves names and rejects dangling
/// references or duplicate ids; the semantic checks live in validate_network.
class Network {
 public:
  Network(std::vector<std::string> nodes, std::vector<Link> links, std::vector<Session> sessions);

  [[nodiscard]] const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<Link>& links() const noexcept { return links_; }
  [[nodiscard]] const std::vector<Session>& sessions() const noexcept { return sessions_; }
  [[nodiscard]] std::size_t link_count() const noexcept { return links_.size(); }

  [[nodiscard]] std::size_t node_index(const std::string& name) const;
  [[nodiscard]] std::size_t link_index(const std::string& id) const;
  [[nodiscard]] std::optional<std::size_t> tail_index(std::size_t link) const { return tails_[link]; }
  [[nodiscard]] std::size_t head_index(std::size_t link) const { return heads_[link]; }
  /// Links whose head is `node`, in link order.
  [[nodiscard]] std::vector<std::size_t> links_into(std::size_t node) const;
  /// Session owning a source link, if any.
  [[nodiscard]] std::optional<std::size_t> session_of(std::size_t link) const { return owner_[link]; }
  [[nodiscard]] std::vector<std::size_t> source_link_indices(std::size_t session) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Link> links_;
  std::vector<Session> sessions_;
  std::vector<std::optional<std::size_t>> tails_;
  std::vector<std::size_t> heads_;
  std::vector<std::optional<std::size_t>> owner_;
};

struct NetworkVerdict {
  bool valid = false;
  std::vector<std::string> problems;
  /// mincut(s_i, d_i) over regular links, per session.
  std::vector<std::size_t> mincuts;
};

/// Acyclic regular links, well-formed source links, distinct endpoints and
/// |source links| = mincut for every session.
[[nodiscard]] NetworkVerdict validate_network(const Network& net);

/// Vertex e (the e-th link) recovers from the links entering tail(e), or from
/// the links entering d_i when e is a source link of session i.
[[nodiscard]] SideInfoDigraph build_recoverability_graph(const Network& net);

/// Global coding vectors of a vector-linear code on a network: gmat is k × (m·p)
/// with column (e, j) = coding vector of subsymbol j on link e.
class NetworkCode {
 public:
  /// Throws InvalidInput on shape or rank problems.
  NetworkCode(std::vector<std::string> link_ids, std::size_t p, gf2::BitMatrix generator);

  [[nodiscard]] const std::vector<std::string>& link_ids() const noexcept { return link_ids_; }
  [[nodiscard]] std::size_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
  [[nodiscard]] const gf2::BitMatrix& generator() const noexcept { return generator_; }
  /// k / p: sum rate for multiple-unicast codes, joint entropy rate otherwise.
  [[nodiscard]] Rational rate() const;

 private:
  std::vector<std::string> link_ids_;
  std::size_t p_;
  gf2::BitMatrix generator_;
};

enum class CodeKind { multiple_unicast, correlated };

enum class Condition { encoding, decoding, independence };

struct NetworkCodeFailure {
  Condition condition = Condition::encoding;
  std::size_t link = 0;  // first link of the first session for independence failures
  std::size_t slot = 0;
  std::optional<std::pair<std::size_t, std::size_t>> sessions;  // independence only
};

/// Local rule for one subsymbol: z[link, slot] is the XOR of the listed code
/// columns. For regular links these are columns of links entering the tail
/// (the encoder); for source links, of links entering the destination (the decoder).
struct LinkWitness {
  std::size_t link = 0;
  std::size_t slot = 0;
  Condition condition = Condition::encoding;
  std::vector<std::size_t> source_columns;
};

struct NetworkCodeVerdict {
  bool valid = false;
  std::vector<LinkWitness> witnesses;
  std::optional<NetworkCodeFailure> failure;
  /// dim(span of session i's source-link columns); informational only.
  std::vector<std::size_t> source_entropies;
};

/// Checks links in declared order (encoding for regular links, decoding for
/// source links), then pairwise independence when kind is multiple_unicast.
/// Throws DimensionMismatch when the code's link list differs from the network's.
[[nodiscard]] NetworkCodeVerdict validate_network_code(const Network& net, const NetworkCode& code, CodeKind kind);

/// Same generator read over the link-to-vertex map of build_recoverability_graph.
[[nodiscard]] Glrc to_glrc(const NetworkCode& code);
[[nodiscard]] NetworkCode from_glrc(const Network& net, const Glrc& code);

struct BoundOptions {
  PackingCaps caps;
  bool exact_fvs = true;
  std::size_t fvs_node_limit = kDefaultFvsNodeLimit;
};

struct BoundReport {
  std::size_t n_links = 0;
  SideInfoDigraph graph;
  FractionalPacking packing;
  CyclePacking greedy;
  /// Packing value r; rate of the achievable GLRC and correlated code.
  Rational r;
  std::optional<FvsResult> fvs;
  /// Size of the exact FVS when computed: a rigorous upper bound on R^MU.
  std::optional<Rational> certified_upper;
  /// r · max(1, log2 L) · max(1, log2 log2 L) with L the link count. Carries an
  /// unspecified asymptotic constant, so it is reported as heuristic only.
  double formula_upper = 0.0;
  /// formula_upper rounded to the nearest multiple of 1e-6.
  Rational formula_upper_rounded;
  std::optional<std::string> fvs_skipped_reason;
  IndexCode index_code;
  Glrc glrc;
  NetworkCode network_code;
};

inline constexpr const char* kHeuristicNote =
    "formula_upper scales r by log2(L)*log2(log2(L)) with both factors clamped to >= 1 and constant 1; "
    "the true constant is unspecified, so it is heuristic. certified_upper (exact feedback vertex set) is rigorous.";

[[nodiscard]] double formula_upper_bound(const Rational& r, std::size_t n_links);

/// Recoverability graph -> fractional packing r -> achievable index code ->
/// dual GLRC and correlated code at rate r; exact FVS gives the certified bound.
/// Throws InvalidInput when the network is invalid.
[[nodiscard]] BoundReport compute_bound(const Network& net, const BoundOptions& options = {});

}  // namespace icdual
