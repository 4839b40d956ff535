#ifndef QMIS_GRAPH_HPP
#define QMIS_GRAPH_HPP

#include <bitset>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmis/errors.hpp"

namespace qmis {

// Capacity of the fixed-width vertex bitsets. Reduction instances at desk
// scale stay well below this; larger graphs are rejected explicitly.
inline constexpr int kMaxVertices = 256;
using VertexBits = std::bitset<kMaxVertices>;

enum class Side { P, N, Unassigned };

struct GraphVertex {
  std::string label;
  Side side = Side::Unassigned;
};

// Simple undirected graph with labeled vertices and an optional P/N
// bipartition. Immutable once built (construction via addVertex/addEdge,
// then read-only use).
class Graph {
 public:
  // Returns the new vertex id (contiguous, 0-based). Labels must be unique.
  int addVertex(std::string label, Side side = Side::Unassigned);

  // Self-loops are rejected; duplicate edges are ignored (union semantics).
  void addEdge(int u, int v);

  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  int edgeCount() const { return edgeCount_; }
  const GraphVertex& vertex(int id) const;
  bool adjacent(int u, int v) const;
  const VertexBits& neighbors(int id) const;
  // Edge list with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool allSidesAssigned() const;
  // Throws PreconditionError unless all sides are assigned and every edge
  // crosses the (P, N) bipartition.
  void checkBipartite() const;

  VertexBits allMask() const;
  std::optional<int> findLabel(const std::string& label) const;

 private:
  void checkId(int id) const;

  std::vector<GraphVertex> vertices_;
  std::vector<VertexBits> adj_;
  int edgeCount_ = 0;
};

// A set of vertex ids over some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(VertexBits bits) : bits_(std::move(bits)) {}
  static VertexSet ofIds(const std::vector<int>& ids);

  void add(int id) { bits_.set(id); }
  void remove(int id) { bits_.reset(id); }
  bool contains(int id) const { return bits_.test(id); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  const VertexBits& bits() const { return bits_; }
  std::vector<int> ids() const;  // ascending

  // Lexicographic order on the ascending id sequence.
  static bool lexLess(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  VertexBits bits_;
};

// True iff no edge joins two members of `s`.
bool isIndependent(const Graph& g, const VertexSet& s);

// True iff `s` is independent and every outside vertex has a neighbor in it.
bool isMaximalIndependent(const Graph& g, const VertexSet& s);

// All maximal independent sets, each once, in canonical order (sets as
// ascending id sequences, list sorted lexicographically). Pivoting
// Bron-Kerbosch on the complement. Throws ResourceLimitError past
// kMaxEnumeratedSets sets.
inline constexpr long kMaxEnumeratedSets = 1 << 22;
std::vector<VertexSet> enumerateMIS(const Graph& g);

struct TransversalCheck {
  bool ok = false;
  // When !ok: a maximal independent set disjoint from the candidate.
  std::optional<VertexSet> counterexample;
};

// Does `x` meet every maximal independent set of g? Searches for a
// counterexample directly among the maximal independent sets of the
// subgraph induced on V - x.
TransversalCheck isTransversal(const Graph& g, const VertexSet& x);

struct MinTransversalResult {
  bool feasible = false;  // false: optimum exceeds the given limit
  int size = 0;
  VertexSet set;  // lexicographically least among minimum solutions
};

// Exact minimum transversal: enumerate maximal independent sets, then
// branch-and-bound minimum hitting set (unit forcing, most-frequent
// element branching, lexicographic tie-break). The zero-vertex graph is
// infeasible: its unique maximal independent set is empty.
MinTransversalResult minTransversal(const Graph& g,
                                    std::optional<int> limit = std::nullopt);

// Complement graph; labels kept, sides cleared.
Graph complement(const Graph& g);

// Height-two poset view of a fully bipartitioned graph: one ordered pair
// (P-endpoint, N-endpoint) per edge. Maximal antichains of the poset are
// exactly the maximal independent sets of g, so fibres are transversals.
std::vector<std::pair<int, int>> toHeightTwoPoset(const Graph& g);

}  // namespace qmis

#endif
