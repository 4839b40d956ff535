#include "qmis/graph.hpp"

#include <algorithm>
#include <string>

namespace qmis {

namespace {

// libstdc++ bitset scan extensions.
inline int firstBit(const VertexBits& b) { return static_cast<int>(b._Find_first()); }
inline int nextBit(const VertexBits& b, int after) {
  return static_cast<int>(b._Find_next(after));
}

}  // namespace

int Graph::addVertex(std::string label, Side side) {
  if (vertexCount() >= kMaxVertices)
    throw ResourceLimitError("graph capacity is " +
                             std::to_string(kMaxVertices) + " vertices");
  if (findLabel(label))
    throw PreconditionError("duplicate vertex label '" + label + "'");
  vertices_.push_back({std::move(label), side});
  adj_.emplace_back();
  return vertexCount() - 1;
}

void Graph::addEdge(int u, int v) {
  checkId(u);
  checkId(v);
  if (u == v)
    throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edgeCount_;
}

const GraphVertex& Graph::vertex(int id) const {
  checkId(id);
  return vertices_[id];
}

bool Graph::adjacent(int u, int v) const {
  checkId(u);
  checkId(v);
  return adj_[u].test(v);
}

const VertexBits& Graph::neighbors(int id) const {
  checkId(id);
  return adj_[id];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edgeCount_);
  for (int u = 0; u < vertexCount(); ++u)
    for (int v = nextBit(adj_[u], u); v < vertexCount(); v = nextBit(adj_[u], v))
      out.emplace_back(u, v);
  return out;
}

bool Graph::allSidesAssigned() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const GraphVertex& v) {
    return v.side != Side::Unassigned;
  });
}

void Graph::checkBipartite() const {
  if (!allSidesAssigned())
    throw PreconditionError("graph has vertices with unassigned side");
  for (auto [u, v] : edges())
    if (vertices_[u].side == vertices_[v].side)
      throw PreconditionError("edge " + std::to_string(u) + "-" +
                              std::to_string(v) +
                              " does not cross the (P, N) bipartition");
}

VertexBits Graph::allMask() const {
  VertexBits mask;
  for (int v = 0; v < vertexCount(); ++v) mask.set(v);
  return mask;
}

std::optional<int> Graph::findLabel(const std::string& label) const {
  for (int v = 0; v < vertexCount(); ++v)
    if (vertices_[v].label == label) return v;
  return std::nullopt;
}

void Graph::checkId(int id) const {
  if (id < 0 || id >= vertexCount())
    throw PreconditionError("unknown vertex id " + std::to_string(id));
}

VertexSet VertexSet::ofIds(const std::vector<int>& ids) {
  VertexSet s;
  for (int id : ids) {
    if (id < 0 || id >= kMaxVertices)
      throw PreconditionError("vertex id " + std::to_string(id) +
                              " out of range");
    s.add(id);
  }
  return s;
}

std::vector<int> VertexSet::ids() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (int v = firstBit(bits_); v < kMaxVertices; v = nextBit(bits_, v))
    out.push_back(v);
  return out;
}

bool VertexSet::lexLess(const VertexSet& a, const VertexSet& b) {
  const std::vector<int> ia = a.ids(), ib = b.ids();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

namespace {

void checkBound(const Graph& g, const VertexSet& s) {
  for (int v : s.ids())
    if (v >= g.vertexCount())
      throw PreconditionError("vertex id " + std::to_string(v) +
                              " not in the graph");
}

}  // namespace

bool isIndependent(const Graph& g, const VertexSet& s) {
  checkBound(g, s);
  for (int v : s.ids())
    if ((g.neighbors(v) & s.bits()).any()) return false;
  return true;
}

bool isMaximalIndependent(const Graph& g, const VertexSet& s) {
  if (!isIndependent(g, s)) return false;
  for (int v = 0; v < g.vertexCount(); ++v) {
    if (s.contains(v)) continue;
    if ((g.neighbors(v) & s.bits()).none()) return false;
  }
  return true;
}

namespace {

// Pivoting Bron-Kerbosch over the non-adjacency relation: maximal cliques
// of the complement are exactly the maximal independent sets. The visitor
// returns false to stop the enumeration early.
class MISEnumerator {
 public:
  MISEnumerator(const Graph& g, VertexBits restrictTo)
      : n_(g.vertexCount()) {
    nonadj_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      nonadj_[v] = ~g.neighbors(v) & restrictTo;
      nonadj_[v].reset(v);
    }
    start_ = restrictTo;
  }

  template <typename Visitor>
  bool run(Visitor&& visit) {
    return expand(VertexBits{}, start_, VertexBits{}, visit);
  }

 private:
  template <typename Visitor>
  bool expand(VertexBits current, VertexBits candidates, VertexBits excluded,
              Visitor&& visit) {
    if (candidates.none() && excluded.none()) return visit(current);

    // Pick the pivot covering the most candidates.
    int pivot = -1;
    std::size_t best = 0;
    VertexBits px = candidates | excluded;
    for (int u = static_cast<int>(px._Find_first()); u < n_;
         u = static_cast<int>(px._Find_next(u))) {
      std::size_t score = (candidates & nonadj_[u]).count();
      if (pivot < 0 || score > best) {
        pivot = u;
        best = score;
      }
    }

    VertexBits branch = candidates & ~nonadj_[pivot];
    for (int v = static_cast<int>(branch._Find_first()); v < n_;
         v = static_cast<int>(branch._Find_next(v))) {
      VertexBits next = current;
      next.set(v);
      if (!expand(next, candidates & nonadj_[v], excluded & nonadj_[v], visit))
        return false;
      candidates.reset(v);
      excluded.set(v);
    }
    return true;
  }

  int n_;
  std::vector<VertexBits> nonadj_;
  VertexBits start_;
};

}  // namespace

std::vector<VertexSet> enumerateMIS(const Graph& g) {
  std::vector<VertexSet> out;
  MISEnumerator enumerator(g, g.allMask());
  bool complete = enumerator.run([&](const VertexBits& s) {
    if (static_cast<long>(out.size()) >= kMaxEnumeratedSets) return false;
    out.emplace_back(s);
    return true;
  });
  if (!complete)
    throw ResourceLimitError("more than " + std::to_string(kMaxEnumeratedSets) +
                             " maximal independent sets");
  std::sort(out.begin(), out.end(), VertexSet::lexLess);
  return out;
}

TransversalCheck isTransversal(const Graph& g, const VertexSet& x) {
  checkBound(g, x);
  TransversalCheck result;
  result.ok = true;
  // A maximal independent set of G[V - x] is a maximal independent set of
  // G disjoint from x exactly when every member of x has a neighbor in it.
  MISEnumerator enumerator(g, g.allMask() & ~x.bits());
  enumerator.run([&](const VertexBits& s) {
    for (int v : x.ids()) {
      if ((g.neighbors(v) & s).none()) return true;  // extendable into x; skip
    }
    result.ok = false;
    result.counterexample = VertexSet(s);
    return false;
  });
  return result;
}

namespace {

// Exact hitting-set feasibility over bitset families. `allowed` restricts
// the elements that may still be picked.
class HittingSearch {
 public:
  explicit HittingSearch(const std::vector<VertexBits>& sets, int numVertices)
      : sets_(sets), n_(numVertices) {}

  bool feasible(const std::vector<int>& uncovered, VertexBits allowed,
                int budget) const {
    if (uncovered.empty()) return true;
    if (budget <= 0) return false;

    // Packing lower bound: pairwise disjoint uncovered sets each need
    // their own element.
    {
      VertexBits used;
      int lb = 0;
      for (int i : uncovered) {
        VertexBits eff = sets_[i] & allowed;
        if (eff.none()) return false;
        if ((eff & used).none()) {
          if (++lb > budget) return false;
          used |= eff;
        }
      }
    }

    // Unit forcing falls out of branching on the set with the fewest
    // remaining candidates.
    int branchSet = -1;
    std::size_t branchCount = 0;
    for (int i : uncovered) {
      std::size_t c = (sets_[i] & allowed).count();
      if (branchSet < 0 || c < branchCount) {
        branchSet = i;
        branchCount = c;
        if (c == 1) break;
      }
    }

    VertexBits cands = sets_[branchSet] & allowed;
    std::vector<std::pair<int, int>> order;  // (-frequency, id)
    for (int v = static_cast<int>(cands._Find_first()); v < n_;
         v = static_cast<int>(cands._Find_next(v))) {
      int freq = 0;
      for (int i : uncovered)
        if (sets_[i].test(v)) ++freq;
      order.emplace_back(-freq, v);
    }
    std::sort(order.begin(), order.end());

    for (auto [negFreq, v] : order) {
      std::vector<int> remaining;
      remaining.reserve(uncovered.size());
      for (int i : uncovered)
        if (!sets_[i].test(v)) remaining.push_back(i);
      if (feasible(remaining, allowed, budget - 1)) return true;
    }
    return false;
  }

 private:
  const std::vector<VertexBits>& sets_;
  int n_;
};

}  // namespace

MinTransversalResult minTransversal(const Graph& g, std::optional<int> limit) {
  if (g.vertexCount() == 0)
    throw PreconditionError(
        "zero-vertex graph: its unique maximal independent set is empty and "
        "cannot be hit");

  std::vector<VertexBits> sets;
  for (const VertexSet& s : enumerateMIS(g)) sets.push_back(s.bits());

  HittingSearch search(sets, g.vertexCount());
  // Smallest sets first: small sets are the most likely to be pairwise
  // disjoint, which sharpens the packing bound, and they offer the fewest
  // branch candidates.
  std::vector<int> all(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) all[i] = static_cast<int>(i);
  std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
    return sets[a].count() < sets[b].count();
  });
  const VertexBits everyVertex = g.allMask();

  // Packing bound seeds the optimum search.
  int lower = 0;
  {
    VertexBits used;
    for (int i : all)
      if ((sets[i] & used).none()) {
        ++lower;
        used |= sets[i];
      }
  }

  const int cap = limit ? std::min(*limit, g.vertexCount()) : g.vertexCount();
  int optimum = -1;
  for (int s = lower; s <= cap; ++s) {
    if (search.feasible(all, everyVertex, s)) {
      optimum = s;
      break;
    }
  }
  if (optimum < 0) return {false, 0, {}};

  // Lexicographically least minimum solution: fix elements in ascending
  // order, each time checking that a completion with strictly larger ids
  // exists.
  MinTransversalResult result;
  result.feasible = true;
  result.size = optimum;
  std::vector<int> uncovered = all;
  int budget = optimum;
  int nextId = 0;
  while (!uncovered.empty()) {
    bool advanced = false;
    for (int v = nextId; v < g.vertexCount(); ++v) {
      bool coversSomething = false;
      for (int i : uncovered)
        if (sets[i].test(v)) {
          coversSomething = true;
          break;
        }
      if (!coversSomething) continue;  // a minimum solution never wastes budget

      VertexBits above;
      for (int u = v + 1; u < g.vertexCount(); ++u) above.set(u);
      std::vector<int> remaining;
      for (int i : uncovered)
        if (!sets[i].test(v)) remaining.push_back(i);
      if (search.feasible(remaining, above, budget - 1)) {
        result.set.add(v);
        uncovered = std::move(remaining);
        --budget;
        nextId = v + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw InternalInvariantError("lexicographic reconstruction got stuck");
  }
  return result;
}

Graph complement(const Graph& g) {
  Graph out;
  for (int v = 0; v < g.vertexCount(); ++v)
    out.addVertex(g.vertex(v).label, Side::Unassigned);
  for (int u = 0; u < g.vertexCount(); ++u)
    for (int v = u + 1; v < g.vertexCount(); ++v)
      if (!g.adjacent(u, v)) out.addEdge(u, v);
  return out;
}

std::vector<std::pair<int, int>> toHeightTwoPoset(const Graph& g) {
  g.checkBipartite();
  std::vector<std::pair<int, int>> relation;
  for (auto [u, v] : g.edges()) {
    if (g.vertex(u).side == Side::P)
      relation.emplace_back(u, v);
    else
      relation.emplace_back(v, u);
  }
  std::sort(relation.begin(), relation.end());
  return relation;
}

}  // namespace qmis
