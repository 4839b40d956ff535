#include "qmis/reduction.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace qmis {

namespace {

constexpr int kRoleCount = 14;

int roleSlot(Role r) { return static_cast<int>(r); }

const char* roleLabelPrefix(Role r) {
  switch (r) {
    case Role::X: return "x";
    case Role::Xbar: return "xb";
    case Role::A: return "a";
    case Role::B: return "b";
    case Role::Abar: return "ab";
    case Role::Bbar: return "bb";
    case Role::Y: return "y";
    case Role::Ybar: return "yb";
    case Role::T: return "t";
    case Role::R: return "r";
    case Role::S: return "s";
    case Role::Tprime: return "tn";
    case Role::Rprime: return "rn";
    case Role::Sprime: return "sn";
  }
  return "?";
}

Side roleSide(Role r) {
  switch (r) {
    case Role::A:
    case Role::B:
    case Role::X:
    case Role::Y:
    case Role::T:
    case Role::R:
    case Role::Sprime:
      return Side::P;
    default:
      return Side::N;
  }
}

// Per-role vertex-id tables, 0-based position = index - 1.
struct RoleIndex {
  std::array<std::vector<int>, kRoleCount> ids;

  int at(Role r, int index) const {
    const auto& v = ids[roleSlot(r)];
    if (index < 1 || index > static_cast<int>(v.size()))
      throw PreconditionError(std::string("no vertex ") + roleLabelPrefix(r) +
                              std::to_string(index));
    return v[index - 1];
  }
};

RoleIndex buildRoleIndex(const std::vector<RoleRef>& roles) {
  RoleIndex idx;
  for (std::size_t v = 0; v < roles.size(); ++v) {
    auto& slot = idx.ids[roleSlot(roles[v].kind)];
    if (static_cast<int>(slot.size()) < roles[v].index)
      slot.resize(roles[v].index, -1);
    slot[roles[v].index - 1] = static_cast<int>(v);
  }
  for (const auto& slot : idx.ids)
    for (int id : slot)
      if (id < 0)
        throw PreconditionError("role index table has a gap");
  return idx;
}

void requireNiceMonotoneWidth3(const Q3DNF& f) {
  f.validate(/*requireWidth3=*/true);
  if (f.terms.empty()) throw PreconditionError("formula has no terms");
  if (f.existentials < 1) throw PreconditionError("reduction requires n >= 1");
  if (!isMonotone(f))
    throw PreconditionError("reduction requires a monotone formula");
  const NiceReport nice = isNice(f);
  if (!nice.nice) {
    std::string msg = "reduction requires a nice formula; deficiencies:";
    for (const auto& [var, side] : nice.deficiencies)
      msg += " (x" + std::to_string(var) + ", " +
             (side == DeficiencySide::Positive ? "positive" : "negative") + ")";
    throw PreconditionError(msg);
  }
}

}  // namespace

int ReductionOutput::vertexOf(Role kind, int index) const {
  return buildRoleIndex(roles).at(kind, index);
}

RoleRef ReductionOutput::roleOf(int vertexId) const {
  if (vertexId < 0 || vertexId >= static_cast<int>(roles.size()))
    throw PreconditionError("unknown vertex id " + std::to_string(vertexId));
  return roles[vertexId];
}

int budget(const Q3DNF& f) {
  requireNiceMonotoneWidth3(f);
  const PolaritySplit split = polaritySplit(f);
  return 2 * f.existentials + static_cast<int>(split.positive.size()) +
         static_cast<int>(split.negative.size());
}

// Shared classifier/constructor context with O(1) role lookups.
namespace {

struct ReductionView {
  const ReductionOutput& red;
  RoleIndex idx;

  explicit ReductionView(const ReductionOutput& r)
      : red(r), idx(buildRoleIndex(r.roles)) {}

  int id(Role kind, int index) const { return idx.at(kind, index); }

  VertexBits sideMask(Side side) const {
    VertexBits mask;
    for (int v = 0; v < red.graph.vertexCount(); ++v)
      if (red.graph.vertex(v).side == side) mask.set(v);
    return mask;
  }
};

}  // namespace

ReductionOutput buildGraph(const Q3DNF& f) {
  requireNiceMonotoneWidth3(f);
  const PolaritySplit split = polaritySplit(f);

  ReductionOutput out;
  out.n = f.existentials;
  out.m = f.universals;
  out.q = static_cast<int>(split.positive.size());
  out.qprime = static_cast<int>(split.negative.size());
  out.k = 2 * out.n + out.q + out.qprime;
  if (out.q < 1 || out.qprime < 1)
    throw PreconditionError("reduction requires q >= 1 and q' >= 1");

  auto add = [&](Role kind, int index) {
    out.graph.addVertex(roleLabelPrefix(kind) + std::to_string(index),
                        roleSide(kind));
    out.roles.push_back({kind, index});
  };
  for (int i = 1; i <= out.n; ++i)
    for (Role r : {Role::A, Role::B, Role::X, Role::Abar, Role::Bbar, Role::Xbar})
      add(r, i);
  for (int j = 1; j <= out.m; ++j)
    for (Role r : {Role::Y, Role::Ybar}) add(r, j);
  for (int l = 1; l <= out.q; ++l)
    for (Role r : {Role::T, Role::R, Role::S}) add(r, l);
  for (int l = 1; l <= out.qprime; ++l)
    for (Role r : {Role::Tprime, Role::Rprime, Role::Sprime}) add(r, l);

  ReductionView view(out);
  Graph& g = out.graph;
  const VertexBits pMask = view.sideMask(Side::P);
  const VertexBits nMask = view.sideMask(Side::N);

  auto linkToAllBut = [&](int from, const VertexBits& side,
                          std::initializer_list<int> except) {
    VertexBits targets = side;
    for (int e : except) targets.reset(e);
    for (int v = static_cast<int>(targets._Find_first()); v < g.vertexCount();
         v = static_cast<int>(targets._Find_next(v)))
      g.addEdge(from, v);
  };

  // Literal pairs.
  for (int i = 1; i <= out.n; ++i)
    g.addEdge(view.id(Role::X, i), view.id(Role::Xbar, i));
  for (int j = 1; j <= out.m; ++j)
    g.addEdge(view.id(Role::Y, j), view.id(Role::Ybar, j));

  // Variable gadgets.
  for (int i = 1; i <= out.n; ++i) {
    linkToAllBut(view.id(Role::A, i), nMask,
                 {view.id(Role::Xbar, i), view.id(Role::Bbar, i)});
    linkToAllBut(view.id(Role::B, i), nMask,
                 {view.id(Role::Abar, i), view.id(Role::Bbar, i)});
    linkToAllBut(view.id(Role::Abar, i), pMask,
                 {view.id(Role::X, i), view.id(Role::B, i)});
    linkToAllBut(view.id(Role::Bbar, i), pMask,
                 {view.id(Role::A, i), view.id(Role::B, i)});
  }

  // Term vertices meet the literal vertices contradicting their term.
  // Adjacency is over the term's distinct literal set, so duplicated
  // literals simply yield lower-degree t-vertices.
  auto contradictionOf = [&](const Literal& l) {
    if (l.var <= out.n)
      return view.id(l.positive ? Role::Xbar : Role::X, l.var);
    return view.id(l.positive ? Role::Ybar : Role::Y, l.var - out.n);
  };
  for (int l = 1; l <= out.q; ++l)
    for (const Literal& lit : f.terms[split.positive[l - 1]].distinct())
      g.addEdge(view.id(Role::T, l), contradictionOf(lit));
  for (int l = 1; l <= out.qprime; ++l)
    for (const Literal& lit : f.terms[split.negative[l - 1]].distinct())
      g.addEdge(view.id(Role::Tprime, l), contradictionOf(lit));

  // Term gadget saturation.
  for (int l = 1; l <= out.q; ++l) {
    linkToAllBut(view.id(Role::R, l), nMask, {view.id(Role::S, l)});
    linkToAllBut(view.id(Role::S, l), pMask,
                 {view.id(Role::T, l), view.id(Role::R, l)});
  }
  for (int l = 1; l <= out.qprime; ++l) {
    linkToAllBut(view.id(Role::Rprime, l), pMask, {view.id(Role::Sprime, l)});
    linkToAllBut(view.id(Role::Sprime, l), nMask,
                 {view.id(Role::Tprime, l), view.id(Role::Rprime, l)});
  }

  try {
    g.checkBipartite();
  } catch (const PreconditionError& e) {
    throw InternalInvariantError(std::string("constructed graph not bipartite: ") +
                                 e.what());
  }
  return out;
}

ReductionOutput reductionFromLabeledGraph(const Graph& g, int k) {
  ReductionOutput out;
  out.graph = g;
  out.k = k;

  // Longest-prefix label parse: two-letter role names shadow one-letter ones.
  const std::vector<std::pair<std::string, Role>> prefixes = {
      {"ab", Role::Abar}, {"bb", Role::Bbar}, {"xb", Role::Xbar},
      {"yb", Role::Ybar}, {"tn", Role::Tprime}, {"rn", Role::Rprime},
      {"sn", Role::Sprime}, {"a", Role::A}, {"b", Role::B}, {"x", Role::X},
      {"y", Role::Y}, {"t", Role::T}, {"r", Role::R}, {"s", Role::S}};

  for (int v = 0; v < g.vertexCount(); ++v) {
    const std::string& label = g.vertex(v).label;
    RoleRef ref{Role::X, 0};
    bool matched = false;
    for (const auto& [prefix, role] : prefixes) {
      if (label.size() <= prefix.size() || label.rfind(prefix, 0) != 0)
        continue;
      const std::string digits = label.substr(prefix.size());
      if (!std::all_of(digits.begin(), digits.end(),
                       [](char c) { return c >= '0' && c <= '9'; }))
        continue;
      ref = {role, std::stoi(digits)};
      matched = true;
      break;
    }
    if (!matched || ref.index < 1)
      throw PreconditionError("label '" + label + "' is not a reduction role");
    out.roles.push_back(ref);
  }

  RoleIndex idx = buildRoleIndex(out.roles);  // rejects gaps
  out.n = static_cast<int>(idx.ids[roleSlot(Role::X)].size());
  out.m = static_cast<int>(idx.ids[roleSlot(Role::Y)].size());
  out.q = static_cast<int>(idx.ids[roleSlot(Role::T)].size());
  out.qprime = static_cast<int>(idx.ids[roleSlot(Role::Tprime)].size());

  for (Role r : {Role::A, Role::B, Role::Abar, Role::Bbar, Role::Xbar})
    if (static_cast<int>(idx.ids[roleSlot(r)].size()) != out.n)
      throw PreconditionError("variable gadget roles are inconsistent");
  if (static_cast<int>(idx.ids[roleSlot(Role::Ybar)].size()) != out.m)
    throw PreconditionError("universal literal roles are inconsistent");
  for (Role r : {Role::R, Role::S})
    if (static_cast<int>(idx.ids[roleSlot(r)].size()) != out.q)
      throw PreconditionError("positive term gadget roles are inconsistent");
  for (Role r : {Role::Rprime, Role::Sprime})
    if (static_cast<int>(idx.ids[roleSlot(r)].size()) != out.qprime)
      throw PreconditionError("negative term gadget roles are inconsistent");
  if (k != 2 * out.n + out.q + out.qprime)
    throw PreconditionError("k does not match 2n + q + q'");
  return out;
}

VertexSet transversalFromAssignment(const ReductionOutput& red,
                                    const Assignment& mu) {
  ReductionView view(red);
  VertexSet x;
  for (int l = 1; l <= red.q; ++l) x.add(view.id(Role::T, l));
  for (int l = 1; l <= red.qprime; ++l) x.add(view.id(Role::Tprime, l));
  for (int i = 1; i <= red.n; ++i) {
    if (mu.value(i)) {
      x.add(view.id(Role::B, i));
      x.add(view.id(Role::Xbar, i));
    } else {
      x.add(view.id(Role::Bbar, i));
      x.add(view.id(Role::X, i));
    }
  }
  return x;
}

VertexSet canonicalize(const ReductionOutput& red, const VertexSet& x,
                       bool strict) {
  if (x.size() > red.k)
    throw PreconditionError("canonicalize requires |x| <= k");
  if (strict) {
    const TransversalCheck check = isTransversal(red.graph, x);
    if (!check.ok)
      throw PreconditionError("canonicalize requires a transversal");
  }
  ReductionView view(red);
  VertexSet out;
  for (int l = 1; l <= red.q; ++l) out.add(view.id(Role::T, l));
  for (int l = 1; l <= red.qprime; ++l) out.add(view.id(Role::Tprime, l));
  for (int i = 1; i <= red.n; ++i) {
    if (x.contains(view.id(Role::X, i))) {
      out.add(view.id(Role::Bbar, i));
      out.add(view.id(Role::X, i));
    } else {
      out.add(view.id(Role::B, i));
      out.add(view.id(Role::Xbar, i));
    }
  }
  return out;
}

Assignment assignmentFromTransversal(const ReductionOutput& red,
                                     const VertexSet& xprime) {
  ReductionView view(red);
  Assignment mu;
  for (int i = 1; i <= red.n; ++i)
    mu.set(i, !xprime.contains(view.id(Role::X, i)));
  if (transversalFromAssignment(red, mu) != xprime)
    throw PreconditionError("input transversal is not in canonical form");
  return mu;
}

namespace {

VertexSet tripleSet(const ReductionView& view, Role r1, Role r2, Role r3,
                    int index) {
  VertexSet s;
  s.add(view.id(r1, index));
  s.add(view.id(r2, index));
  s.add(view.id(r3, index));
  return s;
}

// S_i + T_i: {a_i, xb_i}, all other positive x literals, all positive y
// literals, and the t vertices whose term avoids variable i.
VertexSet positiveEscapeSet(const ReductionView& view, int i) {
  VertexSet s;
  s.add(view.id(Role::A, i));
  s.add(view.id(Role::Xbar, i));
  for (int j = 1; j <= view.red.n; ++j)
    if (j != i) s.add(view.id(Role::X, j));
  for (int j = 1; j <= view.red.m; ++j) s.add(view.id(Role::Y, j));
  const int xbar = view.id(Role::Xbar, i);
  for (int l = 1; l <= view.red.q; ++l)
    if (!view.red.graph.adjacent(view.id(Role::T, l), xbar))
      s.add(view.id(Role::T, l));
  return s;
}

VertexSet negativeEscapeSet(const ReductionView& view, int i) {
  VertexSet s;
  s.add(view.id(Role::Abar, i));
  s.add(view.id(Role::X, i));
  for (int j = 1; j <= view.red.n; ++j)
    if (j != i) s.add(view.id(Role::Xbar, j));
  for (int j = 1; j <= view.red.m; ++j) s.add(view.id(Role::Ybar, j));
  const int x = view.id(Role::X, i);
  for (int l = 1; l <= view.red.qprime; ++l)
    if (!view.red.graph.adjacent(view.id(Role::Tprime, l), x))
      s.add(view.id(Role::Tprime, l));
  return s;
}

// W_l + Z_l: {t_l, s_l}, every t' vertex, and every negative literal
// vertex not adjacent to t_l.
VertexSet positiveHalfSet(const ReductionView& view, int l) {
  VertexSet s;
  const int t = view.id(Role::T, l);
  s.add(t);
  s.add(view.id(Role::S, l));
  for (int j = 1; j <= view.red.qprime; ++j) s.add(view.id(Role::Tprime, j));
  for (int i = 1; i <= view.red.n; ++i)
    if (!view.red.graph.adjacent(t, view.id(Role::Xbar, i)))
      s.add(view.id(Role::Xbar, i));
  for (int j = 1; j <= view.red.m; ++j)
    if (!view.red.graph.adjacent(t, view.id(Role::Ybar, j)))
      s.add(view.id(Role::Ybar, j));
  return s;
}

VertexSet negativeHalfSet(const ReductionView& view, int l) {
  VertexSet s;
  const int t = view.id(Role::Tprime, l);
  s.add(t);
  s.add(view.id(Role::Sprime, l));
  for (int j = 1; j <= view.red.q; ++j) s.add(view.id(Role::T, j));
  for (int i = 1; i <= view.red.n; ++i)
    if (!view.red.graph.adjacent(t, view.id(Role::X, i)))
      s.add(view.id(Role::X, i));
  for (int j = 1; j <= view.red.m; ++j)
    if (!view.red.graph.adjacent(t, view.id(Role::Y, j)))
      s.add(view.id(Role::Y, j));
  return s;
}

}  // namespace

MISClass classifyMIS(const ReductionOutput& red, const VertexSet& s) {
  if (!isMaximalIndependent(red.graph, s))
    throw PreconditionError("classifyMIS requires a maximal independent set");
  ReductionView view(red);

  if (s.bits() == view.sideMask(Side::P)) return {2, 1};
  if (s.bits() == view.sideMask(Side::N)) return {2, 2};

  for (int i = 1; i <= red.n; ++i) {
    if (s == tripleSet(view, Role::A, Role::B, Role::Bbar, i) ||
        s == tripleSet(view, Role::Abar, Role::B, Role::Bbar, i) ||
        s == tripleSet(view, Role::A, Role::Bbar, Role::Xbar, i) ||
        s == tripleSet(view, Role::Abar, Role::B, Role::X, i))
      return {3, i};
  }
  for (int i = 1; i <= red.n; ++i)
    if (s == positiveEscapeSet(view, i)) return {4, i};
  for (int i = 1; i <= red.n; ++i)
    if (s == negativeEscapeSet(view, i)) return {5, i};
  for (int l = 1; l <= red.q; ++l)
    if (s == tripleSet(view, Role::T, Role::R, Role::S, l)) return {6, l};
  for (int l = 1; l <= red.q; ++l)
    if (s == positiveHalfSet(view, l)) return {7, l};
  for (int l = 1; l <= red.qprime; ++l)
    if (s == tripleSet(view, Role::Tprime, Role::Rprime, Role::Sprime, l))
      return {8, l};
  for (int l = 1; l <= red.qprime; ++l)
    if (s == negativeHalfSet(view, l)) return {9, l};

  // Regular: avoids every gadget-interior vertex.
  bool regular = true;
  for (int v : s.ids()) {
    switch (red.roles[v].kind) {
      case Role::A:
      case Role::B:
      case Role::Abar:
      case Role::Bbar:
      case Role::R:
      case Role::S:
      case Role::Rprime:
      case Role::Sprime:
        regular = false;
        break;
      default:
        break;
    }
    if (!regular) break;
  }
  if (regular) return {1, 0};

  throw InternalInvariantError(
      "maximal independent set matches no taxonomy class");
}

std::vector<VertexSet> disjointWitnessFamily(const ReductionOutput& red) {
  ReductionView view(red);
  std::vector<VertexSet> family;
  for (int i = 1; i <= red.n; ++i)
    family.push_back(tripleSet(view, Role::A, Role::Bbar, Role::Xbar, i));
  for (int i = 1; i <= red.n; ++i)
    family.push_back(tripleSet(view, Role::Abar, Role::B, Role::X, i));
  for (int l = 1; l <= red.q; ++l)
    family.push_back(tripleSet(view, Role::T, Role::R, Role::S, l));
  for (int l = 1; l <= red.qprime; ++l)
    family.push_back(tripleSet(view, Role::Tprime, Role::Rprime, Role::Sprime, l));
  return family;
}

}  // namespace qmis
