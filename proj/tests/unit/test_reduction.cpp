#include <set>

#include "doctest.h"
#include "qmis/harness.hpp"
#include "qmis/normalize.hpp"
#include "qmis/reduction.hpp"
#include "support/oracles.hpp"

using namespace qmis;
using testsupport::phiZero;

namespace {

const ReductionOutput& phiZeroReduction() {
  static const ReductionOutput red = buildGraph(phiZero());
  return red;
}

Assignment xAssignment(std::initializer_list<bool> values) {
  Assignment a;
  int var = 1;
  for (bool v : values) a.set(var++, v);
  return a;
}

}  // namespace

TEST_CASE("budget") {
  CHECK(budget(phiZero()) == 8);

  Q3DNF minimal;
  minimal.existentials = 1;
  minimal.universals = 1;
  minimal.terms = {Term{{2, true}, {2, true}, {2, true}},
                   Term{{2, false}, {2, false}, {2, false}}};
  CHECK(budget(minimal) == 4);  // 2*1 + 1 + 1
}

TEST_CASE("buildGraph on phi0: counts, sides, gadget locality") {
  const ReductionOutput& red = phiZeroReduction();
  CHECK(red.graph.vertexCount() == 26);  // 6n + 2m + 3q + 3q'
  CHECK(red.k == 8);
  CHECK(red.n == 2);
  CHECK(red.m == 1);
  CHECK(red.q == 2);
  CHECK(red.qprime == 2);
  CHECK_NOTHROW(red.graph.checkBipartite());

  // t1 serves (x1 & x1 & y1): among literal vertices it meets exactly
  // the contradicting pair xb1, yb1.
  const int t1 = red.vertexOf(Role::T, 1);
  for (int i = 1; i <= red.n; ++i) {
    CHECK(red.graph.adjacent(t1, red.vertexOf(Role::Xbar, i)) == (i == 1));
    CHECK_FALSE(red.graph.adjacent(t1, red.vertexOf(Role::X, i)));
  }
  CHECK(red.graph.adjacent(t1, red.vertexOf(Role::Ybar, 1)));
  CHECK_FALSE(red.graph.adjacent(t1, red.vertexOf(Role::Y, 1)));

  // tn2 serves (~x2 & ~x2 & ~y1): contradicted by x2 and y1.
  const int tn2 = red.vertexOf(Role::Tprime, 2);
  for (int i = 1; i <= red.n; ++i) {
    CHECK(red.graph.adjacent(tn2, red.vertexOf(Role::X, i)) == (i == 2));
    CHECK_FALSE(red.graph.adjacent(tn2, red.vertexOf(Role::Xbar, i)));
  }
  CHECK(red.graph.adjacent(tn2, red.vertexOf(Role::Y, 1)));
  CHECK_FALSE(red.graph.adjacent(tn2, red.vertexOf(Role::Ybar, 1)));
}

TEST_CASE("buildGraph degree saturation per edge rules") {
  const ReductionOutput& red = phiZeroReduction();
  const Graph& g = red.graph;
  int pSize = 0, nSize = 0;
  for (int v = 0; v < g.vertexCount(); ++v)
    (g.vertex(v).side == Side::P ? pSize : nSize)++;
  CHECK(pSize == 13);
  CHECK(nSize == 13);

  // r1 sees all of N but s1; s1 sees all of P but {t1, r1}.
  CHECK(g.neighbors(red.vertexOf(Role::R, 1)).count() ==
        static_cast<std::size_t>(nSize - 1));
  CHECK_FALSE(g.adjacent(red.vertexOf(Role::R, 1), red.vertexOf(Role::S, 1)));
  CHECK(g.neighbors(red.vertexOf(Role::S, 1)).count() ==
        static_cast<std::size_t>(pSize - 2));

  // ab1 sees all of P but {x1, b1}; a1 sees all of N but {xb1, bb1}.
  CHECK(g.neighbors(red.vertexOf(Role::Abar, 1)).count() ==
        static_cast<std::size_t>(pSize - 2));
  CHECK(g.neighbors(red.vertexOf(Role::A, 1)).count() ==
        static_cast<std::size_t>(nSize - 2));
  CHECK_FALSE(g.adjacent(red.vertexOf(Role::A, 1), red.vertexOf(Role::Xbar, 1)));
  CHECK_FALSE(g.adjacent(red.vertexOf(Role::A, 1), red.vertexOf(Role::Bbar, 1)));

  // rn1 sees all of P but sn1; sn1 sees all of N but {tn1, rn1}.
  CHECK(g.neighbors(red.vertexOf(Role::Rprime, 1)).count() ==
        static_cast<std::size_t>(pSize - 1));
  CHECK(g.neighbors(red.vertexOf(Role::Sprime, 1)).count() ==
        static_cast<std::size_t>(nSize - 2));
}

TEST_CASE("buildGraph preconditions are reported individually") {
  Q3DNF notNice;
  notNice.existentials = 1;
  notNice.universals = 1;
  notNice.terms = {Term{{1, true}, {1, true}, {2, true}},
                   Term{{1, false}, {1, false}, {2, false}}};
  CHECK_THROWS_WITH_AS(buildGraph(notNice),
                       doctest::Contains("deficiencies"), PreconditionError);

  Q3DNF mixed;
  mixed.existentials = 1;
  mixed.universals = 1;
  mixed.terms = {Term{{1, true}, {2, false}, {2, false}}};
  CHECK_THROWS_AS(buildGraph(mixed), PreconditionError);

  Q3DNF noExistential;
  noExistential.existentials = 0;
  noExistential.universals = 1;
  noExistential.terms = {Term{{1, true}, {1, true}, {1, true}}};
  CHECK_THROWS_AS(buildGraph(noExistential), PreconditionError);
}

TEST_CASE("transversalFromAssignment") {
  const ReductionOutput& red = phiZeroReduction();
  const VertexSet x = transversalFromAssignment(red, xAssignment({true, false}));
  CHECK(x.size() == red.k);
  CHECK(x.contains(red.vertexOf(Role::T, 1)));
  CHECK(x.contains(red.vertexOf(Role::T, 2)));
  CHECK(x.contains(red.vertexOf(Role::Tprime, 1)));
  CHECK(x.contains(red.vertexOf(Role::Tprime, 2)));
  CHECK(x.contains(red.vertexOf(Role::B, 1)));
  CHECK(x.contains(red.vertexOf(Role::Xbar, 1)));
  CHECK(x.contains(red.vertexOf(Role::Bbar, 2)));
  CHECK(x.contains(red.vertexOf(Role::X, 2)));

  // Exactly one of {x_i, xb_i} per i, for any assignment.
  for (int code = 0; code < 4; ++code) {
    const VertexSet s =
        transversalFromAssignment(red, xAssignment({bool(code & 2), bool(code & 1)}));
    for (int i = 1; i <= red.n; ++i) {
      const int inPair = int(s.contains(red.vertexOf(Role::X, i))) +
                         int(s.contains(red.vertexOf(Role::Xbar, i)));
      CHECK(inPair == 1);
    }
    CHECK(s.size() == red.k);
  }

  CHECK_THROWS_AS(transversalFromAssignment(red, xAssignment({true})), ScopeError);
}

TEST_CASE("forward direction: satisfying witness yields a transversal") {
  const ReductionOutput& red = phiZeroReduction();
  const EvalResult eval = evaluateQ3DNF(phiZero());
  REQUIRE(eval.holds);
  const VertexSet x = transversalFromAssignment(red, *eval.witness);
  CHECK(isTransversal(red.graph, x).ok);
}

TEST_CASE("canonicalize") {
  const ReductionOutput& red = phiZeroReduction();
  const VertexSet canonical =
      transversalFromAssignment(red, xAssignment({false, true}));
  CHECK(canonicalize(red, canonical) == canonical);

  // A transversal containing neither x_i nor xb_i canonicalizes with
  // Q_i = {b_i, xb_i}.
  const MinTransversalResult mt = minTransversal(red.graph, red.k);
  REQUIRE(mt.feasible);
  const VertexSet xprime = canonicalize(red, mt.set, /*strict=*/true);
  CHECK(xprime.size() == red.k);
  CHECK(isTransversal(red.graph, xprime).ok);

  VertexSet tooBig;
  for (int v = 0; v < red.graph.vertexCount(); ++v) tooBig.add(v);
  CHECK_THROWS_AS(canonicalize(red, tooBig), PreconditionError);

  // Strict mode rejects a non-transversal.
  CHECK_THROWS_AS(canonicalize(red, VertexSet::ofIds({0}), /*strict=*/true),
                  PreconditionError);
}

TEST_CASE("assignmentFromTransversal inverts the forward map") {
  const ReductionOutput& red = phiZeroReduction();
  for (int code = 0; code < 4; ++code) {
    const Assignment mu = xAssignment({bool(code & 2), bool(code & 1)});
    const VertexSet x = transversalFromAssignment(red, mu);
    CHECK(assignmentFromTransversal(red, canonicalize(red, x)) == mu);
  }

  // All x_i present means mu is identically false.
  const Assignment allFalse =
      assignmentFromTransversal(red, transversalFromAssignment(red, xAssignment({false, false})));
  CHECK_FALSE(allFalse.value(1));
  CHECK_FALSE(allFalse.value(2));

  CHECK_THROWS_AS(assignmentFromTransversal(red, VertexSet::ofIds({0, 1})),
                  PreconditionError);
}

TEST_CASE("backward direction on phi0: a <=k transversal yields a witness") {
  const ReductionOutput& red = phiZeroReduction();
  const MinTransversalResult mt = minTransversal(red.graph, red.k);
  REQUIRE(mt.feasible);
  CHECK(mt.size == red.k);
  const Assignment mu =
      assignmentFromTransversal(red, canonicalize(red, mt.set, true));
  // mu must witness the formula: for both y values some term holds.
  for (bool y : {false, true}) {
    Assignment full = mu;
    full.set(3, y);
    CHECK(evaluateMatrix(phiZero(), full));
  }
}

TEST_CASE("classifyMIS named families") {
  const ReductionOutput& red = phiZeroReduction();
  VertexSet pSide, nSide;
  for (int v = 0; v < red.graph.vertexCount(); ++v)
    (red.graph.vertex(v).side == Side::P ? pSide : nSide).add(v);
  CHECK(classifyMIS(red, pSide) == MISClass{2, 1});
  CHECK(classifyMIS(red, nSide) == MISClass{2, 2});

  const VertexSet gadget = VertexSet::ofIds({red.vertexOf(Role::T, 1),
                                             red.vertexOf(Role::R, 1),
                                             red.vertexOf(Role::S, 1)});
  CHECK(classifyMIS(red, gadget) == MISClass{6, 1});

  // Regular MIS from the assignment x=(T,T), y=F: the true literal
  // vertices. No term is satisfied, so no t vertex joins.
  const VertexSet regular = VertexSet::ofIds(
      {red.vertexOf(Role::X, 1), red.vertexOf(Role::X, 2),
       red.vertexOf(Role::Ybar, 1)});
  CHECK(isMaximalIndependent(red.graph, regular));
  CHECK(classifyMIS(red, regular) == MISClass{1, 0});

  // Non-MIS input is rejected.
  CHECK_THROWS_AS(classifyMIS(red, VertexSet::ofIds({0})), PreconditionError);
}

TEST_CASE("every enumerated MIS of phi0 is classified; counts match") {
  const ReductionOutput& red = phiZeroReduction();
  const ClassificationAuditReport audit = classificationAudit(red);
  CHECK(audit.unclassified == 0);
  CHECK(audit.perType[2] == 2);
  CHECK(audit.perType[3] == 4 * red.n);  // 8
  CHECK(audit.perType[6] == red.q);
  CHECK(audit.perType[8] == red.qprime);
  CHECK(audit.multiplicitiesOk);
}

TEST_CASE("disjointWitnessFamily") {
  const ReductionOutput& red = phiZeroReduction();
  const std::vector<VertexSet> family = disjointWitnessFamily(red);
  REQUIRE(static_cast<int>(family.size()) == red.k);

  VertexBits seen;
  for (const VertexSet& s : family) {
    CHECK((s.bits() & seen).none());  // pairwise disjoint
    seen |= s.bits();
    CHECK(isMaximalIndependent(red.graph, s));
  }
  // Consequence: no transversal smaller than k.
  CHECK(minTransversal(red.graph).size >= red.k);
}

TEST_CASE("role metadata survives the labeled-graph round trip") {
  const ReductionOutput& red = phiZeroReduction();
  const ReductionOutput back = reductionFromLabeledGraph(red.graph, red.k);
  CHECK(back.n == red.n);
  CHECK(back.m == red.m);
  CHECK(back.q == red.q);
  CHECK(back.qprime == red.qprime);
  for (int v = 0; v < red.graph.vertexCount(); ++v)
    CHECK(back.roleOf(v) == red.roleOf(v));

  CHECK_THROWS_AS(reductionFromLabeledGraph(red.graph, red.k + 1),
                  PreconditionError);
}
