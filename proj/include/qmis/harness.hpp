#ifndef QMIS_HARNESS_HPP
#define QMIS_HARNESS_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "qmis/formula.hpp"
#include "qmis/reduction.hpp"

namespace qmis {

// SplitMix64: a tiny, fully specified generator so that seeded runs
// reproduce bit-for-bit across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound) by modulo reduction; the bias is
  // irrelevant at these bounds and the rule is trivially portable.
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

 private:
  std::uint64_t state_;
};

inline constexpr int kNiceGenerationRetryCap = 200;

// Seeded random monotone width-3 formula with q positive and qprime
// negative terms that passes isNice. Retries whole draws up to
// kNiceGenerationRetryCap; then, if the parameters admit a nice formula
// at all, falls back to a deterministic repair of the last draw via
// addNicenessTerms (term and universal counts grow past the request).
// Structurally impossible parameter combinations raise PreconditionError.
Q3DNF genNiceMonotone(int n, int m, int q, int qprime, std::uint64_t seed);

// Seeded random width-3 formula with arbitrary literal polarities.
Q3DNF genQ3DNF(int n, int m, int terms, std::uint64_t seed);

struct RoundTripReport {
  Q3DNF normalized;
  bool holds = false;
  std::optional<Assignment> witness;
  int k = 0;
  bool withinBudget = false;  // a transversal of size <= k exists
  std::optional<int> minTransversalSize;  // absent when over budget
  VertexSet minSet;
  bool exactAtBudget = true;  // when holds: minimum equals k
  bool consistent = false;    // holds <=> withinBudget
};

// normalizePipeline -> oracle -> buildGraph -> minTransversal(limit=k).
RoundTripReport roundTrip(const Q3DNF& f);

struct ClassificationAuditReport {
  int misCount = 0;
  std::array<int, 10> perType{};  // indices 1..9 used
  int unclassified = 0;
  std::vector<VertexSet> unclassifiedSets;
  // type 2 count == 2, type 3 == 4n, type 6 == q, type 8 == q'
  bool multiplicitiesOk = false;
};

// Enumerates and classifies every maximal independent set of the
// reduction graph.
ClassificationAuditReport classificationAudit(const ReductionOutput& red);

}  // namespace qmis

#endif
