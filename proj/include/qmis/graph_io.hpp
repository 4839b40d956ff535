#ifndef QMIS_GRAPH_IO_HPP
#define QMIS_GRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "qmis/graph.hpp"

namespace qmis {

struct ParsedGraph {
  Graph graph;
  // Sidecar transversal budget, from an optional `k <value>` line.
  std::optional<int> k;
};

// Text format, `#` comments:
//   p graph <#vertices> <#edges>
//   v <id> <P|N|U> <label>      (ids 0-based, contiguous, each once)
//   e <id> <id>
//   k <value>                   (optional sidecar)
ParsedGraph parseGraph(std::istream& in);
ParsedGraph parseGraphFile(const std::string& path);

void serializeGraph(const Graph& g, std::ostream& out,
                    std::optional<int> k = std::nullopt);

// DOT export; P-side vertices on one rank, N-side on the other.
void writeDot(const Graph& g, std::ostream& out);

}  // namespace qmis

#endif
