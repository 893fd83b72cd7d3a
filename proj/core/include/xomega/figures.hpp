#pragma once

// The fixed set of small graphs kept as golden edge lists.

#include <string>
#include <vector>

#include "xomega/export.hpp"
#include "xomega/multigraph.hpp"

namespace xomega {

struct ReferenceGraph {
  std::string id;  // also the golden file stem: <id>.csv
  std::string description;
  LabeledMultigraph graph;
  GraphMeta meta;
};

/// X_(10)^k on [-4, 4] for k = 0, 1, 2; X_(0) and X_(10) on [-8, 8]; the
/// models X_1, X_2, X_3; X_(10) mod 8.
std::vector<ReferenceGraph> reference_graphs();

struct GoldenMismatch {
  std::string id;
  std::string reason;
};

/// Compares each reference graph's CSV with <dir>/<id>.csv byte for byte.
std::vector<GoldenMismatch> compare_golden(const std::string& dir);
/// Writes <dir>/<id>.csv for every reference graph.
void write_golden(const std::string& dir);

}  // namespace xomega
