#include "xomega/figures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xomega/errors.hpp"
#include "xomega/omega_graph.hpp"

namespace xomega {

std::vector<ReferenceGraph> reference_graphs() {
  std::vector<ReferenceGraph> out;
  const auto ten = OmegaWord::parse("(10)");
  for (int k = 0; k <= 2; ++k) {
    out.push_back({"partial_10_level" + std::to_string(k),
                   "X_(10) with levels <= " + std::to_string(k) + " on [-4, 4]",
                   partial_graph(ten, k, -4, 4).graph, {"partial", "(10)", k}});
  }
  out.push_back({"window_0", "X_(0) on [-8, 8]", window(OmegaWord::parse("(0)"), -8, 8).graph, {"window", "(0)", {}}});
  out.push_back({"window_10", "X_(10) on [-8, 8]", window(ten, -8, 8).graph, {"window", "(10)", {}}});
  for (int n = 1; n <= 3; ++n) {
    out.push_back({"model_" + std::to_string(n), "X_" + std::to_string(n), model_graph(n), {"model", "", n}});
  }
  out.push_back({"quotient_10_mod8", "X_(10) mod 8", quotient_mod(ten, 3), {"quotient", "(10)", 3}});
  return out;
}

std::vector<GoldenMismatch> compare_golden(const std::string& dir) {
  std::vector<GoldenMismatch> out;
  for (const auto& ref : reference_graphs()) {
    const auto path = std::filesystem::path(dir) / (ref.id + ".csv");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      out.push_back({ref.id, "missing " + path.string()});
      continue;
    }
    std::ostringstream stored;
    stored << in.rdbuf();
    if (stored.str() != to_csv(ref.graph)) out.push_back({ref.id, "differs from " + path.string()});
  }
  return out;
}

void write_golden(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& ref : reference_graphs()) {
    const auto path = std::filesystem::path(dir) / (ref.id + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << to_csv(ref.graph);
  }
}

}  // namespace xomega
