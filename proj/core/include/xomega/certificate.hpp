#pragma once

// Exact canonical forms of pointed multigraphs.
//
// The certificate of a pointed graph (G, v) is the lexicographically least
// adjacency code over all labelings reachable by color refinement plus
// individualization, with the center always labeled 0. Two pointed graphs
// receive equal certificates iff they are isomorphic by a map sending
// center to center. Loops and edge multiplicities are part of the code;
// edge labels are not.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xomega/multigraph.hpp"

namespace xomega {

class PointedBallCertificate {
 public:
  PointedBallCertificate() = default;
  explicit PointedBallCertificate(std::vector<std::uint32_t> code) : code_(std::move(code)) {}

  const std::vector<std::uint32_t>& code() const noexcept { return code_; }
  std::size_t vertex_count() const noexcept { return code_.empty() ? 0 : code_.front(); }
  /// Loops at the center.
  std::size_t center_loops() const noexcept { return code_.size() > 1 ? code_[1] : 0; }

  /// Raw bytes of the code (little-endian 32-bit words).
  std::string bytes() const;
  /// 16-hex-digit digest, for display and CSV ids only; equality uses the code.
  std::string short_id() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const PointedBallCertificate&, const PointedBallCertificate&) = default;
  friend auto operator<=>(const PointedBallCertificate&, const PointedBallCertificate&) = default;

 private:
  std::vector<std::uint32_t> code_;
};

struct CertificateHash {
  std::size_t operator()(const PointedBallCertificate& c) const noexcept { return c.hash(); }
};

struct CanonicalOptions {
  /// Search-tree leaves allowed before ExplosionGuard is raised.
  std::size_t max_leaves = 2'000'000;
};

/// Certificate of the whole graph pointed at `center`.
PointedBallCertificate canonical_certificate(const LabeledMultigraph& g, std::size_t center,
                                             const CanonicalOptions& options = {});

/// Induced subgraph on the vertices within distance r of `center` (loops do
/// not shorten paths). The center gets index 0; keys are preserved.
LabeledMultigraph extract_ball(const LabeledMultigraph& g, std::size_t center, int r);
/// Same, reusing a precomputed adjacency of g; cost proportional to the ball.
LabeledMultigraph extract_ball(const LabeledMultigraph& g, const Adjacency& adj, std::size_t center, int r);

/// Certificate of B(center, r) in g.
PointedBallCertificate ball_certificate(const LabeledMultigraph& g, std::size_t center, int r,
                                        const CanonicalOptions& options = {});

}  // namespace xomega

template <>
struct std::hash<xomega::PointedBallCertificate> {
  std::size_t operator()(const xomega::PointedBallCertificate& c) const noexcept { return c.hash(); }
};
