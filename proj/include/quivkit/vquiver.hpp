#pragma once

// Quivers, Vquivers and maps between them.  A Vquiver is stored as a vertex
// list plus a flat list of named arrow-basis vectors; the arrow space from e
// to f is spanned by the arrows with that source and target.  The point is
// implicit and encoded as kPoint in vertex maps.

#include "quivkit/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivkit {

inline constexpr int kPoint = -1;

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowSpec {
  std::string label;
  std::string source;
  std::string target;
};

/// Also used for plain quivers: a quiver is a Vquiver whose arrow bases are
/// read as sets of arrows.
struct VQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  Index arrow_count() const { return static_cast<Index>(arrows.size()); }
  std::optional<int> find_vertex(const std::string& label) const;
  std::optional<Index> find_arrow(const std::string& label) const;
  /// Indices of the arrow basis of VQ_{e,f} (arrows e -> f), in stored order.
  std::vector<Index> block(int e, int f) const;
  Index block_dim(int e, int f) const { return static_cast<Index>(block(e, f).size()); }

  friend bool operator==(const VQuiver&, const VQuiver&) = default;
};

using Quiver = VQuiver;

/// Validates labels (unique, non-empty, not the reserved point "*") and
/// endpoints; throws MALFORMED_QUIVER.
VQuiver make_vquiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

/// Object part of V(-): the arrow space e -> f gets the arrows e -> f as basis.
VQuiver v_of_quiver(const Quiver& q);

bool is_acyclic(const VQuiver& vq);

/// Number of arrows in a longest path with pairwise distinct vertices.
int longest_simple_path(const VQuiver& vq);

/// Graphviz rendering; arrow spaces of dimension > 1 become one edge per basis arrow.
std::string to_dot(const VQuiver& vq, const std::string& name);

/// An injective map of quivers Q -> R.
struct QuiverMap {
  Quiver source;
  Quiver target;
  std::vector<int> vertex_map;    // Q vertex -> R vertex
  std::vector<Index> arrow_map;   // Q arrow -> R arrow
};

/// Throws MALFORMED_QUIVER on endpoint mismatches and NOT_INJECTIVE unless
/// both components are injective.
void validate_quiver_map(const QuiverMap& iota);

template <ExactField S>
struct VQuiverMap {
  VQuiver source;
  VQuiver target;
  std::vector<int> vertex_map;  // source vertex -> target vertex or kPoint
  Mat<S> arrows;                // target arrow count x source arrow count

  friend bool operator==(const VQuiverMap& a, const VQuiverMap& b) {
    return a.source == b.source && a.target == b.target && a.vertex_map == b.vertex_map &&
           a.arrows == b.arrows;
  }
};

/// Checks that the vertex map is pointed and restricts to a bijection from
/// the vertices not sent to the point onto the target vertices, and that
/// each arrow lands in the block VQ_{rho(e), rho(f)} (zero when either
/// endpoint is sent to the point).
template <ExactField S>
VQuiverMap<S> validate_vq_map(VQuiver source, VQuiver target, std::vector<int> vertex_map,
                              Mat<S> arrows);

template <ExactField S>
VQuiverMap<S> identity_vq_map(const VQuiver& vq);

/// Contravariant V(-) on an injective quiver map Q -> R: a map VR -> VQ.
template <ExactField S>
VQuiverMap<S> v_of_inclusion(const QuiverMap& iota);

/// sigma o rho; throws NOT_COMPOSABLE.
template <ExactField S>
VQuiverMap<S> compose_vq(const VQuiverMap<S>& sigma, const VQuiverMap<S>& rho);

template <ExactField S>
bool is_surjective(const VQuiverMap<S>& rho);

/// Bijective on vertices and on every arrow block.
template <ExactField S>
bool is_isomorphism(const VQuiverMap<S>& rho);

#define QUIVKIT_EXTERN_VQUIVER(S)                                                               \
  extern template VQuiverMap<S> validate_vq_map<S>(VQuiver, VQuiver, std::vector<int>, Mat<S>); \
  extern template VQuiverMap<S> identity_vq_map<S>(const VQuiver&);                             \
  extern template VQuiverMap<S> v_of_inclusion<S>(const QuiverMap&);                            \
  extern template VQuiverMap<S> compose_vq<S>(const VQuiverMap<S>&, const VQuiverMap<S>&);      \
  extern template bool is_surjective<S>(const VQuiverMap<S>&);                                  \
  extern template bool is_isomorphism<S>(const VQuiverMap<S>&);

QUIVKIT_EXTERN_VQUIVER(Rational)
QUIVKIT_EXTERN_VQUIVER(ModP)

}  // namespace quivkit
