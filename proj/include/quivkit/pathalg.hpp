#pragma once

// Truncated completed path algebras k[[VQ]] / J^n.  The basis is the set of
// paths of length < n: vertex idempotents first, then paths ordered by length
// and lexicographically by arrow index.  A path is written left to right in
// composition order, so "c*b" is b followed by c and the product x*y is
// nonzero only when source(x) = target(y).

#include "quivkit/algebra.hpp"
#include "quivkit/vquiver.hpp"

#include <memory>
#include <vector>

namespace quivkit {

struct PathWord {
  std::vector<Index> arrows;  // arrow indices in written order; empty for e_v
  int vertex = 0;             // the vertex of an idempotent, unused otherwise
  int source = 0;
  int target = 0;
  int length() const { return static_cast<int>(arrows.size()); }
};

template <ExactField S>
struct PathAlgebra {
  VQuiver quiver;
  int level = 2;
  AlgebraPtr<S> algebra;
  std::vector<PathWord> paths;  // one per basis element of `algebra`

  Index idempotent_index(int vertex) const { return vertex; }
  Index arrow_index(Index arrow) const { return quiver.vertex_count() + arrow; }
  /// Span of the paths of length >= m.
  Subspace<S> paths_from_length(int m) const;
};

template <ExactField S>
using PathAlgebraPtr = std::shared_ptr<const PathAlgebra<S>>;

/// Throws LEVEL_TOO_SMALL for level < 2.
template <ExactField S>
PathAlgebraPtr<S> build_kvq(const FieldSpec& field, const VQuiver& vq, int level);

/// Number of paths of length < level, from powers of the adjacency matrix.
Index path_count_by_adjacency(const VQuiver& vq, int level);

/// The unique algebra map k[[VQ]]/J^n -> A restricting to the given images
/// of the vertex idempotents and of the arrow basis.
template <ExactField S>
AlgMorphism<S> universal_map(const PathAlgebra<S>& t, AlgebraPtr<S> target,
                             const std::vector<Vec<S>>& vertex_images,
                             const std::vector<Vec<S>>& arrow_images);

/// k[[rho]] between already built truncations of the source and target.
template <ExactField S>
AlgMorphism<S> kvq_on_map(const VQuiverMap<S>& rho, const PathAlgebra<S>& source,
                          const PathAlgebra<S>& target);

template <ExactField S>
PathAlgebraPtr<S> cpa(const FieldSpec& field, const Quiver& q, int level);

/// CPA(iota) = k[[V(iota)]] for an injective quiver map Q -> R, a map CPA(R) -> CPA(Q).
template <ExactField S>
AlgMorphism<S> cpa_on_inclusion(const QuiverMap& iota, const PathAlgebra<S>& cpa_r,
                                const PathAlgebra<S>& cpa_q);

template <ExactField S>
PathAlgebraPtr<S> k2vq(const FieldSpec& field, const VQuiver& vq) {
  return build_kvq<S>(field, vq, 2);
}

#define QUIVKIT_EXTERN_PATHALG(S)                                                                \
  extern template struct PathAlgebra<S>;                                                         \
  extern template PathAlgebraPtr<S> build_kvq<S>(const FieldSpec&, const VQuiver&, int);         \
  extern template AlgMorphism<S> universal_map<S>(const PathAlgebra<S>&, AlgebraPtr<S>,          \
                                                  const std::vector<Vec<S>>&,                    \
                                                  const std::vector<Vec<S>>&);                   \
  extern template AlgMorphism<S> kvq_on_map<S>(const VQuiverMap<S>&, const PathAlgebra<S>&,      \
                                               const PathAlgebra<S>&);                           \
  extern template PathAlgebraPtr<S> cpa<S>(const FieldSpec&, const Quiver&, int);                \
  extern template AlgMorphism<S> cpa_on_inclusion<S>(const QuiverMap&, const PathAlgebra<S>&,    \
                                                     const PathAlgebra<S>&);

QUIVKIT_EXTERN_PATHALG(Rational)
QUIVKIT_EXTERN_PATHALG(ModP)

}  // namespace quivkit
