#pragma once

// The Gabriel quiver functor, the pointed-set functor GQ0 and the
// congruences ~0, ~1, ~n on algebra morphisms.

#include "quivkit/pathalg.hpp"
#include "quivkit/splittings.hpp"
#include "quivkit/vquiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivkit {

/// Vertex i is the orbit of splitting.idems[i] (equivalently the i-th
/// residue idempotent); arrow k is the class of splitting.section column k
/// in J/J^2.  Labels are taken from pivot basis elements, so they and the
/// arrow coordinates do not depend on the splitting.
template <ExactField S>
struct GabrielQuiver {
  VQuiver vquiver;
  Splitting<S> splitting;

  const AlgebraPtr<S>& algebra() const { return splitting.parent; }
};

template <ExactField S>
GabrielQuiver<S> gq(const AlgebraPtr<S>& a);

template <ExactField S>
GabrielQuiver<S> gq(const Splitting<S>& s);

/// Index of the residue idempotent that x (an idempotent of A) reduces to,
/// kPoint when x lies in J; INTERNAL when x is not primitive modulo J.
template <ExactField S>
int orbit_of(const FinAlgebra<S>& a, const Vec<S>& x);

template <ExactField S>
VQuiverMap<S> gq_on_morphism(const AlgMorphism<S>& alpha, const GabrielQuiver<S>& ga,
                             const GabrielQuiver<S>& gb);

template <ExactField S>
VQuiverMap<S> gq_on_morphism(const AlgMorphism<S>& alpha);

/// level 0: (alpha - beta)(A) in J(B); level 1 adds (alpha - beta)(J(A)) in J^2(B).
template <ExactField S>
bool check_sim(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, int level);

/// (alpha - beta)(J^m(A)) in J^(m+1)(B) for all m <= n.
template <ExactField S>
bool check_sim_n(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, int n);

/// GQ on the ~1 class of alpha.  When a second representative is supplied
/// it must be ~1 alpha (NOT_SIM1 otherwise) and must give the same map.
template <ExactField S>
VQuiverMap<S> gq_tilde(const AlgMorphism<S>& alpha,
                       const std::optional<AlgMorphism<S>>& other = std::nullopt);

/// Vertex labels of GQ(A), i.e. the non-point elements of GQ0(A).
template <ExactField S>
std::vector<std::string> gq0(const AlgebraPtr<S>& a);

template <ExactField S>
std::vector<int> gq0_on_morphism(const AlgMorphism<S>& alpha);

/// k0[[Q0*]]: the product of copies of k indexed by the non-point labels.
template <ExactField S>
PathAlgebraPtr<S> k0(const FieldSpec& field, const std::vector<std::string>& points);

/// The two directions of Hom_PSet(GQ0(A), Q0*) = Hom_PAlg0(A, k0[[Q0*]]).
/// pointed_map sends vertex i of GQ(A) to an index of `target` or kPoint.
template <ExactField S>
AlgMorphism<S> semisimple_left(const AlgebraPtr<S>& a, const PathAlgebraPtr<S>& target,
                               const std::vector<int>& pointed_map);

template <ExactField S>
std::vector<int> semisimple_right(const AlgMorphism<S>& alpha);

/// True when no two vertices are joined both by an arrow and by a longer
/// path.  Conjecturally exactly the quivers whose [id]_1 consists of inner
/// automorphisms; exercised empirically in the tests.
bool no_arrow_with_longer_parallel_path(const VQuiver& vq);

#define QUIVKIT_EXTERN_GABRIEL(S)                                                                   \
  extern template struct GabrielQuiver<S>;                                                          \
  extern template GabrielQuiver<S> gq<S>(const AlgebraPtr<S>&);                                     \
  extern template GabrielQuiver<S> gq<S>(const Splitting<S>&);                                      \
  extern template int orbit_of<S>(const FinAlgebra<S>&, const Vec<S>&);                             \
  extern template VQuiverMap<S> gq_on_morphism<S>(const AlgMorphism<S>&, const GabrielQuiver<S>&,   \
                                                  const GabrielQuiver<S>&);                         \
  extern template VQuiverMap<S> gq_on_morphism<S>(const AlgMorphism<S>&);                           \
  extern template bool check_sim<S>(const AlgMorphism<S>&, const AlgMorphism<S>&, int);             \
  extern template bool check_sim_n<S>(const AlgMorphism<S>&, const AlgMorphism<S>&, int);           \
  extern template VQuiverMap<S> gq_tilde<S>(const AlgMorphism<S>&,                                  \
                                            const std::optional<AlgMorphism<S>>&);                  \
  extern template std::vector<std::string> gq0<S>(const AlgebraPtr<S>&);                            \
  extern template std::vector<int> gq0_on_morphism<S>(const AlgMorphism<S>&);                       \
  extern template PathAlgebraPtr<S> k0<S>(const FieldSpec&, const std::vector<std::string>&);       \
  extern template AlgMorphism<S> semisimple_left<S>(const AlgebraPtr<S>&, const PathAlgebraPtr<S>&, \
                                                    const std::vector<int>&);                       \
  extern template std::vector<int> semisimple_right<S>(const AlgMorphism<S>&);

QUIVKIT_EXTERN_GABRIEL(Rational)
QUIVKIT_EXTERN_GABRIEL(ModP)

}  // namespace quivkit
