#pragma once

// The adjunction k[[-]] -| GQ between Vquivers and pointed algebras: the
// hom-set maps Psi and Phi, unit and counit, the right adjoint of GQ into
// k2[[-]], factorization through [id]_1, and the equivalence with algebras
// presented by relation ideals up to the action of [id]_1.

#include "quivkit/gabriel.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace quivkit {

/// Psi(rho): k[[VQ]] -> A for rho: VQ -> GQ(A).  Vertex e goes to the lifted
/// idempotent of rho(e) (0 for the point), arrow a to t(rho(a)).  The source
/// truncation must be at least that of A.
template <ExactField S>
AlgMorphism<S> psi(const VQuiverMap<S>& rho, const PathAlgebra<S>& source, const GabrielQuiver<S>& g);

/// Phi(alpha): VQ -> GQ(A), read off from the vertex idempotents and arrows.
template <ExactField S>
VQuiverMap<S> phi(const AlgMorphism<S>& alpha, const PathAlgebra<S>& source, const GabrielQuiver<S>& g);

/// Phi(id): VQ -> GQ(k[[VQ]]/J^n).  Always an isomorphism.
template <ExactField S>
VQuiverMap<S> unit(const PathAlgebra<S>& t);

template <ExactField S>
struct Counit {
  GabrielQuiver<S> gabriel;
  PathAlgebraPtr<S> presentation;  // k[[GQ(A)]] at the presentation level
  AlgMorphism<S> epsilon;          // Psi(id_GQ(A))
  Ideal<S> kernel;                 // K_A, contained in J^2
  QuotientAlgebra<S> quotient;     // k[[GQ(A)]] / K_A
  AlgMorphism<S> epsilon_infty;    // the induced isomorphism k[[GQ(A)]] / K_A -> A
};

/// Throws INTERNAL if epsilon is not surjective, K_A is not inside J^2 or
/// the induced map on the quotient is not invertible.  The presentation
/// level defaults to max(2, truncation of A); a larger level gives a larger
/// kernel, e.g. the relation cb of the triangle quotient appears from level 3.
template <ExactField S>
Counit<S> counit(const AlgebraPtr<S>& a, std::optional<int> level = std::nullopt);

template <ExactField S>
Counit<S> counit(const GabrielQuiver<S>& g, std::optional<int> level = std::nullopt);

/// Psi(GQ(alpha) o rho) ~1 alpha o Psi(rho) for rho: VQ -> GQ(A), alpha: A -> B.
template <ExactField S>
bool naturality_check_second_var(const PathAlgebra<S>& t, const VQuiverMap<S>& rho,
                                 const AlgMorphism<S>& alpha, const GabrielQuiver<S>& ga,
                                 const GabrielQuiver<S>& gb);

/// Psi(rho o sigma) ~1 Psi(rho) o k[[sigma]] for sigma: VR -> VQ, rho: VQ -> GQ(A).
template <ExactField S>
bool naturality_check_first_var(const PathAlgebra<S>& tr, const PathAlgebra<S>& tq,
                                const VQuiverMap<S>& sigma, const VQuiverMap<S>& rho,
                                const GabrielQuiver<S>& g);

/// alpha: A -> k2[[VQ]] for rho: GQ(A) -> VQ, using A = Sigma + t(J/J^2) + J^2:
/// lifted idempotents go to rho of their vertex, section columns to the
/// arrows rho(j + J^2), and J^2 to zero.  Multiplicativity is checked.
template <ExactField S>
AlgMorphism<S> right_adjoint_phi(const VQuiverMap<S>& rho, const GabrielQuiver<S>& g,
                                 const PathAlgebra<S>& target);

/// Inverse direction: the Vquiver map GQ(A) -> VQ of alpha: A -> k2[[VQ]].
template <ExactField S>
VQuiverMap<S> right_adjoint_rho(const AlgMorphism<S>& alpha, const GabrielQuiver<S>& g,
                                const PathAlgebra<S>& target);

/// delta in [id]_1 with alpha = beta o delta, for surjective alpha ~1 beta
/// out of k[[VQ]].  delta is conjugation by 1 + v with beta(v) = w (moving
/// beta's vertex images onto alpha's) followed by a -> a + x_a where x_a is
/// a path combination in J^2 with beta'(x_a) = (alpha - beta')(a).
template <ExactField S>
AlgMorphism<S> factor_delta(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, const PathAlgebra<S>& t);

/// Ideals of k[[VQ]] inside J^2 up to the action of [id]_1.
template <ExactField S>
struct IdealOrbitClass {
  PathAlgebraPtr<S> parent;
  Ideal<S> representative;
  QuotientAlgebra<S> quotient;
};

/// Throws NOT_AN_IDEAL unless the ideal lies in J^2 of the path algebra.
template <ExactField S>
IdealOrbitClass<S> orbit_class(const PathAlgebraPtr<S>& parent, const Ideal<S>& ideal);

/// The isomorphism k[[VQ]]/I -> k[[VQ]]/I' induced by delta with delta(I) = I'.
/// Throws DELTA_INVALID unless delta is an endomorphism ~1 id carrying I onto I'.
template <ExactField S>
AlgMorphism<S> gamma(const QuotientAlgebra<S>& qi, const QuotientAlgebra<S>& qj, const AlgMorphism<S>& delta);

template <ExactField S>
struct GQInfty {
  VQuiver vquiver;
  IdealOrbitClass<S> relations;
  Counit<S> counit;
};

/// (GQ(A), [K_A]).
template <ExactField S>
GQInfty<S> gq_infty(const AlgebraPtr<S>& a, std::optional<int> level = std::nullopt);

/// A member I' = delta(I) of an orbit class with its witness delta.
template <ExactField S>
struct OrbitWitness {
  IdealOrbitClass<S> member;
  AlgMorphism<S> delta;
};

template <ExactField S>
OrbitWitness<S> trivial_witness(const IdealOrbitClass<S>& c);

/// gamma_{KK'}^-1 o k[[rho]]~ o gamma_{II'}: k[[VQ]]/I -> k[[VR]]/K, for
/// surjective rho with k[[rho]](I') contained in K'.  Throws NOT_SURJECTIVE
/// and WITNESS_INVALID.
template <ExactField S>
AlgMorphism<S> kinfty_on_map(const VQuiverMap<S>& rho, const IdealOrbitClass<S>& src,
                             const IdealOrbitClass<S>& tgt, const OrbitWitness<S>& src_witness,
                             const OrbitWitness<S>& tgt_witness);

/// Same, with witnesses found by search: first the representatives
/// themselves, then members delta(I) for delta from the bounded family used
/// by same_ideal_orbit.  Throws UNDECIDED when none fits within the budget.
template <ExactField S>
AlgMorphism<S> kinfty_on_map(const VQuiverMap<S>& rho, const IdealOrbitClass<S>& src,
                             const IdealOrbitClass<S>& tgt, std::size_t search_budget = 2000);

/// Searches [id]_1 for delta with delta(I) = I'.  Returns nullopt when an
/// invariant (dimensions of the blocks e_t I e_s or of I + J^m) separates
/// the orbits, a witness when one is found among conjugations by 1 + c p and
/// arrow moves a -> a + c q (p a path, q a parallel path of length >= 2) and
/// their pairwise composites, and throws UNDECIDED once the budget is spent.
template <ExactField S>
std::optional<AlgMorphism<S>> same_ideal_orbit(const PathAlgebra<S>& t, const Ideal<S>& i,
                                               const Ideal<S>& j, std::size_t search_budget = 2000);

/// w in J with delta(x) = (1+w) x (1+w)^-1 for all x, if there is one.
template <ExactField S>
std::optional<Vec<S>> inner_witness(const PathAlgebra<S>& t, const AlgMorphism<S>& delta);

#define QUIVKIT_EXTERN_ADJUNCTION(S)                                                                   \
  extern template AlgMorphism<S> psi<S>(const VQuiverMap<S>&, const PathAlgebra<S>&,                   \
                                        const GabrielQuiver<S>&);                                      \
  extern template VQuiverMap<S> phi<S>(const AlgMorphism<S>&, const PathAlgebra<S>&,                   \
                                       const GabrielQuiver<S>&);                                       \
  extern template VQuiverMap<S> unit<S>(const PathAlgebra<S>&);                                        \
  extern template struct Counit<S>;                                                                    \
  extern template Counit<S> counit<S>(const AlgebraPtr<S>&, std::optional<int>);                        \
  extern template Counit<S> counit<S>(const GabrielQuiver<S>&, std::optional<int>);                     \
  extern template bool naturality_check_second_var<S>(const PathAlgebra<S>&, const VQuiverMap<S>&,     \
                                                      const AlgMorphism<S>&, const GabrielQuiver<S>&,  \
                                                      const GabrielQuiver<S>&);                        \
  extern template bool naturality_check_first_var<S>(const PathAlgebra<S>&, const PathAlgebra<S>&,    \
                                                     const VQuiverMap<S>&, const VQuiverMap<S>&,       \
                                                     const GabrielQuiver<S>&);                         \
  extern template AlgMorphism<S> right_adjoint_phi<S>(const VQuiverMap<S>&, const GabrielQuiver<S>&,   \
                                                      const PathAlgebra<S>&);                          \
  extern template VQuiverMap<S> right_adjoint_rho<S>(const AlgMorphism<S>&, const GabrielQuiver<S>&,   \
                                                     const PathAlgebra<S>&);                           \
  extern template AlgMorphism<S> factor_delta<S>(const AlgMorphism<S>&, const AlgMorphism<S>&,         \
                                                 const PathAlgebra<S>&);                               \
  extern template IdealOrbitClass<S> orbit_class<S>(const PathAlgebraPtr<S>&, const Ideal<S>&);        \
  extern template AlgMorphism<S> gamma<S>(const QuotientAlgebra<S>&, const QuotientAlgebra<S>&,        \
                                          const AlgMorphism<S>&);                                      \
  extern template GQInfty<S> gq_infty<S>(const AlgebraPtr<S>&, std::optional<int>);                     \
  extern template OrbitWitness<S> trivial_witness<S>(const IdealOrbitClass<S>&);                       \
  extern template AlgMorphism<S> kinfty_on_map<S>(const VQuiverMap<S>&, const IdealOrbitClass<S>&,     \
                                                  const IdealOrbitClass<S>&, const OrbitWitness<S>&,   \
                                                  const OrbitWitness<S>&);                             \
  extern template AlgMorphism<S> kinfty_on_map<S>(const VQuiverMap<S>&, const IdealOrbitClass<S>&,     \
                                                  const IdealOrbitClass<S>&, std::size_t);             \
  extern template std::optional<AlgMorphism<S>> same_ideal_orbit<S>(const PathAlgebra<S>&,            \
                                                                    const Ideal<S>&, const Ideal<S>&,  \
                                                                    std::size_t);                      \
  extern template std::optional<Vec<S>> inner_witness<S>(const PathAlgebra<S>&, const AlgMorphism<S>&);

QUIVKIT_EXTERN_ADJUNCTION(Rational)
QUIVKIT_EXTERN_ADJUNCTION(ModP)

}  // namespace quivkit
