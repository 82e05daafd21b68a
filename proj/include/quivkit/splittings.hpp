#pragma once

// Lifting idempotents from A/J, the algebra section s: A/J -> A, the
// bimodule section t: J/J^2 -> J, and conjugators between sections.

#include "quivkit/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quivkit {

template <ExactField S>
struct Splitting {
  AlgebraPtr<S> parent;
  /// idems[i] lifts the i-th canonical residue idempotent; they are
  /// orthogonal, sum to 1 and span Sigma = s(A/J).
  std::vector<Vec<S>> idems;
  /// Columns: t applied to a basis of J/J^2.  Column k lies in
  /// idems[blocks[k].second] * J * idems[blocks[k].first].
  Mat<S> section;
  std::vector<std::pair<int, int>> blocks;  // (source idempotent, target idempotent)
  /// Coordinates on J/J^2: projection * section = I and projection kills J^2.
  /// Only meaningful on elements of J.
  Mat<S> projection;

  Index arrow_count() const { return section.cols(); }
  /// s as a matrix from residue coordinates (A/J) to A.
  Mat<S> s_matrix() const;
};

/// Complete set of primitive orthogonal idempotents; element i lifts the
/// i-th residue idempotent of A.
template <ExactField S>
std::vector<Vec<S>> lift_idempotents(const AlgebraPtr<S>& a);

/// Idempotent lift of x by x <- 3x^2 - 2x^3; x must be idempotent modulo J.
template <ExactField S>
Vec<S> idempotize(const FinAlgebra<S>& a, Vec<S> x);

template <ExactField S>
Splitting<S> make_splitting(const AlgebraPtr<S>& a);

/// Splitting with prescribed idempotents.  Column k of t is f u e where u
/// runs over the greedy complement of J^2 in f J e + J^2; the classes of the
/// columns modulo J^2 therefore depend only on A, not on the idempotents.
template <ExactField S>
Splitting<S> splitting_with_idempotents(const AlgebraPtr<S>& a, std::vector<Vec<S>> idems);

/// Checks and completes user-supplied splitting data (blocks, projection).
/// Throws NOT_VALIDATED when the data is not a splitting.
template <ExactField S>
Splitting<S> splitting_from(const AlgebraPtr<S>& a, std::vector<Vec<S>> idems, Mat<S> section);

/// The splitting x -> (1+w) x (1+w)^-1 applied to both s and t.
template <ExactField S>
Splitting<S> conjugate_splitting(const Splitting<S>& s, const Vec<S>& w);

/// w in J with (1+w) s2(z) (1+w)^-1 = s1(z) for every z in A/J.  Among all
/// solutions the one with free coordinates zero is returned.
template <ExactField S>
Vec<S> conjugator(const Splitting<S>& s1, const Splitting<S>& s2);

/// (1+w) x (1+w)^-1.
template <ExactField S>
Vec<S> conjugate(const FinAlgebra<S>& a, const Vec<S>& w, const Vec<S>& x);

/// Decides whether e - f lies in J and, if so, returns w in J with
/// (1+w) e (1+w)^-1 = f.
template <ExactField S>
std::optional<Vec<S>> same_orbit(const AlgebraPtr<S>& a, const Vec<S>& e, const Vec<S>& f);

#define QUIVKIT_EXTERN_SPLITTINGS(S)                                                              \
  extern template struct Splitting<S>;                                                            \
  extern template std::vector<Vec<S>> lift_idempotents<S>(const AlgebraPtr<S>&);                  \
  extern template Vec<S> idempotize<S>(const FinAlgebra<S>&, Vec<S>);                             \
  extern template Splitting<S> make_splitting<S>(const AlgebraPtr<S>&);                           \
  extern template Splitting<S> splitting_with_idempotents<S>(const AlgebraPtr<S>&,                \
                                                             std::vector<Vec<S>>);                \
  extern template Splitting<S> splitting_from<S>(const AlgebraPtr<S>&, std::vector<Vec<S>>,       \
                                                 Mat<S>);                                         \
  extern template Splitting<S> conjugate_splitting<S>(const Splitting<S>&, const Vec<S>&);        \
  extern template Vec<S> conjugator<S>(const Splitting<S>&, const Splitting<S>&);                 \
  extern template Vec<S> conjugate<S>(const FinAlgebra<S>&, const Vec<S>&, const Vec<S>&);        \
  extern template std::optional<Vec<S>> same_orbit<S>(const AlgebraPtr<S>&, const Vec<S>&,        \
                                                      const Vec<S>&);

QUIVKIT_EXTERN_SPLITTINGS(Rational)
QUIVKIT_EXTERN_SPLITTINGS(ModP)

}  // namespace quivkit
