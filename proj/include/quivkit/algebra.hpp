#pragma once

// Finite-dimensional pointed associative algebras given by structure
// constants, together with their radical filtration, ideals, quotients and
// algebra homomorphisms.

#include "quivkit/linalg.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quivkit {

/// Sparse multiplication table: products[i * dim + j] holds b_i b_j.
template <ExactField S>
class StructureTable {
 public:
  using Term = std::pair<Index, S>;

  StructureTable() = default;
  StructureTable(Index dim, const std::vector<Vec<S>>& products);

  Index dim() const { return dim_; }
  const std::vector<Term>& terms(Index i, Index j) const { return table_[i * dim_ + j]; }
  Vec<S> product(Index i, Index j) const;
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const;
  Mat<S> left_mul(const Vec<S>& x) const;
  Mat<S> right_mul(const Vec<S>& x) const;

 private:
  Index dim_ = 0;
  std::vector<std::vector<Term>> table_;
};

/// Raw input for `validate_algebra`.
template <ExactField S>
struct AlgebraData {
  FieldSpec field;
  std::vector<std::string> labels;
  std::vector<Vec<S>> products;  // products[i * dim + j] = b_i b_j
  Vec<S> unit;
};

/// A/J(A) with its canonical complete set of orthogonal idempotents.
template <ExactField S>
struct Residue {
  Quotient<S> quotient;              // representatives in A, projection A -> A/J
  StructureTable<S> table;           // multiplication of A/J in representative coordinates
  std::vector<Vec<S>> idempotents;   // primitive idempotents of A/J, canonically ordered
  Index dim() const { return quotient.dim(); }
  Vec<S> project(const Vec<S>& x) const { return quotient.projection * x; }
};

template <ExactField S>
class FinAlgebra {
 public:
  const FieldSpec& field() const { return field_; }
  Index dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const std::string& label) const;
  const Vec<S>& unit() const { return unit_; }
  Vec<S> basis_vector(Index i) const { return unit_vector<S>(dim(), i); }
  Vec<S> zero() const { return Vec<S>::Zero(dim()); }
  S scalar(long num, long den = 1) const { return make_scalar<S>(field_, num, den); }

  const StructureTable<S>& table() const { return table_; }
  Vec<S> product(Index i, Index j) const { return table_.product(i, j); }
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return table_.mul(x, y); }
  Vec<S> pow(const Vec<S>& x, std::uint64_t n) const;
  Mat<S> left_mul(const Vec<S>& x) const { return table_.left_mul(x); }
  Mat<S> right_mul(const Vec<S>& x) const { return table_.right_mul(x); }
  /// 1 + x is always invertible for x in J; returns (1 + x)^-1.
  Vec<S> unipotent_inverse(const Vec<S>& x) const;

  Subspace<S> full() const { return Subspace<S>::full(dim()); }
  const Subspace<S>& radical() const { return filtration_[1]; }
  /// J^n; J^0 = A and J^n = 0 for n >= truncation_level().
  const Subspace<S>& radical_power(int n) const;
  /// [J^0 = A, J^1, ..., J^n = 0].
  const std::vector<Subspace<S>>& filtration() const { return filtration_; }
  /// Least n with J^n = 0.
  int truncation_level() const { return static_cast<int>(filtration_.size()) - 1; }
  const Residue<S>& residue() const { return residue_; }

 private:
  template <ExactField T>
  friend std::shared_ptr<const FinAlgebra<T>> validate_algebra(AlgebraData<T> data);

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  StructureTable<S> table_;
  Vec<S> unit_;
  std::vector<Subspace<S>> filtration_;
  Residue<S> residue_;
  Subspace<S> zero_;
};

template <ExactField S>
using AlgebraPtr = std::shared_ptr<const FinAlgebra<S>>;

/// Checks associativity, the unit, nilpotency of the radical and
/// pointedness, then caches the radical filtration and A/J.
template <ExactField S>
AlgebraPtr<S> validate_algebra(AlgebraData<S> data);

/// Radical as the kernel of the trace form (x, y) -> tr(L_xy).  Requires
/// characteristic 0 or p > dim; throws CHAR_TOO_SMALL otherwise.
template <ExactField S>
Subspace<S> radical_trace_form(const FieldSpec& field, const StructureTable<S>& table);

/// Radical in characteristic p: commutator ideal C plus the preimage of the
/// kernel of a high Frobenius power on A/C.  Sound for pointed algebras of any
/// dimension; throws NOT_POINTED when A/J turns out not to be commutative.
template <ExactField S>
Subspace<S> radical_frobenius(const FieldSpec& field, const StructureTable<S>& table,
                              const Vec<S>& unit);

/// Dispatches to the trace form when it is sound, else to the Frobenius route.
template <ExactField S>
Subspace<S> radical(const FieldSpec& field, const StructureTable<S>& table, const Vec<S>& unit);

/// Two-sided ideal closure of a subspace.
template <ExactField S>
Subspace<S> ideal_closure(const StructureTable<S>& table, const Subspace<S>& generators);

/// Renders x in the basis of A, e.g. "a + 2*cb" or "-1/2*e1".
template <ExactField S>
std::string format_element(const FinAlgebra<S>& a, const Vec<S>& x);

template <ExactField S>
struct Ideal {
  AlgebraPtr<S> parent;
  Subspace<S> space;
};

/// Throws NOT_AN_IDEAL unless `space` is a two-sided ideal.
template <ExactField S>
Ideal<S> make_ideal(AlgebraPtr<S> a, Subspace<S> space);

template <ExactField S>
Ideal<S> ideal_generated_by(AlgebraPtr<S> a, const std::vector<Vec<S>>& generators);

/// I is contained in J^2.
template <ExactField S>
bool is_relation_ideal(const Ideal<S>& ideal);

/// Least n with J^n contained in I.  At finite truncation this always
/// exists (J^n = 0 for the stored truncation level), so every ideal of a
/// represented algebra is admissible in this sense.
template <ExactField S>
int admissibility_index(const Ideal<S>& ideal);

template <ExactField S>
bool is_admissible(const Ideal<S>& ideal) {
  return admissibility_index(ideal) >= 0;
}

template <ExactField S>
struct AlgMorphism {
  AlgebraPtr<S> source;
  AlgebraPtr<S> target;
  Mat<S> matrix;  // target dim x source dim
  bool surjective = false;

  Vec<S> operator()(const Vec<S>& x) const { return matrix * x; }
};

/// Checks shape, unit, multiplicativity and surjectivity on radical
/// quotients, and re-verifies alpha(J(A)) in J(B).
template <ExactField S>
AlgMorphism<S> validate_morphism(AlgebraPtr<S> source, AlgebraPtr<S> target, Mat<S> matrix);

template <ExactField S>
AlgMorphism<S> identity_morphism(AlgebraPtr<S> a);

/// beta o alpha; throws NOT_COMPOSABLE unless alpha's target is beta's source.
template <ExactField S>
AlgMorphism<S> compose(const AlgMorphism<S>& beta, const AlgMorphism<S>& alpha);

template <ExactField S>
struct QuotientAlgebra {
  AlgebraPtr<S> algebra;
  AlgMorphism<S> projection;  // pi_I
  Mat<S> lift;                // columns: chosen representatives in A of the basis of A/I
};

/// A/I on representatives chosen greedily from the basis of A; each basis
/// vector of A/I keeps the label of its representative.
template <ExactField S>
QuotientAlgebra<S> quotient_algebra(AlgebraPtr<S> a, const Ideal<S>& ideal);

/// alpha(J^n(A)) = J^n(B) for every n up to the larger truncation level.
template <ExactField S>
bool image_of_radical_check(const AlgMorphism<S>& alpha);

#define QUIVKIT_EXTERN_ALGEBRA(S)                                                                 \
  extern template class StructureTable<S>;                                                        \
  extern template class FinAlgebra<S>;                                                            \
  extern template AlgebraPtr<S> validate_algebra<S>(AlgebraData<S>);                              \
  extern template Subspace<S> radical_trace_form<S>(const FieldSpec&, const StructureTable<S>&);  \
  extern template Subspace<S> radical_frobenius<S>(const FieldSpec&, const StructureTable<S>&,    \
                                                   const Vec<S>&);                                \
  extern template Subspace<S> radical<S>(const FieldSpec&, const StructureTable<S>&,              \
                                         const Vec<S>&);                                          \
  extern template Subspace<S> ideal_closure<S>(const StructureTable<S>&, const Subspace<S>&);     \
  extern template std::string format_element<S>(const FinAlgebra<S>&, const Vec<S>&);             \
  extern template Ideal<S> make_ideal<S>(AlgebraPtr<S>, Subspace<S>);                             \
  extern template Ideal<S> ideal_generated_by<S>(AlgebraPtr<S>, const std::vector<Vec<S>>&);      \
  extern template bool is_relation_ideal<S>(const Ideal<S>&);                                     \
  extern template int admissibility_index<S>(const Ideal<S>&);                                    \
  extern template AlgMorphism<S> validate_morphism<S>(AlgebraPtr<S>, AlgebraPtr<S>, Mat<S>);      \
  extern template AlgMorphism<S> identity_morphism<S>(AlgebraPtr<S>);                             \
  extern template AlgMorphism<S> compose<S>(const AlgMorphism<S>&, const AlgMorphism<S>&);        \
  extern template QuotientAlgebra<S> quotient_algebra<S>(AlgebraPtr<S>, const Ideal<S>&);         \
  extern template bool image_of_radical_check<S>(const AlgMorphism<S>&);

QUIVKIT_EXTERN_ALGEBRA(Rational)
QUIVKIT_EXTERN_ALGEBRA(ModP)

}  // namespace quivkit
