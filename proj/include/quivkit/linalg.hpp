#pragma once

// Exact dense linear algebra over a field: echelon forms, kernels and a
// canonical Subspace type.  Subspaces are stored in reduced row-echelon form,
// so two subspaces are equal exactly when their stored bases are equal.

#include "quivkit/error.hpp"
#include "quivkit/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace quivkit {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class S>
Vec<S> unit_vector(Index n, Index i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = S(1);
  return v;
}

template <ExactField S>
struct Echelon {
  Mat<S> reduced;              // same shape as the input; zero rows at the bottom
  std::vector<Index> pivots;   // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <ExactField S>
Echelon<S> rref(Mat<S> m);

template <ExactField S>
Index rank(const Mat<S>& m) {
  return rref<S>(m).rank();
}

/// Particular solution of m x = b with every free variable set to zero.
template <ExactField S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b);

template <ExactField S>
std::optional<Mat<S>> inverse(const Mat<S>& m);

template <ExactField S>
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of k^ambient.
  explicit Subspace(Index ambient) : ambient_(ambient), rows_(0, ambient) {}

  static Subspace full(Index ambient);
  /// Span of the columns of `vectors`.
  static Subspace span(const Mat<S>& vectors);
  static Subspace span(Index ambient, const std::vector<Vec<S>>& vectors);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one RREF row per basis vector.
  const Mat<S>& rows() const { return rows_; }
  /// Canonical basis as columns.
  Mat<S> basis() const { return rows_.transpose(); }
  Vec<S> vector(Index i) const { return rows_.row(i).transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vec<S>& v) const;
  /// True when `other` is a subset of this subspace.
  bool contains(const Subspace& other) const;
  /// Coordinates of `v` in the canonical basis; v must lie in the subspace.
  Vec<S> coordinates(const Vec<S>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  Index ambient_ = 0;
  Mat<S> rows_;
  std::vector<Index> pivots_;
};

template <ExactField S>
Subspace<S> kernel(const Mat<S>& m);

/// Column space of m.
template <ExactField S>
Subspace<S> image(const Mat<S>& m);

/// Image of the subspace `sub` under the linear map m.
template <ExactField S>
Subspace<S> image(const Mat<S>& m, const Subspace<S>& sub);

/// {x : m x in target}.
template <ExactField S>
Subspace<S> preimage(const Mat<S>& m, const Subspace<S>& target);

template <ExactField S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& w);

template <ExactField S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& w);

template <ExactField S>
struct Quotient {
  /// Columns whose classes form a basis of ambient/sub.
  Mat<S> representatives;
  /// q x n matrix: projection * representatives = identity, projection * sub = 0.
  Mat<S> projection;
  Index dim() const { return representatives.cols(); }
};

/// Throws NOT_A_SUBSPACE unless sub is contained in ambient.
template <ExactField S>
Quotient<S> quotient_basis(const Subspace<S>& ambient, const Subspace<S>& sub);

/// A complement W with ambient = sub (+) W.  W is built greedily from the
/// canonical basis of `ambient` in order.  When `blocks` is non-empty the
/// blocks must form a direct sum along which ambient and sub both split, and
/// W is the sum of the blockwise complements.
template <ExactField S>
Subspace<S> complement(const Subspace<S>& ambient, const Subspace<S>& sub,
                       const std::vector<Subspace<S>>& blocks = {});

/// Same as `complement`, but returns the chosen vectors (columns) in order
/// instead of their canonical span.
template <ExactField S>
Mat<S> complement_vectors(const Subspace<S>& ambient, const Subspace<S>& sub,
                          const std::vector<Subspace<S>>& blocks = {});

/// Incremental Gaussian elimination; reports whether each new vector is
/// independent of those already accepted.
template <ExactField S>
class Reducer {
 public:
  explicit Reducer(Index ambient) : ambient_(ambient) {}
  Vec<S> reduce(Vec<S> v) const;
  bool add(const Vec<S>& v);
  bool independent(const Vec<S>& v) const { return !all_zero(reduce(v)); }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Vec<S>>& rows() const { return rows_; }
  Subspace<S> span() const { return Subspace<S>::span(ambient_, rows_); }

 private:
  Index ambient_;
  std::vector<Vec<S>> rows_;
  std::vector<Index> pivots_;
};

#define QUIVKIT_EXTERN_LINALG(S)                                                                \
  extern template Echelon<S> rref<S>(Mat<S>);                                                   \
  extern template std::optional<Vec<S>> solve<S>(const Mat<S>&, const Vec<S>&);                 \
  extern template std::optional<Mat<S>> inverse<S>(const Mat<S>&);                              \
  extern template class Subspace<S>;                                                            \
  extern template class Reducer<S>;                                                             \
  extern template Subspace<S> kernel<S>(const Mat<S>&);                                         \
  extern template Subspace<S> image<S>(const Mat<S>&);                                          \
  extern template Subspace<S> image<S>(const Mat<S>&, const Subspace<S>&);                      \
  extern template Subspace<S> preimage<S>(const Mat<S>&, const Subspace<S>&);                   \
  extern template Subspace<S> sum<S>(const Subspace<S>&, const Subspace<S>&);                   \
  extern template Subspace<S> intersect<S>(const Subspace<S>&, const Subspace<S>&);             \
  extern template Quotient<S> quotient_basis<S>(const Subspace<S>&, const Subspace<S>&);        \
  extern template Subspace<S> complement<S>(const Subspace<S>&, const Subspace<S>&,             \
                                            const std::vector<Subspace<S>>&);                   \
  extern template Mat<S> complement_vectors<S>(const Subspace<S>&, const Subspace<S>&,          \
                                               const std::vector<Subspace<S>>&);

QUIVKIT_EXTERN_LINALG(Rational)
QUIVKIT_EXTERN_LINALG(ModP)

}  // namespace quivkit
