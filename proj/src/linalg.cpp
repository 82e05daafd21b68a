#include "quivkit/linalg.hpp"

#include <utility>

namespace quivkit {

template <ExactField S>
Echelon<S> rref(Mat<S> m) {
  Echelon<S> out;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <ExactField S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (b.size() != m.rows()) throw Error(Errc::DIMENSION_MISMATCH, "solve: right-hand side size");
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const Echelon<S> e = rref<S>(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    x(e.pivots[i]) = e.reduced(static_cast<Index>(i), m.cols());
  }
  return x;
}

template <ExactField S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  const Echelon<S> e = rref<S>(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return Mat<S>(e.reduced.rightCols(n));
}

template <ExactField S>
Subspace<S> Subspace<S>::full(Index ambient) {
  return span(Mat<S>::Identity(ambient, ambient));
}

template <ExactField S>
Subspace<S> Subspace<S>::span(const Mat<S>& vectors) {
  Echelon<S> e = rref<S>(vectors.transpose());
  Subspace out(vectors.rows());
  out.rows_ = e.reduced.topRows(e.rank());
  out.pivots_ = std::move(e.pivots);
  return out;
}

template <ExactField S>
Subspace<S> Subspace<S>::span(Index ambient, const std::vector<Vec<S>>& vectors) {
  Mat<S> m(ambient, static_cast<Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error(Errc::DIMENSION_MISMATCH, "span: vector size");
    m.col(static_cast<Index>(i)) = vectors[i];
  }
  return span(m);
}

template <ExactField S>
bool Subspace<S>::contains(const Vec<S>& v) const {
  if (v.size() != ambient_) throw Error(Errc::DIMENSION_MISMATCH, "contains: vector size");
  Vec<S> r = v;
  for (Index i = 0; i < dim(); ++i) {
    const S c = r(pivots_[i]);
    if (c.is_zero()) continue;
    for (Index j = pivots_[i]; j < ambient_; ++j) {
      if (!rows_(i, j).is_zero()) r(j) -= c * rows_(i, j);
    }
  }
  return all_zero(r);
}

template <ExactField S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::DIMENSION_MISMATCH, "contains: ambient");
  if (other.dim() > dim()) return false;
  for (Index i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

template <ExactField S>
Vec<S> Subspace<S>::coordinates(const Vec<S>& v) const {
  if (!contains(v)) throw Error(Errc::NOT_A_SUBSPACE, "coordinates: vector outside subspace");
  Vec<S> c(dim());
  for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
  return c;
}

template <ExactField S>
Subspace<S> kernel(const Mat<S>& m) {
  const Echelon<S> e = rref<S>(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> x = Vec<S>::Zero(n);
    x(f) = S(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      x(e.pivots[i]) = -e.reduced(static_cast<Index>(i), f);
    }
    basis.push_back(std::move(x));
  }
  return Subspace<S>::span(n, basis);
}

template <ExactField S>
Subspace<S> image(const Mat<S>& m) {
  return Subspace<S>::span(m);
}

template <ExactField S>
Subspace<S> image(const Mat<S>& m, const Subspace<S>& sub) {
  if (m.cols() != sub.ambient_dim()) throw Error(Errc::DIMENSION_MISMATCH, "image: map domain");
  return Subspace<S>::span(Mat<S>(m * sub.basis()));
}

template <ExactField S>
Subspace<S> preimage(const Mat<S>& m, const Subspace<S>& target) {
  if (m.rows() != target.ambient_dim()) {
    throw Error(Errc::DIMENSION_MISMATCH, "preimage: map codomain");
  }
  // x with m x in target  <=>  (m x, -y) in ker [m | -B] for some y.
  const Index n = m.cols();
  const Index d = target.dim();
  Mat<S> big(m.rows(), n + d);
  big.leftCols(n) = m;
  big.rightCols(d) = -target.basis();
  const Subspace<S> k = kernel<S>(big);
  return Subspace<S>::span(Mat<S>(k.basis().topRows(n)));
}

template <ExactField S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DIMENSION_MISMATCH, "sum: ambient");
  Mat<S> m(u.ambient_dim(), u.dim() + w.dim());
  m.leftCols(u.dim()) = u.basis();
  m.rightCols(w.dim()) = w.basis();
  return Subspace<S>::span(m);
}

template <ExactField S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& w) {
  if (u.ambient_dim() != w.ambient_dim()) {
    throw Error(Errc::DIMENSION_MISMATCH, "intersect: ambient");
  }
  Mat<S> m(u.ambient_dim(), u.dim() + w.dim());
  m.leftCols(u.dim()) = u.basis();
  m.rightCols(w.dim()) = -w.basis();
  const Subspace<S> k = kernel<S>(m);
  return Subspace<S>::span(Mat<S>(u.basis() * k.basis().topRows(u.dim())));
}

template <ExactField S>
Quotient<S> quotient_basis(const Subspace<S>& ambient, const Subspace<S>& sub) {
  if (!ambient.contains(sub)) {
    throw Error(Errc::NOT_A_SUBSPACE, "quotient_basis: sub is not contained in ambient");
  }
  Quotient<S> q;
  q.representatives = complement_vectors<S>(ambient, sub);
  const Index n = ambient.ambient_dim();
  const Index r = q.representatives.cols();
  // Coordinates of each standard vector in the basis [reps | sub | extension of ambient to k^n].
  Mat<S> frame(n, n);
  frame.leftCols(r) = q.representatives;
  frame.middleCols(r, sub.dim()) = sub.basis();
  Reducer<S> red(n);
  for (Index j = 0; j < r + sub.dim(); ++j) red.add(frame.col(j));
  Index next = r + sub.dim();
  for (Index i = 0; i < n && next < n; ++i) {
    const Vec<S> e = unit_vector<S>(n, i);
    if (red.add(e)) frame.col(next++) = e;
  }
  const std::optional<Mat<S>> inv = inverse<S>(frame);
  if (!inv) throw Error(Errc::INTERNAL, "quotient_basis: frame not invertible");
  q.projection = inv->topRows(r);
  return q;
}

namespace {

template <ExactField S>
void greedy_extend(const Subspace<S>& ambient, const Subspace<S>& sub, std::vector<Vec<S>>& out) {
  Reducer<S> red(ambient.ambient_dim());
  for (Index i = 0; i < sub.dim(); ++i) red.add(sub.vector(i));
  for (Index i = 0; i < ambient.dim(); ++i) {
    Vec<S> v = ambient.vector(i);
    if (red.add(v)) out.push_back(std::move(v));
  }
}

}  // namespace

template <ExactField S>
Mat<S> complement_vectors(const Subspace<S>& ambient, const Subspace<S>& sub,
                          const std::vector<Subspace<S>>& blocks) {
  if (!ambient.contains(sub)) {
    throw Error(Errc::NOT_A_SUBSPACE, "complement: sub is not contained in ambient");
  }
  const Index n = ambient.ambient_dim();
  std::vector<Vec<S>> chosen;
  if (blocks.empty()) {
    greedy_extend(ambient, sub, chosen);
  } else {
    Index total = 0;
    Subspace<S> all(n);
    for (const Subspace<S>& b : blocks) {
      total += b.dim();
      all = sum(all, b);
    }
    if (all.dim() != total) throw Error(Errc::BLOCKS_NOT_DIRECT, "blocks are not independent");
    Index amb_total = 0;
    Index sub_total = 0;
    std::vector<std::pair<Subspace<S>, Subspace<S>>> parts;
    for (const Subspace<S>& b : blocks) {
      parts.emplace_back(intersect(ambient, b), intersect(sub, b));
      amb_total += parts.back().first.dim();
      sub_total += parts.back().second.dim();
    }
    if (amb_total != ambient.dim() || sub_total != sub.dim()) {
      throw Error(Errc::BLOCKS_NOT_DIRECT, "ambient or sub does not split along the blocks");
    }
    for (const auto& [amb, s] : parts) greedy_extend(amb, s, chosen);
  }
  Mat<S> out(n, static_cast<Index>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) out.col(static_cast<Index>(i)) = chosen[i];
  return out;
}

template <ExactField S>
Subspace<S> complement(const Subspace<S>& ambient, const Subspace<S>& sub,
                       const std::vector<Subspace<S>>& blocks) {
  return Subspace<S>::span(complement_vectors<S>(ambient, sub, blocks));
}

template <ExactField S>
Vec<S> Reducer<S>::reduce(Vec<S> v) const {
  if (v.size() != ambient_) throw Error(Errc::DIMENSION_MISMATCH, "reduce: vector size");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const S c = v(pivots_[i]);
    if (c.is_zero()) continue;
    for (Index j = 0; j < ambient_; ++j) {
      if (!rows_[i](j).is_zero()) v(j) -= c * rows_[i](j);
    }
  }
  return v;
}

template <ExactField S>
bool Reducer<S>::add(const Vec<S>& v) {
  Vec<S> r = reduce(v);
  Index p = 0;
  while (p < ambient_ && r(p).is_zero()) ++p;
  if (p == ambient_) return false;
  const S inv = S(1) / r(p);
  for (Index j = 0; j < ambient_; ++j) r(j) *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

#define QUIVKIT_INSTANTIATE_LINALG(S)                                                            \
  template Echelon<S> rref<S>(Mat<S>);                                                           \
  template std::optional<Vec<S>> solve<S>(const Mat<S>&, const Vec<S>&);                         \
  template std::optional<Mat<S>> inverse<S>(const Mat<S>&);                                      \
  template class Subspace<S>;                                                                    \
  template class Reducer<S>;                                                                     \
  template Subspace<S> kernel<S>(const Mat<S>&);                                                 \
  template Subspace<S> image<S>(const Mat<S>&);                                                  \
  template Subspace<S> image<S>(const Mat<S>&, const Subspace<S>&);                              \
  template Subspace<S> preimage<S>(const Mat<S>&, const Subspace<S>&);                           \
  template Subspace<S> sum<S>(const Subspace<S>&, const Subspace<S>&);                           \
  template Subspace<S> intersect<S>(const Subspace<S>&, const Subspace<S>&);                     \
  template Quotient<S> quotient_basis<S>(const Subspace<S>&, const Subspace<S>&);                \
  template Subspace<S> complement<S>(const Subspace<S>&, const Subspace<S>&,                     \
                                     const std::vector<Subspace<S>>&);                           \
  template Mat<S> complement_vectors<S>(const Subspace<S>&, const Subspace<S>&,                  \
                                        const std::vector<Subspace<S>>&);

QUIVKIT_INSTANTIATE_LINALG(Rational)
QUIVKIT_INSTANTIATE_LINALG(ModP)

}  // namespace quivkit
