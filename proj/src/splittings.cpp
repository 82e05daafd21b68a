#include "quivkit/splittings.hpp"

namespace quivkit {

template <ExactField S>
Mat<S> Splitting<S>::s_matrix() const {
  const Residue<S>& res = parent->residue();
  const Index r = res.dim();
  Mat<S> eps(r, r);
  Mat<S> lifted(parent->dim(), r);
  for (Index i = 0; i < r; ++i) {
    eps.col(i) = res.idempotents[i];
    lifted.col(i) = idems[i];
  }
  const std::optional<Mat<S>> inv = inverse<S>(eps);
  if (!inv) throw Error(Errc::INTERNAL, "residue idempotents are not a basis");
  return lifted * *inv;
}

template <ExactField S>
Vec<S> idempotize(const FinAlgebra<S>& a, Vec<S> x) {
  const S two = a.scalar(2);
  const S three = a.scalar(3);
  for (int step = 0; step <= a.truncation_level() + 1; ++step) {
    const Vec<S> x2 = a.mul(x, x);
    if (x2 == x) return x;
    x = three * x2 - two * a.mul(x2, x);
  }
  throw Error(Errc::INTERNAL, "idempotent iteration did not converge");
}

template <ExactField S>
std::vector<Vec<S>> lift_idempotents(const AlgebraPtr<S>& a) {
  if (!a) throw Error(Errc::NOT_VALIDATED, "lift_idempotents needs a validated algebra");
  const Residue<S>& res = a->residue();
  std::vector<Vec<S>> out;
  Vec<S> rest = a->unit();
  for (const Vec<S>& eps : res.idempotents) {
    const Vec<S> x = res.quotient.representatives * eps;
    const Vec<S> y = a->mul(a->mul(rest, x), rest);
    out.push_back(idempotize(*a, y));
    rest -= out.back();
  }
  if (!all_zero(rest)) throw Error(Errc::INTERNAL, "lifted idempotents do not sum to 1");
  return out;
}

namespace {

template <ExactField S>
Mat<S> peirce_projector(const FinAlgebra<S>& a, const Vec<S>& left, const Vec<S>& right) {
  return a.left_mul(left) * a.right_mul(right);
}

template <ExactField S>
Mat<S> coordinates_on_j_mod_j2(const FinAlgebra<S>& a, const Mat<S>& section) {
  const Index n = a.dim();
  const Index d = section.cols();
  const Subspace<S>& j2 = a.radical_power(2);
  Reducer<S> red(n);
  Mat<S> frame(n, n);
  Index col = 0;
  for (Index k = 0; k < d; ++k) {
    red.add(section.col(k));
    frame.col(col++) = section.col(k);
  }
  for (Index k = 0; k < j2.dim(); ++k) {
    red.add(j2.vector(k));
    frame.col(col++) = j2.vector(k);
  }
  for (Index i = 0; i < n && col < n; ++i) {
    const Vec<S> e = unit_vector<S>(n, i);
    if (red.add(e)) frame.col(col++) = e;
  }
  const std::optional<Mat<S>> inv = inverse<S>(frame);
  if (!inv) throw Error(Errc::NOT_VALIDATED, "section classes are not independent modulo J^2");
  return inv->topRows(d);
}

}  // namespace

template <ExactField S>
Splitting<S> splitting_with_idempotents(const AlgebraPtr<S>& a, std::vector<Vec<S>> idems) {
  const int r = static_cast<int>(idems.size());
  const Subspace<S>& j = a->radical();
  const Subspace<S>& j2 = a->radical_power(2);
  std::vector<Vec<S>> cols;
  std::vector<std::pair<int, int>> blocks;
  for (int src = 0; src < r; ++src) {
    for (int tgt = 0; tgt < r; ++tgt) {
      // f J e + J^2 depends only on the residue classes of e and f, so the
      // chosen classes modulo J^2 do not depend on the lifted idempotents.
      const Mat<S> proj = peirce_projector(*a, idems[tgt], idems[src]);
      const Subspace<S> amb = sum(image<S>(proj, j), j2);
      const Mat<S> chosen = complement_vectors<S>(amb, j2);
      for (Index k = 0; k < chosen.cols(); ++k) {
        cols.push_back(proj * chosen.col(k));
        blocks.emplace_back(src, tgt);
      }
    }
  }
  Mat<S> section(a->dim(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) section.col(static_cast<Index>(k)) = cols[k];
  return splitting_from(a, std::move(idems), std::move(section));
}

template <ExactField S>
Splitting<S> make_splitting(const AlgebraPtr<S>& a) {
  return splitting_with_idempotents(a, lift_idempotents(a));
}

template <ExactField S>
Splitting<S> splitting_from(const AlgebraPtr<S>& a, std::vector<Vec<S>> idems, Mat<S> section) {
  if (!a) throw Error(Errc::NOT_VALIDATED, "splitting needs a validated algebra");
  const Residue<S>& res = a->residue();
  const int r = static_cast<int>(res.idempotents.size());
  if (static_cast<int>(idems.size()) != r) {
    throw Error(Errc::NOT_VALIDATED, "expected " + std::to_string(r) + " idempotents");
  }
  Vec<S> total = a->zero();
  for (int i = 0; i < r; ++i) {
    if (res.project(idems[i]) != res.idempotents[i]) {
      throw Error(Errc::NOT_VALIDATED, "idempotent " + std::to_string(i) + " does not lift its residue class");
    }
    for (int k = 0; k < r; ++k) {
      const Vec<S> p = a->mul(idems[i], idems[k]);
      if (i == k ? p != idems[i] : !all_zero(p)) {
        throw Error(Errc::NOT_VALIDATED, "idempotents are not orthogonal idempotents");
      }
    }
    total += idems[i];
  }
  if (total != a->unit()) throw Error(Errc::NOT_VALIDATED, "idempotents do not sum to 1");

  const Index d = a->radical().dim() - a->radical_power(2).dim();
  if (section.rows() != a->dim() || section.cols() != d) {
    throw Error(Errc::NOT_VALIDATED, "section must have dim(J/J^2) = " + std::to_string(d) + " columns");
  }
  Splitting<S> out;
  out.parent = a;
  for (Index k = 0; k < d; ++k) {
    const Vec<S> x = section.col(k);
    if (!a->radical().contains(x)) throw Error(Errc::NOT_VALIDATED, "section column outside J");
    int found = 0;
    for (int src = 0; src < r; ++src) {
      for (int tgt = 0; tgt < r; ++tgt) {
        if (a->mul(a->mul(idems[tgt], x), idems[src]) == x && !all_zero(x)) {
          out.blocks.emplace_back(src, tgt);
          ++found;
        }
      }
    }
    if (found != 1) throw Error(Errc::NOT_VALIDATED, "section column is not block-homogeneous");
  }
  out.projection = coordinates_on_j_mod_j2(*a, section);
  out.idems = std::move(idems);
  out.section = std::move(section);
  return out;
}

template <ExactField S>
Vec<S> conjugate(const FinAlgebra<S>& a, const Vec<S>& w, const Vec<S>& x) {
  return a.mul(a.mul(Vec<S>(a.unit() + w), x), a.unipotent_inverse(w));
}

template <ExactField S>
Splitting<S> conjugate_splitting(const Splitting<S>& s, const Vec<S>& w) {
  const FinAlgebra<S>& a = *s.parent;
  if (!a.radical().contains(w)) throw Error(Errc::NOT_VALIDATED, "conjugating element must lie in J");
  std::vector<Vec<S>> idems;
  for (const Vec<S>& f : s.idems) idems.push_back(conjugate(a, w, f));
  Mat<S> section(s.section.rows(), s.section.cols());
  for (Index k = 0; k < s.section.cols(); ++k) section.col(k) = conjugate(a, w, Vec<S>(s.section.col(k)));
  return splitting_from(s.parent, std::move(idems), std::move(section));
}

template <ExactField S>
Vec<S> conjugator(const Splitting<S>& s1, const Splitting<S>& s2) {
  const AlgebraPtr<S>& a = s1.parent;
  if (s1.parent != s2.parent) throw Error(Errc::NOT_VALIDATED, "splittings of different algebras");
  const Index n = a->dim();
  const Mat<S> jb = a->radical().basis();
  const Index r = static_cast<Index>(s1.idems.size());
  // f_i w - w g_i = g_i - f_i for each i, with w = jb * c.
  Mat<S> lhs(n * r, jb.cols());
  Vec<S> rhs(n * r);
  for (Index i = 0; i < r; ++i) {
    const Vec<S>& f = s1.idems[i];
    const Vec<S>& g = s2.idems[i];
    lhs.middleRows(i * n, n) = (a->left_mul(f) - a->right_mul(g)) * jb;
    rhs.segment(i * n, n) = g - f;
  }
  const std::optional<Vec<S>> c = solve<S>(lhs, rhs);
  if (!c) throw Error(Errc::NO_CONJUGATOR, "no w in J conjugates one splitting into the other");
  const Vec<S> w = jb * *c;
  for (Index i = 0; i < r; ++i) {
    if (conjugate(*a, w, s2.idems[i]) != s1.idems[i]) {
      throw Error(Errc::NO_CONJUGATOR, "conjugator failed verification");
    }
  }
  return w;
}

template <ExactField S>
std::optional<Vec<S>> same_orbit(const AlgebraPtr<S>& a, const Vec<S>& e, const Vec<S>& f) {
  if (!a->radical().contains(Vec<S>(e - f))) return std::nullopt;
  const Mat<S> jb = a->radical().basis();
  // (1+w) e = f (1+w)  <=>  w e - f w = f - e.
  const Mat<S> lhs = (a->right_mul(e) - a->left_mul(f)) * jb;
  const std::optional<Vec<S>> c = solve<S>(lhs, Vec<S>(f - e));
  if (!c) throw Error(Errc::NO_CONJUGATOR, "idempotents differ by an element of J but are not conjugate");
  const Vec<S> w = jb * *c;
  if (conjugate(*a, w, e) != f) throw Error(Errc::NO_CONJUGATOR, "orbit witness failed verification");
  return w;
}

#define QUIVKIT_INSTANTIATE_SPLITTINGS(S)                                                         \
  template struct Splitting<S>;                                                                   \
  template std::vector<Vec<S>> lift_idempotents<S>(const AlgebraPtr<S>&);                         \
  template Vec<S> idempotize<S>(const FinAlgebra<S>&, Vec<S>);                                    \
  template Splitting<S> make_splitting<S>(const AlgebraPtr<S>&);                                  \
  template Splitting<S> splitting_with_idempotents<S>(const AlgebraPtr<S>&, std::vector<Vec<S>>); \
  template Splitting<S> splitting_from<S>(const AlgebraPtr<S>&, std::vector<Vec<S>>, Mat<S>);     \
  template Splitting<S> conjugate_splitting<S>(const Splitting<S>&, const Vec<S>&);               \
  template Vec<S> conjugator<S>(const Splitting<S>&, const Splitting<S>&);                        \
  template Vec<S> conjugate<S>(const FinAlgebra<S>&, const Vec<S>&, const Vec<S>&);               \
  template std::optional<Vec<S>> same_orbit<S>(const AlgebraPtr<S>&, const Vec<S>&, const Vec<S>&);

QUIVKIT_INSTANTIATE_SPLITTINGS(Rational)
QUIVKIT_INSTANTIATE_SPLITTINGS(ModP)

}  // namespace quivkit
