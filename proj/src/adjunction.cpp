#include "quivkit/adjunction.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace quivkit {

namespace {

template <ExactField S>
void require_same(const AlgebraPtr<S>& x, const AlgebraPtr<S>& y, const char* what) {
  if (x != y) throw Error(Errc::NOT_COMPOSABLE, what);
}

/// Coordinates of A along [idems | section | basis of J^2], which is a basis
/// of A for a pointed algebra.
template <ExactField S>
Mat<S> wedderburn_coordinates(const Splitting<S>& s) {
  const FinAlgebra<S>& a = *s.parent;
  const Subspace<S>& j2 = a.radical_power(2);
  const Index r = static_cast<Index>(s.idems.size());
  const Index d = s.section.cols();
  Mat<S> frame(a.dim(), r + d + j2.dim());
  for (Index i = 0; i < r; ++i) frame.col(i) = s.idems[i];
  frame.middleCols(r, d) = s.section;
  for (Index k = 0; k < j2.dim(); ++k) frame.col(r + d + k) = j2.vector(k);
  const std::optional<Mat<S>> inv = frame.cols() == a.dim() ? inverse<S>(frame) : std::nullopt;
  if (!inv) throw Error(Errc::INTERNAL, "idempotents, section and J^2 do not form a basis");
  return *inv;
}

/// Columns: the paths of length >= min_length from s to t.
template <ExactField S>
Mat<S> parallel_paths(const PathAlgebra<S>& t, int s, int tgt, int min_length) {
  std::vector<Index> idx;
  for (std::size_t k = 0; k < t.paths.size(); ++k) {
    const PathWord& w = t.paths[k];
    if (w.length() >= min_length && w.source == s && w.target == tgt) idx.push_back(static_cast<Index>(k));
  }
  Mat<S> out = Mat<S>::Zero(t.algebra->dim(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(idx[k], static_cast<Index>(k)) = t.algebra->scalar(1);
  return out;
}

template <ExactField S>
Mat<S> conjugation_matrix(const FinAlgebra<S>& a, const Vec<S>& v) {
  return a.left_mul(Vec<S>(a.unit() + v)) * a.right_mul(a.unipotent_inverse(v));
}

template <ExactField S>
std::vector<S> search_coefficients(const FinAlgebra<S>& a) {
  const FieldSpec& field = a.field();
  if (field.is_rational()) {
    return {a.scalar(1), a.scalar(-1), a.scalar(2), a.scalar(-2), a.scalar(1, 2), a.scalar(-1, 2)};
  }
  std::vector<S> out;
  const long p = static_cast<long>(field.characteristic);
  for (long k = 1; k < p && out.size() < 6; ++k) {
    out.push_back(a.scalar(k));
    if (p - k != k && out.size() < 6) out.push_back(a.scalar(p - k));
    if (2 * k + 1 >= p) break;
  }
  return out;
}

/// The bounded family of elements of [id]_1 searched for orbit witnesses:
/// generators first, then composites of two generators.
template <ExactField S>
class DeltaFamily {
 public:
  explicit DeltaFamily(const PathAlgebra<S>& t) : t_(t) {
    const FinAlgebra<S>& a = *t.algebra;
    coeffs_ = search_coefficients(a);
    for (std::size_t k = 0; k < t.paths.size(); ++k) {
      if (t.paths[k].length() >= 1) conj_paths_.push_back(static_cast<Index>(k));
    }
    for (Index k = 0; k < t.quiver.arrow_count(); ++k) {
      const Arrow& arr = t.quiver.arrows[k];
      for (std::size_t q = 0; q < t.paths.size(); ++q) {
        const PathWord& w = t.paths[q];
        if (w.length() >= 2 && w.source == arr.source && w.target == arr.target) {
          moves_.emplace_back(k, static_cast<Index>(q));
        }
      }
    }
  }

  std::size_t generator_count() const { return (conj_paths_.size() + moves_.size()) * coeffs_.size(); }

  /// Matrix of the n-th member, or nullopt past the end of the family.
  std::optional<Mat<S>> member(std::size_t n) {
    const std::size_t g = generator_count();
    if (n < g) return generator(n);
    n -= g;
    if (n >= g * g) return std::nullopt;
    return Mat<S>(generator(n / g) * generator(n % g));
  }

 private:
  const Mat<S>& generator(std::size_t n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    const FinAlgebra<S>& a = *t_.algebra;
    const S& c = coeffs_[n % coeffs_.size()];
    const std::size_t which = n / coeffs_.size();
    Mat<S> m;
    if (which < conj_paths_.size()) {
      m = conjugation_matrix(a, Vec<S>(c * a.basis_vector(conj_paths_[which])));
    } else {
      const auto [arrow, path] = moves_[which - conj_paths_.size()];
      std::vector<Vec<S>> vimgs;
      for (int v = 0; v < t_.quiver.vertex_count(); ++v) vimgs.push_back(a.basis_vector(t_.idempotent_index(v)));
      std::vector<Vec<S>> aimgs;
      for (Index k = 0; k < t_.quiver.arrow_count(); ++k) aimgs.push_back(a.basis_vector(t_.arrow_index(k)));
      aimgs[arrow] += c * a.basis_vector(path);
      m = universal_map(t_, t_.algebra, vimgs, aimgs).matrix;
    }
    return cache_.emplace(n, std::move(m)).first->second;
  }

  const PathAlgebra<S>& t_;
  std::vector<S> coeffs_;
  std::vector<Index> conj_paths_;
  std::vector<std::pair<Index, Index>> moves_;
  std::map<std::size_t, Mat<S>> cache_;
};

/// Dimensions invariant under [id]_1: the blocks e_t I e_s and I + J^m.
template <ExactField S>
std::vector<Index> orbit_invariants(const PathAlgebra<S>& t, const Subspace<S>& i) {
  const FinAlgebra<S>& a = *t.algebra;
  std::vector<Index> out{i.dim()};
  for (int s = 0; s < t.quiver.vertex_count(); ++s) {
    for (int u = 0; u < t.quiver.vertex_count(); ++u) {
      const Mat<S> proj = a.left_mul(a.basis_vector(t.idempotent_index(u))) *
                          a.right_mul(a.basis_vector(t.idempotent_index(s)));
      out.push_back(image<S>(proj, i).dim());
    }
  }
  for (int m = 1; m <= a.truncation_level(); ++m) out.push_back(sum(i, a.radical_power(m)).dim());
  return out;
}

}  // namespace

template <ExactField S>
AlgMorphism<S> psi(const VQuiverMap<S>& rho, const PathAlgebra<S>& source, const GabrielQuiver<S>& g) {
  if (!(rho.target == g.vquiver)) throw Error(Errc::TARGET_MISMATCH, "target of rho is not GQ(A)");
  if (!(rho.source == source.quiver)) throw Error(Errc::NOT_COMPOSABLE, "source of rho is not the quiver of the path algebra");
  const FinAlgebra<S>& a = *g.algebra();
  std::vector<Vec<S>> vimgs;
  for (int v = 0; v < source.quiver.vertex_count(); ++v) {
    const int w = rho.vertex_map[v];
    vimgs.push_back(w == kPoint ? a.zero() : g.splitting.idems[w]);
  }
  std::vector<Vec<S>> aimgs;
  for (Index k = 0; k < source.quiver.arrow_count(); ++k) aimgs.push_back(g.splitting.section * rho.arrows.col(k));
  return universal_map(source, g.algebra(), vimgs, aimgs);
}

template <ExactField S>
VQuiverMap<S> phi(const AlgMorphism<S>& alpha, const PathAlgebra<S>& source, const GabrielQuiver<S>& g) {
  require_same(alpha.source, source.algebra, "alpha does not start at the path algebra");
  require_same(alpha.target, g.algebra(), "alpha does not end at the algebra of the Gabriel quiver");
  std::vector<int> vm;
  for (int v = 0; v < source.quiver.vertex_count(); ++v) {
    vm.push_back(orbit_of(*alpha.target, alpha(alpha.source->basis_vector(source.idempotent_index(v)))));
  }
  const Index vc = source.quiver.vertex_count();
  Mat<S> arrows = g.splitting.projection * alpha.matrix.middleCols(vc, source.quiver.arrow_count());
  return validate_vq_map<S>(source.quiver, g.vquiver, std::move(vm), std::move(arrows));
}

template <ExactField S>
VQuiverMap<S> unit(const PathAlgebra<S>& t) {
  VQuiverMap<S> out = phi(identity_morphism(t.algebra), t, gq(t.algebra));
  if (!is_isomorphism(out)) throw Error(Errc::INTERNAL, "unit is not an isomorphism");
  return out;
}

template <ExactField S>
Counit<S> counit(const GabrielQuiver<S>& g, std::optional<int> level) {
  const AlgebraPtr<S>& a = g.algebra();
  const int lowest = std::max(2, a->truncation_level());
  if (level && *level < lowest) {
    throw Error(Errc::TRUNCATION_INCOMPATIBLE, "presentation level must be at least " + std::to_string(lowest));
  }
  PathAlgebraPtr<S> pres = build_kvq<S>(a->field(), g.vquiver, level.value_or(lowest));
  AlgMorphism<S> eps = psi(identity_vq_map<S>(g.vquiver), *pres, g);
  if (!eps.surjective) throw Error(Errc::INTERNAL, "counit is not surjective");
  Ideal<S> kernel_ideal = make_ideal(pres->algebra, kernel<S>(eps.matrix));
  if (!is_relation_ideal(kernel_ideal)) throw Error(Errc::INTERNAL, "counit kernel is not inside J^2");
  QuotientAlgebra<S> quotient = quotient_algebra(pres->algebra, kernel_ideal);
  AlgMorphism<S> einf = validate_morphism(quotient.algebra, a, Mat<S>(eps.matrix * quotient.lift));
  if (!inverse<S>(einf.matrix)) throw Error(Errc::INTERNAL, "induced counit is not invertible");
  return {g, std::move(pres), std::move(eps), std::move(kernel_ideal), std::move(quotient), std::move(einf)};
}

template <ExactField S>
Counit<S> counit(const AlgebraPtr<S>& a, std::optional<int> level) {
  return counit(gq(a), level);
}

template <ExactField S>
bool naturality_check_second_var(const PathAlgebra<S>& t, const VQuiverMap<S>& rho,
                                 const AlgMorphism<S>& alpha, const GabrielQuiver<S>& ga,
                                 const GabrielQuiver<S>& gb) {
  const AlgMorphism<S> lhs = psi(compose_vq(gq_on_morphism(alpha, ga, gb), rho), t, gb);
  const AlgMorphism<S> rhs = compose(alpha, psi(rho, t, ga));
  return check_sim(lhs, rhs, 1);
}

template <ExactField S>
bool naturality_check_first_var(const PathAlgebra<S>& tr, const PathAlgebra<S>& tq,
                                const VQuiverMap<S>& sigma, const VQuiverMap<S>& rho,
                                const GabrielQuiver<S>& g) {
  const AlgMorphism<S> lhs = psi(compose_vq(rho, sigma), tr, g);
  const AlgMorphism<S> rhs = compose(psi(rho, tq, g), kvq_on_map(sigma, tr, tq));
  return check_sim(lhs, rhs, 1);
}

template <ExactField S>
AlgMorphism<S> right_adjoint_phi(const VQuiverMap<S>& rho, const GabrielQuiver<S>& g,
                                 const PathAlgebra<S>& target) {
  if (!(rho.source == g.vquiver)) throw Error(Errc::SOURCE_MISMATCH, "source of rho is not GQ(A)");
  if (!(rho.target == target.quiver)) throw Error(Errc::TARGET_MISMATCH, "target of rho is not the quiver of k2[[VQ]]");
  if (target.level != 2) throw Error(Errc::TRUNCATION_INCOMPATIBLE, "right adjoint lands in k2[[VQ]]");
  const FinAlgebra<S>& a = *g.algebra();
  const FinAlgebra<S>& b = *target.algebra;
  const Index r = static_cast<Index>(g.splitting.idems.size());
  const Index d = g.splitting.section.cols();
  Mat<S> images = Mat<S>::Zero(b.dim(), a.dim());
  for (Index i = 0; i < r; ++i) {
    if (rho.vertex_map[i] != kPoint) images.col(i) = b.basis_vector(target.idempotent_index(rho.vertex_map[i]));
  }
  for (Index k = 0; k < d; ++k) {
    for (Index l = 0; l < target.quiver.arrow_count(); ++l) images(target.arrow_index(l), r + k) = rho.arrows(l, k);
  }
  return validate_morphism(g.algebra(), target.algebra, Mat<S>(images * wedderburn_coordinates(g.splitting)));
}

template <ExactField S>
VQuiverMap<S> right_adjoint_rho(const AlgMorphism<S>& alpha, const GabrielQuiver<S>& g,
                                const PathAlgebra<S>& target) {
  require_same(alpha.source, g.algebra(), "alpha does not start at the algebra of the Gabriel quiver");
  require_same(alpha.target, target.algebra, "alpha does not end at k2[[VQ]]");
  std::vector<int> vm;
  for (const Vec<S>& f : g.splitting.idems) vm.push_back(orbit_of(*target.algebra, alpha(f)));
  const Mat<S> images = alpha.matrix * g.splitting.section;
  Mat<S> arrows = images.middleRows(target.quiver.vertex_count(), target.quiver.arrow_count());
  return validate_vq_map<S>(g.vquiver, target.quiver, std::move(vm), std::move(arrows));
}

template <ExactField S>
AlgMorphism<S> factor_delta(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, const PathAlgebra<S>& t) {
  require_same(alpha.source, t.algebra, "alpha does not start at the path algebra");
  require_same(beta.source, t.algebra, "beta does not start at the path algebra");
  require_same(alpha.target, beta.target, "alpha and beta have different targets");
  if (!alpha.surjective || !beta.surjective) {
    throw Error(Errc::NOT_SURJECTIVE, "factorization through [id]_1 needs surjective morphisms");
  }
  if (!check_sim(alpha, beta, 1)) throw Error(Errc::NOT_SIM1, "alpha and beta are not ~1-equivalent");
  const FinAlgebra<S>& a = *alpha.target;
  const FinAlgebra<S>& p = *t.algebra;
  const int vc = t.quiver.vertex_count();

  // (1 + w) beta(e) (1 + w)^-1 = alpha(e) for 1 + w = sum alpha(e) beta(e).
  Vec<S> w = -a.unit();
  for (int v = 0; v < vc; ++v) {
    const Vec<S> e = p.basis_vector(t.idempotent_index(v));
    w += a.mul(alpha(e), beta(e));
  }
  const Mat<S> jb = p.radical().basis();
  const std::optional<Vec<S>> c = solve<S>(Mat<S>(beta.matrix * jb), w);
  if (!c) throw Error(Errc::INTERNAL, "beta(J) does not reach the conjugating element");
  const Vec<S> v = jb * *c;
  const AlgMorphism<S> delta1 = validate_morphism(t.algebra, t.algebra, conjugation_matrix(p, v));
  const AlgMorphism<S> beta1 = compose(beta, delta1);

  std::vector<Vec<S>> vimgs;
  for (int u = 0; u < vc; ++u) {
    const Vec<S> e = p.basis_vector(t.idempotent_index(u));
    if (beta1(e) != alpha(e)) throw Error(Errc::INTERNAL, "conjugation did not align the vertex images");
    vimgs.push_back(e);
  }
  std::vector<Vec<S>> aimgs;
  for (Index k = 0; k < t.quiver.arrow_count(); ++k) {
    const Vec<S> x = p.basis_vector(t.arrow_index(k));
    const Vec<S> diff = alpha(x) - beta1(x);
    aimgs.push_back(x);
    if (all_zero(diff)) continue;
    const Arrow& arr = t.quiver.arrows[k];
    const Mat<S> paths = parallel_paths(t, arr.source, arr.target, 2);
    const std::optional<Vec<S>> y = solve<S>(Mat<S>(beta1.matrix * paths), diff);
    if (!y) throw Error(Errc::INTERNAL, "no lift of (alpha - beta delta1)(" + arr.label + ") into J^2");
    aimgs.back() += paths * *y;
  }
  const AlgMorphism<S> delta2 = universal_map(t, t.algebra, vimgs, aimgs);
  AlgMorphism<S> delta = compose(delta1, delta2);
  if (compose(beta, delta).matrix != alpha.matrix) throw Error(Errc::INTERNAL, "alpha != beta delta");
  if (!check_sim(delta, identity_morphism(t.algebra), 1)) throw Error(Errc::INTERNAL, "delta is not ~1 id");
  return delta;
}

template <ExactField S>
IdealOrbitClass<S> orbit_class(const PathAlgebraPtr<S>& parent, const Ideal<S>& ideal) {
  if (ideal.parent != parent->algebra) throw Error(Errc::NOT_AN_IDEAL, "ideal of a different algebra");
  if (!is_relation_ideal(ideal)) throw Error(Errc::NOT_AN_IDEAL, "orbit classes are made of ideals inside J^2");
  return {parent, ideal, quotient_algebra(parent->algebra, ideal)};
}

template <ExactField S>
AlgMorphism<S> gamma(const QuotientAlgebra<S>& qi, const QuotientAlgebra<S>& qj, const AlgMorphism<S>& delta) {
  const AlgebraPtr<S>& p = qi.projection.source;
  if (qj.projection.source != p || delta.source != p || delta.target != p) {
    throw Error(Errc::DELTA_INVALID, "delta must be an endomorphism of the common parent algebra");
  }
  if (!check_sim(delta, identity_morphism(p), 1)) throw Error(Errc::DELTA_INVALID, "delta is not ~1 id");
  const Subspace<S> i = kernel<S>(qi.projection.matrix);
  const Subspace<S> j = kernel<S>(qj.projection.matrix);
  if (!(image<S>(delta.matrix, i) == j)) throw Error(Errc::DELTA_INVALID, "delta(I) != I'");
  return validate_morphism(qi.algebra, qj.algebra, Mat<S>(qj.projection.matrix * delta.matrix * qi.lift));
}

template <ExactField S>
GQInfty<S> gq_infty(const AlgebraPtr<S>& a, std::optional<int> level) {
  Counit<S> c = counit(a, level);
  IdealOrbitClass<S> rel{c.presentation, c.kernel, c.quotient};
  return {c.gabriel.vquiver, std::move(rel), std::move(c)};
}

template <ExactField S>
OrbitWitness<S> trivial_witness(const IdealOrbitClass<S>& c) {
  return {c, identity_morphism(c.parent->algebra)};
}

template <ExactField S>
AlgMorphism<S> kinfty_on_map(const VQuiverMap<S>& rho, const IdealOrbitClass<S>& src,
                             const IdealOrbitClass<S>& tgt, const OrbitWitness<S>& src_witness,
                             const OrbitWitness<S>& tgt_witness) {
  if (!(rho.source == src.parent->quiver) || !(rho.target == tgt.parent->quiver)) {
    throw Error(Errc::NOT_COMPOSABLE, "rho does not match the orbit classes");
  }
  if (!is_surjective(rho)) throw Error(Errc::NOT_SURJECTIVE, "k_infty is defined on surjective maps only");
  if (src_witness.member.parent != src.parent || tgt_witness.member.parent != tgt.parent) {
    throw Error(Errc::WITNESS_INVALID, "witness belongs to another path algebra");
  }
  auto checked_gamma = [](const IdealOrbitClass<S>& c, const OrbitWitness<S>& w) {
    try {
      return gamma(c.quotient, w.member.quotient, w.delta);
    } catch (const Error& err) {
      if (err.code() != Errc::DELTA_INVALID) throw;
      throw Error(Errc::WITNESS_INVALID, err.what());
    }
  };
  const AlgMorphism<S> g1 = checked_gamma(src, src_witness);
  const AlgMorphism<S> g2 = checked_gamma(tgt, tgt_witness);
  const AlgMorphism<S> k = kvq_on_map(rho, *src.parent, *tgt.parent);
  const Subspace<S>& i2 = src_witness.member.representative.space;
  const Subspace<S>& k2 = tgt_witness.member.representative.space;
  if (!k2.contains(image<S>(k.matrix, i2))) throw Error(Errc::WITNESS_INVALID, "k[[rho]](I') is not inside K'");
  const Mat<S> induced = tgt_witness.member.quotient.projection.matrix * k.matrix * src_witness.member.quotient.lift;
  const std::optional<Mat<S>> g2inv = inverse<S>(g2.matrix);
  if (!g2inv) throw Error(Errc::INTERNAL, "gamma is not invertible");
  return validate_morphism(src.quotient.algebra, tgt.quotient.algebra, Mat<S>(*g2inv * induced * g1.matrix));
}

template <ExactField S>
AlgMorphism<S> kinfty_on_map(const VQuiverMap<S>& rho, const IdealOrbitClass<S>& src,
                             const IdealOrbitClass<S>& tgt, std::size_t search_budget) {
  const AlgMorphism<S> k = kvq_on_map(rho, *src.parent, *tgt.parent);
  const Subspace<S>& i = src.representative.space;
  const Subspace<S>& kk = tgt.representative.space;
  if (kk.contains(image<S>(k.matrix, i))) {
    return kinfty_on_map(rho, src, tgt, trivial_witness(src), trivial_witness(tgt));
  }
  DeltaFamily<S> src_family(*src.parent);
  DeltaFamily<S> tgt_family(*tgt.parent);
  for (std::size_t n = 0; n < search_budget; ++n) {
    const bool move_source = n % 2 == 0;
    DeltaFamily<S>& family = move_source ? src_family : tgt_family;
    const std::optional<Mat<S>> m = family.member(n / 2);
    if (!m) continue;
    const IdealOrbitClass<S>& moved = move_source ? src : tgt;
    const Subspace<S> image_space = image<S>(*m, moved.representative.space);
    const bool fits = move_source ? kk.contains(image<S>(k.matrix, image_space))
                                  : image_space.contains(image<S>(k.matrix, i));
    if (!fits) continue;
    const AlgebraPtr<S>& p = moved.parent->algebra;
    OrbitWitness<S> w{orbit_class(moved.parent, make_ideal(p, image_space)), validate_morphism(p, p, *m)};
    return move_source ? kinfty_on_map(rho, src, tgt, w, trivial_witness(tgt))
                       : kinfty_on_map(rho, src, tgt, trivial_witness(src), w);
  }
  throw Error(Errc::UNDECIDED, "no witness pair found within the search budget");
}

template <ExactField S>
std::optional<AlgMorphism<S>> same_ideal_orbit(const PathAlgebra<S>& t, const Ideal<S>& i,
                                               const Ideal<S>& j, std::size_t search_budget) {
  if (i.parent != t.algebra || j.parent != t.algebra) throw Error(Errc::NOT_AN_IDEAL, "ideal of a different algebra");
  if (i.space == j.space) return identity_morphism(t.algebra);
  if (orbit_invariants(t, i.space) != orbit_invariants(t, j.space)) return std::nullopt;
  DeltaFamily<S> family(t);
  for (std::size_t n = 0; n < search_budget; ++n) {
    const std::optional<Mat<S>> m = family.member(n);
    if (!m) break;
    if (image<S>(*m, i.space) == j.space) return validate_morphism(t.algebra, t.algebra, *m);
  }
  throw Error(Errc::UNDECIDED, "no witness found within the search budget");
}

template <ExactField S>
std::optional<Vec<S>> inner_witness(const PathAlgebra<S>& t, const AlgMorphism<S>& delta) {
  require_same(delta.source, t.algebra, "delta is not an endomorphism of the path algebra");
  require_same(delta.target, t.algebra, "delta is not an endomorphism of the path algebra");
  const FinAlgebra<S>& a = *t.algebra;
  const Index n = a.dim();
  std::vector<Index> gens;
  for (int v = 0; v < t.quiver.vertex_count(); ++v) gens.push_back(t.idempotent_index(v));
  for (Index k = 0; k < t.quiver.arrow_count(); ++k) gens.push_back(t.arrow_index(k));
  const Mat<S> jb = a.radical().basis();
  // delta(x) w - w x = x - delta(x) for every generator x.
  Mat<S> lhs(n * static_cast<Index>(gens.size()), jb.cols());
  Vec<S> rhs(lhs.rows());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Vec<S> x = a.basis_vector(gens[g]);
    const Vec<S> dx = delta(x);
    lhs.middleRows(static_cast<Index>(g) * n, n) = (a.left_mul(dx) - a.right_mul(x)) * jb;
    rhs.segment(static_cast<Index>(g) * n, n) = x - dx;
  }
  const std::optional<Vec<S>> c = solve<S>(lhs, rhs);
  if (!c) return std::nullopt;
  const Vec<S> w = jb * *c;
  for (Index g : gens) {
    const Vec<S> x = a.basis_vector(g);
    if (conjugate(a, w, x) != delta(x)) throw Error(Errc::INTERNAL, "inner witness failed verification");
  }
  return w;
}

#define QUIVKIT_INSTANTIATE_ADJUNCTION(S)                                                                  \
  template AlgMorphism<S> psi<S>(const VQuiverMap<S>&, const PathAlgebra<S>&, const GabrielQuiver<S>&);    \
  template VQuiverMap<S> phi<S>(const AlgMorphism<S>&, const PathAlgebra<S>&, const GabrielQuiver<S>&);    \
  template VQuiverMap<S> unit<S>(const PathAlgebra<S>&);                                                   \
  template struct Counit<S>;                                                                               \
  template Counit<S> counit<S>(const AlgebraPtr<S>&, std::optional<int>);                                                      \
  template Counit<S> counit<S>(const GabrielQuiver<S>&, std::optional<int>);                                                   \
  template bool naturality_check_second_var<S>(const PathAlgebra<S>&, const VQuiverMap<S>&,                \
                                               const AlgMorphism<S>&, const GabrielQuiver<S>&,             \
                                               const GabrielQuiver<S>&);                                   \
  template bool naturality_check_first_var<S>(const PathAlgebra<S>&, const PathAlgebra<S>&,                \
                                              const VQuiverMap<S>&, const VQuiverMap<S>&,                  \
                                              const GabrielQuiver<S>&);                                    \
  template AlgMorphism<S> right_adjoint_phi<S>(const VQuiverMap<S>&, const GabrielQuiver<S>&,              \
                                               const PathAlgebra<S>&);                                     \
  template VQuiverMap<S> right_adjoint_rho<S>(const AlgMorphism<S>&, const GabrielQuiver<S>&,              \
                                              const PathAlgebra<S>&);                                      \
  template AlgMorphism<S> factor_delta<S>(const AlgMorphism<S>&, const AlgMorphism<S>&,                    \
                                          const PathAlgebra<S>&);                                          \
  template IdealOrbitClass<S> orbit_class<S>(const PathAlgebraPtr<S>&, const Ideal<S>&);                   \
  template AlgMorphism<S> gamma<S>(const QuotientAlgebra<S>&, const QuotientAlgebra<S>&,                   \
                                   const AlgMorphism<S>&);                                                 \
  template GQInfty<S> gq_infty<S>(const AlgebraPtr<S>&, std::optional<int>);                                                   \
  template OrbitWitness<S> trivial_witness<S>(const IdealOrbitClass<S>&);                                  \
  template AlgMorphism<S> kinfty_on_map<S>(const VQuiverMap<S>&, const IdealOrbitClass<S>&,                \
                                           const IdealOrbitClass<S>&, const OrbitWitness<S>&,              \
                                           const OrbitWitness<S>&);                                        \
  template AlgMorphism<S> kinfty_on_map<S>(const VQuiverMap<S>&, const IdealOrbitClass<S>&,                \
                                           const IdealOrbitClass<S>&, std::size_t);                        \
  template std::optional<AlgMorphism<S>> same_ideal_orbit<S>(const PathAlgebra<S>&, const Ideal<S>&,       \
                                                             const Ideal<S>&, std::size_t);                \
  template std::optional<Vec<S>> inner_witness<S>(const PathAlgebra<S>&, const AlgMorphism<S>&);

QUIVKIT_INSTANTIATE_ADJUNCTION(Rational)
QUIVKIT_INSTANTIATE_ADJUNCTION(ModP)

}  // namespace quivkit
