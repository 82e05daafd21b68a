#include "quivkit/gabriel.hpp"

#include <set>

namespace quivkit {

namespace {

template <ExactField S>
Index first_nonzero(const Vec<S>& x) {
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) return i;
  }
  return -1;
}

std::string unique_label(std::set<std::string>& used, const std::string& base) {
  std::string label = base;
  for (int k = 2; !used.insert(label).second; ++k) label = base + "_" + std::to_string(k);
  return label;
}

}  // namespace

template <ExactField S>
GabrielQuiver<S> gq(const Splitting<S>& s) {
  const FinAlgebra<S>& a = *s.parent;
  const Residue<S>& res = a.residue();
  std::vector<std::string> vertices;
  std::set<std::string> used;
  for (const Vec<S>& eps : res.idempotents) {
    const Index pivot = first_nonzero<S>(res.quotient.representatives * eps);
    vertices.push_back(unique_label(used, a.labels()[pivot]));
  }
  Reducer<S> j2(a.dim());
  for (Index k = 0; k < a.radical_power(2).dim(); ++k) j2.add(a.radical_power(2).vector(k));
  std::vector<ArrowSpec> arrows;
  used.clear();
  for (Index k = 0; k < s.section.cols(); ++k) {
    const Index pivot = first_nonzero<S>(j2.reduce(s.section.col(k)));
    const auto [src, tgt] = s.blocks[k];
    arrows.push_back({unique_label(used, a.labels()[pivot]), vertices[src], vertices[tgt]});
  }
  return {make_vquiver(std::move(vertices), arrows), s};
}

template <ExactField S>
GabrielQuiver<S> gq(const AlgebraPtr<S>& a) {
  return gq(make_splitting(a));
}

template <ExactField S>
int orbit_of(const FinAlgebra<S>& a, const Vec<S>& x) {
  const Residue<S>& res = a.residue();
  const Vec<S> c = res.project(x);
  if (all_zero(c)) return kPoint;
  for (std::size_t j = 0; j < res.idempotents.size(); ++j) {
    if (c == res.idempotents[j]) return static_cast<int>(j);
  }
  throw Error(Errc::INTERNAL, "image of a primitive idempotent is not primitive modulo J");
}

template <ExactField S>
VQuiverMap<S> gq_on_morphism(const AlgMorphism<S>& alpha, const GabrielQuiver<S>& ga,
                             const GabrielQuiver<S>& gb) {
  if (ga.algebra() != alpha.source || gb.algebra() != alpha.target) {
    throw Error(Errc::NOT_COMPOSABLE, "Gabriel quivers do not belong to the morphism's algebras");
  }
  std::vector<int> vm;
  for (const Vec<S>& f : ga.splitting.idems) vm.push_back(orbit_of(*alpha.target, alpha(f)));
  Mat<S> arrows = gb.splitting.projection * alpha.matrix * ga.splitting.section;
  return validate_vq_map<S>(ga.vquiver, gb.vquiver, std::move(vm), std::move(arrows));
}

template <ExactField S>
VQuiverMap<S> gq_on_morphism(const AlgMorphism<S>& alpha) {
  return gq_on_morphism(alpha, gq(alpha.source), gq(alpha.target));
}

template <ExactField S>
bool check_sim(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, int level) {
  if (level < 0 || level > 1) throw std::invalid_argument("check_sim: level must be 0 or 1");
  return check_sim_n(alpha, beta, level);
}

template <ExactField S>
bool check_sim_n(const AlgMorphism<S>& alpha, const AlgMorphism<S>& beta, int n) {
  if (alpha.source != beta.source || alpha.target != beta.target) {
    throw Error(Errc::NOT_COMPOSABLE, "compared morphisms must share source and target");
  }
  const Mat<S> diff = alpha.matrix - beta.matrix;
  const FinAlgebra<S>& a = *alpha.source;
  const FinAlgebra<S>& b = *alpha.target;
  for (int m = 0; m <= n; ++m) {
    const Subspace<S>& jm = a.radical_power(m);
    if (jm.is_zero()) break;
    if (!b.radical_power(m + 1).contains(image<S>(diff, jm))) return false;
  }
  return true;
}

template <ExactField S>
VQuiverMap<S> gq_tilde(const AlgMorphism<S>& alpha, const std::optional<AlgMorphism<S>>& other) {
  const GabrielQuiver<S> ga = gq(alpha.source);
  const GabrielQuiver<S> gb = gq(alpha.target);
  VQuiverMap<S> out = gq_on_morphism(alpha, ga, gb);
  if (other) {
    if (!check_sim(alpha, *other, 1)) throw Error(Errc::NOT_SIM1, "representatives are not ~1-equivalent");
    if (!(gq_on_morphism(*other, ga, gb) == out)) {
      throw Error(Errc::INTERNAL, "GQ differs on two representatives of one ~1 class");
    }
  }
  return out;
}

template <ExactField S>
std::vector<std::string> gq0(const AlgebraPtr<S>& a) {
  return gq(a).vquiver.vertices;
}

template <ExactField S>
std::vector<int> gq0_on_morphism(const AlgMorphism<S>& alpha) {
  std::vector<int> vm;
  for (const Vec<S>& f : lift_idempotents(alpha.source)) vm.push_back(orbit_of(*alpha.target, alpha(f)));
  return vm;
}

template <ExactField S>
PathAlgebraPtr<S> k0(const FieldSpec& field, const std::vector<std::string>& points) {
  return build_kvq<S>(field, make_vquiver(points, {}), 2);
}

template <ExactField S>
AlgMorphism<S> semisimple_left(const AlgebraPtr<S>& a, const PathAlgebraPtr<S>& target,
                               const std::vector<int>& pointed_map) {
  const Residue<S>& res = a->residue();
  const Index r = res.dim();
  if (static_cast<Index>(pointed_map.size()) != r) {
    throw Error(Errc::INVALID_VERTEX_MAP, "pointed map must list every vertex of GQ0(A)");
  }
  Mat<S> eps(r, r);
  for (Index i = 0; i < r; ++i) eps.col(i) = res.idempotents[i];
  const std::optional<Mat<S>> inv = inverse<S>(eps);
  if (!inv) throw Error(Errc::INTERNAL, "residue idempotents are not a basis");
  // Coordinates of x + J along the residue idempotents.
  const Mat<S> coords = *inv * res.quotient.projection;
  const AlgebraPtr<S>& b = target->algebra;
  Mat<S> rho = Mat<S>::Zero(b->dim(), r);
  for (Index i = 0; i < r; ++i) {
    const int v = pointed_map[i];
    if (v == kPoint) continue;
    if (v < 0 || v >= target->quiver.vertex_count()) {
      throw Error(Errc::INVALID_VERTEX_MAP, "pointed map sends a vertex out of range");
    }
    rho(target->idempotent_index(v), i) = a->scalar(1);
  }
  return validate_morphism<S>(a, b, Mat<S>(rho * coords));
}

template <ExactField S>
std::vector<int> semisimple_right(const AlgMorphism<S>& alpha) {
  return gq0_on_morphism(alpha);
}

bool no_arrow_with_longer_parallel_path(const VQuiver& vq) {
  const int n = vq.vertex_count();
  // reach[g][f]: a path of length >= 1 from g to f.
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const Arrow& a : vq.arrows) reach[a.source][a.target] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (const Arrow& a : vq.arrows) {
    for (const Arrow& first : vq.arrows) {
      if (first.source == a.source && reach[first.target][a.target]) return false;
    }
  }
  return true;
}

#define QUIVKIT_INSTANTIATE_GABRIEL(S)                                                            \
  template struct GabrielQuiver<S>;                                                               \
  template GabrielQuiver<S> gq<S>(const AlgebraPtr<S>&);                                          \
  template GabrielQuiver<S> gq<S>(const Splitting<S>&);                                           \
  template int orbit_of<S>(const FinAlgebra<S>&, const Vec<S>&);                                  \
  template VQuiverMap<S> gq_on_morphism<S>(const AlgMorphism<S>&, const GabrielQuiver<S>&,        \
                                           const GabrielQuiver<S>&);                              \
  template VQuiverMap<S> gq_on_morphism<S>(const AlgMorphism<S>&);                                \
  template bool check_sim<S>(const AlgMorphism<S>&, const AlgMorphism<S>&, int);                  \
  template bool check_sim_n<S>(const AlgMorphism<S>&, const AlgMorphism<S>&, int);                \
  template VQuiverMap<S> gq_tilde<S>(const AlgMorphism<S>&, const std::optional<AlgMorphism<S>>&); \
  template std::vector<std::string> gq0<S>(const AlgebraPtr<S>&);                                 \
  template std::vector<int> gq0_on_morphism<S>(const AlgMorphism<S>&);                            \
  template PathAlgebraPtr<S> k0<S>(const FieldSpec&, const std::vector<std::string>&);            \
  template AlgMorphism<S> semisimple_left<S>(const AlgebraPtr<S>&, const PathAlgebraPtr<S>&,      \
                                             const std::vector<int>&);                            \
  template std::vector<int> semisimple_right<S>(const AlgMorphism<S>&);

QUIVKIT_INSTANTIATE_GABRIEL(Rational)
QUIVKIT_INSTANTIATE_GABRIEL(ModP)

}  // namespace quivkit
