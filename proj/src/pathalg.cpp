#include "quivkit/pathalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quivkit {

template <ExactField S>
Subspace<S> PathAlgebra<S>::paths_from_length(int m) const {
  const Index n = algebra->dim();
  std::vector<Vec<S>> vs;
  for (Index i = 0; i < n; ++i) {
    if (paths[i].length() >= m) vs.push_back(unit_vector<S>(n, i));
  }
  return Subspace<S>::span(n, vs);
}

namespace {

std::string word_label(const VQuiver& vq, const PathWord& p) {
  if (p.arrows.empty()) return "e" + vq.vertices[p.vertex];
  std::string out;
  for (Index a : p.arrows) {
    if (!out.empty()) out += "*";
    out += vq.arrows[a].label;
  }
  return out;
}

std::vector<PathWord> enumerate_paths(const VQuiver& vq, int level) {
  std::vector<PathWord> all;
  for (int v = 0; v < vq.vertex_count(); ++v) all.push_back({{}, v, v, v});
  std::vector<PathWord> layer;
  for (Index a = 0; a < vq.arrow_count(); ++a) {
    layer.push_back({{a}, 0, vq.arrows[a].source, vq.arrows[a].target});
  }
  for (int len = 1; len < level && !layer.empty(); ++len) {
    std::sort(layer.begin(), layer.end(),
              [](const PathWord& x, const PathWord& y) { return x.arrows < y.arrows; });
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<PathWord> next;
    for (const PathWord& p : layer) {
      for (Index a = 0; a < vq.arrow_count(); ++a) {
        if (vq.arrows[a].source != p.target) continue;
        PathWord q = p;
        q.arrows.insert(q.arrows.begin(), a);
        q.target = vq.arrows[a].target;
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return all;
}

}  // namespace

Index path_count_by_adjacency(const VQuiver& vq, int level) {
  const int n = vq.vertex_count();
  std::vector<std::vector<long long>> adj(n, std::vector<long long>(n, 0));
  for (const Arrow& a : vq.arrows) ++adj[a.target][a.source];
  std::vector<std::vector<long long>> power(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  long long total = 0;
  for (int m = 0; m < level; ++m) {
    for (const auto& row : power) {
      for (long long x : row) total += x;
    }
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (adj[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += adj[i][k] * power[k][j];
      }
    }
    power = std::move(next);
  }
  return static_cast<Index>(total);
}

template <ExactField S>
PathAlgebraPtr<S> build_kvq(const FieldSpec& field, const VQuiver& vq, int level) {
  if (level < 2) {
    throw Error(Errc::LEVEL_TOO_SMALL, "truncation level must be at least 2, got " + std::to_string(level));
  }
  if (vq.vertex_count() == 0) throw Error(Errc::MALFORMED_QUIVER, "a Vquiver needs at least one vertex");
  auto out = std::make_shared<PathAlgebra<S>>();
  out->quiver = vq;
  out->level = level;
  out->paths = enumerate_paths(vq, level);
  const Index n = static_cast<Index>(out->paths.size());

  std::map<std::vector<Index>, Index> by_word;
  for (Index i = vq.vertex_count(); i < n; ++i) by_word.emplace(out->paths[i].arrows, i);

  AlgebraData<S> data;
  data.field = field;
  std::set<std::string> seen;
  for (const PathWord& p : out->paths) {
    data.labels.push_back(word_label(vq, p));
    if (!seen.insert(data.labels.back()).second) {
      throw Error(Errc::MALFORMED_QUIVER, "basis label '" + data.labels.back() +
                                              "' occurs twice; rename arrows or vertices");
    }
  }
  const S one = make_scalar<S>(field, 1);
  data.products.reserve(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    const PathWord& x = out->paths[i];
    for (Index j = 0; j < n; ++j) {
      const PathWord& y = out->paths[j];
      Vec<S> v = Vec<S>::Zero(n);
      if (x.source == y.target) {
        if (x.arrows.empty()) {
          v(j) = one;
        } else if (y.arrows.empty()) {
          v(i) = one;
        } else if (x.length() + y.length() < level) {
          std::vector<Index> w = x.arrows;
          w.insert(w.end(), y.arrows.begin(), y.arrows.end());
          v(by_word.at(w)) = one;
        }
      }
      data.products.push_back(std::move(v));
    }
  }
  data.unit = Vec<S>::Zero(n);
  for (int v = 0; v < vq.vertex_count(); ++v) data.unit(v) = one;
  out->algebra = validate_algebra(std::move(data));
  return out;
}

template <ExactField S>
AlgMorphism<S> universal_map(const PathAlgebra<S>& t, AlgebraPtr<S> target,
                             const std::vector<Vec<S>>& vertex_images,
                             const std::vector<Vec<S>>& arrow_images) {
  const VQuiver& vq = t.quiver;
  if (static_cast<int>(vertex_images.size()) != vq.vertex_count() ||
      static_cast<Index>(arrow_images.size()) != vq.arrow_count()) {
    throw Error(Errc::DIMENSION_MISMATCH, "universal_map needs one image per vertex and per arrow");
  }
  Vec<S> total = target->zero();
  for (int v = 0; v < vq.vertex_count(); ++v) {
    const Vec<S>& e = vertex_images[v];
    if (e.size() != target->dim()) throw Error(Errc::DIMENSION_MISMATCH, "vertex image size");
    total += e;
    for (int w = 0; w < vq.vertex_count(); ++w) {
      const Vec<S> prod = target->mul(e, vertex_images[w]);
      if (v == w ? prod != e : !all_zero(prod)) {
        throw Error(Errc::NOT_MULTIPLICATIVE, "vertex images are not orthogonal idempotents");
      }
    }
  }
  if (total != target->unit()) throw Error(Errc::NOT_UNITAL, "vertex images do not sum to 1");
  for (Index a = 0; a < vq.arrow_count(); ++a) {
    const Vec<S>& x = arrow_images[a];
    if (x.size() != target->dim()) throw Error(Errc::DIMENSION_MISMATCH, "arrow image size");
    const Vec<S> sandwiched =
        target->mul(target->mul(vertex_images[vq.arrows[a].target], x), vertex_images[vq.arrows[a].source]);
    if (sandwiched != x) {
      throw Error(Errc::BIMODULE_CONDITION_FAIL,
                  "image of arrow '" + vq.arrows[a].label + "' is not in f A e for its endpoints");
    }
  }
  const Index n = t.algebra->dim();
  Mat<S> m(target->dim(), n);
  for (Index i = 0; i < n; ++i) {
    const PathWord& p = t.paths[i];
    if (p.arrows.empty()) {
      m.col(i) = vertex_images[p.vertex];
      continue;
    }
    Vec<S> img = arrow_images[p.arrows.back()];
    for (std::size_t k = p.arrows.size() - 1; k-- > 0;) img = target->mul(arrow_images[p.arrows[k]], img);
    m.col(i) = img;
  }
  for (Index i = 0; i < n; ++i) {
    const PathWord& p = t.paths[i];
    if (p.length() != t.level - 1) continue;
    for (Index a = 0; a < vq.arrow_count(); ++a) {
      if (vq.arrows[a].source != p.target) continue;
      if (!all_zero(target->mul(arrow_images[a], Vec<S>(m.col(i))))) {
        throw Error(Errc::TRUNCATION_INCOMPATIBLE,
                    "a path of length " + std::to_string(t.level) + " has nonzero image");
      }
    }
  }
  return validate_morphism(t.algebra, std::move(target), std::move(m));
}

template <ExactField S>
AlgMorphism<S> kvq_on_map(const VQuiverMap<S>& rho, const PathAlgebra<S>& source,
                          const PathAlgebra<S>& target) {
  if (!(rho.source == source.quiver) || !(rho.target == target.quiver)) {
    throw Error(Errc::NOT_COMPOSABLE, "Vquiver map does not match the path algebras");
  }
  const AlgebraPtr<S>& b = target.algebra;
  std::vector<Vec<S>> vimg;
  for (int v = 0; v < source.quiver.vertex_count(); ++v) {
    const int w = rho.vertex_map[v];
    vimg.push_back(w == kPoint ? b->zero() : b->basis_vector(target.idempotent_index(w)));
  }
  std::vector<Vec<S>> aimg;
  for (Index a = 0; a < source.quiver.arrow_count(); ++a) {
    Vec<S> x = b->zero();
    for (Index i = 0; i < target.quiver.arrow_count(); ++i) x(target.arrow_index(i)) = rho.arrows(i, a);
    aimg.push_back(std::move(x));
  }
  return universal_map(source, b, vimg, aimg);
}

template <ExactField S>
PathAlgebraPtr<S> cpa(const FieldSpec& field, const Quiver& q, int level) {
  return build_kvq<S>(field, v_of_quiver(q), level);
}

template <ExactField S>
AlgMorphism<S> cpa_on_inclusion(const QuiverMap& iota, const PathAlgebra<S>& cpa_r,
                                const PathAlgebra<S>& cpa_q) {
  return kvq_on_map(v_of_inclusion<S>(iota), cpa_r, cpa_q);
}

#define QUIVKIT_INSTANTIATE_PATHALG(S)                                                           \
  template struct PathAlgebra<S>;                                                                \
  template PathAlgebraPtr<S> build_kvq<S>(const FieldSpec&, const VQuiver&, int);                \
  template AlgMorphism<S> universal_map<S>(const PathAlgebra<S>&, AlgebraPtr<S>,                 \
                                           const std::vector<Vec<S>>&, const std::vector<Vec<S>>&); \
  template AlgMorphism<S> kvq_on_map<S>(const VQuiverMap<S>&, const PathAlgebra<S>&,             \
                                        const PathAlgebra<S>&);                                  \
  template PathAlgebraPtr<S> cpa<S>(const FieldSpec&, const Quiver&, int);                       \
  template AlgMorphism<S> cpa_on_inclusion<S>(const QuiverMap&, const PathAlgebra<S>&,           \
                                              const PathAlgebra<S>&);

QUIVKIT_INSTANTIATE_PATHALG(Rational)
QUIVKIT_INSTANTIATE_PATHALG(ModP)

}  // namespace quivkit
