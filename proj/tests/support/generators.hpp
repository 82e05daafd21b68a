#pragma once

// Hand-rolled random generators for property tests.

#include "quivkit/field.hpp"
#include "quivkit/linalg.hpp"
#include "quivkit/vquiver.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace quivkit::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <ExactField S>
  S scalar(const FieldSpec& field, int spread = 3) {
    if (field.is_rational()) {
      return make_scalar<S>(field, uniform(-spread, spread), coin(0.2) ? uniform(1, 3) : 1);
    }
    return make_scalar<S>(field, uniform(0, static_cast<int>(field.characteristic) - 1));
  }

  template <ExactField S>
  Mat<S> matrix(const FieldSpec& field, Index r, Index c, double density = 0.6) {
    Mat<S> m = Mat<S>::Zero(r, c);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < c; ++j) {
        m(i, j) = coin(density) ? scalar<S>(field) : make_scalar<S>(field, 0);
      }
    }
    return m;
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    std::shuffle(xs.begin(), xs.end(), rng_);
  }

  /// Vertices "1".."n", arrows named a0, a1, ...
  VQuiver quiver(int max_vertices, int max_arrows, bool acyclic) {
    const int n = uniform(1, max_vertices);
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    std::vector<ArrowSpec> as;
    const int m = uniform(0, max_arrows);
    for (int k = 0; k < m; ++k) {
      int s = uniform(0, n - 1);
      int t = uniform(0, n - 1);
      if (acyclic) {
        if (s == t) continue;
        if (s > t) std::swap(s, t);
      }
      as.push_back({"a" + std::to_string(k), vs[s], vs[t]});
    }
    return make_vquiver(vs, as);
  }

  /// Inclusion of a random full-or-partial subquiver.
  QuiverMap subquiver(const Quiver& r) {
    std::vector<int> keep;
    for (int v = 0; v < r.vertex_count(); ++v) {
      if (coin(0.7)) keep.push_back(v);
    }
    if (keep.empty()) keep.push_back(uniform(0, r.vertex_count() - 1));
    std::vector<std::string> vs;
    std::vector<int> index(static_cast<std::size_t>(r.vertex_count()), -1);
    for (int v : keep) {
      index[v] = static_cast<int>(vs.size());
      vs.push_back(r.vertices[v]);
    }
    std::vector<ArrowSpec> as;
    std::vector<Index> amap;
    for (Index a = 0; a < r.arrow_count(); ++a) {
      const Arrow& x = r.arrows[a];
      if (index[x.source] < 0 || index[x.target] < 0 || !coin(0.7)) continue;
      as.push_back({x.label, r.vertices[x.source], r.vertices[x.target]});
      amap.push_back(a);
    }
    return {make_vquiver(vs, as), r, keep, amap};
  }

  /// A Vquiver map from `source` onto a quotient-shaped target: a random
  /// subset of source vertices survives (renamed), and each target arrow
  /// block receives random combinations of the source arrows in the
  /// corresponding block.
  template <ExactField S>
  VQuiverMap<S> vq_map(const FieldSpec& field, const VQuiver& source, int max_target_arrows) {
    const int n = source.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order);
    const int kept = uniform(1, n);
    std::vector<int> vm(static_cast<std::size_t>(n), kPoint);
    std::vector<std::string> vs;
    for (int k = 0; k < kept; ++k) {
      vm[order[k]] = k;
      vs.push_back("v" + std::to_string(k));
    }
    std::vector<ArrowSpec> as;
    const int m = uniform(0, max_target_arrows);
    for (int k = 0; k < m; ++k) {
      as.push_back({"b" + std::to_string(k), vs[uniform(0, kept - 1)], vs[uniform(0, kept - 1)]});
    }
    VQuiver target = make_vquiver(vs, as);
    Mat<S> arrows = Mat<S>::Zero(target.arrow_count(), source.arrow_count());
    for (Index j = 0; j < source.arrow_count(); ++j) {
      const int s = vm[source.arrows[j].source];
      const int t = vm[source.arrows[j].target];
      for (Index i = 0; i < target.arrow_count(); ++i) {
        if (s != kPoint && t != kPoint && target.arrows[i].source == s && target.arrows[i].target == t) {
          arrows(i, j) = scalar<S>(field);
        } else {
          arrows(i, j) = make_scalar<S>(field, 0);
        }
      }
    }
    return validate_vq_map<S>(source, std::move(target), std::move(vm), std::move(arrows));
  }

  /// A random Vquiver map between fixed Vquivers; needs at least as many
  /// source vertices as target vertices.
  template <ExactField S>
  VQuiverMap<S> vq_map_to(const FieldSpec& field, const VQuiver& source, const VQuiver& target) {
    std::vector<int> order(static_cast<std::size_t>(source.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order);
    std::vector<int> vm(order.size(), kPoint);
    for (int k = 0; k < target.vertex_count(); ++k) vm[order.at(k)] = k;
    Mat<S> arrows = Mat<S>::Zero(target.arrow_count(), source.arrow_count());
    for (Index j = 0; j < source.arrow_count(); ++j) {
      const int s = vm[source.arrows[j].source];
      const int t = vm[source.arrows[j].target];
      for (Index i = 0; i < target.arrow_count(); ++i) {
        const bool allowed = s != kPoint && t != kPoint && target.arrows[i].source == s && target.arrows[i].target == t;
        arrows(i, j) = allowed ? scalar<S>(field) : make_scalar<S>(field, 0);
      }
    }
    return validate_vq_map<S>(source, target, std::move(vm), std::move(arrows));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace quivkit::testing
