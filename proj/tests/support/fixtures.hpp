#pragma once

// Hand-built algebras used as independent oracles.  Nothing here goes
// through the path-algebra builder.

#include "quivkit/algebra.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quivkit::testing {

/// Subalgebra of M_n spanned by the given matrix units E_ij (1-based).
template <ExactField S>
AlgebraPtr<S> matrix_units(const FieldSpec& field, int n, const std::vector<std::pair<int, int>>& units) {
  AlgebraData<S> d;
  d.field = field;
  const Index dim = static_cast<Index>(units.size());
  for (auto [i, j] : units) d.labels.push_back("E" + std::to_string(i) + std::to_string(j));
  auto find = [&](int i, int j) -> Index {
    for (Index k = 0; k < dim; ++k) {
      if (units[k] == std::make_pair(i, j)) return k;
    }
    return -1;
  };
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      Vec<S> v = Vec<S>::Zero(dim);
      if (units[a].second == units[b].first) {
        const Index k = find(units[a].first, units[b].second);
        if (k < 0) throw std::logic_error("matrix units not closed");
        v(k) = make_scalar<S>(field, 1);
      }
      d.products.push_back(v);
    }
  }
  d.unit = Vec<S>::Zero(dim);
  for (int i = 1; i <= n; ++i) d.unit(find(i, i)) = make_scalar<S>(field, 1);
  return validate_algebra(std::move(d));
}

/// k[x]/x^n with basis 1, x, x2, ..., x(n-1).
template <ExactField S>
AlgebraPtr<S> truncated_polynomial(const FieldSpec& field, int n) {
  AlgebraData<S> d;
  d.field = field;
  for (int i = 0; i < n; ++i) d.labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec<S> v = Vec<S>::Zero(n);
      if (i + j < n) v(i + j) = make_scalar<S>(field, 1);
      d.products.push_back(v);
    }
  }
  d.unit = unit_vector<S>(n, 0);
  return validate_algebra(std::move(d));
}

/// k^r with basis e1..er.
template <ExactField S>
AlgebraPtr<S> product_of_fields(const FieldSpec& field, int r) {
  AlgebraData<S> d;
  d.field = field;
  for (int i = 1; i <= r; ++i) d.labels.push_back("e" + std::to_string(i));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Vec<S> v = Vec<S>::Zero(r);
      if (i == j) v(i) = make_scalar<S>(field, 1);
      d.products.push_back(v);
    }
  }
  d.unit = Vec<S>::Constant(r, make_scalar<S>(field, 1));
  return validate_algebra(std::move(d));
}

/// Path algebra of an explicitly listed path basis.  Each path is
/// (label, source, target, arrow word read right to left); products
/// concatenate words and vanish when the endpoints do not match or the
/// concatenation is not listed.
struct HandPath {
  std::string label;
  int source;
  int target;
  std::vector<std::string> word;  // empty for vertex idempotents
};

template <ExactField S>
AlgebraPtr<S> hand_path_algebra(const FieldSpec& field, const std::vector<HandPath>& paths) {
  AlgebraData<S> d;
  d.field = field;
  const Index n = static_cast<Index>(paths.size());
  for (const auto& p : paths) d.labels.push_back(p.label);
  auto find = [&](int s, int t, const std::vector<std::string>& w) -> Index {
    for (Index k = 0; k < n; ++k) {
      if (paths[k].source == s && paths[k].target == t && paths[k].word == w) return k;
    }
    return -1;
  };
  d.unit = Vec<S>::Zero(n);
  for (Index a = 0; a < n; ++a) {
    if (paths[a].word.empty()) d.unit(a) = make_scalar<S>(field, 1);
    for (Index b = 0; b < n; ++b) {
      Vec<S> v = Vec<S>::Zero(n);
      const HandPath& x = paths[a];
      const HandPath& y = paths[b];
      if (x.source == y.target) {
        std::vector<std::string> w = x.word;
        w.insert(w.end(), y.word.begin(), y.word.end());
        const Index k = find(y.source, x.target, w);
        if (k >= 0) v(k) = make_scalar<S>(field, 1);
      }
      d.products.push_back(v);
    }
  }
  return validate_algebra(std::move(d));
}

/// The 7-dimensional algebra with arrows a: 1->2, b: 1->3, c: 3->2.
template <ExactField S>
AlgebraPtr<S> triangle_algebra(const FieldSpec& field) {
  return hand_path_algebra<S>(field, {{"e1", 1, 1, {}},
                                      {"e2", 2, 2, {}},
                                      {"e3", 3, 3, {}},
                                      {"a", 1, 2, {"a"}},
                                      {"b", 1, 3, {"b"}},
                                      {"c", 3, 2, {"c"}},
                                      {"cb", 1, 2, {"c", "b"}}});
}

}  // namespace quivkit::testing
