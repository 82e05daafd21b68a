#pragma once

// The fixed corpus of small algebras and Vquivers used by the property
// tests and the acceptance runner.  Each algebra carries its Gabriel quiver
// written out by hand.

#include "quivkit/pathalg.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace quivkit::testing {

template <ExactField S>
struct CorpusAlgebra {
  std::string name;
  AlgebraPtr<S> algebra;
  VQuiver quiver;
};

inline VQuiver vq_point() { return make_vquiver({"1"}, {}); }
inline VQuiver vq_two_points() { return make_vquiver({"1", "2"}, {}); }
inline VQuiver vq_arrow() { return make_vquiver({"1", "2"}, {{"a", "1", "2"}}); }
inline VQuiver vq_kronecker() { return make_vquiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}); }
inline VQuiver vq_loop() { return make_vquiver({"1"}, {{"x", "1", "1"}}); }
inline VQuiver vq_two_loops() { return make_vquiver({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}); }
inline VQuiver vq_linear3() { return make_vquiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }
inline VQuiver vq_triangle() {
  return make_vquiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "3", "2"}});
}
inline VQuiver vq_two_cycle() { return make_vquiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}); }
inline VQuiver vq_loop_arrow() { return make_vquiver({"1", "2"}, {{"x", "1", "1"}, {"a", "1", "2"}}); }
inline VQuiver vq_square() {
  return make_vquiver({"1", "2", "3", "4"},
                      {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}});
}

inline std::vector<std::pair<std::string, VQuiver>> corpus_quivers() {
  return {{"point", vq_point()},       {"two points", vq_two_points()}, {"arrow", vq_arrow()},
          {"kronecker", vq_kronecker()}, {"loop", vq_loop()},           {"two loops", vq_two_loops()},
          {"linear3", vq_linear3()},   {"triangle", vq_triangle()},     {"two-cycle", vq_two_cycle()},
          {"loop-arrow", vq_loop_arrow()}, {"square", vq_square()}};
}

/// True when some vertex bijection matches all block dimensions.
inline bool shape_matches(const VQuiver& a, const VQuiver& b) {
  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int e = 0; e < a.vertex_count() && ok; ++e) {
      for (int f = 0; f < a.vertex_count() && ok; ++f) ok = a.block_dim(e, f) == b.block_dim(perm[e], perm[f]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <ExactField S>
AlgebraPtr<S> quotient_by(const PathAlgebraPtr<S>& t, const std::vector<std::vector<std::pair<std::string, long>>>& gens) {
  const AlgebraPtr<S>& a = t->algebra;
  std::vector<Vec<S>> vs;
  for (const auto& g : gens) {
    Vec<S> v = a->zero();
    for (const auto& [label, c] : g) v += a->scalar(c) * a->basis_vector(*a->find(label));
    vs.push_back(v);
  }
  return quotient_algebra(a, ideal_generated_by(a, vs)).algebra;
}

template <ExactField S>
std::vector<CorpusAlgebra<S>> corpus_algebras(const FieldSpec& field) {
  std::vector<CorpusAlgebra<S>> out;
  out.push_back({"k", product_of_fields<S>(field, 1), vq_point()});
  out.push_back({"k x k", product_of_fields<S>(field, 2), vq_two_points()});
  out.push_back({"k[x]/x^2", truncated_polynomial<S>(field, 2), vq_loop()});
  out.push_back({"k[x]/x^3", truncated_polynomial<S>(field, 3), vq_loop()});
  out.push_back({"lower triangular", matrix_units<S>(field, 2, {{1, 1}, {2, 1}, {2, 2}}), vq_arrow()});
  out.push_back({"kronecker", hand_path_algebra<S>(field, {{"e1", 1, 1, {}}, {"e2", 2, 2, {}}, {"a", 1, 2, {"a"}}, {"b", 1, 2, {"b"}}}),
                 vq_kronecker()});
  out.push_back({"linear3", hand_path_algebra<S>(field, {{"e1", 1, 1, {}}, {"e2", 2, 2, {}}, {"e3", 3, 3, {}},
                                                         {"a", 1, 2, {"a"}}, {"b", 2, 3, {"b"}}, {"ba", 1, 3, {"b", "a"}}}),
                 vq_linear3()});
  out.push_back({"linear3/ba", hand_path_algebra<S>(field, {{"e1", 1, 1, {}}, {"e2", 2, 2, {}}, {"e3", 3, 3, {}},
                                                            {"a", 1, 2, {"a"}}, {"b", 2, 3, {"b"}}}),
                 vq_linear3()});
  const AlgebraPtr<S> tri = triangle_algebra<S>(field);
  out.push_back({"triangle", tri, vq_triangle()});
  out.push_back({"triangle/cb", quotient_algebra(tri, ideal_generated_by(tri, {tri->basis_vector(*tri->find("cb"))})).algebra,
                 vq_triangle()});
  out.push_back({"k<x,y>/J^2", build_kvq<S>(field, vq_two_loops(), 2)->algebra, vq_two_loops()});
  const auto free3 = build_kvq<S>(field, vq_two_loops(), 3);
  out.push_back({"k<x,y>/J^3", free3->algebra, vq_two_loops()});
  out.push_back({"k[x,y]/J^3", quotient_by<S>(free3, {{{"x*y", 1}, {"y*x", -1}}}), vq_two_loops()});
  out.push_back({"commutative square", quotient_by<S>(build_kvq<S>(field, vq_square(), 3), {{{"b*a", 1}, {"d*c", -1}}}),
                 vq_square()});
  out.push_back({"two-cycle/J^3", build_kvq<S>(field, vq_two_cycle(), 3)->algebra, vq_two_cycle()});
  out.push_back({"loop-arrow/x^2", quotient_by<S>(build_kvq<S>(field, vq_loop_arrow(), 3), {{{"x*x", 1}}}),
                 vq_loop_arrow()});
  return out;
}

}  // namespace quivkit::testing
