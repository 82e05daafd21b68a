#pragma once

#include "quivkit/linalg.hpp"

#include <initializer_list>

namespace quivkit::testing {

inline Mat<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Mat<Rational> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline Mat<ModP> pmat(std::uint32_t p, std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Mat<ModP> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = ModP::bound(v, p);
    ++i;
  }
  return m;
}

inline Vec<Rational> qvec(std::initializer_list<long> xs) {
  Vec<Rational> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace quivkit::testing
