#include "quivkit/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <type_traits>

namespace quivkit {

template <ExactField S>
StructureTable<S>::StructureTable(Index dim, const std::vector<Vec<S>>& products)
    : dim_(dim), table_(static_cast<std::size_t>(dim * dim)) {
  if (static_cast<Index>(products.size()) != dim * dim) {
    throw Error(Errc::MALFORMED_ALGEBRA, "expected " + std::to_string(dim * dim) + " products");
  }
  for (Index k = 0; k < dim * dim; ++k) {
    const Vec<S>& v = products[k];
    if (v.size() != dim) throw Error(Errc::MALFORMED_ALGEBRA, "product vector of wrong length");
    for (Index m = 0; m < dim; ++m) {
      if (!v(m).is_zero()) table_[k].emplace_back(m, v(m));
    }
  }
}

template <ExactField S>
Vec<S> StructureTable<S>::product(Index i, Index j) const {
  Vec<S> out = Vec<S>::Zero(dim_);
  for (const auto& [m, c] : terms(i, j)) out(m) = c;
  return out;
}

template <ExactField S>
Vec<S> StructureTable<S>::mul(const Vec<S>& x, const Vec<S>& y) const {
  std::vector<Index> xs;
  std::vector<Index> ys;
  for (Index i = 0; i < dim_; ++i) {
    if (!x(i).is_zero()) xs.push_back(i);
    if (!y(i).is_zero()) ys.push_back(i);
  }
  Vec<S> out = Vec<S>::Zero(dim_);
  for (Index i : xs) {
    for (Index j : ys) {
      const auto& t = terms(i, j);
      if (t.empty()) continue;
      const S xy = x(i) * y(j);
      for (const auto& [m, c] : t) out(m) += xy * c;
    }
  }
  return out;
}

template <ExactField S>
Mat<S> StructureTable<S>::left_mul(const Vec<S>& x) const {
  Mat<S> out = Mat<S>::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      for (const auto& [m, c] : terms(i, j)) out(m, j) += x(i) * c;
    }
  }
  return out;
}

template <ExactField S>
Mat<S> StructureTable<S>::right_mul(const Vec<S>& x) const {
  Mat<S> out = Mat<S>::Zero(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) {
    if (x(j).is_zero()) continue;
    for (Index i = 0; i < dim_; ++i) {
      for (const auto& [m, c] : terms(i, j)) out(m, i) += x(j) * c;
    }
  }
  return out;
}

namespace {

template <ExactField S>
Vec<S> table_pow(const StructureTable<S>& t, const Vec<S>& one, Vec<S> x, std::uint64_t n) {
  Vec<S> acc = one;
  while (n > 0) {
    if (n & 1u) acc = t.mul(acc, x);
    n >>= 1u;
    if (n > 0) x = t.mul(x, x);
  }
  return acc;
}

template <ExactField S>
Subspace<S> product_space(const StructureTable<S>& t, const Subspace<S>& u, const Subspace<S>& w) {
  Reducer<S> red(t.dim());
  for (Index i = 0; i < u.dim() && red.dim() < t.dim(); ++i) {
    const Vec<S> x = u.vector(i);
    for (Index j = 0; j < w.dim(); ++j) {
      const Vec<S> p = t.mul(x, w.vector(j));
      if (!all_zero(p)) red.add(p);
    }
  }
  return red.span();
}

std::vector<std::pair<long long, long long>> convergents(double x, long long max_den) {
  std::vector<std::pair<long long, long long>> out;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double r = x;
  for (int step = 0; step < 40; ++step) {
    const double fa = std::floor(r);
    if (std::abs(fa) > 9e15) break;
    const auto a = static_cast<long long>(fa);
    const long long h = a * h0 + h1;
    const long long k = a * k0 + k1;
    if (k > max_den || k <= 0) break;
    out.emplace_back(h, k);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    const double frac = r - fa;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return out;
}

Rational poly_eval(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& root) {
  // Synthetic division by (t - root); coefficients ascending.
  const std::size_t n = poly.size() - 1;
  std::vector<Rational> q(n);
  Rational carry(0);
  for (std::size_t i = n; i-- > 0;) {
    carry = poly[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

/// Distinct rational roots of a monic polynomial (ascending coefficients).
/// Candidate roots come from a floating-point companion eigensolve and are
/// accepted only after exact verification.
std::vector<Rational> rational_roots(std::vector<Rational> poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1) {
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) {
      roots.push_back(-poly[0] / poly[1]);
      break;
    }
    mpz_class lcm = 1;
    for (const Rational& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Index>(deg), static_cast<Index>(deg));
    for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Index>(i), static_cast<Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) {
      companion(static_cast<Index>(i), static_cast<Index>(deg - 1)) = -poly[i].value().get_d();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    bool found = false;
    for (Index k = 0; k < solver.eigenvalues().size() && !found; ++k) {
      const std::complex<double> ev = solver.eigenvalues()(k);
      if (std::abs(ev.imag()) > 1e-6 * std::max(1.0, std::abs(ev))) continue;
      std::vector<Rational> candidates;
      const mpz_class scaled(static_cast<long>(std::llround(lcm.get_d() * ev.real())));
      candidates.emplace_back(mpq_class(scaled, lcm));
      for (const auto& [h, d] : convergents(ev.real(), 1000000000LL)) {
        candidates.emplace_back(mpq_class(mpz_class(static_cast<long>(h)), mpz_class(static_cast<long>(d))));
      }
      for (const Rational& c : candidates) {
        if (poly_eval(poly, c).is_zero()) {
          roots.push_back(c);
          poly = deflate(poly, c);
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  return roots;
}

/// An idempotent u of the commutative split-semisimple algebra eR with
/// u != 0, e; z is an element of eR outside k e.
template <ExactField S>
Vec<S> splitting_idempotent(const FieldSpec& field, const StructureTable<S>& r, const Vec<S>& e,
                            const Vec<S>& z) {
  if (!field.is_rational()) {
    const std::uint32_t p = field.characteristic;
    if (p == 2) return z;
    const S half = make_scalar<S>(field, 1, 2);
    for (std::uint32_t c = 0; c < p; ++c) {
      const Vec<S> y = z + make_scalar<S>(field, c) * e;
      const Vec<S> w = table_pow(r, e, y, (p - 1) / 2);
      const Vec<S> u = r.mul(w, w);
      if (!all_zero(u) && u != e) return u;
      if (u == e) {
        const Vec<S> v = (e + w) * half;
        if (!all_zero(v) && v != e) return v;
      }
    }
    throw Error(Errc::NOT_POINTED, "radical quotient does not split over " + field.name());
  }
  if constexpr (std::is_same_v<S, Rational>) {
    // Minimal polynomial of z in eR by a Krylov sequence.
    const Index d = r.dim();
    std::vector<Vec<S>> powers{e};
    Reducer<S> red(d);
    red.add(e);
    Vec<S> next = z;
    while (red.add(next)) {
      powers.push_back(next);
      next = r.mul(next, z);
    }
    const Index k = static_cast<Index>(powers.size());
    Mat<S> krylov(d, k);
    for (Index i = 0; i < k; ++i) krylov.col(i) = powers[i];
    const std::optional<Vec<S>> coeffs = solve<S>(krylov, next);
    if (!coeffs) throw Error(Errc::INTERNAL, "Krylov sequence failed to close");
    std::vector<Rational> poly(static_cast<std::size_t>(k + 1));
    for (Index i = 0; i < k; ++i) poly[i] = -(*coeffs)(i);
    poly[k] = Rational(1);
    const std::vector<Rational> roots = rational_roots(poly);
    if (static_cast<Index>(roots.size()) < k) {
      throw Error(Errc::NOT_POINTED, "radical quotient has a simple factor larger than Q");
    }
    Vec<S> idem = e;
    for (std::size_t i = 1; i < roots.size(); ++i) {
      idem = r.mul(idem, Vec<S>(z - roots[i] * e)) * (Rational(1) / (roots[0] - roots[i]));
    }
    return idem;
  }
  throw Error(Errc::INTERNAL, "unsupported scalar type");
}

template <ExactField S>
std::vector<Vec<S>> split_residue(const FieldSpec& field, const StructureTable<S>& r,
                                  const Vec<S>& one) {
  const Index d = r.dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      if (r.product(i, j) != r.product(j, i)) {
        throw Error(Errc::NOT_POINTED, "radical quotient is not commutative");
      }
    }
  }
  if (!field.is_rational()) {
    for (Index i = 0; i < d; ++i) {
      const Vec<S> b = unit_vector<S>(d, i);
      if (table_pow(r, one, b, field.characteristic) != b) {
        throw Error(Errc::NOT_POINTED, "radical quotient has a simple factor larger than " +
                                           field.name());
      }
    }
  }
  std::vector<Vec<S>> pending{one};
  std::vector<Vec<S>> done;
  while (!pending.empty()) {
    const Vec<S> e = pending.back();
    pending.pop_back();
    const Subspace<S> corner = image<S>(r.left_mul(e));
    if (corner.dim() <= 1) {
      done.push_back(e);
      continue;
    }
    const Subspace<S> line = Subspace<S>::span(d, {e});
    Vec<S> z;
    for (Index i = 0; i < corner.dim(); ++i) {
      z = corner.vector(i);
      if (!line.contains(z)) break;
    }
    const Vec<S> u = splitting_idempotent(field, r, e, z);
    pending.push_back(e - u);
    pending.push_back(u);
  }
  auto key = [](const Vec<S>& v) {
    Index first = 0;
    while (first < v.size() && v(first).is_zero()) ++first;
    return first;
  };
  std::sort(done.begin(), done.end(), [&](const Vec<S>& a, const Vec<S>& b) {
    const Index ka = key(a);
    const Index kb = key(b);
    if (ka != kb) return ka < kb;
    for (Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  });
  return done;
}

}  // namespace

template <ExactField S>
std::optional<Index> FinAlgebra<S>::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <ExactField S>
Vec<S> FinAlgebra<S>::pow(const Vec<S>& x, std::uint64_t n) const {
  return table_pow(table_, unit_, x, n);
}

template <ExactField S>
Vec<S> FinAlgebra<S>::unipotent_inverse(const Vec<S>& x) const {
  Vec<S> sum_ = unit_;
  Vec<S> term = unit_;
  for (Index k = 0; k <= dim(); ++k) {
    term = -mul(term, x);
    if (all_zero(term)) return sum_;
    sum_ += term;
  }
  throw Error(Errc::INTERNAL, "unipotent_inverse: element is not in the radical");
}

template <ExactField S>
const Subspace<S>& FinAlgebra<S>::radical_power(int n) const {
  if (n < 0) throw std::invalid_argument("radical_power: negative exponent");
  if (n >= static_cast<int>(filtration_.size())) return zero_;
  return filtration_[static_cast<std::size_t>(n)];
}

template <ExactField S>
Subspace<S> ideal_closure(const StructureTable<S>& table, const Subspace<S>& generators) {
  const Index n = table.dim();
  Reducer<S> red(n);
  std::vector<Vec<S>> queue;
  for (Index i = 0; i < generators.dim(); ++i) {
    if (red.add(generators.vector(i))) queue.push_back(generators.vector(i));
  }
  while (!queue.empty() && red.dim() < n) {
    const Vec<S> v = queue.back();
    queue.pop_back();
    for (Index i = 0; i < n; ++i) {
      const Vec<S> b = unit_vector<S>(n, i);
      for (const Vec<S>& w : {table.mul(b, v), table.mul(v, b)}) {
        if (red.add(w)) queue.push_back(w);
      }
    }
  }
  return red.span();
}

template <ExactField S>
Subspace<S> radical_trace_form(const FieldSpec& field, const StructureTable<S>& table) {
  const Index n = table.dim();
  if (!field.is_rational() && field.characteristic <= static_cast<std::uint32_t>(n)) {
    throw Error(Errc::CHAR_TOO_SMALL, "trace form needs characteristic 0 or p > dim (p = " +
                                          std::to_string(field.characteristic) +
                                          ", dim = " + std::to_string(n) + ")");
  }
  std::vector<S> tr(static_cast<std::size_t>(n), S(0));
  for (Index m = 0; m < n; ++m) {
    for (Index k = 0; k < n; ++k) {
      for (const auto& [idx, c] : table.terms(m, k)) {
        if (idx == k) tr[m] += c;
      }
    }
  }
  Mat<S> gram = Mat<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& [m, c] : table.terms(i, j)) gram(i, j) += c * tr[m];
    }
  }
  return kernel<S>(gram);
}

template <ExactField S>
Subspace<S> radical_frobenius(const FieldSpec& field, const StructureTable<S>& table,
                              const Vec<S>& unit) {
  if (field.is_rational()) {
    throw std::invalid_argument("radical_frobenius needs a field of positive characteristic");
  }
  const Index n = table.dim();
  std::vector<Vec<S>> commutators;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      Vec<S> c = table.product(i, j) - table.product(j, i);
      if (!all_zero(c)) commutators.push_back(std::move(c));
    }
  }
  const Subspace<S> comm = ideal_closure(table, Subspace<S>::span(n, commutators));
  const Quotient<S> q = quotient_basis(Subspace<S>::full(n), comm);
  std::uint64_t power = field.characteristic;
  while (power < static_cast<std::uint64_t>(n)) power *= field.characteristic;
  Mat<S> frob(q.dim(), q.dim());
  for (Index i = 0; i < q.dim(); ++i) {
    frob.col(i) = q.projection * table_pow(table, unit, Vec<S>(q.representatives.col(i)), power);
  }
  const Subspace<S> nil = kernel<S>(frob);
  const Subspace<S> j = sum(comm, Subspace<S>::span(Mat<S>(q.representatives * nil.basis())));
  Subspace<S> layer = j;
  for (Index k = 0; k <= n && !layer.is_zero(); ++k) {
    Subspace<S> next = product_space(table, j, layer);
    if (next == layer) {
      throw Error(Errc::NOT_POINTED, "commutator ideal is not nilpotent, so A/J is not commutative");
    }
    layer = std::move(next);
  }
  return j;
}

template <ExactField S>
Subspace<S> radical(const FieldSpec& field, const StructureTable<S>& table, const Vec<S>& unit) {
  if (field.is_rational() || field.characteristic > static_cast<std::uint32_t>(table.dim())) {
    return radical_trace_form(field, table);
  }
  return radical_frobenius(field, table, unit);
}

template <ExactField S>
AlgebraPtr<S> validate_algebra(AlgebraData<S> data) {
  if (!supports<S>(data.field)) {
    throw Error(Errc::MALFORMED_ALGEBRA, "scalar type does not match field " + data.field.name());
  }
  const Index n = static_cast<Index>(data.labels.size());
  if (n == 0) throw Error(Errc::MALFORMED_ALGEBRA, "an algebra needs at least one basis element");
  if (data.unit.size() != n) throw Error(Errc::MALFORMED_ALGEBRA, "unit vector of wrong length");

  auto alg = std::shared_ptr<FinAlgebra<S>>(new FinAlgebra<S>());
  alg->field_ = data.field;
  for (Index i = 0; i < n; ++i) {
    const std::string& l = data.labels[i];
    if (l.empty()) throw Error(Errc::MALFORMED_ALGEBRA, "empty basis label");
    if (!alg->index_.emplace(l, i).second) {
      throw Error(Errc::MALFORMED_ALGEBRA, "duplicate basis label '" + l + "'");
    }
  }
  alg->labels_ = std::move(data.labels);
  for (Vec<S>& v : data.products) {
    for (Index m = 0; m < v.size(); ++m) v(m) = bind_to(v(m), data.field);
  }
  for (Index m = 0; m < n; ++m) data.unit(m) = bind_to(data.unit(m), data.field);
  alg->table_ = StructureTable<S>(n, data.products);
  alg->unit_ = std::move(data.unit);
  const StructureTable<S>& t = alg->table_;

  Vec<S> lhs = Vec<S>::Zero(n);
  Vec<S> rhs = Vec<S>::Zero(n);
  std::vector<Index> touched;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index l = 0; l < n; ++l) {
        touched.clear();
        for (const auto& [m, c] : t.terms(i, j)) {
          for (const auto& [r, d] : t.terms(m, l)) {
            lhs(r) += c * d;
            touched.push_back(r);
          }
        }
        for (const auto& [m, c] : t.terms(j, l)) {
          for (const auto& [r, d] : t.terms(i, m)) {
            rhs(r) += c * d;
            touched.push_back(r);
          }
        }
        bool same = true;
        for (Index r : touched) same = same && lhs(r) == rhs(r);
        for (Index r : touched) {
          lhs(r) = S(0);
          rhs(r) = S(0);
        }
        if (!same) {
          throw Error(Errc::ASSOCIATIVITY_FAIL, "(" + alg->labels_[i] + "*" + alg->labels_[j] + ")*" +
                                                    alg->labels_[l] + " != " + alg->labels_[i] + "*(" +
                                                    alg->labels_[j] + "*" + alg->labels_[l] + ")");
        }
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    const Vec<S> b = unit_vector<S>(n, i);
    if (t.mul(alg->unit_, b) != b || t.mul(b, alg->unit_) != b) {
      throw Error(Errc::UNIT_FAIL, "unit does not fix " + alg->labels_[i]);
    }
  }

  const Subspace<S> j = radical(alg->field_, t, alg->unit_);
  alg->filtration_ = {Subspace<S>::full(n), j};
  // J is generated by any complement of J^2, so J^(k+1) = J^k * gens.
  Subspace<S> gens = j;
  while (!alg->filtration_.back().is_zero()) {
    Subspace<S> next = product_space(t, alg->filtration_.back(), gens);
    if (alg->filtration_.size() == 2 && !next.is_zero()) {
      gens = Subspace<S>::span(complement_vectors<S>(j, next));
    }
    if (next == alg->filtration_.back() || static_cast<Index>(alg->filtration_.size()) > n + 1) {
      throw Error(Errc::RADICAL_NOT_NILPOTENT, "radical powers stabilise at a nonzero subspace");
    }
    alg->filtration_.push_back(std::move(next));
  }
  alg->zero_ = Subspace<S>(n);

  Residue<S>& res = alg->residue_;
  res.quotient = quotient_basis(Subspace<S>::full(n), j);
  const Index r = res.quotient.dim();
  std::vector<Vec<S>> products;
  products.reserve(static_cast<std::size_t>(r * r));
  for (Index a = 0; a < r; ++a) {
    for (Index b = 0; b < r; ++b) {
      products.push_back(res.quotient.projection *
                         t.mul(res.quotient.representatives.col(a), res.quotient.representatives.col(b)));
    }
  }
  res.table = StructureTable<S>(r, products);
  res.idempotents = split_residue(alg->field_, res.table, Vec<S>(res.project(alg->unit_)));
  return alg;
}

template <ExactField S>
std::string format_element(const FinAlgebra<S>& a, const Vec<S>& x) {
  std::string out;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    bool negative = false;
    std::string coef;
    if constexpr (std::is_same_v<S, ModP>) {
      coef = std::to_string(x(i).residue(a.field().characteristic));
    } else {
      negative = x(i) < S(0);
      coef = (negative ? -x(i) : x(i)).str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coef != "1") out += coef + "*";
    out += a.labels()[i];
  }
  return out.empty() ? "0" : out;
}

template <ExactField S>
Ideal<S> make_ideal(AlgebraPtr<S> a, Subspace<S> space) {
  if (space.ambient_dim() != a->dim()) throw Error(Errc::DIMENSION_MISMATCH, "ideal: ambient");
  for (Index k = 0; k < space.dim(); ++k) {
    const Vec<S> v = space.vector(k);
    for (Index i = 0; i < a->dim(); ++i) {
      const Vec<S> b = a->basis_vector(i);
      if (!space.contains(a->mul(b, v)) || !space.contains(a->mul(v, b))) {
        throw Error(Errc::NOT_AN_IDEAL, "subspace is not closed under multiplication by " +
                                            a->labels()[i]);
      }
    }
  }
  return {std::move(a), std::move(space)};
}

template <ExactField S>
Ideal<S> ideal_generated_by(AlgebraPtr<S> a, const std::vector<Vec<S>>& generators) {
  Subspace<S> space = ideal_closure(a->table(), Subspace<S>::span(a->dim(), generators));
  return {std::move(a), std::move(space)};
}

template <ExactField S>
bool is_relation_ideal(const Ideal<S>& ideal) {
  return ideal.parent->radical_power(2).contains(ideal.space);
}

template <ExactField S>
int admissibility_index(const Ideal<S>& ideal) {
  for (int n = 0; n <= ideal.parent->truncation_level(); ++n) {
    if (ideal.space.contains(ideal.parent->radical_power(n))) return n;
  }
  return -1;
}

template <ExactField S>
AlgMorphism<S> validate_morphism(AlgebraPtr<S> source, AlgebraPtr<S> target, Mat<S> matrix) {
  if (!(source->field() == target->field())) {
    throw Error(Errc::DIMENSION_MISMATCH, "morphism between algebras over different fields");
  }
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) {
    throw Error(Errc::DIMENSION_MISMATCH, "morphism matrix must be " + std::to_string(target->dim()) +
                                              " x " + std::to_string(source->dim()));
  }
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) matrix(i, j) = bind_to(matrix(i, j), source->field());
  }
  if (matrix * source->unit() != target->unit()) throw Error(Errc::NOT_UNITAL, "unit is not preserved");
  const Index n = source->dim();
  for (Index i = 0; i < n; ++i) {
    const Vec<S> ci = matrix.col(i);
    for (Index j = 0; j < n; ++j) {
      if (target->mul(ci, matrix.col(j)) != matrix * source->product(i, j)) {
        throw Error(Errc::NOT_MULTIPLICATIVE, "image of " + source->labels()[i] + "*" +
                                                  source->labels()[j] + " is not the product of images");
      }
    }
  }
  const Subspace<S> img = image<S>(matrix);
  if (sum(img, target->radical()).dim() != target->dim()) {
    throw Error(Errc::RADICAL_QUOTIENT_NOT_SURJECTIVE,
                "induced map on radical quotients is not surjective");
  }
  if (!target->radical().contains(image<S>(matrix, source->radical()))) {
    throw Error(Errc::INTERNAL, "morphism does not map J(A) into J(B)");
  }
  AlgMorphism<S> out{std::move(source), std::move(target), std::move(matrix), false};
  out.surjective = img.dim() == out.target->dim();
  return out;
}

template <ExactField S>
AlgMorphism<S> identity_morphism(AlgebraPtr<S> a) {
  const Index n = a->dim();
  return AlgMorphism<S>{a, a, Mat<S>::Identity(n, n), true};
}

template <ExactField S>
AlgMorphism<S> compose(const AlgMorphism<S>& beta, const AlgMorphism<S>& alpha) {
  if (alpha.target->dim() != beta.source->dim() || alpha.target->labels() != beta.source->labels()) {
    throw Error(Errc::NOT_COMPOSABLE, "target of the first map is not the source of the second");
  }
  Mat<S> m = beta.matrix * alpha.matrix;
  const bool surjective = rank<S>(m) == beta.target->dim();
  return AlgMorphism<S>{alpha.source, beta.target, std::move(m), surjective};
}

template <ExactField S>
QuotientAlgebra<S> quotient_algebra(AlgebraPtr<S> a, const Ideal<S>& ideal) {
  make_ideal(a, ideal.space);
  const Quotient<S> q = quotient_basis(a->full(), ideal.space);
  AlgebraData<S> data;
  data.field = a->field();
  for (Index c = 0; c < q.dim(); ++c) {
    Index idx = 0;
    while (q.representatives(idx, c).is_zero()) ++idx;
    data.labels.push_back(a->labels()[idx]);
  }
  for (Index i = 0; i < q.dim(); ++i) {
    for (Index j = 0; j < q.dim(); ++j) {
      data.products.push_back(q.projection * a->mul(q.representatives.col(i), q.representatives.col(j)));
    }
  }
  data.unit = q.projection * a->unit();
  AlgebraPtr<S> quotient = validate_algebra(std::move(data));
  AlgMorphism<S> pi = validate_morphism(a, quotient, q.projection);
  return {std::move(quotient), std::move(pi), q.representatives};
}

template <ExactField S>
bool image_of_radical_check(const AlgMorphism<S>& alpha) {
  const int top = std::max(alpha.source->truncation_level(), alpha.target->truncation_level());
  for (int n = 1; n <= top; ++n) {
    if (!(image<S>(alpha.matrix, alpha.source->radical_power(n)) == alpha.target->radical_power(n))) {
      return false;
    }
  }
  return true;
}

#define QUIVKIT_INSTANTIATE_ALGEBRA(S)                                                           \
  template class StructureTable<S>;                                                              \
  template class FinAlgebra<S>;                                                                  \
  template AlgebraPtr<S> validate_algebra<S>(AlgebraData<S>);                                    \
  template Subspace<S> radical_trace_form<S>(const FieldSpec&, const StructureTable<S>&);        \
  template Subspace<S> radical_frobenius<S>(const FieldSpec&, const StructureTable<S>&,          \
                                            const Vec<S>&);                                      \
  template Subspace<S> radical<S>(const FieldSpec&, const StructureTable<S>&, const Vec<S>&);    \
  template Subspace<S> ideal_closure<S>(const StructureTable<S>&, const Subspace<S>&);           \
  template std::string format_element<S>(const FinAlgebra<S>&, const Vec<S>&);                   \
  template Ideal<S> make_ideal<S>(AlgebraPtr<S>, Subspace<S>);                                   \
  template Ideal<S> ideal_generated_by<S>(AlgebraPtr<S>, const std::vector<Vec<S>>&);            \
  template bool is_relation_ideal<S>(const Ideal<S>&);                                           \
  template int admissibility_index<S>(const Ideal<S>&);                                          \
  template AlgMorphism<S> validate_morphism<S>(AlgebraPtr<S>, AlgebraPtr<S>, Mat<S>);            \
  template AlgMorphism<S> identity_morphism<S>(AlgebraPtr<S>);                                   \
  template AlgMorphism<S> compose<S>(const AlgMorphism<S>&, const AlgMorphism<S>&);              \
  template QuotientAlgebra<S> quotient_algebra<S>(AlgebraPtr<S>, const Ideal<S>&);               \
  template bool image_of_radical_check<S>(const AlgMorphism<S>&);

QUIVKIT_INSTANTIATE_ALGEBRA(Rational)
QUIVKIT_INSTANTIATE_ALGEBRA(ModP)

}  // namespace quivkit
