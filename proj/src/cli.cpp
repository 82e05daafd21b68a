#include "quivkit/cli.hpp"

#include "quivkit/adjunction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

namespace quivkit::cli {

using nlohmann::ordered_json;
using dsl::DslError;
using dsl::Pos;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"gq", "cpa", "psi", "phi", "counit", "factor-delta", "check-suite"};
  return names;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("QUIVKIT_SEED");
  if (s == nullptr || *s == '\0') return 20240601;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : 20240601;
}

int default_level(const VQuiver& vq) { return std::min(2 + longest_simple_path(vq), 8); }

namespace {

constexpr int kSamples = 25;

template <ExactField S>
struct AlgebraEntry {
  std::string name;
  AlgebraPtr<S> algebra;
  /// k[[VQ]] and the projection onto the algebra for kvq declarations.
  PathAlgebraPtr<S> presentation;
  Mat<S> projection;
  bool has_relations = false;
};

template <ExactField S>
struct MorphismEntry {
  std::string name;
  std::string source;
  std::string target;
  AlgMorphism<S> map;
};

struct QuiverEntry {
  std::string name;
  VQuiver quiver;
};

template <ExactField S>
class Env {
 public:
  explicit Env(FieldSpec field) : field_(field) {}

  const FieldSpec& field() const { return field_; }
  const std::vector<QuiverEntry>& quivers() const { return quivers_; }
  const std::vector<AlgebraEntry<S>>& algebras() const { return algebras_; }
  const std::vector<MorphismEntry<S>>& morphisms() const { return morphisms_; }
  const std::vector<dsl::CheckDecl>& checks() const { return checks_; }

  const QuiverEntry& quiver(const std::string& name) const { return *find_in(quivers_, name); }
  const AlgebraEntry<S>& algebra(const std::string& name) const { return *find_in(algebras_, name); }
  const MorphismEntry<S>& morphism(const std::string& name) const { return *find_in(morphisms_, name); }

  void add(const dsl::Declaration& d) {
    std::visit([this](const auto& x) { wrap(x); }, d);
  }

 private:
  template <class T>
  static const auto* find_in(const std::vector<T>& xs, const std::string& name) {
    const auto it = std::find_if(xs.begin(), xs.end(), [&](const T& x) { return x.name == name; });
    return it == xs.end() ? nullptr : &*it;
  }

  template <class D>
  void wrap(const D& d) {
    try {
      add_decl(d);
    } catch (const Error& err) {
      throw DslError(d.pos, kind_of(d) + " '" + name_of(d) + "': " + err.what());
    }
  }

  static std::string kind_of(const dsl::FieldDecl&) { return "field"; }
  static std::string kind_of(const dsl::QuiverDecl&) { return "in quiver"; }
  static std::string kind_of(const dsl::VQuiverDecl&) { return "in vquiver"; }
  static std::string kind_of(const dsl::AlgebraDecl&) { return "in algebra"; }
  static std::string kind_of(const dsl::MorphismDecl&) { return "in morphism"; }
  static std::string kind_of(const dsl::CheckDecl&) { return "in check"; }
  static std::string name_of(const dsl::FieldDecl&) { return ""; }
  static std::string name_of(const dsl::CheckDecl& d) { return d.kind; }
  template <class D>
  static std::string name_of(const D& d) {
    return d.name;
  }

  void add_decl(const dsl::FieldDecl&) {}

  void add_decl(const dsl::QuiverDecl& d) {
    std::vector<ArrowSpec> arrows;
    for (const dsl::ArrowDecl& a : d.arrows) arrows.push_back({a.label, a.source, a.target});
    quivers_.push_back({d.name, make_vquiver(d.vertices, arrows)});
  }

  void add_decl(const dsl::VQuiverDecl& d) {
    std::vector<ArrowSpec> arrows;
    for (const dsl::SpaceDecl& s : d.spaces) {
      for (const std::string& b : s.basis) arrows.push_back({b, s.source, s.target});
    }
    quivers_.push_back({d.name, make_vquiver(d.vertices, arrows)});
  }

  S coefficient(const Rational& c, const Pos& pos) const {
    const mpq_class& q = c.value();
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw DslError(pos, "coefficient too large");
    if constexpr (std::is_same_v<S, ModP>) {
      if (q.get_den() % field_.characteristic == 0) {
        throw DslError(pos, "coefficient " + c.str() + " is undefined in " + field_.name());
      }
    }
    return make_scalar<S>(field_, q.get_num().get_si(), q.get_den().get_si());
  }

  /// Linear combination of basis labels with products evaluated in `a`.
  Vec<S> evaluate(const FinAlgebra<S>& a, const dsl::Expr& e, const std::string& where) const {
    Vec<S> out = a.zero();
    for (const dsl::Term& t : e.terms) {
      Vec<S> x = a.unit();
      for (std::size_t k = 0; k < t.factors.size(); ++k) {
        const std::optional<Index> i = a.find(t.factors[k]);
        if (!i) throw DslError(e.pos, "unknown basis label '" + t.factors[k] + "' in " + where);
        x = k == 0 ? a.basis_vector(*i) : a.mul(x, a.basis_vector(*i));
      }
      out += coefficient(t.coefficient, e.pos) * x;
    }
    return out;
  }

  Vec<S> evaluate(const AlgebraEntry<S>& entry, const dsl::Expr& e) const {
    if (!entry.presentation) return evaluate(*entry.algebra, e, "algebra '" + entry.name + "'");
    return entry.projection * evaluate(*entry.presentation->algebra, e, "algebra '" + entry.name + "'");
  }

  const QuiverEntry& need_quiver(const std::string& name, const Pos& pos) const {
    const QuiverEntry* q = find_in(quivers_, name);
    if (q == nullptr) throw DslError(pos, "unknown quiver '" + name + "'");
    return *q;
  }
  const AlgebraEntry<S>& need_algebra(const std::string& name, const Pos& pos) const {
    const AlgebraEntry<S>* a = find_in(algebras_, name);
    if (a == nullptr) throw DslError(pos, "unknown algebra '" + name + "'");
    return *a;
  }
  const MorphismEntry<S>& need_morphism(const std::string& name, const Pos& pos) const {
    const MorphismEntry<S>* m = find_in(morphisms_, name);
    if (m == nullptr) throw DslError(pos, "unknown morphism '" + name + "'");
    return *m;
  }

  void add_decl(const dsl::AlgebraDecl& d) {
    AlgebraEntry<S> entry;
    entry.name = d.name;
    if (const auto* k = std::get_if<dsl::KvqBody>(&d.body)) {
      const QuiverEntry& q = need_quiver(k->quiver, d.pos);
      entry.presentation = build_kvq<S>(field_, q.quiver, k->level.value_or(default_level(q.quiver)));
      const AlgebraPtr<S>& p = entry.presentation->algebra;
      if (k->relations.empty()) {
        entry.algebra = p;
        entry.projection = Mat<S>::Identity(p->dim(), p->dim());
      } else {
        std::vector<Vec<S>> gens;
        for (const dsl::Expr& r : k->relations) gens.push_back(evaluate(*p, r, "algebra '" + d.name + "'"));
        const QuotientAlgebra<S> qa = quotient_algebra(p, ideal_generated_by(p, gens));
        entry.algebra = qa.algebra;
        entry.projection = qa.projection.matrix;
        entry.has_relations = true;
      }
    } else {
      const auto& t = std::get<dsl::TableBody>(d.body);
      AlgebraData<S> data;
      data.field = field_;
      data.labels = t.basis;
      const Index n = static_cast<Index>(t.basis.size());
      std::map<std::string, Index> index;
      for (Index i = 0; i < n; ++i) index[t.basis[i]] = i;
      auto linear = [&](const dsl::Expr& e) {
        Vec<S> v = Vec<S>::Zero(n);
        for (const dsl::Term& term : e.terms) {
          if (term.factors.empty() && term.coefficient.is_zero()) continue;
          if (term.factors.size() != 1) throw DslError(e.pos, "table entries must be linear in the basis labels");
          const auto it = index.find(term.factors[0]);
          if (it == index.end()) throw DslError(e.pos, "unknown basis label '" + term.factors[0] + "'");
          v(it->second) += coefficient(term.coefficient, e.pos);
        }
        return v;
      };
      data.unit = linear(t.unit);
      data.products.assign(static_cast<std::size_t>(n * n), Vec<S>::Zero(n));
      std::set<std::pair<Index, Index>> seen;
      for (const dsl::ProductDecl& p : t.products) {
        const auto l = index.find(p.left);
        const auto r = index.find(p.right);
        if (l == index.end() || r == index.end()) {
          throw DslError(p.pos, "unknown basis label in product " + p.left + "*" + p.right);
        }
        if (!seen.emplace(l->second, r->second).second) {
          throw DslError(p.pos, "product " + p.left + "*" + p.right + " is given twice");
        }
        data.products[static_cast<std::size_t>(l->second * n + r->second)] = linear(p.value);
      }
      entry.algebra = validate_algebra(std::move(data));
    }
    algebras_.push_back(std::move(entry));
  }

  void add_decl(const dsl::MorphismDecl& d) {
    const AlgebraEntry<S>& src = need_algebra(d.source, d.pos);
    const AlgebraEntry<S>& tgt = need_algebra(d.target, d.pos);
    std::map<std::string, Vec<S>> images;
    for (const dsl::ImageDecl& im : d.images) {
      if (images.count(im.generator) != 0) throw DslError(im.pos, "generator '" + im.generator + "' is mapped twice");
      images[im.generator] = evaluate(tgt, im.image);
    }
    std::vector<std::string> generators;
    if (src.presentation) {
      const PathAlgebra<S>& t = *src.presentation;
      for (int v = 0; v < t.quiver.vertex_count(); ++v) generators.push_back(t.algebra->labels()[t.idempotent_index(v)]);
      for (Index a = 0; a < t.quiver.arrow_count(); ++a) generators.push_back(t.algebra->labels()[t.arrow_index(a)]);
    } else {
      generators = src.algebra->labels();
    }
    for (const dsl::ImageDecl& im : d.images) {
      if (std::find(generators.begin(), generators.end(), im.generator) == generators.end()) {
        throw DslError(im.pos, "'" + im.generator + "' is not a generator of '" + d.source + "'");
      }
    }
    for (const std::string& g : generators) {
      if (images.count(g) == 0) throw DslError(d.pos, "no image given for generator '" + g + "'");
    }
    Mat<S> matrix;
    if (src.presentation) {
      const PathAlgebra<S>& t = *src.presentation;
      std::vector<Vec<S>> vimgs;
      std::vector<Vec<S>> aimgs;
      for (int v = 0; v < t.quiver.vertex_count(); ++v) vimgs.push_back(images[generators[v]]);
      for (Index a = 0; a < t.quiver.arrow_count(); ++a) aimgs.push_back(images[generators[t.quiver.vertex_count() + a]]);
      const Mat<S> m = universal_map(t, tgt.algebra, vimgs, aimgs).matrix;
      if (src.has_relations) {
        const Subspace<S> ideal = kernel<S>(src.projection);
        for (Index k = 0; k < ideal.dim(); ++k) {
          if (!all_zero(Vec<S>(m * ideal.vector(k)))) throw DslError(d.pos, "the images do not satisfy the relations");
        }
        const std::optional<Mat<S>> section = solve_right(src.projection);
        matrix = m * *section;
      } else {
        matrix = m;
      }
    } else {
      matrix = Mat<S>(tgt.algebra->dim(), src.algebra->dim());
      for (Index i = 0; i < src.algebra->dim(); ++i) matrix.col(i) = images[generators[i]];
    }
    morphisms_.push_back({d.name, d.source, d.target, validate_morphism(src.algebra, tgt.algebra, matrix)});
  }

  /// A right inverse of a surjective projection.
  static std::optional<Mat<S>> solve_right(const Mat<S>& p) {
    Mat<S> out(p.cols(), p.rows());
    for (Index i = 0; i < p.rows(); ++i) {
      const std::optional<Vec<S>> x = solve<S>(p, unit_vector<S>(p.rows(), i));
      if (!x) return std::nullopt;
      out.col(i) = *x;
    }
    return out;
  }

  void add_decl(const dsl::CheckDecl& d) {
    if (d.kind == "sim1") {
      const MorphismEntry<S>& f = need_morphism(d.args[0], d.arg_pos[0]);
      const MorphismEntry<S>& g = need_morphism(d.args[1], d.arg_pos[1]);
      if (f.source != g.source || f.target != g.target) {
        throw DslError(d.pos, "'" + f.name + "' and '" + g.name + "' are not parallel");
      }
    } else {
      need_quiver(d.args[0], d.arg_pos[0]);
      need_algebra(d.args[1], d.arg_pos[1]);
    }
    checks_.push_back(d);
  }

  FieldSpec field_;
  std::vector<QuiverEntry> quivers_;
  std::vector<AlgebraEntry<S>> algebras_;
  std::vector<MorphismEntry<S>> morphisms_;
  std::vector<dsl::CheckDecl> checks_;
};

template <ExactField S>
ordered_json matrix_json(const Mat<S>& m, const FieldSpec& field) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(format_scalar<S>(m(i, j), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vquiver_json(const VQuiver& vq) {
  ordered_json arrows = ordered_json::array();
  for (const Arrow& a : vq.arrows) {
    arrows.push_back({{"label", a.label}, {"source", vq.vertices[a.source]}, {"target", vq.vertices[a.target]}});
  }
  return {{"vertices", vq.vertices}, {"arrows", std::move(arrows)}};
}

template <ExactField S>
ordered_json vq_map_json(const VQuiverMap<S>& rho, const FieldSpec& field) {
  ordered_json vm = ordered_json::object();
  for (int v = 0; v < rho.source.vertex_count(); ++v) {
    const int w = rho.vertex_map[v];
    vm[rho.source.vertices[v]] = w == kPoint ? std::string("*") : rho.target.vertices[w];
  }
  return {{"vertex_map", std::move(vm)}, {"arrows", matrix_json<S>(rho.arrows, field)}};
}

ordered_json check_json(const std::string& name, bool passed) { return {{"check", name}, {"passed", passed}}; }

ordered_json error_json(const Error& err) {
  return {{"code", std::string(errc_name(err.code()))}, {"message", err.what()}};
}

bool all_passed(const ordered_json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ordered_json& c) { return c.at("passed").get<bool>(); });
}

template <ExactField S>
class Runner {
 public:
  Runner(const Env<S>& env, std::uint64_t seed) : env_(env), rng_(seed) {}

  ordered_json run(const std::string& command, std::string& dot) {
    if (command == "gq") return gq_report(dot);
    if (command == "cpa") return cpa_report();
    if (command == "psi") return psi_report();
    if (command == "phi") return phi_report();
    if (command == "counit") return counit_report();
    if (command == "factor-delta") return factor_delta_report();
    return check_suite();
  }

 private:
  const FieldSpec& field() const { return env_.field(); }

  S small_scalar() {
    const long v = static_cast<long>(rng_() % 5) - 2;
    return make_scalar<S>(field(), v == 0 ? 1 : v);
  }

  /// A random Vquiver map, or nullopt when VQ has fewer vertices than the target.
  std::optional<VQuiverMap<S>> sample_map(const VQuiver& source, const VQuiver& target) {
    if (source.vertex_count() < target.vertex_count()) return std::nullopt;
    std::vector<int> order(static_cast<std::size_t>(source.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng_() % i]);
    std::vector<int> vm(order.size(), kPoint);
    for (int i = 0; i < target.vertex_count(); ++i) vm[order[i]] = i;
    Mat<S> arrows = Mat<S>::Zero(target.arrow_count(), source.arrow_count());
    for (Index j = 0; j < source.arrow_count(); ++j) {
      const int s = vm[source.arrows[j].source];
      const int t = vm[source.arrows[j].target];
      if (s == kPoint || t == kPoint) continue;
      for (Index i : target.block(s, t)) {
        if (rng_() % 3 != 0) arrows(i, j) = small_scalar();
      }
    }
    return validate_vq_map<S>(source, target, std::move(vm), std::move(arrows));
  }

  ordered_json generator_images(const AlgMorphism<S>& m, const PathAlgebra<S>& t) {
    ordered_json out = ordered_json::object();
    auto add = [&](Index i) { out[t.algebra->labels()[i]] = format_element(*m.target, m(t.algebra->basis_vector(i))); };
    for (int v = 0; v < t.quiver.vertex_count(); ++v) add(t.idempotent_index(v));
    for (Index a = 0; a < t.quiver.arrow_count(); ++a) add(t.arrow_index(a));
    return out;
  }

  ordered_json gq_report(std::string& dot) {
    ordered_json results = ordered_json::array();
    for (const AlgebraEntry<S>& e : env_.algebras()) {
      ordered_json r = {{"algebra", e.name}, {"dim", e.algebra->dim()}};
      try {
        const GabrielQuiver<S> g = gq(e.algebra);
        std::vector<Index> dims;
        for (const Subspace<S>& j : e.algebra->filtration()) dims.push_back(j.dim());
        r["radical_filtration"] = dims;
        r["gabriel_quiver"] = vquiver_json(g.vquiver);
        std::vector<std::string> idems;
        for (const Vec<S>& f : g.splitting.idems) idems.push_back(format_element(*e.algebra, f));
        r["idempotents"] = idems;
        const Index top = e.algebra->radical().dim() - e.algebra->radical_power(2).dim();
        ordered_json checks = ordered_json::array();
        checks.push_back(check_json("arrow count equals dim J/J^2", g.vquiver.arrow_count() == top));
        checks.push_back(check_json("vertex count equals dim A/J",
                                    g.vquiver.vertex_count() == e.algebra->dim() - e.algebra->radical().dim()));
        r["checks"] = checks;
        r["passed"] = all_passed(checks);
        dot += to_dot(g.vquiver, "GQ(" + e.name + ")");
      } catch (const Error& err) {
        r["error"] = error_json(err);
        r["passed"] = false;
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  ordered_json cpa_report() {
    ordered_json results = ordered_json::array();
    for (const QuiverEntry& q : env_.quivers()) {
      const int level = default_level(q.quiver);
      ordered_json r = {{"quiver", q.name}, {"level", level}};
      try {
        const PathAlgebraPtr<S> t = cpa<S>(field(), q.quiver, level);
        r["dim"] = t->algebra->dim();
        r["basis"] = t->algebra->labels();
        ordered_json checks = ordered_json::array();
        checks.push_back(check_json("dimension equals the number of paths",
                                    t->algebra->dim() == path_count_by_adjacency(q.quiver, level)));
        checks.push_back(check_json("J^level = 0", t->algebra->truncation_level() <= level));
        r["checks"] = checks;
        r["passed"] = all_passed(checks);
      } catch (const Error& err) {
        r["error"] = error_json(err);
        r["passed"] = false;
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  ordered_json psi_report() {
    ordered_json results = ordered_json::array();
    for (const dsl::CheckDecl& c : env_.checks()) {
      if (c.kind != "adjunction") continue;
      const QuiverEntry& q = env_.quiver(c.args[0]);
      const AlgebraEntry<S>& a = env_.algebra(c.args[1]);
      ordered_json r = {{"quiver", q.name}, {"algebra", a.name}};
      try {
        const GabrielQuiver<S> g = gq(a.algebra);
        const int level = std::max(2, a.algebra->truncation_level());
        const PathAlgebraPtr<S> t = build_kvq<S>(field(), q.quiver, level);
        r["level"] = level;
        int failures = 0;
        int samples = 0;
        ordered_json example;
        for (int k = 0; k < kSamples; ++k) {
          const std::optional<VQuiverMap<S>> rho = sample_map(q.quiver, g.vquiver);
          if (!rho) break;
          const AlgMorphism<S> m = psi(*rho, *t, g);
          if (!(phi(m, *t, g) == *rho)) ++failures;
          if (k == 0) {
            example = vq_map_json(*rho, field());
            example["psi"] = generator_images(m, *t);
          }
          ++samples;
        }
        r["hom_set_empty"] = samples == 0;
        r["samples"] = samples;
        if (samples > 0) r["example"] = example;
        ordered_json checks = ordered_json::array();
        checks.push_back(check_json("phi(psi(rho)) = rho", failures == 0));
        r["checks"] = checks;
        r["passed"] = all_passed(checks);
      } catch (const Error& err) {
        r["error"] = error_json(err);
        r["passed"] = false;
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  ordered_json phi_report() {
    ordered_json results = ordered_json::array();
    for (const MorphismEntry<S>& m : env_.morphisms()) {
      const AlgebraEntry<S>& src = env_.algebra(m.source);
      ordered_json r = {{"morphism", m.name}};
      if (!src.presentation || src.has_relations) {
        r["skipped"] = "source is not a truncated path algebra";
        r["passed"] = true;
        results.push_back(std::move(r));
        continue;
      }
      try {
        const GabrielQuiver<S> g = gq(m.map.target);
        const VQuiverMap<S> rho = phi(m.map, *src.presentation, g);
        r["gabriel_quiver"] = vquiver_json(g.vquiver);
        r["phi"] = vq_map_json(rho, field());
        ordered_json checks = ordered_json::array();
        checks.push_back(check_json("psi(phi(f)) ~1 f", check_sim(psi(rho, *src.presentation, g), m.map, 1)));
        r["checks"] = checks;
        r["passed"] = all_passed(checks);
      } catch (const Error& err) {
        r["error"] = error_json(err);
        r["passed"] = false;
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  ordered_json counit_entry(const AlgebraEntry<S>& e) {
    ordered_json r = {{"algebra", e.name}};
    try {
      // kvq declarations are presented at their own level, where the relations live.
      std::optional<int> level;
      if (e.presentation) level = std::max({2, e.algebra->truncation_level(), e.presentation->level});
      const Counit<S> c = counit(e.algebra, level);
      const FinAlgebra<S>& p = *c.presentation->algebra;
      r["level"] = c.presentation->level;
      r["gabriel_quiver"] = vquiver_json(c.gabriel.vquiver);
      r["presentation_dim"] = p.dim();
      r["kernel_dim"] = c.kernel.space.dim();
      std::vector<std::string> basis;
      for (Index k = 0; k < c.kernel.space.dim(); ++k) basis.push_back(format_element(p, c.kernel.space.vector(k)));
      r["kernel_basis"] = basis;
      ordered_json checks = ordered_json::array();
      checks.push_back(check_json("epsilon is surjective", c.epsilon.surjective));
      checks.push_back(check_json("kernel lies in J^2", p.radical_power(2).contains(c.kernel.space)));
      checks.push_back(check_json("epsilon_infty is invertible", inverse<S>(c.epsilon_infty.matrix).has_value()));
      checks.push_back(check_json("dim presentation - dim kernel = dim A",
                                  p.dim() - c.kernel.space.dim() == e.algebra->dim()));
      r["checks"] = checks;
      r["passed"] = all_passed(checks);
    } catch (const Error& err) {
      r["error"] = error_json(err);
      r["passed"] = false;
    }
    return r;
  }

  ordered_json counit_report() {
    ordered_json results = ordered_json::array();
    for (const AlgebraEntry<S>& e : env_.algebras()) results.push_back(counit_entry(e));
    return results;
  }

  ordered_json factor_delta_report() {
    ordered_json results = ordered_json::array();
    for (const dsl::CheckDecl& c : env_.checks()) {
      if (c.kind != "sim1") continue;
      const MorphismEntry<S>& f = env_.morphism(c.args[0]);
      const MorphismEntry<S>& g = env_.morphism(c.args[1]);
      const AlgebraEntry<S>& src = env_.algebra(f.source);
      ordered_json r = {{"alpha", f.name}, {"beta", g.name}, {"sim1", check_sim(f.map, g.map, 1)}};
      if (!src.presentation || src.has_relations) {
        r["status"] = "skipped";
        r["reason"] = "source is not a truncated path algebra";
        r["passed"] = true;
        results.push_back(std::move(r));
        continue;
      }
      try {
        const AlgMorphism<S> d = factor_delta(f.map, g.map, *src.presentation);
        r["status"] = "factored";
        r["delta"] = generator_images(d, *src.presentation);
        ordered_json checks = ordered_json::array();
        checks.push_back(check_json("alpha = beta o delta", compose(g.map, d).matrix == f.map.matrix));
        checks.push_back(check_json("delta ~1 id", check_sim(d, identity_morphism(d.source), 1)));
        r["checks"] = checks;
        r["passed"] = all_passed(checks);
      } catch (const Error& err) {
        r["status"] = "refused";
        r["error"] = error_json(err);
        r["passed"] = true;
      }
      results.push_back(std::move(r));
    }
    return results;
  }

  ordered_json check_suite() {
    ordered_json results = ordered_json::array();
    auto record = [&](const std::string& check, const std::string& subject, auto&& body) {
      ordered_json r = {{"check", check}, {"subject", subject}};
      try {
        r["passed"] = static_cast<bool>(body());
      } catch (const Error& err) {
        r["error"] = error_json(err);
        r["passed"] = false;
      }
      results.push_back(std::move(r));
    };
    for (const QuiverEntry& q : env_.quivers()) {
      for (int n : {2, 3, 4}) {
        if (path_count_by_adjacency(q.quiver, n) > 200) continue;
        record("unit is an isomorphism at level " + std::to_string(n), q.name,
               [&] { return is_isomorphism(unit(*build_kvq<S>(field(), q.quiver, n))); });
      }
    }
    for (const AlgebraEntry<S>& e : env_.algebras()) {
      const FinAlgebra<S>& a = *e.algebra;
      record("radical is nilpotent", e.name, [&] { return a.radical_power(a.truncation_level()).is_zero(); });
      if (field().is_rational() || field().characteristic > static_cast<std::uint32_t>(a.dim())) {
        record("trace-form radical agrees", e.name,
               [&] { return radical_trace_form(field(), a.table()) == a.radical(); });
      }
      record("counit presents the algebra", e.name, [&] { return counit_entry(e).at("passed").template get<bool>(); });
    }
    for (const MorphismEntry<S>& m : env_.morphisms()) {
      record("maps J into J", m.name, [&] {
        return m.map.target->radical().contains(image<S>(m.map.matrix, m.map.source->radical()));
      });
      record("gq(f) is a Vquiver map", m.name, [&] { return (gq_on_morphism(m.map), true); });
    }
    for (const dsl::CheckDecl& c : env_.checks()) {
      if (c.kind == "sim1") {
        const MorphismEntry<S>& f = env_.morphism(c.args[0]);
        const MorphismEntry<S>& g = env_.morphism(c.args[1]);
        record("sim1", f.name + ", " + g.name, [&] { return check_sim(f.map, g.map, 1); });
        continue;
      }
      const QuiverEntry& q = env_.quiver(c.args[0]);
      const AlgebraEntry<S>& a = env_.algebra(c.args[1]);
      record("adjunction round trip", q.name + ", " + a.name, [&] {
        const GabrielQuiver<S> g = gq(a.algebra);
        const PathAlgebraPtr<S> t = build_kvq<S>(field(), q.quiver, std::max(2, a.algebra->truncation_level()));
        for (int k = 0; k < kSamples; ++k) {
          const std::optional<VQuiverMap<S>> rho = sample_map(q.quiver, g.vquiver);
          if (!rho) break;
          const AlgMorphism<S> m = psi(*rho, *t, g);
          if (!(phi(m, *t, g) == *rho)) return false;
          const VQuiverMap<S> sigma = *sample_map(q.quiver, q.quiver);
          if (!naturality_check_first_var(*t, *t, sigma, *rho, g)) return false;
        }
        return true;
      });
    }
    return results;
  }

  const Env<S>& env_;
  std::mt19937_64 rng_;
};

template <ExactField S>
Env<S> build_env(const dsl::Document& doc, FieldSpec field) {
  Env<S> env(field);
  for (const dsl::Declaration& d : doc.declarations) env.add(d);
  return env;
}

FieldSpec document_field(const dsl::Document& doc) {
  std::optional<Pos> seen;
  FieldSpec field = FieldSpec::rationals();
  for (const dsl::Declaration& d : doc.declarations) {
    const auto* f = std::get_if<dsl::FieldDecl>(&d);
    if (f == nullptr) continue;
    if (seen) throw DslError(f->pos, "field declared twice (first at " + dsl::to_string(*seen) + ")");
    seen = f->pos;
    field = f->characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(f->characteristic);
  }
  return field;
}

template <ExactField S>
Outcome run_with(const dsl::Document& doc, const std::string& command, std::uint64_t seed, FieldSpec field) {
  const Env<S> env = build_env<S>(doc, field);
  Outcome out;
  for (const QuiverEntry& q : env.quivers()) out.dot += to_dot(q.quiver, q.name);
  ordered_json results = Runner<S>(env, seed).run(command, out.dot);
  out.passed = all_passed(results);
  out.report = {{"schema", 1},        {"command", command}, {"field", field.name()},
                {"seed", std::to_string(seed)}, {"results", std::move(results)}, {"passed", out.passed}};
  return out;
}

}  // namespace

void elaborate(const dsl::Document& doc) {
  const FieldSpec field = document_field(doc);
  if (field.is_rational()) {
    build_env<Rational>(doc, field);
  } else {
    build_env<ModP>(doc, field);
  }
}

Outcome run(const dsl::Document& doc, const std::string& command, std::uint64_t seed) {
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  const FieldSpec field = document_field(doc);
  return field.is_rational() ? run_with<Rational>(doc, command, seed, field)
                             : run_with<ModP>(doc, command, seed, field);
}

}  // namespace quivkit::cli
