#include "quivkit/vquiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace quivkit {

std::optional<int> VQuiver::find_vertex(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (vertices[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<Index> VQuiver::find_arrow(const std::string& label) const {
  for (Index i = 0; i < arrow_count(); ++i) {
    if (arrows[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<Index> VQuiver::block(int e, int f) const {
  std::vector<Index> out;
  for (Index i = 0; i < arrow_count(); ++i) {
    if (arrows[i].source == e && arrows[i].target == f) out.push_back(i);
  }
  return out;
}

VQuiver make_vquiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows) {
  VQuiver vq;
  std::set<std::string> seen;
  for (const std::string& v : vertices) {
    if (v.empty() || v == "*" || v == "✱") {
      throw Error(Errc::MALFORMED_QUIVER, "invalid vertex label '" + v + "'");
    }
    if (!seen.insert(v).second) throw Error(Errc::MALFORMED_QUIVER, "duplicate vertex '" + v + "'");
  }
  vq.vertices = std::move(vertices);
  std::set<std::string> arrow_labels;
  for (const ArrowSpec& a : arrows) {
    if (a.label.empty()) throw Error(Errc::MALFORMED_QUIVER, "empty arrow label");
    if (!arrow_labels.insert(a.label).second) {
      throw Error(Errc::MALFORMED_QUIVER, "duplicate arrow '" + a.label + "'");
    }
    const auto s = vq.find_vertex(a.source);
    const auto t = vq.find_vertex(a.target);
    if (!s || !t) {
      throw Error(Errc::MALFORMED_QUIVER, "arrow '" + a.label + "' references an unknown vertex");
    }
    vq.arrows.push_back({a.label, *s, *t});
  }
  return vq;
}

VQuiver v_of_quiver(const Quiver& q) { return q; }

bool is_acyclic(const VQuiver& vq) {
  const int n = vq.vertex_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const Arrow& a : vq.arrows) out[a.source].push_back(a.target);
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> has_cycle = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && has_cycle(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && has_cycle(v)) return false;
  }
  return true;
}

int longest_simple_path(const VQuiver& vq) {
  const int n = vq.vertex_count();
  std::vector<std::set<int>> out(static_cast<std::size_t>(n));
  for (const Arrow& a : vq.arrows) out[a.source].insert(a.target);
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  int best = 0;
  std::function<void(int, int)> dfs = [&](int v, int len) {
    best = std::max(best, len);
    on_path[v] = true;
    for (int w : out[v]) {
      if (!on_path[w]) dfs(w, len + 1);
    }
    on_path[v] = false;
  };
  for (int v = 0; v < n; ++v) dfs(v, 0);
  return best;
}

std::string to_dot(const VQuiver& vq, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const std::string& v : vq.vertices) os << "  \"" << v << "\";\n";
  for (const Arrow& a : vq.arrows) {
    os << "  \"" << vq.vertices[a.source] << "\" -> \"" << vq.vertices[a.target] << "\" [label=\""
       << a.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

void validate_quiver_map(const QuiverMap& iota) {
  const Quiver& q = iota.source;
  const Quiver& r = iota.target;
  if (static_cast<int>(iota.vertex_map.size()) != q.vertex_count() ||
      static_cast<Index>(iota.arrow_map.size()) != q.arrow_count()) {
    throw Error(Errc::MALFORMED_QUIVER, "quiver map has the wrong number of entries");
  }
  std::set<int> vs;
  for (int v : iota.vertex_map) {
    if (v < 0 || v >= r.vertex_count()) throw Error(Errc::MALFORMED_QUIVER, "vertex image out of range");
    if (!vs.insert(v).second) throw Error(Errc::NOT_INJECTIVE, "vertex map is not injective");
  }
  std::set<Index> as;
  for (Index i = 0; i < q.arrow_count(); ++i) {
    const Index j = iota.arrow_map[i];
    if (j < 0 || j >= r.arrow_count()) throw Error(Errc::MALFORMED_QUIVER, "arrow image out of range");
    if (!as.insert(j).second) throw Error(Errc::NOT_INJECTIVE, "arrow map is not injective");
    if (r.arrows[j].source != iota.vertex_map[q.arrows[i].source] ||
        r.arrows[j].target != iota.vertex_map[q.arrows[i].target]) {
      throw Error(Errc::MALFORMED_QUIVER, "arrow '" + q.arrows[i].label + "' changes endpoints");
    }
  }
}

template <ExactField S>
VQuiverMap<S> validate_vq_map(VQuiver source, VQuiver target, std::vector<int> vertex_map,
                              Mat<S> arrows) {
  if (static_cast<int>(vertex_map.size()) != source.vertex_count()) {
    throw Error(Errc::INVALID_VERTEX_MAP, "vertex map must list every source vertex");
  }
  std::vector<int> hits(static_cast<std::size_t>(target.vertex_count()), 0);
  for (int v : vertex_map) {
    if (v == kPoint) continue;
    if (v < 0 || v >= target.vertex_count()) {
      throw Error(Errc::INVALID_VERTEX_MAP, "vertex image out of range");
    }
    ++hits[v];
  }
  for (int t = 0; t < target.vertex_count(); ++t) {
    if (hits[t] != 1) {
      throw Error(Errc::INVALID_VERTEX_MAP, "target vertex '" + target.vertices[t] + "' is hit " +
                                                std::to_string(hits[t]) + " times, expected once");
    }
  }
  if (arrows.rows() != target.arrow_count() || arrows.cols() != source.arrow_count()) {
    throw Error(Errc::DIMENSION_MISMATCH, "arrow matrix must be " + std::to_string(target.arrow_count()) +
                                              " x " + std::to_string(source.arrow_count()));
  }
  for (Index j = 0; j < source.arrow_count(); ++j) {
    const int s = vertex_map[source.arrows[j].source];
    const int t = vertex_map[source.arrows[j].target];
    for (Index i = 0; i < target.arrow_count(); ++i) {
      if (arrows(i, j).is_zero()) continue;
      if (s == kPoint || t == kPoint || target.arrows[i].source != s || target.arrows[i].target != t) {
        throw Error(Errc::DIMENSION_MISMATCH, "arrow '" + source.arrows[j].label +
                                                  "' is sent outside its block (to '" +
                                                  target.arrows[i].label + "')");
      }
    }
  }
  return {std::move(source), std::move(target), std::move(vertex_map), std::move(arrows)};
}

template <ExactField S>
VQuiverMap<S> identity_vq_map(const VQuiver& vq) {
  std::vector<int> vm(static_cast<std::size_t>(vq.vertex_count()));
  for (int i = 0; i < vq.vertex_count(); ++i) vm[i] = i;
  return {vq, vq, std::move(vm), Mat<S>::Identity(vq.arrow_count(), vq.arrow_count())};
}

template <ExactField S>
VQuiverMap<S> v_of_inclusion(const QuiverMap& iota) {
  validate_quiver_map(iota);
  const Quiver& q = iota.source;
  const Quiver& r = iota.target;
  std::vector<int> vm(static_cast<std::size_t>(r.vertex_count()), kPoint);
  for (int v = 0; v < q.vertex_count(); ++v) vm[iota.vertex_map[v]] = v;
  Mat<S> m = Mat<S>::Zero(q.arrow_count(), r.arrow_count());
  for (Index a = 0; a < q.arrow_count(); ++a) m(a, iota.arrow_map[a]) = S(1);
  return validate_vq_map<S>(v_of_quiver(r), v_of_quiver(q), std::move(vm), std::move(m));
}

template <ExactField S>
VQuiverMap<S> compose_vq(const VQuiverMap<S>& sigma, const VQuiverMap<S>& rho) {
  if (!(rho.target == sigma.source)) {
    throw Error(Errc::NOT_COMPOSABLE, "target of the first Vquiver map is not the source of the second");
  }
  std::vector<int> vm(rho.vertex_map.size());
  for (std::size_t i = 0; i < vm.size(); ++i) {
    vm[i] = rho.vertex_map[i] == kPoint ? kPoint : sigma.vertex_map[rho.vertex_map[i]];
  }
  return {rho.source, sigma.target, std::move(vm), sigma.arrows * rho.arrows};
}

template <ExactField S>
bool is_surjective(const VQuiverMap<S>& rho) {
  return rank<S>(rho.arrows) == rho.target.arrow_count();
}

template <ExactField S>
bool is_isomorphism(const VQuiverMap<S>& rho) {
  if (rho.source.vertex_count() != rho.target.vertex_count()) return false;
  for (int v : rho.vertex_map) {
    if (v == kPoint) return false;
  }
  return rho.arrows.rows() == rho.arrows.cols() && inverse<S>(rho.arrows).has_value();
}

#define QUIVKIT_INSTANTIATE_VQUIVER(S)                                                   \
  template VQuiverMap<S> validate_vq_map<S>(VQuiver, VQuiver, std::vector<int>, Mat<S>); \
  template VQuiverMap<S> identity_vq_map<S>(const VQuiver&);                             \
  template VQuiverMap<S> v_of_inclusion<S>(const QuiverMap&);                            \
  template VQuiverMap<S> compose_vq<S>(const VQuiverMap<S>&, const VQuiverMap<S>&);      \
  template bool is_surjective<S>(const VQuiverMap<S>&);                                  \
  template bool is_isomorphism<S>(const VQuiverMap<S>&);

QUIVKIT_INSTANTIATE_VQUIVER(Rational)
QUIVKIT_INSTANTIATE_VQUIVER(ModP)

}  // namespace quivkit
