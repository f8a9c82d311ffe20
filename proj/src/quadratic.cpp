#include "iex/quadratic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace iex {

FiniteUnion FiniteUnion::from_parts(std::vector<SemiInterval> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const SemiInterval& a, const SemiInterval& b) { return a.lo < b.lo; });
  FiniteUnion out;
  for (SemiInterval& p : parts) {
    if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < p.hi)
        out.parts_.back() = SemiInterval(out.parts_.back().lo, p.hi);
    } else {
      out.parts_.push_back(std::move(p));
    }
  }
  return out;
}

QuadNum FiniteUnion::measure() const {
  QuadNum total(0);
  for (const SemiInterval& p : parts_) total = total + p.length();
  return total;
}

FiniteUnion FiniteUnion::unite(const FiniteUnion& other) const {
  std::vector<SemiInterval> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return from_parts(std::move(parts));
}

FiniteUnion FiniteUnion::intersect(const FiniteUnion& other) const {
  std::vector<SemiInterval> parts;
  for (const SemiInterval& a : parts_)
    for (const SemiInterval& b : other.parts_)
      if (auto c = iex::intersect(a, b)) parts.push_back(*c);
  return from_parts(std::move(parts));
}

bool FiniteUnion::subset_of(const FiniteUnion& other) const {
  // Normalized parts: each part must sit inside a single part of other.
  for (const SemiInterval& a : parts_) {
    bool covered = false;
    for (const SemiInterval& b : other.parts_)
      if (b.contains(a)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool FiniteUnion::intersects(const FiniteUnion& other) const {
  for (const SemiInterval& a : parts_)
    for (const SemiInterval& b : other.parts_)
      if (iex::intersect(a, b)) return true;
  return false;
}

FiniteUnion forward_image(const Iet& T, const FiniteUnion& X) {
  std::vector<SemiInterval> parts;
  for (const SemiInterval& p : X.parts())
    for (size_t i = 0; i < T.size(); ++i)
      if (auto c = intersect(p, SemiInterval(T.gamma(i), T.mu(i))))
        parts.emplace_back(c->lo + T.alpha(i), c->hi + T.alpha(i));
  return FiniteUnion::from_parts(std::move(parts));
}

FiniteUnion backward_image(const Iet& T, const FiniteUnion& X) {
  std::vector<SemiInterval> parts;
  for (const SemiInterval& p : X.parts())
    for (size_t i = 0; i < T.size(); ++i)
      if (auto c = intersect(p, SemiInterval(T.delta(i), T.nu(i))))
        parts.emplace_back(c->lo - T.alpha(i), c->hi - T.alpha(i));
  return FiniteUnion::from_parts(std::move(parts));
}

Int set_complexity(const FiniteUnion& X) {
  Int best = 0;
  for (const SemiInterval& p : X.parts()) {
    best = std::max(best, height_psi(p.lo));
    best = std::max(best, height_psi(p.hi));
  }
  return best;
}

QuadNum reduced_complexity(const FiniteUnion& X) {
  return X.measure() * QuadNum(Rational(set_complexity(X)));
}

Int u_bound(const Iet& T) {
  Int best = 0;
  for (size_t i = 0; i < T.size(); ++i) {
    best = std::max(best, height_psi(T.alpha(i)));
    best = std::max(best, height_psi(T.gamma(i)));
    best = std::max(best, height_psi(T.gamma(i) + T.alpha(i)));
  }
  return best;
}

std::pair<Iet, Int> rescale_integral(const Iet& T) {
  std::vector<QuadNum> data{T.left()};
  for (size_t i = 0; i < T.size(); ++i) data.push_back(T.length(i));
  auto [scaled, scale] = clear_denominators(data);
  std::vector<QuadNum> lengths(scaled.begin() + 1, scaled.end());
  return {Iet(T.order1(), T.order2(), std::move(lengths), scaled[0]), scale};
}

long return_time(const Iet& T, const FiniteUnion& X, ReturnTimeKind kind, const RhoConfig& cfg) {
  if (X.empty()) throw OutOfDomain("return time of an empty set");
  long cap = iteration_cap(T, X.measure(), cfg);
  bool forward = kind == ReturnTimeKind::rho_plus || kind == ReturnTimeKind::sigma_plus;
  bool rho = kind == ReturnTimeKind::rho_plus || kind == ReturnTimeKind::rho_minus;
  FiniteUnion iter = X;
  FiniteUnion seen = X;
  for (long n = 1; n <= cap; ++n) {
    iter = forward ? forward_image(T, iter) : backward_image(T, iter);
    if (rho) {
      if (iter.subset_of(seen)) return n;
      seen = seen.unite(iter);
    } else {
      if (iter.intersects(X)) return n;
    }
  }
  throw CapExceeded("return-time iteration exceeded " + std::to_string(cap) + " steps");
}

std::vector<QuadNum> boundary_orbit(const Iet& T, long m, long n) {
  std::set<QuadNum> points;
  std::vector<QuadNum> seps = T.separation_points();
  for (const QuadNum& g : seps) {
    QuadNum cur = g;
    for (long i = 0; i <= n; ++i) {
      if (i >= -m + 1) points.insert(cur);
      if (i < n) cur = T.apply(cur);
    }
    cur = g;
    for (long i = 0; i >= -m + 1; --i) {
      points.insert(cur);
      if (i > -m + 1) cur = T.apply_inv(cur);
    }
  }
  return {points.begin(), points.end()};
}

std::vector<SemiInterval> orbit_cells(const Iet& T, long m, long n) {
  std::vector<QuadNum> cuts = boundary_orbit(T, m, n);
  std::vector<QuadNum> inner;
  for (const QuadNum& p : cuts)
    if (T.left() < p && p < T.right()) inner.push_back(p);
  std::vector<SemiInterval> cells;
  QuadNum lo = T.left();
  for (const QuadNum& p : inner) {
    cells.emplace_back(lo, p);
    lo = p;
  }
  cells.emplace_back(lo, T.right());
  return cells;
}

bool is_orbit_interval(const Iet& T, long m, long n, const SemiInterval& I) {
  std::vector<QuadNum> pts = boundary_orbit(T, m, n);
  auto member = [&](const QuadNum& z) {
    return z == T.right() || std::binary_search(pts.begin(), pts.end(), z);
  };
  return member(I.lo) && member(I.hi);
}

namespace {

// In similarity mode a class's two children are well defined as a set but
// their psi/phi roles depend on the representative, so pick the witness
// child whose class matches.
Iet matching_witness_child(const Iet& witness, CanonMode mode, const std::string& key) {
  InductionStep right = rauzy_right(witness);
  if (canonical_form(right.result, mode).key() == key) return right.result;
  InductionStep left = rauzy_left(witness);
  if (canonical_form(left.result, mode).key() == key) return left.result;
  throw std::logic_error("no witness child realizes the discovered class");
}

}  // namespace

InductionGraph build_graph(const Iet& T, CanonMode mode, size_t max_vertices) {
  InductionGraph g;
  g.mode = mode;
  std::map<std::string, size_t> index;
  CanonicalIet root = canonical_form(T, mode);
  index[root.key()] = 0;
  g.vertices.push_back(std::move(root));
  g.witnesses.push_back(T);
  std::set<std::pair<size_t, size_t>> seen_pairs;

  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].perm.size() == 1) continue;  // identity map: no children
    Iet rep = g.vertices[v].representative();
    for (char kind : {'R', 'L'}) {
      Iet child = [&] {
        try {
          return kind == 'R' ? rauzy_right(rep).result : rauzy_left(rep).result;
        } catch (const ConnectionDetected& e) {
          throw NotRegular("induction halted on vertex " + std::to_string(v) + ": " + e.what(),
                           e.boundary);
        }
      }();
      CanonicalIet cform = canonical_form(child, mode);
      std::string key = cform.key();
      auto [it, fresh] = index.emplace(key, g.vertices.size());
      if (fresh) {
        if (g.vertices.size() >= max_vertices)
          throw VertexBudgetExceeded("induction graph exceeded " +
                                     std::to_string(max_vertices) + " vertices");
        g.vertices.push_back(std::move(cform));
        g.witnesses.push_back(matching_witness_child(g.witnesses[v], mode, key));
      }
      if (mode == CanonMode::similarity) {
        if (!seen_pairs.emplace(v, it->second).second) continue;
      }
      g.edges.push_back({v, kind, it->second});
    }
  }
  return g;
}

std::string emit_dot(const InductionGraph& graph) {
  std::string out = "digraph induction {\n";
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    const CanonicalIet& c = graph.vertices[v];
    std::string label = "pi=(";
    for (size_t k = 0; k < c.perm.size(); ++k) {
      if (k) label += " ";
      label += std::to_string(c.perm[k] + 1);
    }
    label += "); lengths=(";
    for (size_t k = 0; k < c.lengths.size(); ++k) {
      if (k) label += "; ";
      label += c.lengths[k].str();
    }
    label += ")";
    out += "  v" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (const GraphEdge& e : graph.edges) {
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to);
    if (graph.mode == CanonMode::equivalence)
      out += std::string(" [label=\"") + (e.kind == 'R' ? "psi" : "phi") + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

namespace {

// Letter-labeled refinement of the equivalence classes: coding conjugacy
// needs the letters to line up, so the cycle is searched over classes
// that remember which letter sits at each position.
struct LabeledGraph {
  struct Edge {
    size_t from, to;
    Morphism step;
  };
  std::vector<Iet> vertices;  // normalized to [0,1)
  std::vector<Edge> edges;
  std::vector<std::vector<size_t>> out;  // edge indices per vertex
};

std::string labeled_key(const Iet& T) {
  std::string k(T.order1().begin(), T.order1().end());
  k += '|';
  k.append(T.order2().begin(), T.order2().end());
  k += '|';
  QuadNum total = T.right() - T.left();
  for (size_t i = 0; i < T.size(); ++i) {
    k += (T.length(i) / total).str();
    k += ';';
  }
  return k;
}

Iet normalize_labeled(const Iet& T) {
  QuadNum total = T.right() - T.left();
  std::vector<QuadNum> lens;
  for (size_t i = 0; i < T.size(); ++i) lens.push_back(T.length(i) / total);
  return Iet(T.order1(), T.order2(), std::move(lens), QuadNum(0));
}

LabeledGraph build_labeled_graph(const Iet& T, size_t max_vertices) {
  LabeledGraph g;
  std::map<std::string, size_t> index;
  Iet root = normalize_labeled(T);
  index[labeled_key(root)] = 0;
  g.vertices.push_back(std::move(root));
  g.out.emplace_back();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    for (char kind : {'R', 'L'}) {
      InductionStep step =
          kind == 'R' ? rauzy_right(g.vertices[v]) : rauzy_left(g.vertices[v]);
      Iet child = normalize_labeled(step.result);
      std::string key = labeled_key(child);
      auto [it, fresh] = index.emplace(key, g.vertices.size());
      if (fresh) {
        if (g.vertices.size() >= max_vertices)
          throw VertexBudgetExceeded("labeled induction graph exceeded " +
                                     std::to_string(max_vertices) + " vertices");
        g.vertices.push_back(std::move(child));
        g.out.emplace_back();
      }
      g.out[v].push_back(g.edges.size());
      g.edges.push_back({v, it->second, std::move(step.automorphism)});
    }
  }
  return g;
}

// Breadth-first distances and parent edges from a start vertex.
void bfs(const LabeledGraph& g, size_t start, std::vector<long>& dist,
         std::vector<size_t>& parent_edge) {
  dist.assign(g.vertices.size(), -1);
  parent_edge.assign(g.vertices.size(), SIZE_MAX);
  std::deque<size_t> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    for (size_t e : g.out[v]) {
      size_t w = g.edges[e].to;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent_edge[w] = e;
        queue.push_back(w);
      }
    }
  }
}

std::vector<size_t> path_edges(const LabeledGraph& g, const std::vector<size_t>& parent_edge,
                               size_t start, size_t target) {
  std::vector<size_t> edges;
  size_t v = target;
  while (v != start) {
    size_t e = parent_edge[v];
    edges.push_back(e);
    v = g.edges[e].from;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

}  // namespace

MorphicPresentation extract_primitive_morphism(const Iet& T) {
  constexpr size_t kBudget = 10000;
  build_graph(T, CanonMode::equivalence, kBudget);  // regularity / finiteness gate
  if (auto c = idoc_probe(T, 50))
    throw NotRegular("separation orbits collide: T^" + std::to_string(c->h) + "(gamma_" +
                         std::to_string(c->i) + ") = gamma_" + std::to_string(c->j),
                     c->point.str());

  LabeledGraph g = build_labeled_graph(T, kBudget);

  // Shortest cycle through any vertex reachable from the root, ties broken
  // by discovery order.
  std::vector<long> dist_root;
  std::vector<size_t> parent_root;
  bfs(g, 0, dist_root, parent_root);
  size_t best_vertex = SIZE_MAX;
  long best_len = -1;
  size_t best_closing_edge = SIZE_MAX;
  std::vector<size_t> best_parent;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (dist_root[v] < 0) continue;
    std::vector<long> dist;
    std::vector<size_t> parent;
    bfs(g, v, dist, parent);
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].to != v) continue;
      size_t u = g.edges[e].from;
      if (dist[u] < 0) continue;
      long len = dist[u] + 1;
      if (best_len < 0 || len < best_len) {
        best_len = len;
        best_vertex = v;
        best_closing_edge = e;
        best_parent = parent;
      }
    }
  }
  if (best_vertex == SIZE_MAX) throw std::logic_error("finite out-regular graph has a cycle");

  Morphism theta = Morphism::identity(T.order1());
  for (size_t e : path_edges(g, parent_root, 0, best_vertex))
    theta = compose(theta, g.edges[e].step);

  Morphism cycle0 = Morphism::identity(g.vertices[best_vertex].order1());
  for (size_t e : path_edges(g, best_parent, best_vertex, g.edges[best_closing_edge].from))
    cycle0 = compose(cycle0, g.edges[e].step);
  cycle0 = compose(cycle0, g.edges[best_closing_edge].step);

  // Power the cycle automorphism until it is primitive and fixes the
  // initial letter of some image.
  Morphism eta = cycle0;
  constexpr int kMaxPower = 64;
  for (int k = 1; k <= kMaxPower; ++k) {
    char seed = 0;
    for (char a : T.order1()) {
      const Word& im = eta.image(a);
      if (im.size() >= 2 && im[0] == a) {
        seed = a;
        break;
      }
    }
    if (seed != 0 && is_primitive(eta)) return {std::move(theta), std::move(eta), seed};
    eta = compose(eta, cycle0);
  }
  throw std::logic_error("cycle automorphism failed to become primitive");
}

FactorSet presentation_factors(const MorphicPresentation& pres,
                               const std::vector<char>& letters, size_t n) {
  const size_t s = letters.size();
  Word w(1, pres.seed);
  std::vector<std::vector<Word>> best;
  constexpr int kMaxRounds = 64;
  for (int round = 0; round < kMaxRounds; ++round) {
    w = pres.cycle.apply(w);
    Word u = pres.path.apply(w);
    std::vector<std::set<Word>> found(n + 1);
    found[0].insert("");
    for (size_t start = 0; start < u.size(); ++start)
      for (size_t k = 1; k <= n && start + k <= u.size(); ++k)
        found[k].insert(u.substr(start, k));
    bool complete = true;
    for (size_t k = 1; k <= n; ++k)
      if (found[k].size() < (s - 1) * k + 1) complete = false;
    if (complete) {
      best.clear();
      for (size_t k = 0; k <= n; ++k) {
        std::vector<Word> level(found[k].begin(), found[k].end());
        std::sort(level.begin(), level.end(), WordLess{letters});
        best.push_back(std::move(level));
      }
      return FactorSet(letters, std::move(best));
    }
    if (u.size() > 2000000)
      throw CapExceeded("presentation factors did not stabilize by length " +
                        std::to_string(u.size()));
  }
  throw CapExceeded("presentation factors did not stabilize");
}

EuclidResult euclid_digits(const Iet& T, size_t n) {
  if (T.size() != 2)
    throw AlphabetMismatch("continued-fraction view requires a 2-interval exchange");
  EuclidResult out;
  Iet cur = T;
  int run_case = -1;
  long run = 0;
  while (out.digits.size() < n) {
    std::optional<InductionStep> step;
    try {
      step = rauzy_right(cur);
    } catch (const ConnectionDetected&) {
      // Equal lengths: the run in progress ends one subtraction early.
      if (run > 0) out.digits.push_back(run + 1);
      out.exhausted = true;
      return out;
    }
    if (step->case_tag != run_case) {
      if (run > 0) out.digits.push_back(run);
      else if (step->case_tag == 0) out.digits.push_back(0);  // ratio below 1
      run_case = step->case_tag;
      run = 0;
    }
    ++run;
    cur = std::move(step->result);
  }
  return out;
}

}  // namespace iex
