#include "grprod/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "grprod/error.hpp"

namespace grprod::oracle {

namespace {

struct Plain {
  Vertex vertex;
  std::int64_t residue;
};

std::int64_t order_of(const Presentation& p, Vertex v) {
  const VertexLabel& l = p.label(v);
  if (l.kind() != LabelKind::cyclic) throw UnsupportedLabelError("oracle words need cyclic labels");
  return l.parameter();
}

std::int64_t residue(std::int64_t value, std::int64_t n) {
  if (n == 0) return value;
  const std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

std::int64_t letter_value(const Letter& a) { return a.is_identity() ? 0 : a.data.front(); }

std::vector<Plain> to_plain(const Presentation& p, std::span<const Syllable> word) {
  std::vector<Plain> out;
  out.reserve(word.size());
  for (const Syllable& s : word) out.push_back({s.vertex, residue(letter_value(s.letter), order_of(p, s.vertex))});
  return out;
}

std::vector<Syllable> from_plain(const std::vector<Plain>& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const Plain& s : w) out.push_back(Syllable{s.vertex, Letter::power(s.residue)});
  return out;
}

}  // namespace

std::vector<Syllable> green_reduce(const Presentation& p, std::span<const Syllable> raw) {
  const SimpleGraph& g = p.graph();
  std::vector<Plain> w = to_plain(p, raw);
  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(w, [](const Plain& s) { return s.residue == 0; });
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          w[i].residue = residue(w[i].residue + w[j].residue, order_of(p, w[i].vertex));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        if (!g.adjacent(w[i].vertex, w[j].vertex)) break;
      }
    }
  }
  return from_plain(w);
}

bool same_trace(const Presentation& p, std::span<const Syllable> a, std::span<const Syllable> b) {
  const SimpleGraph& g = p.graph();
  const auto pa = to_plain(p, a);
  const auto pb = to_plain(p, b);
  if (pa.size() != pb.size()) return false;
  auto project = [](const std::vector<Plain>& w, Vertex u, Vertex v) {
    std::vector<std::pair<Vertex, std::int64_t>> out;
    for (const Plain& s : w) {
      if (s.vertex == u || s.vertex == v) out.emplace_back(s.vertex, s.residue);
    }
    return out;
  };
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u; v < g.size(); ++v) {
      if (u != v && g.adjacent(u, v)) continue;
      if (project(pa, u, v) != project(pb, u, v)) return false;
    }
  }
  return true;
}

bool represents(const Presentation& p, std::span<const Syllable> raw, const Element& x) {
  const auto reduced = green_reduce(p, raw);
  return same_trace(p, reduced, x.word());
}

CoxeterRepresentation::CoxeterRepresentation(const Presentation& p) : n_(p.graph().size()) {
  for (const VertexLabel& l : p.labels()) {
    if (l.kind() != LabelKind::cyclic || l.parameter() != 2) throw InputError("Coxeter representation needs Z/2 labels");
  }
  const SimpleGraph& g = p.graph();
  for (Vertex u = 0; u < n_; ++u) {
    Matrix m = identity();
    // Row u of sigma_u: e_u^T - 2 B(e_u, .).
    for (Vertex w = 0; w < n_; ++w) {
      const std::int64_t b = (w == u) ? 1 : (g.adjacent(u, w) ? 0 : -1);
      m[u * n_ + w] -= 2 * b;
    }
    reflections_.push_back(std::move(m));
  }
}

CoxeterRepresentation::Matrix CoxeterRepresentation::identity() const {
  Matrix m(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
  return m;
}

CoxeterRepresentation::Matrix CoxeterRepresentation::product(const Matrix& a, const Matrix& b) const {
  Matrix c(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t aik = a[i * n_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += aik * b[k * n_ + j];
    }
  }
  return c;
}

CoxeterRepresentation::Matrix CoxeterRepresentation::evaluate(std::span<const Syllable> word) const {
  Matrix m = identity();
  for (const Syllable& s : word) {
    if (residue(letter_value(s.letter), 2) == 1) m = product(m, reflections_.at(s.vertex));
  }
  return m;
}

std::vector<std::int64_t> evaluate_in_direct_product(const Presentation& p, std::span<const Syllable> word) {
  const SimpleGraph& g = p.graph();
  if (!g.is_clique(g.vertices())) throw InputError("direct product evaluation needs a complete graph");
  std::vector<std::int64_t> out(g.size(), 0);
  for (const Syllable& s : word) {
    const std::int64_t n = order_of(p, s.vertex);
    out[s.vertex] = residue(out[s.vertex] + letter_value(s.letter), n);
  }
  return out;
}

std::vector<std::vector<Vertex>> automorphisms(const SimpleGraph& g) {
  std::vector<Vertex> perm(g.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.size() && ok; ++u) {
      for (Vertex v = u + 1; v < g.size() && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BallOracle::BallOracle(PresentationPtr p, std::size_t radius) : pres_(std::move(p)) {
  if (!pres_->all_finite()) throw InputError("ball oracle needs finite labels");
  ball_ = ball(pres_, radius);
}

const std::vector<VertexSet>& BallOracle::conjugated_supports(const Element& c) const {
  if (auto it = support_cache_.find(c); it != support_cache_.end()) return it->second;
  const Element ci = invert(c);
  std::vector<VertexSet> supports;
  supports.reserve(ball_.size());
  for (const Element& y : ball_) supports.push_back((ci * y * c).support());
  return support_cache_.emplace(c, std::move(supports)).first->second;
}

bool BallOracle::member(const Element& c, VertexSet lambda, const Element& x) const {
  return (invert(c) * x * c).support().subset_of(lambda);
}

BallOracle::Bits BallOracle::members(const Element& c, VertexSet lambda) const {
  const auto& supports = conjugated_supports(c);
  Bits out((ball_.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (supports[i].subset_of(lambda)) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

std::vector<Element> BallOracle::generators(const Element& c, VertexSet lambda) const {
  std::vector<Element> out;
  const Element ci = invert(c);
  for (Vertex v : lambda) {
    for (const Letter& a : pres_->label(v).non_identity_letters()) out.push_back(c * Element::letter(pres_, v, a) * ci);
  }
  return out;
}

bool BallOracle::contains(const Element& c1, VertexSet l1, const Element& c2, VertexSet l2) const {
  for (const Element& t : generators(c2, l2)) {
    if (!member(c1, l1, t)) return false;
  }
  return true;
}

BallOracle::Bits BallOracle::normalizer_members(const Element& c, VertexSet lambda) const {
  // y normalizes c G_lambda c^-1 iff u = c^-1 y c normalizes G_lambda, tested on generators both ways.
  std::vector<Element> gens;
  for (Vertex v : lambda) {
    for (const Letter& a : pres_->label(v).non_identity_letters()) gens.push_back(Element::letter(pres_, v, a));
  }
  const Element ci = invert(c);
  Bits out((ball_.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < ball_.size(); ++i) {
    const Element u = ci * ball_[i] * c;
    const Element ui = invert(u);
    const bool ok = std::all_of(gens.begin(), gens.end(), [&](const Element& s) {
      return (u * s * ui).support().subset_of(lambda) && (ui * s * u).support().subset_of(lambda);
    });
    if (ok) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

bool BallOracle::commute(const Element& c, Vertex v, const Element& d, Vertex w) const {
  for (const Element& a : generators(c, VertexSet::single(v))) {
    for (const Element& b : generators(d, VertexSet::single(w))) {
      if (!(a * b == b * a)) return false;
    }
  }
  return true;
}

BallOracle::Bits bits_and(const BallOracle::Bits& a, const BallOracle::Bits& b) {
  BallOracle::Bits out(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

}  // namespace grprod::oracle
