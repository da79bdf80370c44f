#include "grprod/presentation.hpp"

#include <cstdlib>
#include <limits>

#include "grprod/error.hpp"

namespace grprod {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("integer overflow in letter arithmetic");
  return out;
}

std::int64_t residue(std::int64_t e, std::int64_t n) {
  std::int64_t r = e % n;
  if (r < 0) r += n;
  if (r > n / 2) r -= n;  // ties (n even, r = n/2) keep the non-negative representative
  return r;
}

// Appends generator g to a freely reduced word, cancelling against the last letter.
void push_reduced(std::vector<std::int64_t>& word, std::int64_t g) {
  if (!word.empty() && word.back() == -g) {
    word.pop_back();
  } else {
    word.push_back(g);
  }
}

}  // namespace

VertexLabel::VertexLabel(LabelKind kind, std::int64_t parameter, std::string tag, std::optional<bool> infinite,
                         std::string name)
    : kind_(kind), parameter_(parameter), tag_(std::move(tag)), opaque_infinite_(infinite), name_(std::move(name)) {}

VertexLabel VertexLabel::cyclic(std::int64_t order, std::string name) {
  if (order < 0 || order == 1) throw InputError("cyclic order must be 0 or at least 2, got " + std::to_string(order));
  if (name.empty()) name = order == 0 ? "Z" : "Z/" + std::to_string(order);
  return VertexLabel(LabelKind::cyclic, order, {}, std::nullopt, std::move(name));
}

VertexLabel VertexLabel::free(std::int64_t rank, std::string name) {
  if (rank < 1) throw InputError("free rank must be at least 1, got " + std::to_string(rank));
  if (rank > static_cast<std::int64_t>(kFreeAlphabet.size())) {
    throw InputError("free rank is limited to " + std::to_string(kFreeAlphabet.size()));
  }
  if (name.empty()) name = "F" + std::to_string(rank);
  return VertexLabel(LabelKind::free, rank, {}, std::nullopt, std::move(name));
}

VertexLabel VertexLabel::higman(std::int64_t k, std::string name) {
  if (k < 4) throw InputError("higman parameter must be at least 4, got " + std::to_string(k));
  if (name.empty()) name = "Hig" + std::to_string(k);
  return VertexLabel(LabelKind::higman, k, {}, std::nullopt, std::move(name));
}

VertexLabel VertexLabel::opaque(std::string tag, std::optional<bool> infinite, std::string name) {
  if (tag.empty()) throw InputError("opaque label needs a non-empty tag");
  if (name.empty()) name = tag;
  return VertexLabel(LabelKind::opaque, 0, std::move(tag), infinite, std::move(name));
}

std::string VertexLabel::kind_name() const {
  switch (kind_) {
    case LabelKind::cyclic: return "cyclic";
    case LabelKind::free: return "free";
    case LabelKind::higman: return "higman";
    case LabelKind::opaque: return "opaque";
  }
  return "unknown";
}

std::optional<std::uint64_t> VertexLabel::finite_order() const {
  if (kind_ == LabelKind::cyclic && parameter_ >= 2) return static_cast<std::uint64_t>(parameter_);
  return std::nullopt;
}

std::optional<bool> VertexLabel::infinite() const {
  switch (kind_) {
    case LabelKind::cyclic: return parameter_ == 0;
    case LabelKind::free:
    case LabelKind::higman: return true;
    case LabelKind::opaque: return opaque_infinite_;
  }
  return std::nullopt;
}

void VertexLabel::require_arithmetic() const {
  if (!arithmetic()) {
    throw UnsupportedLabelError("label '" + name_ + "' (" + kind_name() + ") does not support element arithmetic");
  }
}

Letter VertexLabel::reduce(Letter raw) const {
  require_arithmetic();
  if (kind_ == LabelKind::cyclic) {
    std::int64_t e = 0;
    for (std::int64_t x : raw.data) e = checked_add(e, x);
    if (parameter_ != 0) e = residue(e, parameter_);
    return Letter::power(e);
  }
  std::vector<std::int64_t> word;
  for (std::int64_t g : raw.data) {
    if (g == 0 || g > parameter_ || g < -parameter_) {
      throw InputError("generator " + std::to_string(g) + " is invalid for " + name_);
    }
    push_reduced(word, g);
  }
  return Letter{std::move(word)};
}

Letter VertexLabel::multiply(const Letter& a, const Letter& b) const {
  require_arithmetic();
  if (kind_ == LabelKind::cyclic) {
    const std::int64_t x = a.is_identity() ? 0 : a.data.front();
    const std::int64_t y = b.is_identity() ? 0 : b.data.front();
    const std::int64_t s = checked_add(x, y);
    return Letter::power(parameter_ == 0 ? s : residue(s, parameter_));
  }
  std::vector<std::int64_t> word = a.data;
  for (std::int64_t g : b.data) push_reduced(word, g);
  return Letter{std::move(word)};
}

Letter VertexLabel::inverse(const Letter& a) const {
  require_arithmetic();
  if (kind_ == LabelKind::cyclic) {
    if (a.is_identity()) return {};
    const std::int64_t x = a.data.front();
    if (x == std::numeric_limits<std::int64_t>::min()) throw InputError("integer overflow in letter inverse");
    return Letter::power(parameter_ == 0 ? -x : residue(-x, parameter_));
  }
  Letter out;
  out.data.assign(a.data.rbegin(), a.data.rend());
  for (auto& g : out.data) g = -g;
  return out;
}

std::uint64_t VertexLabel::length(const Letter& a) const {
  require_arithmetic();
  if (kind_ == LabelKind::cyclic) {
    return a.is_identity() ? 0 : static_cast<std::uint64_t>(std::llabs(a.data.front()));
  }
  return a.data.size();
}

std::vector<Letter> VertexLabel::generators() const {
  require_arithmetic();
  std::vector<Letter> out;
  if (kind_ == LabelKind::cyclic) {
    out.push_back(Letter::power(1));
    if (parameter_ != 2) out.push_back(Letter::power(-1));
    return out;
  }
  for (std::int64_t g = 1; g <= parameter_; ++g) {
    out.push_back(Letter{{g}});
    out.push_back(Letter{{-g}});
  }
  return out;
}

std::vector<Letter> VertexLabel::non_identity_letters() const {
  require_arithmetic();
  const auto order = finite_order();
  if (!order) throw EnumerationError("label '" + name_ + "' is infinite");
  std::vector<Letter> out;
  for (std::int64_t e = 1; e < parameter_; ++e) out.push_back(Letter::power(residue(e, parameter_)));
  return out;
}

bool higman_homomorphism_exists(std::int64_t from_k, std::int64_t to_k) {
  if (from_k < 4 || to_k < 4) throw InputError("higman parameters must be at least 4");
  return from_k % to_k == 0;
}

Presentation::Presentation(SimpleGraph graph, std::vector<VertexLabel> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {}

PresentationPtr Presentation::make(SimpleGraph graph, std::vector<VertexLabel> labels) {
  if (labels.size() != graph.size()) {
    throw InputError("presentation needs one label per vertex (" + std::to_string(graph.size()) + " vertices, " +
                     std::to_string(labels.size()) + " labels)");
  }
  return PresentationPtr(new Presentation(std::move(graph), std::move(labels)));
}

PresentationPtr Presentation::uniform(SimpleGraph graph, const VertexLabel& label) {
  std::vector<VertexLabel> labels(graph.size(), label);
  return make(std::move(graph), std::move(labels));
}

bool Presentation::arithmetic() const {
  for (const auto& l : labels_) {
    if (!l.arithmetic()) return false;
  }
  return true;
}

bool Presentation::all_finite() const {
  for (const auto& l : labels_) {
    if (!l.finite_order()) return false;
  }
  return true;
}

void Presentation::require_arithmetic() const {
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (!labels_[v].arithmetic()) {
      throw UnsupportedLabelError("vertex '" + graph_.name(v) + "' carries label '" + labels_[v].name() + "' (" +
                                  labels_[v].kind_name() + "), which does not support element arithmetic");
    }
  }
}

}  // namespace grprod
