#pragma once

// Exhaustive and randomized invariant suites shared by the selftest command
// and the acceptance runner.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grprod::suites {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First few failure descriptions.
  std::vector<std::string> samples;
  double seconds = 0.0;

  [[nodiscard]] bool passed() const { return failures == 0 && checked > 0; }
  void fail(std::string what);
};

/// Transvection-free graphs without partial conjugation are strongly reduced or
/// joins, with strongly reduced transvection-free factors on >= 2 vertices.
[[nodiscard]] SuiteResult dichotomy(std::size_t min_vertices, std::size_t max_vertices);

/// Chain recognition equals the direct untransvectable predicate (both variants).
[[nodiscard]] SuiteResult zoom_equivalence(std::size_t min_vertices, std::size_t max_vertices);

struct NormalFormParams {
  std::size_t max_vertices = 5;
  std::size_t triples_per_class = 10'000;
  std::size_t swap_sequences_per_class = 1'000;
  std::size_t max_word_length = 6;
  std::uint64_t seed = 1;
};
/// Canonical forms against the rewriting/trace oracle, the Coxeter matrix
/// representation (Z/2) and direct-product evaluation (complete graphs), over
/// labels Z/2, Z/3 and a mixture.
[[nodiscard]] SuiteResult normal_form(const NormalFormParams& params);

struct ParabolicParams {
  std::size_t max_vertices = 5;
  std::size_t conjugator_radius = 3;
  std::size_t ball_radius = 4;
};
/// intersect / normalizer / member / contains / parabolic_support against ball
/// brute force, for standard-vs-conjugate pairs with Z/2 labels.
[[nodiscard]] SuiteResult parabolic_oracle(const ParabolicParams& params);

/// z in syllables(g^-1 z h) and |g^-1 z h| >= |z| when the heads of g and h avoid G_v.
[[nodiscard]] SuiteResult length_lemma(std::size_t triples, std::uint64_t seed);

/// Building counts for the edge graph and fundamental-domain sizes on assorted graphs.
[[nodiscard]] SuiteResult building_counts();

/// Combined bijections induce type- and rank-preserving isomorphisms of balls.
[[nodiscard]] SuiteResult combined_bijections(std::size_t pairs, std::size_t radius, std::uint64_t seed);

}  // namespace grprod::suites
