#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grprod/element.hpp"

namespace grprod {

// Textual syllable syntax: tokens joined by '.', each either
//   v^e      cyclic letter e, or the e-th power of the first generator for free labels
//   v[xyZ]   free letter as a generator word, uppercase for inverses
// The identity is written "1".

/// Raw (unreduced) syllables of an expression. Throws InputError on malformed text.
[[nodiscard]] std::vector<Syllable> parse_syllables(const Presentation& p, std::string_view text);

[[nodiscard]] Element parse_element(const PresentationPtr& p, std::string_view text);

[[nodiscard]] std::string format_syllable(const Presentation& p, const Syllable& s);
[[nodiscard]] std::string format_syllables(const Presentation& p, std::span<const Syllable> word);
[[nodiscard]] std::string format_element(const Element& x);

}  // namespace grprod
