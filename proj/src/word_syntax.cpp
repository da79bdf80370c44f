#include "grprod/word_syntax.hpp"

#include <cctype>
#include <charconv>

#include "grprod/error.hpp"

namespace grprod {

namespace {

constexpr std::int64_t kMaxFreePower = 1'000'000;

std::int64_t parse_int(std::string_view s, std::string_view token) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InputError("bad exponent in token '" + std::string(token) + "'");
  }
  return value;
}

Letter parse_free_word(const VertexLabel& label, std::string_view gens, std::string_view token) {
  Letter raw;
  for (char c : gens) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto pos = VertexLabel::kFreeAlphabet.find(lower);
    if (pos == std::string_view::npos || static_cast<std::int64_t>(pos) >= label.parameter()) {
      throw InputError("unknown generator '" + std::string(1, c) + "' in token '" + std::string(token) + "'");
    }
    const auto g = static_cast<std::int64_t>(pos) + 1;
    raw.data.push_back(std::isupper(static_cast<unsigned char>(c)) ? -g : g);
  }
  return raw;
}

}  // namespace

std::vector<Syllable> parse_syllables(const Presentation& p, std::string_view text) {
  std::vector<Syllable> out;
  if (text.empty() || text == "1") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = text.find('.', start);
    const std::string_view token = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
    if (token.empty()) throw InputError("empty token in word '" + std::string(text) + "'");
    if (token != "1") {
      const std::size_t sep = token.find_first_of("^[");
      if (sep == std::string_view::npos || sep == 0) {
        throw InputError("token '" + std::string(token) + "' must look like v^e or v[word]");
      }
      const Vertex v = p.graph().index_of(token.substr(0, sep));
      const VertexLabel& label = p.label(v);
      if (!label.arithmetic()) {
        throw UnsupportedLabelError("vertex '" + p.graph().name(v) + "' carries label '" + label.name() +
                                    "', which does not support element arithmetic");
      }
      Letter letter;
      if (token[sep] == '^') {
        const std::int64_t e = parse_int(token.substr(sep + 1), token);
        if (label.kind() == LabelKind::free) {
          if (e > kMaxFreePower || e < -kMaxFreePower) {
            throw InputError("free-group power too large in token '" + std::string(token) + "'");
          }
          letter.data.assign(static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? -1 : 1);
        } else {
          letter = Letter::power(e);
        }
      } else {
        if (label.kind() != LabelKind::free) {
          throw InputError("bracketed letters need a free label, token '" + std::string(token) + "'");
        }
        if (token.back() != ']') throw InputError("unterminated '[' in token '" + std::string(token) + "'");
        letter = parse_free_word(label, token.substr(sep + 1, token.size() - sep - 2), token);
      }
      out.push_back(Syllable{v, std::move(letter)});
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

Element parse_element(const PresentationPtr& p, std::string_view text) {
  const auto raw = parse_syllables(*p, text);
  return Element::normalize(p, raw);
}

std::string format_syllable(const Presentation& p, const Syllable& s) {
  const VertexLabel& label = p.label(s.vertex);
  std::string out = p.graph().name(s.vertex);
  if (label.kind() == LabelKind::free) {
    out += '[';
    for (std::int64_t g : s.letter.data) {
      const char c = VertexLabel::kFreeAlphabet[static_cast<std::size_t>((g < 0 ? -g : g) - 1)];
      out += g < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
    }
    out += ']';
    return out;
  }
  return out + '^' + std::to_string(s.letter.is_identity() ? 0 : s.letter.data.front());
}

std::string format_syllables(const Presentation& p, std::span<const Syllable> word) {
  if (word.empty()) return "1";
  std::string out;
  for (const Syllable& s : word) {
    if (!out.empty()) out += '.';
    out += format_syllable(p, s);
  }
  return out;
}

std::string format_element(const Element& x) { return format_syllables(x.presentation(), x.word()); }

}  // namespace grprod
