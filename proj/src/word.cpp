#include "advlab/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace advlab {

Word Word::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1' && c != '#') {
      throw std::invalid_argument("word contains symbol outside {0,1,#}: '" + std::string(text) +
                                  "'");
    }
  }
  return Word(std::string(text));
}

Word Word::ones(std::size_t count) { return Word(std::string(count, '1')); }

Word Word::zeros(std::size_t count) { return Word(std::string(count, '0')); }

Word Word::from_bits(std::uint64_t value, std::size_t width) {
  std::string text(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) text[i] = '1';
  }
  return Word(std::move(text));
}

bool Word::is_binary() const noexcept { return text_.find('#') == std::string::npos; }

bool Word::is_unary() const noexcept {
  return std::all_of(text_.begin(), text_.end(), [](char c) { return c == '1'; });
}

std::vector<Word> binary_words(std::size_t length) {
  std::vector<Word> words;
  const std::uint64_t count = std::uint64_t{1} << length;
  words.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) words.push_back(Word::from_bits(v, length));
  return words;
}

std::vector<Word> split(const Word& w) {
  std::vector<Word> parts;
  const std::string& s = w.str();
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find('#', start);
    if (pos == std::string::npos) {
      parts.push_back(Word::parse(std::string_view(s).substr(start)));
      return parts;
    }
    parts.push_back(Word::parse(std::string_view(s).substr(start, pos - start)));
    start = pos + 1;
  }
}

Word join(const std::vector<Word>& words) {
  Word out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(Symbol::Sep);
    out.append(words[i]);
  }
  return out;
}

}  // namespace advlab
