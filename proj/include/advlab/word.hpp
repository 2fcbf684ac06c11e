#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace advlab {

enum class Symbol : char { Zero = '0', One = '1', Sep = '#' };

/// A finite string over {0, 1, #}. Stored as its textual rendering, so the
/// natural string order is the lexicographic order on binary words.
class Word {
 public:
  Word() = default;

  /// Throws std::invalid_argument on characters outside {0, 1, #}.
  static Word parse(std::string_view text);
  static Word ones(std::size_t count);
  static Word zeros(std::size_t count);
  /// The `width`-bit binary rendering of `value`, most significant bit first.
  static Word from_bits(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }
  Symbol operator[](std::size_t i) const { return static_cast<Symbol>(text_[i]); }
  bool bit(std::size_t i) const { return text_[i] == '1'; }

  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  Word prefix(std::size_t length) const { return Word(text_.substr(0, length)); }
  Word suffix_from(std::size_t start) const { return Word(text_.substr(start)); }
  bool has_prefix(const Word& p) const noexcept {
    return std::string_view(text_).substr(0, p.size()) == p.text_;
  }

  Word& push_back(Symbol s) {
    text_.push_back(static_cast<char>(s));
    return *this;
  }
  Word& append(const Word& other) {
    text_ += other.text_;
    return *this;
  }
  Word with(Symbol s) const {
    Word w = *this;
    return w.push_back(s);
  }

  const std::string& str() const noexcept { return text_; }

  friend Word operator+(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  explicit Word(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// Orders by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// All binary words of exactly `length` symbols, in lexicographic order.
std::vector<Word> binary_words(std::size_t length);

/// Splits on every SEP; "a#b" -> {a, b}, "" -> {""}.
std::vector<Word> split(const Word& w);

/// Joins with SEP between consecutive words.
Word join(const std::vector<Word>& words);

}  // namespace advlab

template <>
struct std::hash<advlab::Word> {
  std::size_t operator()(const advlab::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
