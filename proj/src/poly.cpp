#include "advlab/poly.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "advlab/errors.hpp"

namespace advlab {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    Poly result = term();
    skip_ws();
    while (!at_end() && peek() == '+') {
      ++pos_;
      result = result + term();
      skip_ws();
    }
    if (!at_end()) fail("unexpected character");
    return result;
  }

 private:
  Poly term() {
    Poly result = factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      result = result * factor();
      skip_ws();
    }
    return result;
  }

  Poly factor() {
    skip_ws();
    if (at_end()) fail("expected an integer or 'n'");
    const char c = peek();
    if (c == '-') {
      throw NegativeCoefficient("coefficients must be non-negative", 1, pos_ + 1, "-");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(integer());
    if (c == 'n') {
      ++pos_;
      skip_ws();
      std::uint64_t exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an exponent");
        }
        exponent = integer();
        if (exponent > 64) fail("exponent too large");
      }
      std::vector<std::uint64_t> coeffs(exponent + 1, 0);
      coeffs[exponent] = 1;
      return Poly(std::move(coeffs));
    }
    fail("expected an integer or 'n'");
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (kMax - digit) / 10) {
        pos_ = start;
        fail("integer literal too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    const std::string token = at_end() ? std::string("<end>") : std::string(1, peek());
    if (!at_end() && peek() == '-') {
      throw NegativeCoefficient("coefficients must be non-negative", 1, pos_ + 1, token);
    }
    throw SyntaxError(message, 1, pos_ + 1, token);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly::Poly(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

std::uint64_t Poly::operator()(std::uint64_t n) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = sat_add(sat_mul(acc, n), *it);
  return acc;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::uint64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'n';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = sat_add(c[i], b.coeffs_[i]);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Poly{};
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = sat_add(c[i + j], sat_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(std::move(c));
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly result;
  for (auto it = outer.coeffs_.rbegin(); it != outer.coeffs_.rend(); ++it) {
    result = result * inner + Poly::constant(*it);
  }
  return result;
}

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace advlab
