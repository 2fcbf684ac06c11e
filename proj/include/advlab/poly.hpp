#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advlab {

/// Polynomial in one variable n with non-negative integer coefficients.
/// coeffs[k] multiplies n^k; trailing zeros are trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<std::uint64_t> coeffs);

  static Poly constant(std::uint64_t c) { return Poly({c}); }
  static Poly identity() { return Poly({0, 1}); }

  /// Saturates at UINT64_MAX instead of wrapping.
  std::uint64_t operator()(std::uint64_t n) const;

  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Canonical text, highest degree first, e.g. "2*n^2 + 3*n + 1".
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  /// outer(inner(n)).
  friend Poly compose(const Poly& outer, const Poly& inner);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Grammar: sum of products of integer literals and `n` / `n^k`.
/// Throws SyntaxError, or NegativeCoefficient on any minus sign.
Poly parse_poly(std::string_view text);

inline std::uint64_t eval_poly(const Poly& p, std::uint64_t n) { return p(n); }

}  // namespace advlab
