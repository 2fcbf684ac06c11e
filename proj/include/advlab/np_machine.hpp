#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "advlab/expr.hpp"
#include "advlab/poly.hpp"
#include "advlab/word.hpp"

namespace advlab {

/// Largest certificate (in bits) that exhaustive search will enumerate.
inline constexpr std::size_t kDefaultCertificateCap = 20;

/// Accepts x iff some certificate c with |c| = cert_len(|x|) satisfies the
/// verifier on (x, c). Inputs shorter than the verifier's largest x[i]
/// reference, and non-binary inputs, are rejected outright.
struct NpMachine {
  Expr verifier = Expr::constant(false);
  Poly cert_len;
};

/// Lexicographically first certificate (packed MSB-first) of `cert_len` bits
/// satisfying `verifier` on `input`. Ranges must already be validated.
/// Splits the space into blocks scanned in order, each block in parallel.
std::optional<std::uint64_t> find_witness(const Expr& verifier, const Word& input,
                                          std::size_t cert_len);

/// Reference implementation of find_witness: one thread, early exit.
std::optional<std::uint64_t> find_witness_serial(const Expr& verifier, const Word& input,
                                                 std::size_t cert_len);

/// Throws CertificateSpaceTooLarge when cert_len(|x|) > cap and
/// IndexOutOfRange when the verifier reads past the certificate.
std::optional<Word> find_certificate(const NpMachine& m, const Word& x,
                                     std::size_t cap = kDefaultCertificateCap);

inline bool exists_certificate(const NpMachine& m, const Word& x,
                               std::size_t cap = kDefaultCertificateCap) {
  return find_certificate(m, x, cap).has_value();
}

}  // namespace advlab
