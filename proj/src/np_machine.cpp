#include "advlab/np_machine.hpp"

#include <algorithm>
#include <limits>

#include "advlab/errors.hpp"

namespace advlab {

namespace {

constexpr std::uint64_t kBlock = std::uint64_t{1} << 14;

}  // namespace

std::optional<std::uint64_t> find_witness_serial(const Expr& verifier, const Word& input,
                                                 std::size_t cert_len) {
  const std::uint64_t space = std::uint64_t{1} << cert_len;
  for (std::uint64_t c = 0; c < space; ++c) {
    if (eval_packed(verifier, input, c, cert_len)) return c;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> find_witness(const Expr& verifier, const Word& input,
                                          std::size_t cert_len) {
  const std::uint64_t space = std::uint64_t{1} << cert_len;
  if (space < kBlock) return find_witness_serial(verifier, input, cert_len);
  for (std::uint64_t base = 0; base < space; base += kBlock) {
    const std::uint64_t end = std::min(space, base + kBlock);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::uint64_t c = base; c < end; ++c) {
      if (c < best && eval_packed(verifier, input, c, cert_len)) best = c;
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) return best;
  }
  return std::nullopt;
}

std::optional<Word> find_certificate(const NpMachine& m, const Word& x, std::size_t cap) {
  const std::uint64_t bits = m.cert_len(x.size());
  if (bits > cap || bits > 63) {
    throw CertificateSpaceTooLarge(bits > std::numeric_limits<std::size_t>::max()
                                       ? std::numeric_limits<std::size_t>::max()
                                       : static_cast<std::size_t>(bits),
                                   cap);
  }
  const auto cert_len = static_cast<std::size_t>(bits);
  if (auto i = m.verifier.max_cert_index(); i && *i >= cert_len) {
    throw IndexOutOfRange("c[" + std::to_string(*i) + "]", cert_len);
  }
  if (!x.is_binary() || x.size() < m.verifier.min_input_length()) return std::nullopt;
  if (auto c = find_witness(m.verifier, x, cert_len)) return Word::from_bits(*c, cert_len);
  return std::nullopt;
}

}  // namespace advlab
