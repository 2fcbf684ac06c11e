#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "advlab/language.hpp"
#include "advlab/np_machine.hpp"

namespace advlab {

/// The prefix-existence query 1^length # prefix.
Word prefix_query(std::size_t length, const Word& prefix);

/// Splits a well-formed prefix query into (length, prefix). Returns nullopt
/// for anything else: missing SEP, a header that is not all ONE, a non-binary
/// prefix, or a prefix longer than the header.
std::optional<std::pair<std::size_t, Word>> parse_prefix_query(const Word& w);

/// {1^length # p : some member x of L has |x| = length and p is a prefix of x}.
/// Horizon 2*length + 1; malformed and wrong-length queries are non-members.
/// Throws std::invalid_argument if L has a non-binary member of that length.
Language prefix_language_exact(const Language& L, std::size_t length);

/// {1^n # p : some member x of L has |x| <= n and p is a prefix of x}.
/// Kept for comparison only: a member that is a proper prefix of another is
/// never reached by greedy descent on this form.
Language prefix_language_cumulative(const Language& L, std::size_t n);

/// Prefix language of the NP machine's language at one length. Each query
/// runs a single exhaustive search over the concatenation of the unknown
/// input suffix and the certificate.
Language np_prefix_language(const NpMachine& m, std::size_t length,
                            std::size_t cap = kDefaultCertificateCap);

/// Union of np_prefix_language over every length 0..max_length; the header
/// of each query selects the length.
Language np_prefix_language_all(const NpMachine& m, std::size_t max_length,
                                std::size_t cap = kDefaultCertificateCap);

/// Answers one prefix query for the NP machine; false for malformed queries.
/// Throws CertificateSpaceTooLarge when the combined witness exceeds `cap`.
bool np_prefix_member(const NpMachine& m, std::size_t length, const Word& prefix,
                      std::size_t cap = kDefaultCertificateCap);

}  // namespace advlab
