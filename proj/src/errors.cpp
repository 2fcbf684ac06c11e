#include "advlab/errors.hpp"

#include <sstream>
#include <utility>

namespace advlab {

namespace {

template <typename... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace

HorizonExceeded::HorizonExceeded(std::string language, std::size_t length, std::size_t horizon)
    : Error(concat("horizon exceeded in language '", language, "': word length ", length,
                   " > horizon ", horizon)),
      language_(std::move(language)),
      length_(length),
      horizon_(horizon) {}

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column,
                         std::string token)
    : Error(concat("syntax error at line ", line, ", column ", column, " near '", token,
                   "': ", message)),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

IndexOutOfRange::IndexOutOfRange(std::string reference, std::size_t available)
    : Error(concat("bit reference ", reference, " out of range (", available, " bits available)")),
      reference_(std::move(reference)) {}

BudgetExhausted::BudgetExhausted(std::uint64_t budget, std::string query)
    : Error(concat("oracle budget of ", budget, " queries exhausted by query '", query, "'")),
      budget_(budget),
      query_(std::move(query)) {}

SearchSpaceTooLarge::SearchSpaceTooLarge(std::string what, std::size_t bits, std::size_t cap)
    : Error(concat(what, " of ", bits, " bits exceeds the exhaustive-search cap of ", cap)),
      bits_(bits),
      cap_(cap) {}

CertificateSpaceTooLarge::CertificateSpaceTooLarge(std::size_t bits, std::size_t cap)
    : SearchSpaceTooLarge("certificate space", bits, cap) {}

SparsityViolated::SparsityViolated(std::string language, std::size_t length, std::uint64_t count,
                                   std::uint64_t bound)
    : Error(concat("language '", language, "' has ", count, " members of length ", length,
                   ", above the sparsity bound ", bound)) {}

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error(concat("config field '", field, "': ", message)), field_(std::move(field)) {}

TrialError::TrialError(std::uint64_t trial, const std::string& message, std::exception_ptr cause)
    : Error(concat("trial ", trial, ": ", message)), trial_(trial), cause_(std::move(cause)) {}

}  // namespace advlab
