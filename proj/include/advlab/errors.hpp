#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>

namespace advlab {

/// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HorizonExceeded : public Error {
 public:
  HorizonExceeded(std::string language, std::size_t length, std::size_t horizon);

  const std::string& language() const noexcept { return language_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t horizon() const noexcept { return horizon_; }

 private:
  std::string language_;
  std::size_t length_;
  std::size_t horizon_;
};

/// Raised by the expression and polynomial parsers. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column, std::string token);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class NegativeCoefficient : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(std::string reference, std::size_t available);

  const std::string& reference() const noexcept { return reference_; }

 private:
  std::string reference_;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::uint64_t budget, std::string query);

  std::uint64_t budget() const noexcept { return budget_; }
  const std::string& query() const noexcept { return query_; }

 private:
  std::uint64_t budget_;
  std::string query_;
};

/// An exhaustive search was asked to cover more than its configured number of bits.
class SearchSpaceTooLarge : public Error {
 public:
  SearchSpaceTooLarge(std::string what, std::size_t bits, std::size_t cap);

  std::size_t bits() const noexcept { return bits_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t bits_;
  std::size_t cap_;
};

class CertificateSpaceTooLarge : public SearchSpaceTooLarge {
 public:
  CertificateSpaceTooLarge(std::size_t bits, std::size_t cap);
};

class QueryOutOfDeclaredRange : public Error {
 public:
  using Error::Error;
};

class SparsityViolated : public Error {
 public:
  SparsityViolated(std::string language, std::size_t length, std::uint64_t count,
                   std::uint64_t bound);
};

class InvalidCap : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Wraps a failure raised while running one harness trial.
class TrialError : public Error {
 public:
  TrialError(std::uint64_t trial, const std::string& message,
             std::exception_ptr cause = nullptr);

  std::uint64_t trial() const noexcept { return trial_; }
  /// The domain error that failed the trial; rethrow it to recover its type.
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::uint64_t trial_;
  std::exception_ptr cause_;
};

}  // namespace advlab
