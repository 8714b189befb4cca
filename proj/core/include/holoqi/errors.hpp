#pragma once

#include <stdexcept>
#include <string>

namespace holoqi {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag; the CLI maps it into its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Input outside an operation's mathematical domain (negative radius, mu < 1/2, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain_error", message) {}
};

/// The Fannes-type step requires eps_tilde <= 1/2; thrown when violated.
class FannesRegimeError : public Error {
 public:
  explicit FannesRegimeError(const std::string& message) : Error("fannes_regime", message) {}
};

/// The general rate bound's denominator 1 - 8*eps_tilde is non-positive,
/// making the bound vacuous. Distinct from FannesRegimeError so callers can
/// tell which constraint failed.
class VacuousBoundError : public Error {
 public:
  explicit VacuousBoundError(const std::string& message) : Error("vacuous_bound", message) {}
};

/// Truncated Fock computation lost too much trace; carries a suggested dim.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& message, int suggested_dim)
      : Error("truncation_insufficient", message), suggested_dim_(suggested_dim) {}

  int suggested_dim() const noexcept { return suggested_dim_; }

 private:
  int suggested_dim_;
};

/// A quantity that is positive by construction came out otherwise; signals a
/// numeric fault in this library, not a caller mistake.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& message)
      : Error("internal_consistency", message) {}
};

}  // namespace holoqi
