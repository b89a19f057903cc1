#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vlp {

// Base of everything the library throws on a violated contract.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
public:
  using Error::Error;
};

// Precondition violations on numeric arguments (m = 0, sigma < 2, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class OutOfRange : public Error {
public:
  using Error::Error;
};

class CapacityError : public Error {
public:
  using Error::Error;
};

// A series or quadrature failed to reach the requested accuracy.
class NumericFailure : public Error {
public:
  NumericFailure(const std::string& what, double partial, double bound)
      : Error(what), partial_(partial), bound_(bound) {}

  double partial() const noexcept { return partial_; }
  double bound() const noexcept { return bound_; }

private:
  double partial_;
  double bound_;
};

// A cross-check between two independent routes disagreed.
class IdentityViolation : public Error {
public:
  IdentityViolation(const std::string& what, std::uint64_t where)
      : Error(what), where_(where) {}

  std::uint64_t where() const noexcept { return where_; }

private:
  std::uint64_t where_;
};

class FitRefused : public Error {
public:
  using Error::Error;
};

}  // namespace vlp
