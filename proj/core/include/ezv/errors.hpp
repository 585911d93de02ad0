#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ezv/numerics_types.hpp"

namespace ezv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A vanishing denominator factor was hit. `j` and `l` index the factor
/// (for one-parameter products `l` is zero).
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::size_t j, std::size_t l)
      : Error(what), j_(j), l_(l) {}

  std::size_t j() const noexcept { return j_; }
  std::size_t l() const noexcept { return l_; }

 private:
  std::size_t j_;
  std::size_t l_;
};

/// The term cap was reached before the tail bound fell below epsilon.
/// Carries the partial result; its err_bound is the tail bound at the cap.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, ApproxValue partial)
      : Error(what), partial_(partial) {}

  const ApproxValue& partial() const noexcept { return partial_; }

 private:
  ApproxValue partial_;
};

/// Continuous-branch tracking of a logarithm failed (a jump of about 2*pi*i
/// could not be resolved by refining the path).
class BranchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ezv
