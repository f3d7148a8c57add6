#pragma once

#include <stdexcept>
#include <string>

namespace hfskit {

/// Base class for all hfskit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction invariant was violated (bad breakpoints, unresolved names, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation received an argument outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An integer computation would exceed the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A required crisp input was not supplied.
class MissingInputError : public Error {
 public:
  MissingInputError(std::string variable, const std::string& message)
      : Error(message), variable_(std::move(variable)) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// Evaluation was requested on a system whose rule base is empty.
class EmptyRuleBaseError : public Error {
 public:
  using Error::Error;
};

/// Defuzzification was requested on an all-zero output set: no rule covered the input.
class EmptyOutputError : public Error {
 public:
  EmptyOutputError(std::string system, const std::string& message)
      : Error(message), system_(std::move(system)) {}
  const std::string& system() const noexcept { return system_; }

 private:
  std::string system_;
};

/// The connection graph of a hierarchy contains a cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// An intermediate variable is produced but neither consumed nor a final output.
class DanglingIntermediateError : public Error {
 public:
  using Error::Error;
};

/// A subsystem input is neither an external input nor fed by a connection.
class UnboundInputError : public Error {
 public:
  using Error::Error;
};

/// Two producers compete for the same variable or input slot.
class DuplicateProducerError : public Error {
 public:
  using Error::Error;
};

/// Layer weights do not sum to one.
class WeightSumError : public Error {
 public:
  WeightSumError(double sum, const std::string& message) : Error(message), sum_(sum) {}
  double sum() const noexcept { return sum_; }

 private:
  double sum_;
};

/// An index assignment does not cover every subsystem exactly once.
class IncompleteAssignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfskit
