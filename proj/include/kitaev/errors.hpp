#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kitaev {

// Bad parameters, failed numerics and ambiguous searches. The CLI maps
// everything derived from DomainError to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSize : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidSite : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidBasis : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

class SolverFailure : public DomainError {
 public:
  SolverFailure(const std::string& what, long dimension, long max_iterations)
      : DomainError(what), dimension_(dimension), max_iterations_(max_iterations) {}

  long dimension() const { return dimension_; }
  long max_iterations() const { return max_iterations_; }

 private:
  long dimension_;
  long max_iterations_;
};

struct Bracket {
  double lo;
  double hi;
};

class AmbiguousCrossing : public DomainError {
 public:
  AmbiguousCrossing(const std::string& what, std::vector<Bracket> brackets)
      : DomainError(what), brackets_(std::move(brackets)) {}

  const std::vector<Bracket>& brackets() const { return brackets_; }

 private:
  std::vector<Bracket> brackets_;
};

// Reading or writing files. Exit code 3 in the CLI.
class PersistenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kitaev
