#pragma once

#include <stdexcept>
#include <string>

namespace tropic {

/// Operands from different semifields were combined.
class SemifieldMismatch : public std::invalid_argument {
 public:
  explicit SemifieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Operand shapes do not conform.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was applied outside its domain (e.g. inverting zero).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A caller violated a documented precondition (e.g. an inconsistent pair).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A combinatorial enumeration would exceed the configured column cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t columns, std::size_t cap)
      : std::runtime_error("enumeration over " + std::to_string(columns) +
                           " columns exceeds the cap of " + std::to_string(cap) +
                           "; raise the cap (--cap or TROPIC_CAP) to proceed"),
        columns_(columns),
        cap_(cap) {}

  std::size_t columns() const noexcept { return columns_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t columns_;
  std::size_t cap_;
};

}  // namespace tropic
