#pragma once
#ifndef OHS_ERROR_HPP
#define OHS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ohs {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible for the requested operation.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class EmptyInput : public Error {
  public:
    using Error::Error;
};

/// Scheme parameters, shapes or points that violate their preconditions.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A subspace handed to an algebra routine is not closed under multiplication.
class NotAnAlgebra : public Error {
  public:
    using Error::Error;
};

class AxiomViolation : public Error {
  public:
    using Error::Error;
};

/// Two independent constructions of the same object disagree.
class InternalMismatch : public Error {
  public:
    using Error::Error;
};

/// |X^n| exceeds the configured point bound (CLI flag --max-points).
class SizeBound : public Error {
  public:
    SizeBound(std::size_t points, std::size_t bound)
        : Error("instance has " + std::to_string(points) + " points, above the bound " +
                std::to_string(bound) + " (raise it with --max-points)"),
          points_(points), bound_(bound) {}

    std::size_t points() const noexcept { return points_; }
    std::size_t bound() const noexcept { return bound_; }

  private:
    std::size_t points_;
    std::size_t bound_;
};

}  // namespace ohs

#endif  // OHS_ERROR_HPP
