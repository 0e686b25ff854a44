#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gqm {

using Complex = std::complex<double>;

/// Dense complex matrix over the event basis; row/column index = EventId.
using Operator = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Error categories. Every failure the library reports is one of these.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed groupoid description or input document.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Two elements bound to different groupoids were combined.
class BindingError : public Error {
 public:
  using Error::Error;
};

/// An event or transition id outside the groupoid.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract (non-state, non-observable...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Theorem-1 machinery applied to a disconnected groupoid.
class ComponentError : public Error {
 public:
  using Error::Error;
};

/// Frame changes need a faithful fundamental representation.
class UnsupportedFrameError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Scalar parameter out of its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace gqm
