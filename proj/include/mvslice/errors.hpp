#ifndef MVSLICE_ERRORS_HPP
#define MVSLICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvslice {

/// Base class of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// |shape| differs from the total weight.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class EmptyPartition : public Error {
 public:
  using Error::Error;
};

class WeightMismatch : public Error {
 public:
  using Error::Error;
};

/// The Jordan types of the leading submatrices do not assemble into a tableau.
class NotASemistandardChain : public Error {
 public:
  using Error::Error;
};

/// A matrix is not of the form J_μ + T with T supported on the free positions.
class NotInSlice : public Error {
 public:
  using Error::Error;
};

/// A sampler stage has an empty solution set.
class IncompatibleStage : public Error {
 public:
  using Error::Error;
};

class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

class QuotientDimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A polynomial matrix lies outside the locus where minor valuations take
/// their generic values.
class NotGeneric : public Error {
 public:
  using Error::Error;
};

}  // namespace mvslice

#endif  // MVSLICE_ERRORS_HPP
