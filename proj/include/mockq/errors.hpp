#pragma once

#include <stdexcept>
#include <string>

namespace mockq {

class MockqError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MockqError {
 public:
  using MockqError::MockqError;
};

// Series whose leading coefficient vanishes on the whole window.
class NonInvertible : public MockqError {
 public:
  using MockqError::MockqError;
};

class OutOfPrecision : public MockqError {
 public:
  using MockqError::MockqError;
};

// Exponent or substitution leaves the 1/24 grid.
class GridViolation : public MockqError {
 public:
  using MockqError::MockqError;
};

class PoleError : public MockqError {
 public:
  using MockqError::MockqError;
};

class ThetaVanishing : public MockqError {
 public:
  using MockqError::MockqError;
};

class NonConvergence : public MockqError {
 public:
  using MockqError::MockqError;
};

class UnknownIdentity : public MockqError {
 public:
  using MockqError::MockqError;
};

class ParseError : public MockqError {
 public:
  using MockqError::MockqError;
};

}  // namespace mockq
