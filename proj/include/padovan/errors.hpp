#pragma once

#include <stdexcept>
#include <string>

namespace padovan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class BackwardUndefined : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PrecisionCapExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DegenerateDiscriminant : public Error {
 public:
  using Error::Error;
};

/// Direct iteration did not close the cycle within the allowed step count.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace padovan
