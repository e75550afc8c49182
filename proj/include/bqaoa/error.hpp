#pragma once

#include <stdexcept>
#include <string>

namespace bqaoa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments or documents: wrong lengths, bad indices, parse failures.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a configured simulation or enumeration limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Cmin == Cmax, so approximation ratios are undefined.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

/// A bias-angle equation has no root in (0, pi/2) for the requested Hamming distance.
class NoPositiveRoot : public Error {
 public:
  using Error::Error;
};

}  // namespace bqaoa
