#pragma once

#include <stdexcept>
#include <string>

namespace hsum {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// sigma/tau on the empty composition.
class EmptyComposition : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A composition whose first part is 1 where an admissible one is required.
class NotAdmissible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Power-sum conversion of a quasi-symmetric element that is not symmetric.
class NotSymmetric : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnknownFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Family parameters outside the registered validity range.
class OutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Requested tolerance not reached within the term budget, or the
// extrapolated limit contradicts the rigorous tail bound.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class SingularFit : public Error {
 public:
  using Error::Error;
};

}  // namespace hsum
