#pragma once

#include <stdexcept>
#include <string>

namespace dbarg {

// Error hierarchy shared by all modules. Everything derives from Error so
// the CLI can catch one type and map it to an exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ZeroFactor : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class DegenerateDomain : public Error {
 public:
  using Error::Error;
};

class NoCoherentStates : public Error {
 public:
  using Error::Error;
};

class NoClosedForm : public Error {
 public:
  using Error::Error;
};

class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class InfeasibleContour : public Error {
 public:
  using Error::Error;
};

}  // namespace dbarg
