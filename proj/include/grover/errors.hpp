#pragma once

#include <stdexcept>
#include <string>

namespace grover {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidQubitCount : public Error {
 public:
  using Error::Error;
};

class QubitCapExceeded : public Error {
 public:
  using Error::Error;
};

class NonUnitaryGate : public Error {
 public:
  using Error::Error;
};

class TargetOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicateTarget : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NoSolutions : public Error {
 public:
  using Error::Error;
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class MultipleSolutionsUnsupported : public Error {
 public:
  using Error::Error;
};

class InvalidMarkedString : public Error {
 public:
  using Error::Error;
};

}  // namespace grover
