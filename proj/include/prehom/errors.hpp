#pragma once

#include <stdexcept>
#include <string>

namespace prehom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class InfiniteDimensional : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class NotLocal : public Error {
 public:
  using Error::Error;
};

/// The residue algebra needs a field extension of the rationals to split.
class NonSplitResidue : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class InvalidBasis : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotCyclic : public Error {
 public:
  using Error::Error;
};

class NonCommutativeCommutant : public Error {
 public:
  using Error::Error;
};

}  // namespace prehom
