#pragma once

#include <stdexcept>
#include <string>

namespace hassett {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Weight datum / stability constraint violated when building a space.
class InvalidSpaceError : public Error {
 public:
  using Error::Error;
};

/// A generator was named that does not exist on the given space.
class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

/// A morphism was requested between incompatible spaces or with bad data.
class InvalidMorphismError : public Error {
 public:
  using Error::Error;
};

/// Two classes living on different spaces were combined or compared.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// A partially-defined operator was applied outside its domain.
class PartialDomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, weight lists, class expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hassett
