#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohfm {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a class expression or model file; position is 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A ring-model invariant failed (bad basis, broken associativity, ...).
class ModelError : public Error {
public:
  using Error::Error;
};

// Dimension mismatch, singular matrix, model mismatch between map and class.
class MapError : public Error {
public:
  using Error::Error;
};

}  // namespace cohfm
