#pragma once

#include <stdexcept>
#include <string>

namespace qgk {

enum class ErrorKind {
  NonSquare,
  ZeroInput,
  InvalidType,
  Reducible,
  NonDominant,
  TooLarge,
  NotApplicable,
  NotIntegralRoot,
  GroupTooLarge,
  NonIntegralExponent,
  InsufficientData,
  UnsupportedType,
  NonConfluent,
  HeightTooLarge,
  InadmissibleOrder,
  ParseError,
  Domain,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace qgk
