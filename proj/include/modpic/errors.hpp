#pragma once

#include <stdexcept>
#include <string>

namespace modpic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidBoundary : public Error {
 public:
  using Error::Error;
};

class InvalidMark : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

// Bad command-line input: unknown suite, malformed range.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace modpic
