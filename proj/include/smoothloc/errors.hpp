#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace smoothloc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  /// Not tied to a line of the input.
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidPoset : public Error {
 public:
  using Error::Error;
};

/// Some pair of elements lacks an infimum or a supremum.
class NotALattice : public Error {
 public:
  NotALattice(int a, int b, const std::string& what)
      : Error("elements " + std::to_string(a) + " and " + std::to_string(b) + " have no " + what),
        a_(a), b_(b) {}
  int first() const { return a_; }
  int second() const { return b_; }

 private:
  int a_, b_;
};

class NotDistributive : public Error {
 public:
  explicit NotDistributive(std::array<int, 3> witness)
      : Error("x∧(y∨z) ≠ (x∧y)∨(x∧z) for (x,y,z) = (" + std::to_string(witness[0]) + "," +
              std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")"),
        witness_(witness) {}
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  std::array<int, 3> witness_;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(const std::string& what, int size, int cap)
      : Error(what + " has size " + std::to_string(size) + ", cap is " + std::to_string(cap)) {}
};

class NotLocallyClosed : public Error {
 public:
  using Error::Error;
};

class IsoFailure : public Error {
 public:
  using Error::Error;
};

class IOFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace smoothloc
