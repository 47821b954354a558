#pragma once

#include <stdexcept>
#include <string>

namespace mfass {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance cannot be scheduled at all (|J| exceeds the outage budget).
struct InfeasibleError : Error {
  using Error::Error;
};

// A concrete schedule violates the assignment or per-period limit rules.
struct InfeasibleScheduleError : Error {
  using Error::Error;
};

struct NotSeriesParallelError : Error {
  using Error::Error;
};

struct WrongTopologyError : Error {
  using Error::Error;
};

// Brute-force enumeration would exceed the configured cap.
struct TooLargeError : Error {
  using Error::Error;
};

// A DP list or merge budget was exceeded.
struct BudgetExceededError : Error {
  using Error::Error;
};

struct NoPerfectMatchingError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct UnsupportedInstanceError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::string msg, int line_no)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  int line = 0;
};

}  // namespace mfass
