#ifndef MORSEKIT_ERROR_HPP
#define MORSEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mtk {

// Base for all library errors. Subclasses carry machine-readable
// certificates where one exists (e.g. the directed cycle that ruled a
// matching out).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: parse failures, unknown catalog names, precondition
// violations on user-supplied data.
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A cell occurs in more than one pair of a proposed vector field.
class NotAMatchingError : public InputError {
public:
  NotAMatchingError(const std::string& msg, int cell)
      : InputError(msg), cell(cell) {}
  int cell;
};

// A proposed pair (sigma, tau) is not an immediate incidence.
class NotIncidenceError : public InputError {
public:
  explicit NotIncidenceError(const std::string& msg) : InputError(msg) {}
};

// The modified Hasse digraph of a proposed matching has a directed cycle.
// `cycle` lists the cells of one closed V-path as a certificate.
class ClosedVPathError : public InputError {
public:
  ClosedVPathError(const std::string& msg, std::vector<int> cycle)
      : InputError(msg), cycle(std::move(cycle)) {}
  std::vector<int> cycle;
};

// Internal consistency failure (cross-checked routes disagree).
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace mtk

#endif
