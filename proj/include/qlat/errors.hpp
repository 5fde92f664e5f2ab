#pragma once
#include <stdexcept>
#include <string>

namespace qlat {

// Malformed or inconsistent input. Distinct from an axiom failure: checkers
// report failures as verdicts with witnesses, never as exceptions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input error with a source position (1-based), raised by the document parser.
struct ParseError : InputError {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : InputError("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace qlat
