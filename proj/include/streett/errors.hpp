#pragma once

#include <stdexcept>
#include <string>

namespace streett {

// Malformed input text; carries line/column when known.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, int line = 0, int column = 0)
    : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line)
                                      + (column > 0 ? ", column " + std::to_string(column) : "")
                                      + ")"
                                  : msg),
      line_(line), column_(column)
  {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Structurally well-formed input that violates a semantic constraint
// (dangling state, duplicate header, pair count mismatch, ...).
class semantic_error : public parse_error {
public:
  using parse_error::parse_error;
};

// HOA input using a feature outside the supported subset.
class unsupported_feature_error : public parse_error {
public:
  using parse_error::parse_error;
};

// Argument outside the operation's domain (bad index set, root j-value, ...).
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Mixing state-based and transition-based acceptance artifacts.
class basis_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured size guard was exceeded; the message names the cap.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A successor produced a tree violating the data-structure invariants.
// Never silent: construction stops immediately.
class construction_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace streett
