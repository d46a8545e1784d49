#ifndef LIEPD_ERRORS_HPP
#define LIEPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liepd {

// Elements from different free objects were combined.
class ContextError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An operation received an element of the wrong sort (L vs V).
class SortError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A free object with |X| != |Y| was used where a PD-free object is required.
class RankError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Structure constants / action matrices violate the representation axioms.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Hom-set enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Truncation degree too small to decide a membership question.
class IndeterminateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ArityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace liepd

#endif
