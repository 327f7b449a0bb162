#pragma once

#include <stdexcept>
#include <string>

namespace sadm {

// Base for all library errors. Callers that only care about "something went
// wrong with the input" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An att fact (or certificate entry) names an argument that was never declared.
class UndeclaredArgument : public SyntaxError {
 public:
  UndeclaredArgument(const std::string& name, std::size_t line)
      : SyntaxError("undeclared argument '" + name + "'", line), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NotConflictFree : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class MismatchedFramework : public Error {
 public:
  using Error::Error;
};

class NotInGrounded : public Error {
 public:
  explicit NotInGrounded(const std::string& arg)
      : Error("argument '" + arg + "' is not in the grounded extension"), arg_(arg) {}
  const std::string& argument() const { return arg_; }

 private:
  std::string arg_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class OracleTooLarge : public Error {
 public:
  OracleTooLarge(std::size_t n, std::size_t limit)
      : Error("framework has " + std::to_string(n) + " arguments, oracle limit is " +
              std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  std::size_t size() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

class OracleTimeout : public Error {
 public:
  OracleTimeout() : Error("oracle exceeded its time budget") {}
};

}  // namespace sadm
