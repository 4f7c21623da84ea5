#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sortwalk {

// Base for all domain errors. `name()` is the stable identifier the CLI
// prints and scripts match on; `what()` carries the human detail.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

class InvalidOperation : public Error {
  public:
    InvalidOperation(std::size_t index, const std::string& detail)
        : Error("InvalidOperation", "op " + std::to_string(index) + ": " + detail),
          index_(index) {}
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

class LimitExceeded : public Error {
  public:
    explicit LimitExceeded(const std::string& detail) : Error("LimitExceeded", detail) {}
};

class InvalidWalkClass : public Error {
  public:
    explicit InvalidWalkClass(const std::string& detail) : Error("InvalidWalkClass", detail) {}
};

class NotLeftWalk : public Error {
  public:
    explicit NotLeftWalk(const std::string& detail) : Error("NotLeftWalk", detail) {}
};

class NotRightWalk : public Error {
  public:
    explicit NotRightWalk(const std::string& detail) : Error("NotRightWalk", detail) {}
};

class WrongPartLength : public Error {
  public:
    explicit WrongPartLength(const std::string& detail) : Error("WrongPartLength", detail) {}
};

class WrongSide : public Error {
  public:
    explicit WrongSide(const std::string& detail) : Error("WrongSide", detail) {}
};

class MalformedWalk : public Error {
  public:
    explicit MalformedWalk(const std::string& detail) : Error("MalformedWalk", detail) {}
};

class ZeroConstantTerm : public Error {
  public:
    explicit ZeroConstantTerm(const std::string& detail) : Error("ZeroConstantTerm", detail) {}
};

class BadConstantTerm : public Error {
  public:
    explicit BadConstantTerm(const std::string& detail) : Error("BadConstantTerm", detail) {}
};

class NegativeCoefficient : public Error {
  public:
    explicit NegativeCoefficient(const std::string& detail) : Error("NegativeCoefficient", detail) {}
};

class NoRootInUnitInterval : public Error {
  public:
    explicit NoRootInUnitInterval(const std::string& detail)
        : Error("NoRootInUnitInterval", detail) {}
};

class GridOutOfRange : public Error {
  public:
    explicit GridOutOfRange(const std::string& detail) : Error("GridOutOfRange", detail) {}
};

class IngestFormatError : public Error {
  public:
    explicit IngestFormatError(const std::string& detail) : Error("IngestFormatError", detail) {}
};

}  // namespace sortwalk
