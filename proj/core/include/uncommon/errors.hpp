#pragma once

#include <stdexcept>
#include <string>

namespace uncommon {

// Base for every error the library throws. `kind()` is a stable machine
// identifier used in the CLI's error JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(what + ": " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }
  const char* kind() const noexcept override { return "io_error"; }

 private:
  std::string path_;
};

// File exists but is not a supported or well-formed image/document.
class FormatError : public Error {
 public:
  FormatError(const std::string& path, const std::string& what)
      : Error(what + ": " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }
  const char* kind() const noexcept override { return "format_error"; }

 private:
  std::string path_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension_error"; }
};

// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract_violation"; }
};

// Input carries no usable structure (empty histogram, no peaks).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate_input"; }
};

// Concurrence rates requested with no predictions (TP + FP = 0).
class UndefinedRatesError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "undefined_rates"; }
};

}  // namespace uncommon
