#pragma once

#include <stdexcept>
#include <string>

namespace alphacc {

/// Bad or inconsistent input data (dangling ids, unreadable files, empty corpora).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters or tables that do not fit together (dimension mismatch, bad keys).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite loss or failed gradient agreement.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alphacc
