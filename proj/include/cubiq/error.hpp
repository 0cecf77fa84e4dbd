#pragma once

#include <stdexcept>
#include <string>

namespace cubiq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a structural invariant (dangling ids, bad faces, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubiq
