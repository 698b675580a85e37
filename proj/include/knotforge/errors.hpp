#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class NonPlanar : public Error {
 public:
  using Error::Error;
};

class Malformed : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class PositiveGroup : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class StoreError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, const std::string& context)
      : Error("flype closure exceeded cap " + std::to_string(cap) +
              (context.empty() ? std::string() : " (" + context + ")")),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace knotforge
