#pragma once

#include <stdexcept>
#include <string>

namespace deltabox {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A physical parameter or solver setting is outside its admissible range.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// lambda < 0: the attractive delta has a negative-energy state with imaginary k.
class AttractiveCouplingUnsupported : public Error {
  public:
    using Error::Error;
};

/// Fewer roots than requested were found below the search ceiling.
class SearchCeilingExceeded : public Error {
  public:
    SearchCeilingExceeded(const std::string& what, int found, double ceiling)
        : Error(what), found_(found), ceiling_(ceiling) {}
    int found() const noexcept { return found_; }
    double ceiling() const noexcept { return ceiling_; }

  private:
    int found_;
    double ceiling_;
};

/// The supplied wave number does not satisfy the quantization condition.
class NotAnEigenvalue : public Error {
  public:
    using Error::Error;
};

/// Evaluation point outside the domain of a function.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Cotangent argument sits on (or numerically at) a multiple of pi.
class PoleError : public Error {
  public:
    using Error::Error;
};

class GridTooCoarse : public Error {
  public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace deltabox
