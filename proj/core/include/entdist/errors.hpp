#pragma once

#include <stdexcept>
#include <string>

namespace entdist {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures.
class NotHermitian : public Error { using Error::Error; };
class NoConvergence : public Error { using Error::Error; };
class NoSignChange : public Error { using Error::Error; };

// Argument and structure failures.
class LengthMismatch : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };
class UnknownLabel : public Error { using Error::Error; };
class ProbabilityError : public Error { using Error::Error; };
class RankError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class PartyError : public Error { using Error::Error; };
class StateError : public Error { using Error::Error; };

}  // namespace entdist
