#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kurepa {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical or configured domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series, recurrence or adaptive scheme did not reach tolerance within its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public Error {
 public:
  explicit PoleError(std::int64_t location)
      : Error("pole at z = " + std::to_string(location)), location_(location) {}
  std::int64_t location() const noexcept { return location_; }

 private:
  std::int64_t location_;
};

/// Evaluation requested inside the exclusion disc of a pole (or of a point
/// where the chosen formula is singular).
class NearPoleError : public Error {
 public:
  NearPoleError(std::int64_t location, double distance)
      : Error("within " + std::to_string(distance) + " of singular point z = " +
              std::to_string(location)),
        location_(location),
        distance_(distance) {}
  std::int64_t location() const noexcept { return location_; }
  double distance() const noexcept { return distance_; }

 private:
  std::int64_t location_;
  double distance_;
};

}  // namespace kurepa
