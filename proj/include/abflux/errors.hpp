#pragma once

#include <stdexcept>
#include <string>

namespace abflux {

// Every error carries the process exit code the CLI reports for it.
class Error : public std::runtime_error {
public:
  Error(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

private:
  int exit_code_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what, 2) {}
};

class NotFoundError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

// Bad geometric input: degenerate curves, points on a source, intersecting
// curves, non-planar spanning curves. Reported as input errors.
class GeometryError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

// Requested a quantity the source cannot provide (B of a flux filament).
class UnsupportedSourceError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

class InsufficientDataError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

class PhysicsGuardError : public Error {
public:
  explicit PhysicsGuardError(const std::string& what) : Error(what, 3) {}
};

// Applied field reached the critical field of the lead coating.
class LeadQuenchError : public PhysicsGuardError {
public:
  using PhysicsGuardError::PhysicsGuardError;
};

class InvalidAmplitudeError : public PhysicsGuardError {
public:
  using PhysicsGuardError::PhysicsGuardError;
};

class VerificationError : public Error {
public:
  explicit VerificationError(const std::string& what) : Error(what, 4) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what, 5) {}
};

} // namespace abflux
