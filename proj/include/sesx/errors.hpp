#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sesx {

using Pos = std::int64_t;

struct SentinelCollision : std::runtime_error {
  explicit SentinelCollision(const std::string& m) : std::runtime_error(m) {}
};

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& m) : std::runtime_error(m) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& m) : std::runtime_error(m) {}
};

struct PositionOutOfBounds : std::runtime_error {
  explicit PositionOutOfBounds(const std::string& m) : std::runtime_error(m) {}
};

struct MalformedSystem : std::runtime_error {
  explicit MalformedSystem(const std::string& m) : std::runtime_error(m) {}
};

struct NotRepresenting : std::runtime_error {
  explicit NotRepresenting(const std::string& m) : std::runtime_error(m) {}
};

struct Corrupted : std::runtime_error {
  explicit Corrupted(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidScheme : std::runtime_error {
  InvalidScheme(const std::string& m, Pos witness)
      : std::runtime_error(m), witness_pos(witness) {}
  Pos witness_pos;
};

struct InconsistentScheme : std::runtime_error {
  explicit InconsistentScheme(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace sesx
