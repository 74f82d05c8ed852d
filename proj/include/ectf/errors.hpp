#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ectf {

// Invalid family parameter or operation argument (n < 4, m_i < 2, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertex id out of range, or a violated operation precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested graph exceeds the explicit adjacency-matrix limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed serialized input. offset() is the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ectf
