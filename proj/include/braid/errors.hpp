#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace braid {

/// A letter does not fit the braid index it is used with.
class OutOfRangeLetter : public std::invalid_argument {
 public:
  OutOfRangeLetter(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  /// Offset of the offending letter: ordinal within a letter sequence,
  /// byte offset when raised by the parser.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Two words over different braid indices were combined.
class IndexMismatch : public std::invalid_argument {
 public:
  IndexMismatch(int lhs, int rhs)
      : std::invalid_argument("braid index mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  int lhs() const { return lhs_; }
  int rhs() const { return rhs_; }

 private:
  int lhs_;
  int rhs_;
};

/// Malformed braid-word text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& expected,
              std::size_t line = 0)
      : std::runtime_error(line == 0
                               ? "syntax error at offset " +
                                     std::to_string(position) + ": expected " +
                                     expected
                               : "syntax error at line " +
                                     std::to_string(line) + ", offset " +
                                     std::to_string(position) + ": expected " +
                                     expected),
        position_(position),
        line_(line),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  /// 1-based input line for batch files, 0 for standalone text.
  std::size_t line() const { return line_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::string expected_;
};

/// The rewriting step cap was exceeded. Termination is guaranteed
/// mathematically, so hitting this is a defect signal, not an expected
/// outcome.
class NonTermination : public std::runtime_error {
 public:
  explicit NonTermination(std::uint64_t step_limit)
      : std::runtime_error("handle reduction exceeded " +
                           std::to_string(step_limit) + " rewriting steps"),
        step_limit_(step_limit) {}

  std::uint64_t step_limit() const { return step_limit_; }

 private:
  std::uint64_t step_limit_;
};

}  // namespace braid
