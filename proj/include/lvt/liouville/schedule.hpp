#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lvt/exact/rational.hpp"

namespace lvt {

/// Exponents v(1) < v(2) < ... of a series sum a^(-v(n)).
class ExponentSchedule {
 public:
  enum class Kind { Factorial, Geometric, Tower, Explicit };

  static ExponentSchedule factorial();
  /// v(n) = r^n, r >= 2.
  static ExponentSchedule geometric(const Integer& ratio);
  /// v(1) = b, v(n+1) = b^v(n), b >= 2.
  static ExponentSchedule tower(const Integer& base);
  /// Must be nonempty, positive and strictly increasing (InvalidArgument).
  static ExponentSchedule explicit_list(std::vector<Integer> values);
  /// "factorial", "geometric:3", "tower:2", "list:1,2,6,24".
  static ExponentSchedule parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// n >= 1. Explicit schedules throw TooFewEntries past their end; towers
  /// throw Overflow once v(n) stops fitting in 32 bits of exponent.
  Integer v(unsigned long n) const;
  /// Number of defined terms, 0 when unbounded.
  std::size_t length() const { return kind_ == Kind::Explicit ? values_.size() : 0; }
  std::string to_string() const;

 private:
  ExponentSchedule(Kind kind, Integer param, std::vector<Integer> values);
  Kind kind_;
  Integer param_;
  std::vector<Integer> values_;
};

}  // namespace lvt
