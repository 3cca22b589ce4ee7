#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

namespace afspec {

using BigInt = boost::multiprecision::cpp_int;

/// Path-count semiring value: 0, 1, or many(n) with the exact count n >= 2.
class Multiplicity {
 public:
  enum class Kind { Zero, One, Many };

  Multiplicity() = default;
  explicit Multiplicity(BigInt count);

  static Multiplicity zero() { return Multiplicity(); }
  static Multiplicity one() { return Multiplicity(BigInt(1)); }

  Kind kind() const;
  const BigInt& count() const { return count_; }
  bool is_zero() const { return count_ == 0; }
  bool is_one() const { return count_ == 1; }

  Multiplicity& operator+=(const Multiplicity& other);
  Multiplicity& operator*=(const Multiplicity& other);
  friend Multiplicity operator+(Multiplicity a, const Multiplicity& b) { return a += b; }
  friend Multiplicity operator*(Multiplicity a, const Multiplicity& b) { return a *= b; }

  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.count_ == b.count_;
  }
  friend std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
    if (a.count_ < b.count_) return std::strong_ordering::less;
    if (a.count_ > b.count_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "0", "1" or "many(n)".
  std::string to_string() const;

 private:
  BigInt count_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Multiplicity& m);

}  // namespace afspec
