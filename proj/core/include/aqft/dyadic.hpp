#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace aqft {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rotation angle num * pi / 2^denom_pow.
///
/// Always normalized: a zero angle is (0, 0), otherwise the numerator is odd.
/// The stored value is reduced into (-2pi, 2pi) keeping the sign of the
/// numerator, so reduction never moves an angle across zero.
class DyadicAngle {
public:
  DyadicAngle() = default;
  DyadicAngle(BigInt num, unsigned denom_pow);

  static DyadicAngle pi_over_pow2(unsigned k, bool negative = false);
  static DyadicAngle zero() { return {}; }

  const BigInt& num() const { return num_; }
  unsigned denom_pow() const { return pow_; }
  bool is_zero() const { return num_ == 0; }

  DyadicAngle operator-() const;
  friend DyadicAngle operator+(const DyadicAngle& a, const DyadicAngle& b);
  friend DyadicAngle operator-(const DyadicAngle& a, const DyadicAngle& b) { return a + (-b); }
  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

  /// Representative in (-pi, pi].
  DyadicAngle principal() const;

  /// Exact test |principal angle| < pi / 2^k.
  bool abs_less_than_pi_over_pow2(unsigned k) const;

  /// True iff the angle equals (mod 2pi) -pi / 2^k.
  bool is_neg_pi_over_pow2(unsigned k) const;

  double to_radians() const;
  std::string to_string() const;

  /// Fits the numerator into int64 (JSON, logging). Throws when it does not.
  std::int64_t num_i64() const;

private:
  void normalize();

  BigInt num_ = 0;
  unsigned pow_ = 0;
};

enum class RzClass { Identity, Z, S, Sdg, T, Tdg, NonClifford };

RzClass classify_rz(const DyadicAngle& a);
const char* to_string(RzClass c);

}  // namespace aqft
