#include "aqft/dyadic.hpp"

#include <algorithm>
#include <limits>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aqft {

DyadicAngle::DyadicAngle(BigInt num, unsigned denom_pow) : num_(std::move(num)), pow_(denom_pow) {
  normalize();
}

DyadicAngle DyadicAngle::pi_over_pow2(unsigned k, bool negative) {
  return DyadicAngle(negative ? BigInt(-1) : BigInt(1), k);
}

void DyadicAngle::normalize() {
  if (num_ == 0) {
    pow_ = 0;
    return;
  }
  while (pow_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;  // exact: num_ even
    --pow_;
  }
  // Sign-preserving reduction into (-2pi, 2pi): |num| < 2^(pow+1).
  BigInt period = BigInt(1) << (pow_ + 1);
  num_ %= period;  // truncating remainder keeps the sign
  if (num_ == 0) {
    pow_ = 0;
    return;
  }
  while (pow_ > 0 && (num_ & 1) == 0) {
    num_ /= 2;
    --pow_;
  }
}

DyadicAngle DyadicAngle::operator-() const {
  DyadicAngle r;
  r.num_ = -num_;
  r.pow_ = pow_;
  return r;
}

DyadicAngle operator+(const DyadicAngle& a, const DyadicAngle& b) {
  unsigned p = std::max(a.pow_, b.pow_);
  BigInt na = a.num_ << (p - a.pow_);
  BigInt nb = b.num_ << (p - b.pow_);
  return DyadicAngle(na + nb, p);
}

DyadicAngle DyadicAngle::principal() const {
  if (num_ == 0) return *this;
  BigInt half = BigInt(1) << pow_;  // pi
  DyadicAngle r = *this;
  if (r.num_ > half) r.num_ -= 2 * half;
  else if (r.num_ <= -half) r.num_ += 2 * half;
  r.normalize();
  if (r.num_ == -(BigInt(1) << r.pow_)) r.num_ = -r.num_;  // -pi -> pi
  return r;
}

bool DyadicAngle::abs_less_than_pi_over_pow2(unsigned k) const {
  DyadicAngle p = principal();
  if (p.num_ == 0) return true;
  BigInt mag = p.num_ < 0 ? BigInt(-p.num_) : p.num_;
  // |num| / 2^pow < 1 / 2^k  <=>  |num| * 2^k < 2^pow
  return (mag << k) < (BigInt(1) << p.pow_);
}

bool DyadicAngle::is_neg_pi_over_pow2(unsigned k) const {
  return principal() == pi_over_pow2(k, true).principal();
}

double DyadicAngle::to_radians() const {
  if (num_ == 0) return 0.0;
  // Shift large numerators down so the conversion stays in double range.
  BigInt n = num_;
  unsigned p = pow_;
  unsigned bits = static_cast<unsigned>(msb(n < 0 ? BigInt(-n) : n)) + 1;
  if (bits > 60) {
    unsigned drop = bits - 60;
    n >>= drop;
    p -= std::min(p, drop);
  }
  return std::ldexp(static_cast<double>(n.convert_to<long long>()), -static_cast<int>(p)) *
         std::numbers::pi;
}

std::string DyadicAngle::to_string() const {
  if (num_ == 0) return "0";
  std::string s = num_.str() + "pi";
  if (pow_ > 0) s += "/2^" + std::to_string(pow_);
  return s;
}

std::int64_t DyadicAngle::num_i64() const {
  if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("dyadic numerator exceeds int64: " + to_string());
  return num_.convert_to<std::int64_t>();
}

RzClass classify_rz(const DyadicAngle& a) {
  DyadicAngle p = a.principal();
  if (p.is_zero()) return RzClass::Identity;
  if (p.denom_pow() > 2) return RzClass::NonClifford;
  int n = p.num().convert_to<int>();
  switch (p.denom_pow()) {
    case 0: return RzClass::Z;  // pi
    case 1: return n > 0 ? RzClass::S : RzClass::Sdg;
    case 2:
      if (n == 1) return RzClass::T;
      if (n == -1) return RzClass::Tdg;
      return RzClass::NonClifford;  // +-3pi/4
  }
  return RzClass::NonClifford;
}

const char* to_string(RzClass c) {
  switch (c) {
    case RzClass::Identity: return "Identity";
    case RzClass::Z: return "Z";
    case RzClass::S: return "S";
    case RzClass::Sdg: return "Sdg";
    case RzClass::T: return "T";
    case RzClass::Tdg: return "Tdg";
    case RzClass::NonClifford: return "NonClifford";
  }
  return "?";
}

}  // namespace aqft
