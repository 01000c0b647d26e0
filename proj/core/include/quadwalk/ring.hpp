#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadwalk {

// Ring of elements a + b*sqrt(d). Supported: d = -1 (Gaussian integers) and
// d = 2 (Z[sqrt(2)]); any other d is rejected at construction.
class RingId {
 public:
  explicit RingId(int d);
  static RingId gauss() { return RingId(-1); }
  static RingId zsqrt2() { return RingId(2); }

  int d() const { return d_; }
  // Short name used by the CLI and in output tables: "gauss" or "zsqrt2".
  std::string name() const;

  friend bool operator==(RingId lhs, RingId rhs) { return lhs.d_ == rhs.d_; }
  friend bool operator!=(RingId lhs, RingId rhs) { return lhs.d_ != rhs.d_; }

 private:
  int d_;
};

RingId ring_from_name(const std::string& name);

struct QuadInt {
  std::int64_t a;
  std::int64_t b;
  RingId ring;

  friend bool operator==(const QuadInt& lhs, const QuadInt& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b && lhs.ring == rhs.ring;
  }
};

// Deterministic list order everywhere: lexicographic by (a, b).
bool lex_less(const QuadInt& lhs, const QuadInt& rhs);

// a^2 - d*b^2, exact. Throws std::overflow_error if the value does not fit
// in a signed 64-bit integer (intermediates are 128-bit, never wrapped).
std::int64_t norm(const QuadInt& q);

QuadInt conjugate(const QuadInt& q);

// Ring product (a1*a2 + d*b1*b2, a1*b2 + a2*b1). Throws
// std::invalid_argument on ring mismatch, std::overflow_error on overflow.
QuadInt mul(const QuadInt& p, const QuadInt& q);

bool is_unit(const QuadInt& q);

// sign * u^exponent where u is the fundamental unit: 1+sqrt(2) for d = 2
// (negative exponents allowed; u^-1 = -1+sqrt(2)), i for d = -1 (exponent
// taken mod 4).
struct UnitPower {
  int sign;  // +1 or -1
  std::int64_t exponent;
};

QuadInt unit_pow(RingId ring, const UnitPower& u);

struct CoordBox {
  std::int64_t a_min, a_max;
  std::int64_t b_min, b_max;
};

// All associates of q (both signs, all unit exponents) whose coordinates lie
// in the box, sorted by (a, b). Empty if the box is empty or q is zero.
std::vector<QuadInt> associates_in_box(const QuadInt& q, const CoordBox& box);

}  // namespace quadwalk
