#include "quadwalk/ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace quadwalk {

namespace {

using i128 = __int128;

constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kI64Min = std::numeric_limits<std::int64_t>::min();

std::int64_t narrow_or_throw(i128 v, const char* what) {
  if (v > static_cast<i128>(kI64Max) || v < static_cast<i128>(kI64Min))
    throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

RingId::RingId(int d) : d_(d) {
  if (d != -1 && d != 2)
    throw std::invalid_argument("RingId: d must be -1 (gauss) or 2 (zsqrt2)");
}

std::string RingId::name() const { return d_ == -1 ? "gauss" : "zsqrt2"; }

RingId ring_from_name(const std::string& name) {
  if (name == "gauss") return RingId::gauss();
  if (name == "zsqrt2") return RingId::zsqrt2();
  throw std::invalid_argument("unknown ring '" + name + "' (expected gauss or zsqrt2)");
}

bool lex_less(const QuadInt& lhs, const QuadInt& rhs) {
  return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
}

std::int64_t norm(const QuadInt& q) {
  i128 n = static_cast<i128>(q.a) * q.a - static_cast<i128>(q.ring.d()) * q.b * q.b;
  return narrow_or_throw(n, "norm overflow");
}

QuadInt conjugate(const QuadInt& q) {
  if (q.b == kI64Min) throw std::overflow_error("conjugate overflow");
  return QuadInt{q.a, -q.b, q.ring};
}

QuadInt mul(const QuadInt& p, const QuadInt& q) {
  if (p.ring != q.ring) throw std::invalid_argument("mul: ring mismatch");
  i128 a = static_cast<i128>(p.a) * q.a + static_cast<i128>(p.ring.d()) * p.b * q.b;
  i128 b = static_cast<i128>(p.a) * q.b + static_cast<i128>(q.a) * p.b;
  return QuadInt{narrow_or_throw(a, "mul overflow"), narrow_or_throw(b, "mul overflow"), p.ring};
}

bool is_unit(const QuadInt& q) {
  i128 n = static_cast<i128>(q.a) * q.a - static_cast<i128>(q.ring.d()) * q.b * q.b;
  return n == 1 || n == -1;
}

QuadInt unit_pow(RingId ring, const UnitPower& u) {
  if (u.sign != 1 && u.sign != -1) throw std::invalid_argument("unit_pow: sign must be +1 or -1");
  QuadInt r{1, 0, ring};
  if (ring.d() == -1) {
    std::int64_t e = ((u.exponent % 4) + 4) % 4;
    switch (e) {
      case 0: r = QuadInt{1, 0, ring}; break;
      case 1: r = QuadInt{0, 1, ring}; break;
      case 2: r = QuadInt{-1, 0, ring}; break;
      default: r = QuadInt{0, -1, ring}; break;
    }
  } else {
    QuadInt step = u.exponent >= 0 ? QuadInt{1, 1, ring} : QuadInt{-1, 1, ring};
    std::uint64_t count = u.exponent >= 0 ? static_cast<std::uint64_t>(u.exponent)
                                          : 0 - static_cast<std::uint64_t>(u.exponent);
    for (std::uint64_t i = 0; i < count; ++i) r = mul(r, step);
  }
  if (u.sign < 0) r = QuadInt{-r.a, -r.b, ring};
  return r;
}

std::vector<QuadInt> associates_in_box(const QuadInt& q, const CoordBox& box) {
  std::vector<QuadInt> out;
  if (box.a_min > box.a_max || box.b_min > box.b_max) return out;
  if (q.a == 0 && q.b == 0) return out;

  auto push_in_box = [&](const QuadInt& z) {
    for (int s = 0; s < 2; ++s) {
      QuadInt w = s == 0 ? z : QuadInt{-z.a, -z.b, z.ring};
      if (w.a >= box.a_min && w.a <= box.a_max && w.b >= box.b_min && w.b <= box.b_max)
        out.push_back(w);
    }
  };

  if (q.ring.d() == -1) {
    QuadInt z = q;
    for (int e = 0; e < 4; ++e) {
      push_in_box(z);
      z = mul(z, QuadInt{0, 1, q.ring});
    }
  } else {
    // |a|, |b| of z*u^e are bounded below by (|z|*u^e - |z~|*u^-e) / c with
    // c = 2 for a and 2*sqrt(2) for b, so once that lower bound clears the
    // box radius the scan can stop; overflow also terminates a direction.
    long double u = 1.0L + std::sqrt(2.0L);
    long double s2 = std::sqrt(2.0L);
    long double mplus = std::abs(static_cast<long double>(q.a) + s2 * q.b);
    long double mminus = std::abs(static_cast<long double>(q.a) - s2 * q.b);
    long double radius = static_cast<long double>(
        std::max({std::abs(box.a_min), std::abs(box.a_max), std::abs(box.b_min), std::abs(box.b_max)}));
    auto scan = [&](bool upward) {
      QuadInt z = q;
      QuadInt step = upward ? QuadInt{1, 1, q.ring} : QuadInt{-1, 1, q.ring};
      long double grow = upward ? mplus : mminus;
      long double shrink = upward ? mminus : mplus;
      for (std::int64_t e = 0;; ++e) {
        if (e > 0) {
          try {
            z = mul(z, step);
          } catch (const std::overflow_error&) {
            return;
          }
        }
        if (e > 0 || upward) push_in_box(z);
        long double lower = (grow * std::pow(u, static_cast<long double>(e)) -
                             shrink * std::pow(u, static_cast<long double>(-e))) / (2.0L * s2);
        if (lower > radius + 1.0L) return;
      }
    };
    scan(true);
    scan(false);
  }

  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace quadwalk
