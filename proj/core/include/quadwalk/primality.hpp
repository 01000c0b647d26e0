#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "quadwalk/ring.hpp"

namespace quadwalk {

enum class Verdict { Zero, Unit, Prime, Composite };

enum class PrimeKind {
  RamifiedGenerator,  // associate of sqrt(2) (d=2) or 1+i (d=-1)
  SplitNorm,          // |norm| a rational prime in the split residue classes
  InertRational,      // associate of a rational prime that stays prime in the ring
};

struct Classification {
  Verdict verdict;
  std::optional<PrimeKind> kind;  // set iff verdict == Prime

  bool is_prime() const { return verdict == Verdict::Prime; }
};

std::string to_string(Verdict v);
std::string to_string(PrimeKind k);

// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set that
// is exact below 3.3 * 10^24).
bool is_rational_prime(std::uint64_t n);

// Verdict per the norm criteria: Unit iff |norm| = 1; Prime iff |norm| = 2,
// or |norm| an odd rational prime, or |norm| = p^2 with p a rational prime
// in the inert residue class (3,5 mod 8 for d=2; 3 mod 4 for d=-1);
// Composite otherwise; Zero for (0,0).
Classification classify(const QuadInt& q);

// Shared verdict kernel: classify |norm| given a primality callable.
// Used by classify (Miller-Rabin) and by bulk sieved enumeration.
template <class IsPrime>
Classification classify_abs_norm(RingId ring, std::uint64_t abs_norm, IsPrime&& is_prime) {
  if (abs_norm == 0) return {Verdict::Zero, std::nullopt};
  if (abs_norm == 1) return {Verdict::Unit, std::nullopt};
  if (abs_norm == 2) return {Verdict::Prime, PrimeKind::RamifiedGenerator};
  if (abs_norm % 2 != 0 && is_prime(abs_norm)) return {Verdict::Prime, PrimeKind::SplitNorm};
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(abs_norm)));
  while (r * r > abs_norm) --r;
  while ((r + 1) * (r + 1) <= abs_norm) ++r;
  if (r * r == abs_norm) {
    bool inert_class = ring.d() == 2 ? (r % 8 == 3 || r % 8 == 5) : (r % 4 == 3);
    if (inert_class && is_prime(r)) return {Verdict::Prime, PrimeKind::InertRational};
  }
  return {Verdict::Composite, std::nullopt};
}

// Smaller of the two square roots of c modulo an odd prime p
// (Tonelli-Shanks). Throws std::domain_error if c is a quadratic
// non-residue, std::invalid_argument if p is not an odd prime.
std::uint64_t sqrt_mod_prime(std::uint64_t c, std::uint64_t p);

struct Representation {
  std::uint64_t p;
  std::int64_t a;
  std::int64_t b;
};

// Minimal first-quadrant (a, b) with a^2 - 2b^2 = p, for a rational prime
// p = 1 or 7 (mod 8). Modular square root of 2 plus Euclidean remainder
// descent; a < 3*sqrt(p). Throws std::domain_error for primes outside the
// split classes, std::invalid_argument if p is not prime.
Representation represent_prime(std::uint64_t p);

}  // namespace quadwalk
