#include "quadwalk/primality.hpp"

#include <cstdlib>
#include <stdexcept>

namespace quadwalk {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::Unit: return "Unit";
    case Verdict::Prime: return "Prime";
    default: return "Composite";
  }
}

std::string to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::RamifiedGenerator: return "RamifiedGenerator";
    case PrimeKind::SplitNorm: return "SplitNorm";
    default: return "InertRational";
  }
}

bool is_rational_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Classification classify(const QuadInt& q) {
  std::int64_t n = norm(q);
  std::uint64_t abs_n = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  return classify_abs_norm(q.ring, abs_n, is_rational_prime);
}

std::uint64_t sqrt_mod_prime(std::uint64_t c, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_rational_prime(p))
    throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
  c %= p;
  if (c == 0) return 0;
  if (powmod(c, (p - 1) / 2, p) != 1)
    throw std::domain_error("sqrt_mod_prime: c is a quadratic non-residue mod p");

  std::uint64_t x;
  if (p % 4 == 3) {
    x = powmod(c, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks. Find a non-residue z, then walk the 2-Sylow subgroup.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t cc = powmod(z, q, p);
    std::uint64_t t = powmod(c, q, p);
    std::uint64_t r = powmod(c, (q + 1) / 2, p);
    while (t != 1) {
      std::uint64_t i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = cc;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
      m = i;
      cc = mulmod(b, b, p);
      t = mulmod(t, cc, p);
      r = mulmod(r, b, p);
    }
    x = r;
  }
  return x <= p - x ? x : p - x;
}

Representation represent_prime(std::uint64_t p) {
  if (!is_rational_prime(p)) throw std::invalid_argument("represent_prime: p is not prime");
  if (p % 8 != 1 && p % 8 != 7)
    throw std::domain_error("represent_prime: p must be 1 or 7 (mod 8)");

  std::uint64_t c = sqrt_mod_prime(2, p);

  // Remainder descent on (p, c) tracking the c-cofactor: r_i = s_i*p + t_i*c.
  // The first remainder below sqrt(p) pairs with |t_i| < sqrt(p), and
  // x^2 - 2y^2 is then a nonzero multiple of p in (-2p, p), hence -p.
  std::int64_t r_prev = static_cast<std::int64_t>(p), r_cur = static_cast<std::int64_t>(c);
  std::int64_t t_prev = 0, t_cur = 1;
  while (static_cast<u128>(r_cur) * r_cur >= p) {
    std::int64_t quot = r_prev / r_cur;
    std::int64_t r_next = r_prev - quot * r_cur;
    std::int64_t t_next = t_prev - quot * t_cur;
    r_prev = r_cur;
    r_cur = r_next;
    t_prev = t_cur;
    t_cur = t_next;
  }
  std::int64_t x = r_cur;
  std::int64_t y = std::abs(t_cur);

  // (x, y) solves x^2 - 2y^2 = -p; the flip below lands on +p.
  std::int64_t a = x + 2 * y;
  std::int64_t b = x + y;

  // Reduce to the minimal first-quadrant solution: each (|3a-4b|, |3b-2a|)
  // step moves down the solution chain until a stops shrinking.
  for (;;) {
    std::int64_t na = std::abs(3 * a - 4 * b);
    std::int64_t nb = std::abs(3 * b - 2 * a);
    if (na >= a) break;
    a = na;
    b = nb;
  }
  return Representation{p, a, b};
}

}  // namespace quadwalk
