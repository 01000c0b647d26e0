#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "quadwalk/primality.hpp"
#include "quadwalk/ring.hpp"

namespace testsupport {

using quadwalk::QuadInt;
using quadwalk::RingId;
using quadwalk::Verdict;
using i128 = __int128;

inline i128 wide_norm(const QuadInt& q) {
  return static_cast<i128>(q.a) * q.a - static_cast<i128>(q.ring.d()) * q.b * q.b;
}

// Exact divisibility in the ring: u | q iff q * conjugate(u) has both
// coordinates divisible by norm(u).
inline bool divides(const QuadInt& u, const QuadInt& q) {
  i128 nu = wide_norm(u);
  i128 x = static_cast<i128>(q.a) * u.a - static_cast<i128>(q.ring.d()) * q.b * u.b;
  i128 y = static_cast<i128>(q.b) * u.a - static_cast<i128>(q.a) * u.b;
  return x % nu == 0 && y % nu == 0;
}

struct Candidate {
  QuadInt q;
  i128 abs_norm;
};

// Non-unit divisor candidates with |a| <= amax, |b| <= bmax, sorted by
// |norm|. Restricting to a >= 0 is enough because u and -u divide the same
// elements.
inline std::vector<Candidate> divisor_candidates(RingId ring, std::int64_t amax,
                                                 std::int64_t bmax) {
  std::vector<Candidate> out;
  for (std::int64_t a = 0; a <= amax; ++a) {
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      QuadInt u{a, b, ring};
      i128 n = wide_norm(u);
      if (n < 0) n = -n;
      if (n > 1) out.push_back(Candidate{u, n});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& lhs, const Candidate& rhs) { return lhs.abs_norm < rhs.abs_norm; });
  return out;
}

// Factorization-search verdict: q is composite exactly when some candidate
// with 1 < |norm| < |norm(q)| divides it. Complete as long as the candidate
// box covers an associate of every divisor with |norm| <= sqrt(|norm(q)|)
// (an associate always exists with coordinates <= 2.5 sqrt(|norm|)).
inline Verdict brute_verdict(const QuadInt& q, const std::vector<Candidate>& candidates) {
  i128 nq = wide_norm(q);
  if (nq == 0) return Verdict::Zero;
  i128 abs_nq = nq < 0 ? -nq : nq;
  if (abs_nq == 1) return Verdict::Unit;
  for (const Candidate& c : candidates) {
    if (c.abs_norm * c.abs_norm > abs_nq) break;
    if (divides(c.q, q)) return Verdict::Composite;
  }
  return Verdict::Prime;
}

struct RunResult {
  int exit_code;
  std::string out;
};

inline RunResult run_cmd(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

inline std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char ch : text)
    if (ch == '\n') ++n;
  return n;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(',', pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return fields;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace testsupport
