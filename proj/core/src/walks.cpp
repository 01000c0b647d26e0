#include "quadwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "quadwalk/primality.hpp"

namespace quadwalk {

namespace {

using i128 = __int128;

i128 sq_len(Coord p) { return static_cast<i128>(p.a) * p.a + static_cast<i128>(p.b) * p.b; }

i128 sq_dist(Coord p, Coord q) {
  i128 da = static_cast<i128>(p.a) - q.a;
  i128 db = static_cast<i128>(p.b) - q.b;
  return da * da + db * db;
}

std::int64_t floor_div(std::int64_t x, std::int64_t c) {
  return x >= 0 ? x / c : -((-x + c - 1) / c);
}

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t step, std::uint64_t attempt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (step * 0x10001ull + attempt + 1);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// True if p sits within sqrt(k2) of the region's boundary; errs toward true
// where the boundary is irrational so a false result always certifies.
bool near_boundary(const Region& region, Coord p, std::int64_t k2) {
  long double k = std::sqrt(static_cast<long double>(k2));
  if (const auto* rect = std::get_if<Rect>(&region)) {
    std::int64_t m = std::min(std::min(p.a - rect->x0, rect->x1 - p.a),
                              std::min(p.b - rect->y0, rect->y1 - p.b));
    return static_cast<i128>(m) * m <= static_cast<i128>(k2);
  }
  if (const auto* disk = std::get_if<Disk>(&region)) {
    long double dist = static_cast<long double>(disk->radius) -
                       std::sqrt(static_cast<long double>(sq_len(p)));
    return dist <= k + 1e-9L * disk->radius + 1e-9L;
  }
  if (const auto* strip = std::get_if<AsymptoteStrip>(&region)) {
    long double perp = std::abs(static_cast<long double>(p.a) - std::sqrt(2.0L) * p.b) / std::sqrt(3.0L);
    long double m = std::min({static_cast<long double>(strip->r) - perp,
                              static_cast<long double>(p.a),
                              static_cast<long double>(strip->xmax - p.a)});
    return m <= k + 1e-9L * strip->r + 1e-9L;
  }
  return true;
}

}  // namespace

WalkGraph::WalkGraph(RingId ring, Region region, StepBound k2,
                     std::shared_ptr<const std::vector<Coord>> points)
    : ring_(ring), k2_(k2.k2), region_(std::move(region)), points_(std::move(points)) {
  if (k2_ < 1) throw std::invalid_argument("walk graph: k2 must be >= 1");
  cell_ = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k2_)));
  while (cell_ * cell_ < k2_) ++cell_;
  while (cell_ > 1 && (cell_ - 1) * (cell_ - 1) >= k2_) --cell_;

  const auto& pts = *points_;
  if (pts.size() >= 0xFFFFFFFFull) throw std::overflow_error("walk graph: too many points");
  for (const Coord& p : pts) {
    if (std::abs(p.a) / cell_ >= (1ll << 30) || std::abs(p.b) / cell_ >= (1ll << 30))
      throw std::overflow_error("walk graph: coordinates too large for the grid index");
  }

  std::vector<std::uint64_t> keys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    keys[i] = cell_key(floor_div(pts[i].a, cell_), floor_div(pts[i].b, cell_));

  ids_.resize(pts.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) ids_[i] = static_cast<std::uint32_t>(i);
  std::sort(ids_.begin(), ids_.end(), [&](std::uint32_t x, std::uint32_t y) {
    return keys[x] != keys[y] ? keys[x] < keys[y] : x < y;
  });

  for (std::size_t i = 0; i < ids_.size(); ++i) {
    std::uint64_t key = keys[ids_[i]];
    if (cell_keys_.empty() || cell_keys_.back() != key) {
      cell_keys_.push_back(key);
      cell_offsets_.push_back(static_cast<std::uint32_t>(i));
    }
  }
  cell_offsets_.push_back(static_cast<std::uint32_t>(ids_.size()));
}

std::uint32_t WalkGraph::id_of(Coord p) const {
  const auto& pts = *points_;
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || !(*it == p)) throw std::domain_error("point is not in the walk graph");
  return static_cast<std::uint32_t>(it - pts.begin());
}

bool WalkGraph::contains(Coord p) const {
  const auto& pts = *points_;
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  return it != pts.end() && *it == p;
}

void WalkGraph::neighbor_ids(std::uint32_t id, std::vector<std::uint32_t>& out) const {
  out.clear();
  const auto& pts = *points_;
  Coord p = pts[id];
  std::int64_t cx = floor_div(p.a, cell_), cy = floor_div(p.b, cell_);
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      std::uint64_t key = cell_key(cx + dx, cy + dy);
      auto it = std::lower_bound(cell_keys_.begin(), cell_keys_.end(), key);
      if (it == cell_keys_.end() || *it != key) continue;
      std::size_t slot = static_cast<std::size_t>(it - cell_keys_.begin());
      for (std::uint32_t i = cell_offsets_[slot]; i < cell_offsets_[slot + 1]; ++i) {
        std::uint32_t cand = ids_[i];
        if (cand == id) continue;
        i128 d2 = sq_dist(p, pts[cand]);
        if (d2 > 0 && d2 <= static_cast<i128>(k2_)) out.push_back(cand);
      }
    }
  }
}

WalkGraph build_walk_graph(RingId ring, const Region& region, StepBound k2) {
  if (k2.k2 < 1) throw std::invalid_argument("build_walk_graph: k2 must be >= 1");
  auto pts = std::make_shared<std::vector<Coord>>(prime_points_in_region(ring, region));
  return WalkGraph(ring, region, k2, std::move(pts));
}

std::vector<QuadInt> neighbors(const WalkGraph& g, const QuadInt& p) {
  if (p.ring != g.ring()) throw std::invalid_argument("neighbors: ring mismatch");
  std::uint32_t id = g.id_of(Coord{p.a, p.b});
  std::vector<std::uint32_t> ids;
  g.neighbor_ids(id, ids);
  std::vector<Coord> coords;
  coords.reserve(ids.size());
  for (std::uint32_t i : ids) coords.push_back(g.points()[i]);
  std::sort(coords.begin(), coords.end());
  std::vector<QuadInt> out;
  out.reserve(coords.size());
  for (Coord c : coords) out.push_back(QuadInt{c.a, c.b, g.ring()});
  return out;
}

namespace {

std::vector<std::uint32_t> bfs_ids(const WalkGraph& g, std::uint32_t start) {
  std::vector<std::uint8_t> visited(g.points().size(), 0);
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> queue;
  std::vector<std::uint32_t> scratch;
  visited[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    g.neighbor_ids(cur, scratch);
    for (std::uint32_t nb : scratch) {
      if (!visited[nb]) {
        visited[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  return order;
}

}  // namespace

ComponentSummary component_of(const WalkGraph& g, const QuadInt& start) {
  if (start.ring != g.ring()) throw std::invalid_argument("component_of: ring mismatch");
  std::uint32_t start_id = g.id_of(Coord{start.a, start.b});
  std::vector<std::uint32_t> members = bfs_ids(g, start_id);

  Coord farthest = g.points()[start_id];
  i128 best_len = sq_len(farthest);
  std::int64_t max_coord = 0;
  bool touched = false;
  for (std::uint32_t id : members) {
    Coord p = g.points()[id];
    i128 len = sq_len(p);
    if (len > best_len || (len == best_len && p < farthest)) {
      best_len = len;
      farthest = p;
    }
    max_coord = std::max({max_coord, std::abs(p.a), std::abs(p.b)});
    if (!touched && near_boundary(g.region(), p, g.k2())) touched = true;
  }
  return ComponentSummary{start, members.size(),
                          QuadInt{farthest.a, farthest.b, g.ring()}, max_coord, touched};
}

std::vector<QuadInt> component_members(const WalkGraph& g, const QuadInt& start) {
  if (start.ring != g.ring()) throw std::invalid_argument("component_members: ring mismatch");
  std::vector<std::uint32_t> ids = bfs_ids(g, g.id_of(Coord{start.a, start.b}));
  std::sort(ids.begin(), ids.end());
  std::vector<QuadInt> out;
  out.reserve(ids.size());
  for (std::uint32_t id : ids) {
    Coord p = g.points()[id];
    out.push_back(QuadInt{p.a, p.b, g.ring()});
  }
  return out;
}

std::vector<std::pair<Coord, Coord>> component_edges(const WalkGraph& g, const QuadInt& start) {
  if (start.ring != g.ring()) throw std::invalid_argument("component_edges: ring mismatch");
  std::vector<std::uint32_t> ids = bfs_ids(g, g.id_of(Coord{start.a, start.b}));
  std::vector<std::pair<Coord, Coord>> edges;
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t id : ids) {
    Coord p = g.points()[id];
    g.neighbor_ids(id, scratch);
    for (std::uint32_t nb : scratch) {
      Coord q = g.points()[nb];
      if (p < q) edges.emplace_back(p, q);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& lhs, const auto& rhs) {
    if (!(lhs.first == rhs.first)) return lhs.first < rhs.first;
    return lhs.second < rhs.second;
  });
  return edges;
}

WalkPath random_walk(const WalkGraph& g, const QuadInt& start, std::uint64_t seed) {
  if (start.ring != g.ring()) throw std::invalid_argument("random_walk: ring mismatch");
  std::uint32_t cur = g.id_of(Coord{start.a, start.b});
  WalkPath path{{start}, seed, StepBound{g.k2()}};
  std::vector<std::uint32_t> scratch;
  for (std::uint64_t step = 0;; ++step) {
    Coord p = g.points()[cur];
    i128 cur_len = sq_len(p);
    g.neighbor_ids(cur, scratch);
    std::vector<Coord> cands;
    for (std::uint32_t nb : scratch) {
      Coord q = g.points()[nb];
      if (sq_len(q) > cur_len) cands.push_back(q);
    }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end());

    std::uint64_t n = cands.size();
    std::uint64_t threshold = n == 1 ? 0 : (~0ull) - ((~0ull) % n + 1) % n;
    std::uint64_t draw = 0, attempt = 0;
    do {
      draw = mix64(seed, step, attempt++);
    } while (n > 1 && draw > threshold);
    Coord chosen = cands[n == 1 ? 0 : draw % n];
    path.steps.push_back(QuadInt{chosen.a, chosen.b, g.ring()});
    cur = g.id_of(chosen);
  }
  return path;
}

std::vector<MoatScanRow> moat_scan(RingId ring, const QuadInt& start,
                                   const std::vector<StepBound>& k2_list,
                                   const Region& region) {
  if (start.ring != ring) throw std::invalid_argument("moat_scan: ring mismatch");
  if (!classify(start).is_prime()) throw std::domain_error("moat_scan: start is not prime");
  auto pts = std::make_shared<const std::vector<Coord>>(prime_points_in_region(ring, region));
  std::vector<MoatScanRow> rows;
  rows.reserve(k2_list.size());
  for (StepBound k2 : k2_list) {
    WalkGraph g(ring, region, k2, pts);
    rows.push_back(MoatScanRow{k2.k2, component_of(g, start)});
  }
  return rows;
}

}  // namespace quadwalk
