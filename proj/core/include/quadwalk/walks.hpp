#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "quadwalk/enumeration.hpp"
#include "quadwalk/ring.hpp"

namespace quadwalk {

// Squared Euclidean step length; all feasibility tests are exact integer
// comparisons (da^2 + db^2 <= k2).
struct StepBound {
  std::int64_t k2;
};

// Prime lattice points of a finite region plus a uniform-grid index with
// cell side ceil(sqrt(k2)); answers exact fixed-radius neighbor queries.
// Immutable after construction; safe for concurrent queries.
class WalkGraph {
 public:
  WalkGraph(RingId ring, Region region, StepBound k2,
            std::shared_ptr<const std::vector<Coord>> points);

  RingId ring() const { return ring_; }
  std::int64_t k2() const { return k2_; }
  const Region& region() const { return region_; }
  const std::vector<Coord>& points() const { return *points_; }

  bool contains(Coord p) const;
  // Ids of points at squared distance in (0, k2] of p, unordered.
  void neighbor_ids(std::uint32_t id, std::vector<std::uint32_t>& out) const;
  std::uint32_t id_of(Coord p) const;  // throws std::domain_error if absent

 private:
  RingId ring_;
  std::int64_t k2_;
  std::int64_t cell_;
  Region region_;
  std::shared_ptr<const std::vector<Coord>> points_;
  std::vector<std::uint32_t> ids_;          // point ids grouped by grid cell
  std::vector<std::uint64_t> cell_keys_;    // sorted unique cell keys
  std::vector<std::uint32_t> cell_offsets_; // group offsets into ids_
};

WalkGraph build_walk_graph(RingId ring, const Region& region, StepBound k2);

// Points of g at squared distance in (0, k2] of p, sorted by (a, b).
// Throws std::domain_error if p is not in g.
std::vector<QuadInt> neighbors(const WalkGraph& g, const QuadInt& p);

struct ComponentSummary {
  QuadInt start;
  std::uint64_t size;
  QuadInt farthest;            // max Euclidean norm, ties to lex-min (a, b)
  std::int64_t max_coordinate; // max over members of max(|a|, |b|)
  // True if any member lies within sqrt(k2) of the region boundary. False
  // certifies the component is complete independent of the sieve bound.
  bool boundary_touched;
};

ComponentSummary component_of(const WalkGraph& g, const QuadInt& start);
std::vector<QuadInt> component_members(const WalkGraph& g, const QuadInt& start);
// Component edges as coordinate pairs (u < v lexicographically), sorted.
std::vector<std::pair<Coord, Coord>> component_edges(const WalkGraph& g, const QuadInt& start);

struct WalkPath {
  std::vector<QuadInt> steps;
  std::uint64_t seed;
  StepBound k2;
};

// From start, repeatedly moves to a uniformly chosen neighbor of strictly
// larger Euclidean norm until none exists. The generator is a SplitMix64
// finalizer keyed on (seed, step index, draw attempt) with bounded
// rejection, so identical (g, start, seed) replays bit-identically.
WalkPath random_walk(const WalkGraph& g, const QuadInt& start, std::uint64_t seed);

struct MoatScanRow {
  std::int64_t k2;
  ComponentSummary summary;
};

// Component summaries of start for each step bound, sharing one sieve of
// the region. Throws std::domain_error if start is not prime or not in the
// region.
std::vector<MoatScanRow> moat_scan(RingId ring, const QuadInt& start,
                                   const std::vector<StepBound>& k2_list,
                                   const Region& region);

}  // namespace quadwalk
