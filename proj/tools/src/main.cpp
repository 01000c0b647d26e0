#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadwalk/analytics.hpp"
#include "quadwalk/enumeration.hpp"
#include "quadwalk/primality.hpp"
#include "quadwalk/ring.hpp"
#include "quadwalk/threading.hpp"
#include "quadwalk/walks.hpp"

namespace {

using quadwalk::Coord;
using quadwalk::Region;
using quadwalk::RingId;
using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return std::to_string(*u);
  if (const auto* d = std::get_if<double>(&c)) return fmt_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

void cell_json(json& row, const std::string& key, const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) row[key] = *i;
  else if (const auto* u = std::get_if<std::uint64_t>(&c)) row[key] = *u;
  else if (const auto* d = std::get_if<double>(&c)) row[key] = *d;
  else if (const auto* b = std::get_if<bool>(&c)) row[key] = *b;
  else row[key] = std::get<std::string>(c);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << cell_text(row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) cell_json(obj, t.columns[i], row[i]);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

// Scatter plot with the lattice y axis pointing up; one circle per point.
void write_svg(std::ostream& os, const std::vector<Coord>& pts, bool asymptotes) {
  double min_a = 0, max_a = 1, min_b = 0, max_b = 1;
  if (!pts.empty()) {
    min_a = max_a = static_cast<double>(pts[0].a);
    min_b = max_b = static_cast<double>(pts[0].b);
    for (const Coord& p : pts) {
      min_a = std::min(min_a, static_cast<double>(p.a));
      max_a = std::max(max_a, static_cast<double>(p.a));
      min_b = std::min(min_b, static_cast<double>(p.b));
      max_b = std::max(max_b, static_cast<double>(p.b));
    }
    if (min_a == max_a) max_a = min_a + 1;
    if (min_b == max_b) max_b = min_b + 1;
  }
  const double margin = 40.0;
  const double span = std::max(max_a - min_a, max_b - min_b);
  const double scale = 720.0 / span;
  const double width = 2 * margin + scale * (max_a - min_a);
  const double height = 2 * margin + scale * (max_b - min_b);
  auto map_x = [&](double a) { return margin + (a - min_a) * scale; };
  auto map_y = [&](double b) { return height - (margin + (b - min_b) * scale); };
  auto f = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << f(width) << ' '
     << f(height) << "\">\n";
  if (asymptotes) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (double sign : {1.0, -1.0}) {
      os << "  <line x1=\"" << f(map_x(min_a)) << "\" y1=\"" << f(map_y(sign * min_a * inv_sqrt2))
         << "\" x2=\"" << f(map_x(max_a)) << "\" y2=\"" << f(map_y(sign * max_a * inv_sqrt2))
         << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }
  }
  for (const Coord& p : pts) {
    os << "  <circle cx=\"" << f(map_x(static_cast<double>(p.a))) << "\" cy=\""
       << f(map_y(static_cast<double>(p.b))) << "\" r=\"2\" fill=\"#1f3b73\"/>\n";
  }
  os << "</svg>\n";
}

enum class OutFormat { Csv, Json, Svg };

OutFormat format_of(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "csv") return OutFormat::Csv;
  if (ext == "json") return OutFormat::Json;
  if (ext == "svg") return OutFormat::Svg;
  throw std::invalid_argument("output path must end in .csv, .json, or .svg: " + path);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  return os;
}

// Writes t to path (format by extension) or as CSV to stdout when path is
// empty. points backs the svg form; commands without a point layout pass
// nullptr and reject .svg.
void emit_table(const std::string& path, const Table& t, const std::vector<Coord>* points,
                bool asymptotes = false) {
  if (path.empty()) {
    write_csv(std::cout, t);
    return;
  }
  OutFormat fmt = format_of(path);
  std::ofstream os = open_out(path);
  switch (fmt) {
    case OutFormat::Csv:
      write_csv(os, t);
      break;
    case OutFormat::Json:
      write_json(os, t);
      break;
    case OutFormat::Svg:
      if (!points) throw std::invalid_argument("svg output is not supported for this command");
      write_svg(os, *points, asymptotes);
      break;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::int64_t parse_i64(const std::string& s) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

double parse_f64(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

std::vector<std::int64_t> parse_i64_list(const std::string& s, const char* what) {
  std::vector<std::int64_t> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_i64(part));
  if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
  return out;
}

std::vector<double> parse_f64_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_f64(part));
  if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
  return out;
}

struct RegionFlags {
  std::string disk, rect, strip;
  std::int64_t xmax = -1;

  void add_to(CLI::App* cmd, bool with_xmax) {
    cmd->add_option("--disk", disk, "Disk of this radius centered at the origin");
    cmd->add_option("--rect", rect, "Closed box x0,x1,y0,y1");
    cmd->add_option("--strip", strip,
                    "Asymptote strip r,xmax: perpendicular distance to y=x/sqrt(2) at most r, "
                    "0 <= x <= xmax");
    if (with_xmax)
      cmd->add_option("--xmax", xmax,
                      "Shorthand for --rect 0,N,0,(3N+3)/4 covering the first-quadrant strip");
  }

  Region build() const {
    int given = !disk.empty() + !rect.empty() + !strip.empty() + (xmax >= 0);
    if (given != 1)
      throw std::invalid_argument("exactly one of --disk, --rect, --strip, --xmax is required");
    if (!disk.empty()) return quadwalk::Disk{parse_f64(disk)};
    if (!rect.empty()) {
      auto v = parse_i64_list(rect, "--rect");
      if (v.size() != 4) throw std::invalid_argument("--rect needs x0,x1,y0,y1");
      return quadwalk::Rect{v[0], v[1], v[2], v[3]};
    }
    if (!strip.empty()) {
      auto parts = split(strip, ',');
      if (parts.size() != 2) throw std::invalid_argument("--strip needs r,xmax");
      return quadwalk::AsymptoteStrip{parse_f64(parts[0]), parse_i64(parts[1])};
    }
    return quadwalk::Rect{0, xmax, 0, (3 * xmax + 3) / 4};
  }
};

std::pair<std::int64_t, std::int64_t> parse_start(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw std::invalid_argument("--start needs a,b");
  return {parse_i64(parts[0]), parse_i64(parts[1])};
}

json summary_json(const quadwalk::ComponentSummary& s, RingId ring, std::int64_t k2) {
  json j = json::object();
  j["ring"] = ring.name();
  j["k2"] = k2;
  j["start"] = {s.start.a, s.start.b};
  j["size"] = s.size;
  j["farthest"] = {s.farthest.a, s.farthest.b};
  j["max_coordinate"] = s.max_coordinate;
  j["boundary_touched"] = s.boundary_touched;
  return j;
}

int run_classify(const std::string& ring_name, std::int64_t a, std::int64_t b) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  quadwalk::QuadInt q{a, b, ring};
  quadwalk::Classification c = quadwalk::classify(q);
  json j = json::object();
  j["a"] = a;
  j["b"] = b;
  j["ring"] = ring.name();
  j["norm"] = quadwalk::norm(q);
  j["verdict"] = quadwalk::to_string(c.verdict);
  if (c.kind) j["kind"] = quadwalk::to_string(*c.kind);
  else j["kind"] = nullptr;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_enumerate(const std::string& ring_name, const RegionFlags& rf, const std::string& out,
                  bool asymptotes) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  Region region = rf.build();
  std::vector<Coord> pts = quadwalk::prime_points_in_region(ring, region);
  Table t;
  t.columns = {"a", "b", "norm"};
  for (const Coord& p : pts)
    t.add_row({p.a, p.b, quadwalk::norm(quadwalk::QuadInt{p.a, p.b, ring})});
  emit_table(out, t, &pts, asymptotes);
  return 0;
}

int run_figure_compare(std::int64_t nmax, const std::string& out) {
  if (nmax < 1) throw std::invalid_argument("--nmax must be >= 1");
  Table t;
  t.columns = {"n", "count_zi", "count_zsqrt2"};
  for (const auto& row : quadwalk::compare_disk_counts(1, nmax))
    t.add_row({row.n, row.count_zi, row.count_zsqrt2});
  emit_table(out, t, nullptr);
  return 0;
}

std::string family_kind(std::int64_t k) {
  std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  if (n == 2) return to_string(quadwalk::PrimeKind::RamifiedGenerator);
  if (quadwalk::is_rational_prime(n)) return to_string(quadwalk::PrimeKind::SplitNorm);
  return to_string(quadwalk::PrimeKind::InertRational);
}

int run_families(std::int64_t r2, const std::string& out) {
  Table t;
  t.columns = {"k", "abs_k", "kind"};
  for (std::int64_t k : quadwalk::families_with_primes(r2))
    t.add_row({k, k < 0 ? -k : k, family_kind(k)});
  emit_table(out, t, nullptr);
  return 0;
}

int run_bernays(const std::string& n_list, const std::string& out) {
  Table t;
  t.columns = {"n", "representable", "b_estimate"};
  for (std::int64_t n : parse_i64_list(n_list, "--n")) {
    if (n < 2) throw std::invalid_argument("--n values must be >= 2");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    quadwalk::BernaysEstimate est = quadwalk::estimate_bernays_constant(un);
    t.add_row({n, quadwalk::representable_count(un), est.b_estimate});
  }
  emit_table(out, t, nullptr);
  return 0;
}

int run_density(const std::string& ring_name, const std::string& r_list, const std::string& out) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  Table t;
  if (ring == RingId::gauss()) {
    t.columns = {"r", "prime_count", "lattice_points",
                 "empirical_density", "asymptotic_density", "ratio"};
    for (double r : parse_f64_list(r_list, "--r")) {
      std::uint64_t primes = quadwalk::count_primes_in_disk(ring, r);
      std::uint64_t lattice = quadwalk::lattice_points_in_disk(r);
      double emp = static_cast<double>(primes) / static_cast<double>(lattice);
      double asym = quadwalk::gaussian_density_asymptotic(r);
      t.add_row({r, primes, lattice, emp, asym, emp / asym});
    }
  } else {
    t.columns = {"r", "family_count", "representable", "b_estimate",
                 "empirical_density", "asymptotic_density", "ratio"};
    for (double r : parse_f64_list(r_list, "--r")) {
      if (!(r > 1.0)) throw std::domain_error("density requires r > 1");
      std::int64_t r2 = static_cast<std::int64_t>(std::llround(r * r));
      std::uint64_t families = quadwalk::families_with_primes(r2).size();
      std::uint64_t rep = quadwalk::representable_count(static_cast<std::uint64_t>(r2));
      quadwalk::BernaysEstimate est =
          quadwalk::estimate_bernays_constant(static_cast<std::uint64_t>(r2));
      double emp = static_cast<double>(families) / (2.0 * static_cast<double>(rep));
      double asym = quadwalk::family_density_asymptotic(r, est.b_estimate);
      t.add_row({r, families, rep, est.b_estimate, emp, asym, emp / asym});
    }
  }
  emit_table(out, t, nullptr);
  return 0;
}

int run_moat_bound(double r, double k, const std::string& x_range, const std::string& out) {
  auto xs = parse_f64_list(x_range, "--x");
  std::vector<double> probes;
  if (xs.size() == 1) {
    probes.push_back(xs[0]);
  } else if (xs.size() == 2) {
    if (!(xs[0] > 0) || xs[1] < xs[0])
      throw std::invalid_argument("--x lo,hi needs 0 < lo <= hi");
    for (double x = xs[0]; x <= xs[1] * (1 + 1e-9); x *= 10.0) probes.push_back(x);
  } else {
    throw std::invalid_argument("--x takes one value or lo,hi for a powers-of-ten scan");
  }
  Table t;
  t.columns = {"x", "c_max", "d_cc", "pd", "steps_lower", "families_upper", "ratio"};
  for (double x : probes) {
    quadwalk::MoatBoundReport rep = quadwalk::moat_bound_report(r, k, x);
    t.add_row({rep.x, rep.c_max, rep.d_cc, rep.pd,
               rep.steps_lower, rep.families_upper, rep.ratio});
  }
  emit_table(out, t, nullptr);
  return 0;
}

int run_walk_component(const std::string& ring_name, const std::string& start_s, std::int64_t k2,
                       const RegionFlags& rf, const std::string& out,
                       const std::string& summary_path) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  auto [sa, sb] = parse_start(start_s);
  quadwalk::WalkGraph g = quadwalk::build_walk_graph(ring, rf.build(), quadwalk::StepBound{k2});
  quadwalk::QuadInt start{sa, sb, ring};
  quadwalk::ComponentSummary summary = quadwalk::component_of(g, start);

  if (!out.empty()) {
    std::vector<quadwalk::QuadInt> members = quadwalk::component_members(g, start);
    Table t;
    t.columns = {"a", "b", "norm"};
    std::vector<Coord> pts;
    pts.reserve(members.size());
    for (const auto& m : members) {
      t.add_row({m.a, m.b, quadwalk::norm(m)});
      pts.push_back(Coord{m.a, m.b});
    }
    emit_table(out, t, &pts);
  }
  json j = summary_json(summary, ring, k2);
  if (summary_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream os = open_out(summary_path);
    os << j.dump(2) << '\n';
  }
  return 0;
}

int run_walk_random(const std::string& ring_name, const std::string& start_s, std::int64_t k2,
                    std::uint64_t seed, const RegionFlags& rf, const std::string& out) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  auto [sa, sb] = parse_start(start_s);
  quadwalk::WalkGraph g = quadwalk::build_walk_graph(ring, rf.build(), quadwalk::StepBound{k2});
  quadwalk::WalkPath path = quadwalk::random_walk(g, quadwalk::QuadInt{sa, sb, ring}, seed);
  Table t;
  t.columns = {"step", "a", "b", "norm"};
  std::vector<Coord> pts;
  pts.reserve(path.steps.size());
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& q = path.steps[i];
    t.add_row({static_cast<std::int64_t>(i), q.a, q.b, quadwalk::norm(q)});
    pts.push_back(Coord{q.a, q.b});
  }
  emit_table(out, t, &pts);
  return 0;
}

int run_walk_moat_scan(const std::string& ring_name, const std::string& start_s,
                       const std::string& k2_list, const RegionFlags& rf,
                       const std::string& out) {
  RingId ring = quadwalk::ring_from_name(ring_name);
  auto [sa, sb] = parse_start(start_s);
  std::vector<quadwalk::StepBound> bounds;
  for (std::int64_t k2 : parse_i64_list(k2_list, "--k2-list"))
    bounds.push_back(quadwalk::StepBound{k2});
  auto rows = quadwalk::moat_scan(ring, quadwalk::QuadInt{sa, sb, ring}, bounds, rf.build());
  Table t;
  t.columns = {"k2", "size", "farthest_a", "farthest_b", "max_coordinate", "boundary_touched"};
  for (const auto& row : rows) {
    t.add_row({row.k2, row.summary.size, row.summary.farthest.a, row.summary.farthest.b,
               row.summary.max_coordinate, row.summary.boundary_touched});
  }
  emit_table(out, t, nullptr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime exploration in Z[sqrt(2)] and Z[i]: classification, enumeration, "
               "family statistics, and bounded-step walks"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker thread cap, 0 = all cores (never affects output)");

  std::function<int()> action;

  std::string cl_ring = "zsqrt2";
  std::int64_t cl_a = 0, cl_b = 0;
  auto* cl = app.add_subcommand("classify", "Classify one element and print a JSON verdict");
  cl->add_option("--ring", cl_ring, "gauss or zsqrt2")->capture_default_str();
  cl->add_option("a", cl_a, "Rational part")->required();
  cl->add_option("b", cl_b, "Radical coordinate")->required();
  cl->callback([&] { action = [&] { return run_classify(cl_ring, cl_a, cl_b); }; });

  std::string en_ring = "zsqrt2", en_out;
  RegionFlags en_region;
  bool en_asym = false;
  auto* en = app.add_subcommand("enumerate", "List prime elements of a finite region");
  en->add_option("--ring", en_ring, "gauss or zsqrt2")->capture_default_str();
  en_region.add_to(en, false);
  en->add_option("--out", en_out, "Output file (.csv, .json, .svg); stdout CSV if omitted");
  en->add_flag("--asymptotes", en_asym, "Overlay y = +/- x/sqrt(2) on svg output");
  en->callback([&] { action = [&] { return run_enumerate(en_ring, en_region, en_out, en_asym); }; });

  std::int64_t fc_nmax = 0;
  std::string fc_out;
  auto* fc = app.add_subcommand("figure-compare",
                                "Prime counts in integer-radius disks for both rings");
  fc->add_option("--nmax", fc_nmax, "Largest radius")->required();
  fc->add_option("--out", fc_out, "Output file (.csv, .json); stdout CSV if omitted");
  fc->callback([&] { action = [&] { return run_figure_compare(fc_nmax, fc_out); }; });

  std::int64_t fa_r2 = 0;
  std::string fa_out;
  auto* fa = app.add_subcommand("families", "Norm curves carrying primes, |k| <= r2");
  fa->add_option("--r2", fa_r2, "Norm bound")->required();
  fa->add_option("--out", fa_out, "Output file (.csv, .json); stdout CSV if omitted");
  fa->callback([&] { action = [&] { return run_families(fa_r2, fa_out); }; });

  std::string be_n, be_out;
  auto* be = app.add_subcommand("bernays",
                                "Estimate the representable-count constant at given n");
  be->add_option("--n", be_n, "Comma-separated list of sample sizes")->required();
  be->add_option("--out", be_out, "Output file (.csv, .json); stdout CSV if omitted");
  be->callback([&] { action = [&] { return run_bernays(be_n, be_out); }; });

  std::string de_ring = "zsqrt2", de_r, de_out;
  auto* de = app.add_subcommand("density",
                                "Empirical vs asymptotic prime (or prime-family) density");
  de->add_option("--ring", de_ring, "gauss or zsqrt2")->capture_default_str();
  de->add_option("--r", de_r, "Comma-separated list of radii")->required();
  de->add_option("--out", de_out, "Output file (.csv, .json); stdout CSV if omitted");
  de->callback([&] { action = [&] { return run_density(de_ring, de_r, de_out); }; });

  double mb_r = 0, mb_k = 0;
  std::string mb_x, mb_out;
  auto* mb = app.add_subcommand("moat-bound",
                                "Walk-length lower bound vs family-count upper bound on a strip");
  mb->add_option("--r", mb_r, "Strip half-width")->required();
  mb->add_option("--k", mb_k, "Step length")->required();
  mb->add_option("--x", mb_x, "Probe coordinate, or lo,hi for a powers-of-ten scan")->required();
  mb->add_option("--out", mb_out, "Output file (.csv, .json); stdout CSV if omitted");
  mb->callback([&] { action = [&] { return run_moat_bound(mb_r, mb_k, mb_x, mb_out); }; });

  auto* wk = app.add_subcommand("walk", "Bounded-step walks on the prime lattice");
  wk->require_subcommand(1);

  std::string wc_ring = "zsqrt2", wc_start, wc_out, wc_summary;
  std::int64_t wc_k2 = 0;
  RegionFlags wc_region;
  auto* wc = wk->add_subcommand("component", "BFS component of a start prime");
  wc->add_option("--ring", wc_ring, "gauss or zsqrt2")->capture_default_str();
  wc->add_option("--start", wc_start, "Start coordinates a,b")->required();
  wc->add_option("--k2", wc_k2, "Squared step bound")->required();
  wc_region.add_to(wc, true);
  wc->add_option("--out", wc_out, "Member file (.csv, .json, .svg); members skipped if omitted");
  wc->add_option("--summary", wc_summary, "Summary JSON file; stdout if omitted");
  wc->callback([&] {
    action = [&] {
      return run_walk_component(wc_ring, wc_start, wc_k2, wc_region, wc_out, wc_summary);
    };
  });

  std::string wr_ring = "zsqrt2", wr_start, wr_out;
  std::int64_t wr_k2 = 0;
  std::uint64_t wr_seed = 0;
  RegionFlags wr_region;
  auto* wr = wk->add_subcommand("random", "Seeded norm-increasing random walk");
  wr->add_option("--ring", wr_ring, "gauss or zsqrt2")->capture_default_str();
  wr->add_option("--start", wr_start, "Start coordinates a,b")->required();
  wr->add_option("--k2", wr_k2, "Squared step bound")->required();
  wr->add_option("--seed", wr_seed, "Random seed")->capture_default_str();
  wr_region.add_to(wr, true);
  wr->add_option("--out", wr_out, "Output file (.csv, .json, .svg); stdout CSV if omitted");
  wr->callback([&] {
    action = [&] {
      return run_walk_random(wr_ring, wr_start, wr_k2, wr_seed, wr_region, wr_out);
    };
  });

  std::string wm_ring = "zsqrt2", wm_start, wm_k2_list, wm_out;
  RegionFlags wm_region;
  auto* wm = wk->add_subcommand("moat-scan", "Component summaries across step bounds");
  wm->add_option("--ring", wm_ring, "gauss or zsqrt2")->capture_default_str();
  wm->add_option("--start", wm_start, "Start coordinates a,b")->required();
  wm->add_option("--k2-list", wm_k2_list, "Comma-separated squared step bounds")->required();
  wm_region.add_to(wm, true);
  wm->add_option("--out", wm_out, "Output file (.csv, .json); stdout CSV if omitted");
  wm->callback([&] {
    action = [&] {
      return run_walk_moat_scan(wm_ring, wm_start, wm_k2_list, wm_region, wm_out);
    };
  });

  auto all = [](CLI::App*) { return true; };
  for (CLI::App* sub : app.get_subcommands(all)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(all)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  quadwalk::set_max_threads(threads);
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
