// Command-line front end: reads JSON problem descriptions, runs the exact
// lattice-free machinery, prints deterministic JSON (or SVG for `plot`).
//
// Exit codes: 0 for any definite answer (including negative ones), 2 when the
// question stayed undecided within the configured search bounds, 1 for
// malformed input or internal failure.
#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latfree/io.hpp"
#include "latfree/lattice_search.hpp"
#include "latfree/maximality.hpp"
#include "latfree/maximalize.hpp"
#include "latfree/svg.hpp"

namespace {

using namespace latfree;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, bool newline) {
  if (out_path.empty()) {
    std::cout << text;
    if (newline) std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << text;
  if (newline) out << "\n";
}

/// "--window lo0,hi0,lo1,hi1,..." -> per-coordinate rational intervals.
struct WindowSpec {
  std::vector<Rational> lo, hi;
};

WindowSpec parse_window(const std::string& text, std::size_t d) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 2 * d)
    throw std::invalid_argument("--window needs " + std::to_string(2 * d) +
                                " comma-separated values (lo,hi per coordinate)");
  WindowSpec w;
  for (std::size_t j = 0; j < d; ++j) {
    w.lo.push_back(parse_rational(parts[2 * j]));
    w.hi.push_back(parse_rational(parts[2 * j + 1]));
  }
  return w;
}

/// Largest lattice window inside a rational one.
std::pair<IntVec, IntVec> integer_window(const WindowSpec& w) {
  IntVec lo, hi;
  for (std::size_t j = 0; j < w.lo.size(); ++j) {
    lo.push_back(ceil_int(w.lo[j]));
    hi.push_back(floor_int(w.hi[j]));
  }
  return {lo, hi};
}

Polyhedron<Rational> need_rational(const io::ParsedPolyhedron& pp, const char* verb) {
  if (!pp.rational)
    throw std::invalid_argument(std::string(verb) +
                                " needs purely rational inequality data");
  return *pp.rational;
}

struct Options {
  std::string input;
  std::string out_path;
  std::string window;
  std::uint64_t cap = 4096;
  long t = 1;
  long box = 0;
  int scale = 40;
};

void add_common(CLI::App* cmd, Options& o, bool with_window) {
  cmd->add_option("input", o.input, "input file (JSON); '-' or absent reads stdin");
  cmd->add_option("--out", o.out_path, "write the result here instead of stdout");
  cmd->add_option("--cap", o.cap, "search bound; breaching it means 'undecided'");
  if (with_window)
    cmd->add_option("--window", o.window,
                    "axis window as lo,hi pairs: lo0,hi0,lo1,hi1,...");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for lattice-free polyhedra: freeness, maximality "
      "certificates, constructive enlargement, and the supporting search "
      "primitives."};
  app.require_subcommand(1);
  Options o;

  CLI::App* check_free = app.add_subcommand(
      "check-free", "Decide whether the interior contains a lattice point");
  add_common(check_free, o, false);

  CLI::App* certify = app.add_subcommand(
      "certify",
      "Certify a full-dimensional polyhedron maximal lattice-free, or refute it");
  add_common(certify, o, false);

  CLI::App* certify_h = app.add_subcommand(
      "certify-hyperplane",
      "Decide maximality of an affine hyperplane over Q(sqrt(k))");
  add_common(certify_h, o, false);

  CLI::App* maximalize = app.add_subcommand(
      "maximalize", "Grow a lattice-free polytope to a certified maximal one");
  add_common(maximalize, o, false);
  maximalize->add_option("--box", o.box,
                         "search box half-width (default derived from the input)");

  CLI::App* normalize = app.add_subcommand(
      "normalize",
      "Split off the linear recession space by a unimodular change of basis");
  add_common(normalize, o, false);

  CLI::App* minkowski = app.add_subcommand(
      "minkowski",
      "Nonzero point of tZ^d in a symmetric polytope of volume >= (2t)^d");
  add_common(minkowski, o, false);
  minkowski->add_option("--t", o.t, "lattice refinement parameter (default 1)");

  CLI::App* parity = app.add_subcommand(
      "parity", "First pair of vectors congruent mod 2, with their midpoint");
  add_common(parity, o, false);

  CLI::App* approx = app.add_subcommand(
      "approx-line", "Integer point within 1/t of the line spanned by u");
  add_common(approx, o, false);
  approx->add_option("--t", o.t, "tolerance denominator (default 1)");

  CLI::App* volume_cmd =
      app.add_subcommand("volume", "Exact volume of a bounded polytope");
  add_common(volume_cmd, o, false);

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "All lattice points (bounded input, or clipped to --window)");
  add_common(enumerate_cmd, o, true);

  CLI::App* sum_check = app.add_subcommand(
      "sum-check",
      "Check that P + span(rec P) stays free on a window, and the identity "
      "P - rec(P) = P + span(rec P) pointwise");
  add_common(sum_check, o, true);

  CLI::App* dense_check = app.add_subcommand(
      "dense-sum-check",
      "Validate membership certificates for a space M and check P + M on a window");
  add_common(dense_check, o, true);

  CLI::App* plot = app.add_subcommand("plot", "Render a 2D polyhedron as SVG");
  add_common(plot, o, true);
  plot->add_option("--scale", o.scale, "pixels per lattice unit (default 40)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_free->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      FreenessResult r = pp.rational ? is_lattice_free(*pp.rational, o.cap)
                                     : is_lattice_free(pp.poly, o.cap);
      emit(io::write_freeness(r), o.out_path, true);
    } else if (certify->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      CertifyResult r = certify_maximal_fulldim(need_rational(pp, "certify"), o.cap);
      emit(io::write_certify(r), o.out_path, true);
    } else if (certify_h->parsed()) {
      io::ParsedHyperplane ph = io::parse_hyperplane(read_input(o.input));
      emit(io::write_hyperplane_verdict(certify_maximal_lowdim(ph.flat)), o.out_path,
           true);
    } else if (maximalize->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      Polyhedron<Rational> p = need_rational(pp, "maximalize");
      long box = o.box > 0 ? o.box : default_box_half_width(p);
      emit(io::write_enlarge(enlarge_to_maximal(p, box, o.cap)), o.out_path, true);
    } else if (normalize->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      emit(io::write_split(normalize_split(need_rational(pp, "normalize"))), o.out_path,
           true);
    } else if (minkowski->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      emit(io::write_minkowski(minkowski_find(need_rational(pp, "minkowski"), o.t)),
           o.out_path, true);
    } else if (parity->parsed()) {
      io::VectorList vl = io::parse_vector_list(read_input(o.input));
      emit(io::write_parity(parity_pair(vl.vectors)), o.out_path, true);
    } else if (approx->parsed()) {
      io::ParsedDirection dir = io::parse_direction(read_input(o.input));
      long n_cap = o.cap > static_cast<std::uint64_t>(std::numeric_limits<long>::max())
                       ? std::numeric_limits<long>::max()
                       : static_cast<long>(o.cap);
      emit(io::write_approx(approximate_line(dir.u, o.t, n_cap)), o.out_path, true);
    } else if (volume_cmd->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      emit(io::write_volume(volume(need_rational(pp, "volume"))), o.out_path, true);
    } else if (enumerate_cmd->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      Polyhedron<Rational> p = need_rational(pp, "enumerate");
      std::vector<IntVec> pts;
      if (!o.window.empty()) {
        auto [lo, hi] = integer_window(parse_window(o.window, p.ambient_dim()));
        pts = lattice_points_in_window(p, lo, hi);
      } else {
        pts = enumerate_lattice_points(p);
      }
      emit(io::write_points(pts), o.out_path, true);
    } else if (sum_check->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      Polyhedron<Rational> p = need_rational(pp, "sum-check");
      if (o.window.empty()) throw std::invalid_argument("sum-check needs --window");
      auto [lo, hi] = integer_window(parse_window(o.window, p.ambient_dim()));
      emit(io::write_sum_report(check_sum_freeness(p, lo, hi, o.cap)), o.out_path, true);
    } else if (dense_check->parsed()) {
      io::DenseSumBundle b = io::parse_dense_sum_bundle(read_input(o.input));
      if (o.window.empty())
        throw std::invalid_argument("dense-sum-check needs --window");
      auto [lo, hi] = integer_window(parse_window(o.window, b.poly.ambient_dim()));
      emit(io::write_dense_report(check_dense_sum(b.poly, b.basis, b.certs, lo, hi)),
           o.out_path, true);
    } else if (plot->parsed()) {
      io::ParsedPolyhedron pp = io::parse_polyhedron(read_input(o.input));
      Polyhedron<Rational> p = need_rational(pp, "plot");
      if (o.window.empty()) throw std::invalid_argument("plot needs --window");
      WindowSpec w = parse_window(o.window, 2);
      PlotWindow pw{w.lo[0], w.hi[0], w.lo[1], w.hi[1], o.scale};
      emit(plot2d(p, pw), o.out_path, false);
    }
    return 0;
  } catch (const CapExhaustedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (const BoxTooSmallError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
