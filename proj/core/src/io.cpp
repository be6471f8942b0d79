#include "latfree/io.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace latfree::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);  // throwing parse: errors carry byte positions
  } catch (const json::parse_error& e) {
    bad(std::string("input is not valid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t parse_dim(const json& j) {
  const json& dj = field(j, "d");
  if (!dj.is_number_integer() || dj.get<std::int64_t>() < 1)
    bad("\"d\" must be a positive integer");
  return static_cast<std::size_t>(dj.get<std::int64_t>());
}

long parse_field_k(const json& j) {
  if (!j.is_object() || !j.contains("k")) return 0;
  const json& kj = j.at("k");
  if (!kj.is_number_integer()) bad("\"k\" must be an integer");
  long k = kj.get<long>();
  if (k < 2 || !is_squarefree(k)) bad("\"k\" must be a squarefree integer >= 2");
  return k;
}

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("bad integer literal \"" + j.get<std::string>() + "\"");
    }
  }
  bad("expected an integer");
}

Rational parse_rational_scalar(const json& j) {
  if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
  if (!j.is_string()) bad("expected an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(std::string("bad rational literal: ") + e.what());
  }
}

QuadExt parse_scalar(const json& j, long k) {
  if (j.is_array()) {
    if (j.size() != 2) bad("a scalar pair must have exactly two entries");
    Rational a = parse_rational_scalar(j.at(0));
    Rational b = parse_rational_scalar(j.at(1));
    if (b != 0 && k == 0)
      bad("an irrational scalar needs a field discriminant \"k\" in the document");
    return QuadExt(a, b, b == 0 ? 0 : k);
  }
  return QuadExt(parse_rational_scalar(j));
}

Vec<QuadExt> parse_scalar_vec(const json& j, std::size_t d, long k, const char* what) {
  if (!j.is_array() || j.size() != d)
    bad(std::string(what) + " must be an array of length d");
  Vec<QuadExt> out;
  out.reserve(d);
  for (const json& e : j) out.push_back(parse_scalar(e, k));
  return out;
}

IntVec parse_int_vec(const json& j, std::size_t d, const char* what) {
  if (!j.is_array() || j.size() != d)
    bad(std::string(what) + " must be an integer array of length d");
  IntVec out;
  out.reserve(d);
  for (const json& e : j) out.push_back(parse_int(e));
  return out;
}

json int_json(const Int& v) {
  static const Int lo(std::numeric_limits<std::int64_t>::min());
  static const Int hi(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

json rational_json(const Rational& x) { return json(to_string(x)); }

json quad_json(const QuadExt& x) {
  if (exactly_rational(x)) return rational_json(x.rat_part());
  return json::array({rational_json(x.rat_part()), rational_json(x.root_part())});
}

json point_json(const IntVec& z) {
  json a = json::array();
  for (const Int& v : z) a.push_back(int_json(v));
  return a;
}

json points_json(const std::vector<IntVec>& pts) {
  json a = json::array();
  for (const IntVec& z : pts) a.push_back(point_json(z));
  return a;
}

json vector_list_json(const IntMat& m) {
  json a = json::array();
  for (const IntVec& row : m) a.push_back(point_json(row));
  return a;
}

// Integer matrices (unimodular maps) use decimal strings, immune to any
// consumer's integer-width limits.
json int_mat_json(const IntMat& m) {
  json a = json::array();
  for (const IntVec& row : m) {
    json r = json::array();
    for (const Int& v : row) r.push_back(v.str());
    a.push_back(std::move(r));
  }
  return a;
}

json poly_json(const Polyhedron<Rational>& p) {
  json j;
  j["d"] = p.ambient_dim();
  json rows = json::array();
  for (const Inequality<Rational>& q : p.ineqs()) {
    json row;
    json a = json::array();
    for (const Rational& c : q.a) a.push_back(rational_json(c));
    row["a"] = std::move(a);
    row["b"] = rational_json(q.b);
    rows.push_back(std::move(row));
  }
  j["ineqs"] = std::move(rows);
  return j;
}

const char* location_name(Witness::Location loc) {
  switch (loc) {
    case Witness::Location::interior: return "interior";
    case Witness::Location::facet_relint: return "facet_relint";
    default: return "boundary";
  }
}

json witness_json(const Witness& w) {
  json j;
  j["z"] = point_json(w.z);
  j["location"] = location_name(w.location);
  if (w.facet_index) j["facet"] = *w.facet_index;
  return j;
}

json certificate_json(const MaximalityCertificate& c) {
  json j;
  j["maximal"] = true;
  j["facets"] = c.facet_count;
  j["r"] = c.r;
  json ws = json::array();
  for (const auto& [idx, z] : c.facet_witnesses) {
    json w;
    w["facet"] = idx;
    w["z"] = point_json(z);
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  j["recession_basis"] = vector_list_json(c.rec_basis);
  return j;
}

std::string finish(const json& j) { return j.dump(2); }

}  // namespace

ParsedPolyhedron parse_polyhedron(const std::string& text) {
  json j = parse_text(text);
  std::size_t d = parse_dim(j);
  long k = parse_field_k(j);
  const json& rows = field(j, "ineqs");
  if (!rows.is_array()) bad("\"ineqs\" must be an array");
  ParsedPolyhedron out{Polyhedron<QuadExt>(d), std::nullopt, k};
  for (const json& row : rows) {
    if (!row.is_object()) bad("each inequality must be an object with \"a\" and \"b\"");
    Vec<QuadExt> a = parse_scalar_vec(field(row, "a"), d, k, "\"a\"");
    QuadExt b = parse_scalar(field(row, "b"), k);
    try {
      out.poly.add({std::move(a), std::move(b)});
    } catch (const std::invalid_argument& e) {
      bad(std::string("bad inequality: ") + e.what());
    }
  }
  out.rational = to_rational(out.poly);
  return out;
}

VectorList parse_vector_list(const std::string& text) {
  json j = parse_text(text);
  VectorList out;
  out.d = parse_dim(j);
  const json& vs = field(j, "vectors");
  if (!vs.is_array()) bad("\"vectors\" must be an array");
  for (const json& v : vs) out.vectors.push_back(parse_int_vec(v, out.d, "each vector"));
  return out;
}

ParsedDirection parse_direction(const std::string& text) {
  json j = parse_text(text);
  ParsedDirection out;
  out.d = parse_dim(j);
  out.k = parse_field_k(j);
  out.u = parse_scalar_vec(field(j, "u"), out.d, out.k, "\"u\"");
  return out;
}

ParsedHyperplane parse_hyperplane(const std::string& text) {
  json j = parse_text(text);
  std::size_t d = parse_dim(j);
  ParsedHyperplane out;
  out.k = parse_field_k(j);
  out.flat.base = parse_scalar_vec(field(j, "base"), d, out.k, "\"base\"");
  const json& dirs = field(j, "directions");
  if (!dirs.is_array() || dirs.empty()) bad("\"directions\" must be a nonempty array");
  for (const json& row : dirs)
    out.flat.directions.push_back(parse_scalar_vec(row, d, out.k, "each direction"));
  return out;
}

DenseSumBundle parse_dense_sum_bundle(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("polyhedron")) bad("missing field \"polyhedron\"");
  ParsedPolyhedron pp = parse_polyhedron(field(j, "polyhedron").dump());
  DenseSumBundle out{std::move(pp.poly), {}, {}};
  std::size_t d = out.poly.ambient_dim();
  const json& basis = field(j, "basis");
  if (!basis.is_array()) bad("\"basis\" must be an array of vectors");
  for (const json& row : basis)
    out.basis.push_back(parse_scalar_vec(row, d, pp.k, "each basis vector"));
  const json& certs = field(j, "certificates");
  if (!certs.is_array()) bad("\"certificates\" must be an array");
  for (const json& c : certs) {
    const json& type = field(c, "type");
    if (!type.is_string()) bad("certificate \"type\" must be a string");
    std::string t = type.get<std::string>();
    if (t == "decomposition") {
      MembershipDecomposition dec;
      dec.z = parse_int_vec(field(c, "z"), d, "\"z\"");
      const json& coeffs = field(c, "coeffs");
      if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
      for (const json& e : coeffs) dec.l_coeffs.push_back(parse_scalar(e, pp.k));
      out.certs.emplace_back(std::move(dec));
    } else if (t == "line") {
      ApproxCertificate ap;
      ap.u = parse_scalar_vec(field(c, "u"), d, pp.k, "\"u\"");
      const json& steps = field(c, "steps");
      if (!steps.is_array()) bad("\"steps\" must be an array");
      for (const json& s : steps) {
        ApproxResult step;
        step.z = parse_int_vec(field(s, "z"), d, "step \"z\"");
        const json& tj = field(s, "t");
        if (!tj.is_number_integer() || tj.get<std::int64_t>() < 1)
          bad("step \"t\" must be a positive integer");
        step.t = tj.get<long>();
        if (s.contains("n") && s.at("n").is_number_integer())
          step.n = s.at("n").get<long>();
        ap.steps.push_back(std::move(step));
      }
      out.certs.emplace_back(std::move(ap));
    } else {
      bad("certificate \"type\" must be \"decomposition\" or \"line\"");
    }
  }
  return out;
}

std::string write_rational(const Rational& x) {
  json j = rational_json(x);
  return j.get<std::string>();
}

std::string write_polyhedron(const Polyhedron<Rational>& p) { return finish(poly_json(p)); }

std::string write_freeness(const FreenessResult& r) {
  json j;
  j["free"] = r.free;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return finish(j);
}

std::string write_certify(const CertifyResult& r) {
  if (const auto* cert = std::get_if<MaximalityCertificate>(&r))
    return finish(certificate_json(*cert));
  const Refutation& ref = std::get<Refutation>(r);
  json j;
  j["maximal"] = false;
  switch (ref.kind) {
    case Refutation::Kind::not_lattice_free: j["reason"] = "not_lattice_free"; break;
    case Refutation::Kind::not_maximal: j["reason"] = "not_maximal"; break;
    default: j["reason"] = "not_full_dimensional"; break;
  }
  if (ref.witness) j["witness"] = witness_json(*ref.witness);
  if (ref.enlargement) j["enlargement"] = poly_json(*ref.enlargement);
  return finish(j);
}

std::string write_hyperplane_verdict(const HyperplaneVerdict& v) {
  json j;
  j["maximal"] = v.maximal;
  if (!v.maximal) j["reason"] = v.reason;
  json n = json::array();
  for (const QuadExt& c : v.normal) n.push_back(quad_json(c));
  j["normal"] = std::move(n);
  if (v.integer_normal) j["integer_normal"] = point_json(*v.integer_normal);
  if (v.enlargement) j["enlargement"] = poly_json(*v.enlargement);
  return finish(j);
}

std::string write_enlarge(const EnlargeResult& r) {
  json j;
  j["result"] = poly_json(r.result);
  j["certificate"] = certificate_json(r.certificate);
  return finish(j);
}

std::string write_split(const SplitForm& s) {
  json j;
  j["r"] = s.r;
  j["forward"] = int_mat_json(s.a.forward);
  j["inverse"] = int_mat_json(s.a.inverse);
  j["transversal"] = poly_json(s.transversal);
  return finish(j);
}

std::string write_minkowski(const IntVec& z) {
  json j;
  j["z"] = point_json(z);
  return finish(j);
}

std::string write_parity(const ParityPair& p) {
  json j;
  j["i"] = p.i;
  j["j"] = p.j;
  j["mid"] = point_json(p.midpoint);
  return finish(j);
}

std::string write_approx(const ApproxResult& r) {
  json j;
  j["z"] = point_json(r.z);
  json x = json::array();
  for (const QuadExt& c : r.x) x.push_back(quad_json(c));
  j["x"] = std::move(x);
  j["t"] = r.t;
  j["n"] = r.n;
  return finish(j);
}

std::string write_volume(const Rational& v) {
  json j;
  j["volume"] = rational_json(v);
  return finish(j);
}

std::string write_points(const std::vector<IntVec>& pts) {
  json j;
  j["count"] = pts.size();
  j["points"] = points_json(pts);
  return finish(j);
}

std::string write_sum_report(const SumFreenessReport& r) {
  json j;
  j["sum"] = poly_json(r.sum);
  j["interior_points"] = points_json(r.interior_points);
  j["free_within_window"] = r.free_within_window;
  j["difference_identity_ok"] = r.difference_identity_ok;
  j["identity_mismatches"] = points_json(r.identity_mismatches);
  return finish(j);
}

std::string write_dense_report(const DenseSumReport& r) {
  json j;
  j["certified"] = r.certified;
  j["interior_points"] = points_json(r.interior_points);
  j["free_within_window"] = r.free_within_window;
  return finish(j);
}

}  // namespace latfree::io
