#include "opaque/json_io.hpp"

#include <fstream>
#include <sstream>

namespace opaque {

namespace {

Json point_to_json(const Vec3& p, int dim) {
  Json a = Json::array();
  for (int k = 0; k < dim; ++k) a.push_back(p[k]);
  return a;
}

Vec3 point_from_json(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(std::string(what) + ": expected an array of length " + std::to_string(dim));
  Vec3 p = Vec3::Zero();
  for (int k = 0; k < dim; ++k) {
    if (!j[k].is_number()) throw ParseError(std::string(what) + ": coordinates must be numbers");
    p[k] = j[k].get<double>();
  }
  return p;
}

int dim_from_json(const Json& j, const char* what) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(std::string(what) + ": missing integer field 'dim'");
  int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) throw ParseError(std::string(what) + ": dim must be 2 or 3");
  return dim;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "undecided";
  }
}

}  // namespace

Json to_json(const Polytope& P) {
  Json j;
  j["dim"] = P.dim;
  Json vs = Json::array();
  for (const auto& v : P.vertices) vs.push_back(point_to_json(v, P.dim));
  j["vertices"] = vs;
  return j;
}

Json to_json(const Ball& b) {
  Json j;
  j["center"] = point_to_json(b.center, 3);
  j["radius"] = b.radius;
  return j;
}

Json to_json(const DirectionalMeasure& mu) {
  Json j;
  j["dim"] = mu.dim();
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) {
    Json ja;
    ja["u"] = point_to_json(a.u, mu.dim());
    ja["w"] = a.w;
    atoms.push_back(ja);
  }
  j["atoms"] = atoms;
  j["even"] = mu.even();
  return j;
}

Json to_json(const Barrier& B) {
  Json j;
  j["dim"] = B.dim;
  Json pieces = Json::array();
  for (const auto& p : B.pieces) {
    Json jp = Json::array();
    for (int k = 0; k < p.npts; ++k) jp.push_back(point_to_json(p.p[k], B.dim));
    pieces.push_back(jp);
  }
  j[B.dim == 2 ? "segments" : "triangles"] = pieces;
  return j;
}

Json to_json(const CertifiedBool& cb) {
  Json j;
  j["verdict"] = verdict_name(cb.verdict);
  if (cb.witness)
    j["witness"] = point_to_json(*cb.witness, 3);
  else
    j["witness"] = nullptr;
  j["margin"] = cb.margin;
  j["net_level"] = cb.net_level;
  j["net_delta"] = cb.net_delta;
  return j;
}

Json to_json(const McReport& mc) {
  Json j;
  j["miss_fraction"] = mc.miss_fraction;
  j["ci95"] = Json::array({mc.ci_low, mc.ci_high});
  j["lines"] = mc.lines;
  j["misses"] = mc.misses;
  j["seed"] = mc.seed;
  return j;
}

Json to_json(const StabilityReport& rep) {
  Json j;
  j["dim"] = rep.dim;
  j["eps"] = rep.eps;
  j["deficit"] = rep.deficit;
  j["dbl"] = rep.dbl;
  j["exponent"] = rep.exponent;
  if (std::isnan(rep.ratio))
    j["ratio"] = nullptr;
  else if (std::isinf(rep.ratio))
    j["ratio"] = "inf";
  else
    j["ratio"] = rep.ratio;
  j["equality_case"] = rep.equality_case;
  j["inradius_K"] = rep.inradius_K;
  j["barrier_area"] = rep.barrier_area;
  j["blaschke_inradius"] = rep.blaschke_inradius;
  j["blaschke_surface_area"] = rep.blaschke_surface_area;
  Json rows = Json::array();
  for (const auto& r : rep.beta_table) {
    Json jr;
    jr["beta"] = r.beta;
    jr["jbeta_mass"] = r.jbeta;
    jr["steinerb_rhs"] = r.steinerb_rhs;
    jr["chain_rhs"] = r.chain_rhs;
    rows.push_back(jr);
  }
  j["beta_table"] = rows;
  return j;
}

Json to_json(const CylinderReport& rep) {
  Json j;
  j["s"] = rep.s;
  j["icosphere_level"] = rep.icosphere_level;
  j["projection_containment"] = to_json(rep.projection_containment);
  j["blaschke_body_contained"] = rep.blaschke_body_contained;
  j["violating_vertex"] = point_to_json(rep.violating_vertex, 3);
  j["max_projection_area"] = rep.max_projection_area;
  j["projection_area_bound"] = rep.projection_area_bound;
  j["passed"] = rep.passed;
  return j;
}

Json to_json(const MinkowskiSolution& sol) {
  Json j;
  j["polytope"] = to_json(sol.polytope);
  j["residual"] = sol.residual;
  j["iterations"] = sol.iterations;
  Json vanished = Json::array();
  for (int v : sol.vanished) vanished.push_back(v);
  j["vanished"] = vanished;
  return j;
}

Polytope polytope_from_json(const Json& j) {
  int dim = dim_from_json(j, "polytope");
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw ParseError("polytope: missing non-empty 'vertices' array");
  std::vector<Vec3> pts;
  for (const auto& jp : j["vertices"]) pts.push_back(point_from_json(jp, dim, "polytope vertex"));
  try {
    return Polytope::from_vertices(dim, std::move(pts));
  } catch (const InvalidDataError& e) {
    throw ParseError(std::string("polytope: ") + e.what());
  }
}

Ball ball_from_json(const Json& j) {
  if (!j.contains("center") || !j.contains("radius"))
    throw ParseError("ball: need 'center' and 'radius'");
  if (!j["radius"].is_number()) throw ParseError("ball: radius must be a number");
  Ball b;
  int dim = static_cast<int>(j["center"].size());
  if (dim != 2 && dim != 3) throw ParseError("ball: center must have 2 or 3 coordinates");
  b.center = point_from_json(j["center"], dim, "ball center");
  b.radius = j["radius"].get<double>();
  if (!(b.radius > 0)) throw ParseError("ball: radius must be positive");
  return b;
}

DirectionalMeasure measure_from_json(const Json& j) {
  int dim = dim_from_json(j, "measure");
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw ParseError("measure: missing 'atoms' array");
  std::vector<Atom> atoms;
  for (const auto& ja : j["atoms"]) {
    if (!ja.contains("u") || !ja.contains("w") || !ja["w"].is_number())
      throw ParseError("measure atom: need 'u' and numeric 'w'");
    atoms.push_back({point_from_json(ja["u"], dim, "measure atom"), ja["w"].get<double>()});
  }
  bool even = j.value("even", false);
  try {
    return DirectionalMeasure(dim, std::move(atoms), even);
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("measure: ") + e.what());
  }
}

Barrier barrier_from_json(const Json& j) {
  int dim = dim_from_json(j, "barrier");
  try {
    if (dim == 2) {
      if (!j.contains("segments") || !j["segments"].is_array() || j["segments"].empty())
        throw ParseError("barrier: missing non-empty 'segments' array");
      std::vector<std::array<Vec3, 2>> segs;
      for (const auto& js : j["segments"]) {
        if (!js.is_array() || js.size() != 2) throw ParseError("barrier segment: expected 2 points");
        segs.push_back({point_from_json(js[0], 2, "segment point"),
                        point_from_json(js[1], 2, "segment point")});
      }
      return Barrier::from_segments(segs);
    }
    if (!j.contains("triangles") || !j["triangles"].is_array() || j["triangles"].empty())
      throw ParseError("barrier: missing non-empty 'triangles' array");
    std::vector<std::array<Vec3, 3>> tris;
    for (const auto& jt : j["triangles"]) {
      if (!jt.is_array() || jt.size() != 3) throw ParseError("barrier triangle: expected 3 points");
      tris.push_back({point_from_json(jt[0], 3, "triangle point"),
                      point_from_json(jt[1], 3, "triangle point"),
                      point_from_json(jt[2], 3, "triangle point")});
    }
    return Barrier::from_triangles(tris);
  } catch (const InvalidDataError& e) {
    throw ParseError(std::string("barrier: ") + e.what());
  }
}

std::string beta_table_csv(const StabilityReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "beta,jbeta_mass,steinerb_rhs,chain_rhs\n";
  for (const auto& r : rep.beta_table)
    os << r.beta << ',' << r.jbeta << ',' << r.steinerb_rhs << ',' << r.chain_rhs << '\n';
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json parse error in ") + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace opaque
