#include "twocyc/report.hpp"

#include "twocyc/textio.hpp"

namespace twocyc {

const char* version() { return "0.1.0"; }

Json report_envelope(const std::string& command, Json inputs, Json result,
                     long budget_seconds, const std::string& status,
                     long elapsed_ms) {
  Json j;
  j["command"] = command;
  j["version"] = version();
  j["inputs"] = std::move(inputs);
  j["budget_seconds"] = budget_seconds;
  j["status"] = status;
  j["elapsed_ms"] = elapsed_ms;
  j["result"] = std::move(result);
  return j;
}

namespace {

Json point_to_json(const std::vector<QuadExt>& point) {
  Json arr = Json::array();
  for (const QuadExt& x : point) arr.push_back(to_string(x));
  return arr;
}

const char* kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::lower_bound:
      return "lower_bound";
    case Certificate::Kind::upper_bound:
      return "upper_bound";
    case Certificate::Kind::weak_point_order:
      return "weak_point_order";
  }
  return "?";
}

}  // namespace

Json to_json(const Certificate& cert) {
  Json j;
  j["kind"] = kind_name(cert.kind);
  j["d"] = cert.degree;
  j["point"] = point_to_json(cert.point);
  j["order"] = cert.order;
  j["witness_index"] = cert.witness_index;
  j["witness_value"] = to_string(cert.witness_value);
  Json rows = Json::array();
  for (const auto& row : cert.matrix) {
    Json r = Json::array();
    for (const QuadExt& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  j["determinant"] = to_string(cert.determinant);
  j["proposition"] = cert.proposition;
  j["verdict"] = cert.verdict;
  j["certified"] = cert.certified;
  return j;
}

Json to_json(const OrbitReport& rep) {
  Json j;
  Json orbits = Json::array();
  for (const Orbit& o : rep.orbits) {
    Json e;
    e["x"] = static_cast<double>(o.x);
    e["y"] = static_cast<double>(o.y);
    e["enclosure"] = {rat_to_string(o.enclosure_lo), rat_to_string(o.enclosure_hi)};
    e["residual"] = static_cast<double>(o.residual);
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  j["orbit_count"] = rep.orbits.size();
  Json fixed = Json::array();
  for (long double x : rep.fixed_points) fixed.push_back(static_cast<double>(x));
  j["fixed_points"] = std::move(fixed);
  j["fixed_point_count"] = rep.fixed_point_count;
  j["window"] = static_cast<double>(rep.window);
  j["tolerance"] = static_cast<double>(rep.tol);
  j["non_isolated"] = rep.non_isolated;
  j["orbits_partner_outside"] = rep.orbits_partner_outside;
  j["grid_per_side"] = rep.grid_per_side;
  return j;
}

Json to_json(const StaircaseResult& res) {
  Json j;
  j["ok"] = res.ok;
  j["detail"] = res.detail;
  Json steps = Json::array();
  for (const StaircaseStep& st : res.steps) {
    Json e;
    Json params = Json::array();
    for (const Rat& a : st.params) params.push_back(rat_to_string(a));
    e["params"] = std::move(params);
    e["orbit_count"] = st.orbit_count;
    Json xs = Json::array();
    for (long double x : st.orbit_xs) xs.push_back(static_cast<double>(x));
    e["orbit_xs"] = std::move(xs);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["final"] = to_json(res.final_report);
  return j;
}

Json to_json(const UpperHypothesesResult& res) {
  Json j;
  j["ok"] = res.ok;
  j["inconclusive"] = res.inconclusive;
  j["m"] = res.m;
  j["cyclicity_upper_bound"] = res.ok ? Json(res.m - 1) : Json(nullptr);
  j["verified_through_k"] = res.verified_through_k;
  j["detail"] = res.detail;
  return j;
}

Json to_json(const LradResult& res) {
  Json j;
  j["ok"] = res.ok;
  j["inconclusive"] = res.inconclusive;
  j["ell"] = res.ell;
  j["max_weak_point_order"] = res.ok ? Json(res.ell - 1) : Json(nullptr);
  Json prof;
  for (const auto& [k, n] : res.exponent_profile) prof[std::to_string(k)] = n;
  j["exponent_profile"] = std::move(prof);
  j["detail"] = res.detail;
  return j;
}

Json constants_to_json(const ConstantsTable& table) {
  Json j;
  j["d"] = table.degree;
  Json ring = Json::array();
  for (const auto& v : table.ring->vars()) ring.push_back(v);
  j["ring"] = std::move(ring);
  Json w;
  for (const auto& [k, p] : table.W) w[std::to_string(k)] = to_string(p);
  j["W"] = std::move(w);
  Json v;
  for (const auto& [k, p] : table.V) v[std::to_string(k)] = to_string(p);
  j["V"] = std::move(v);
  return j;
}

}  // namespace twocyc
