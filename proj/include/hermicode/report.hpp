#pragma once

#include <string>

#include "json.hpp"

#include "hermicode/codes.hpp"
#include "hermicode/counting.hpp"
#include "hermicode/sweeps.hpp"

namespace hermicode::report {

using json = nlohmann::ordered_json;

inline json field_info(const gf::FieldCtx& ctx) {
  json j;
  j["p"] = ctx.spec().p;
  j["a"] = ctx.spec().a;
  j["b"] = ctx.spec().b;
  j["modulus"] = ctx.modulus();
  j["g"] = ctx.generator().code;
  j["alpha"] = ctx.alpha().code;
  return j;
}

inline json cyc_value(const charsum::CycInt& v) { return json(v.coeffs()); }

inline json count_value(const std::variant<std::int64_t, charsum::CycInt>& v) {
  if (std::holds_alternative<std::int64_t>(v)) return json(std::get<std::int64_t>(v));
  return cyc_value(std::get<charsum::CycInt>(v));
}

inline json count_report(const counting::CountReport& r) {
  json j;
  j["kind"] = r.kind;
  j["p"] = r.spec.p;
  j["a"] = r.spec.a;
  j["b"] = r.spec.b;
  j["N"] = r.spec.N;
  j["rho"] = r.rho;
  j["form"] = r.form;
  j["v"] = r.v_enc;
  j["scalar"] = r.a_enc;
  j["branch"] = r.branch;
  j["closed_form"] = count_value(r.closed_form);
  j["brute_force"] = count_value(r.brute_force);
  if (r.A_value) j["A_value"] = *r.A_value;
  j["match"] = r.match;
  return j;
}

inline json rational(const codes::Rational& r) { return json::array({r.num, r.den}); }

inline json code_params(const gf::TowerSpec& spec, const codes::CodeParams& p) {
  json j;
  j["label"] = p.label;
  j["p"] = spec.p;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["N"] = spec.N;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d_min"] = p.d_min;
  if (p.w_max) j["w_max"] = *p.w_max;
  if (p.disparity) j["disparity"] = rational(*p.disparity);
  j["lambda"] = rational(p.lambda);
  if (!p.weight_distribution.empty()) {
    json dist = json::object();
    for (const auto& [w, count] : p.weight_distribution)
      dist[std::to_string(w)] = count;
    j["weight_distribution"] = dist;
  }
  if (p.bound_upper != 0) {
    j["bound_lower"] = p.bound_lower;
    j["bound_upper"] = p.bound_upper;
    j["lower_attained"] = p.lower_attained;
    j["upper_attained"] = p.upper_attained;
  }
  return j;
}

inline std::string code_csv(const codes::CodeParams& p) {
  std::string out = "weight,count\n";
  for (const auto& [w, count] : p.weight_distribution)
    out += std::to_string(w) + "," + std::to_string(count) + "\n";
  return out;
}

inline json comparison(const codes::Comparison& c) {
  json j;
  j["codes"] = json::array({c.label_p, c.label_q});
  j["n"] = c.n;
  j["rate"] = json::array({rational(c.rate_p), rational(c.rate_q)});
  j["reliability"] = json::array({rational(c.reliability_p), rational(c.reliability_q)});
  j["lambda"] = json::array({rational(c.lambda_p), rational(c.lambda_q)});
  j["d_diff"] = c.d_diff;
  j["rate_diff"] = rational(c.rate_diff);
  j["lambda_diff"] = rational(c.lambda_diff);
  return j;
}

inline json check_results(const std::vector<sweeps::CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["instances"] = r.instances;
    j["mismatches"] = r.mismatches;
    if (!r.notes.empty()) j["notes"] = r.notes;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace hermicode::report
