#pragma once

// JSON serialization of result types.

#include <cmath>
#include <optional>
#include <string>

#include <json.hpp>

#include "casimir.hpp"
#include "coeffs.hpp"
#include "conformal.hpp"
#include "domains.hpp"
#include "interval.hpp"
#include "kernels.hpp"
#include "verify.hpp"
#include "zetafns.hpp"

namespace hybridspec::io {

using json = nlohmann::ordered_json;

// Non-finite values become null.
inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json exponent_map(const std::map<double, double>& m) {
  json out = json::array();
  for (const auto& [e, c] : m) out.push_back({{"exponent", e}, {"coefficient", number(c)}});
  return out;
}

inline json to_json(const interval::WaveNumbers& w) {
  return {{"values", w.values},
          {"zero_mode_count", w.zero_mode_count},
          {"excluded_imaginary", w.excluded_imaginary},
          {"first_branch", w.first_branch}};
}

inline json to_json(const domains::Spectrum& s) {
  json levels = json::array();
  for (const auto& l : s.levels) levels.push_back({{"lambda", l.lambda}, {"degeneracy", l.degeneracy}});
  return {{"cutoff", s.cutoff},
          {"operator_shift", s.operator_shift},
          {"zero_mode_count", s.zero_mode_count},
          {"mode_count", s.mode_count()},
          {"levels", levels}};
}

inline json to_json(const kernels::TraceSamples& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.t_values.size(); ++i) rows.push_back({{"t", s.t_values[i]}, {"value", s.k_values[i]}});
  return {{"kind", kernels::to_string(s.kind)}, {"truncation_bound", number(s.truncation_bound)}, {"samples", rows}};
}

inline json to_json(const kernels::AsymptoticFit& f) {
  return {{"plain", exponent_map(f.plain)},
          {"log", exponent_map(f.log)},
          {"pinned_plain", exponent_map(f.pinned.plain)},
          {"pinned_log", exponent_map(f.pinned.log)},
          {"residual_rms", number(f.residual_rms)},
          {"condition_estimate", number(f.condition_estimate)},
          {"t_min", f.t_min},
          {"t_max", f.t_max},
          {"samples", f.samples}};
}

inline json to_json(const kernels::LogDetection& d) {
  return {{"h", d.h},
          {"log_coefficient", d.log_coefficient},
          {"expected", d.expected},
          {"residual_with_log", d.residual_with_log},
          {"residual_without_log", d.residual_without_log},
          {"improvement_ratio", number(d.improvement_ratio)},
          {"excluded_rows", d.excluded_rows},
          {"with_log", to_json(d.with_log)},
          {"without_log", to_json(d.without_log)}};
}

inline json to_json(const kernels::HalfDiscFit& f) {
  return {{"inverse_t", f.inverse_t},
          {"inverse_sqrt_t", f.inverse_sqrt_t},
          {"constant", f.constant},
          {"constant_expected", f.constant_expected},
          {"sqrt_t", f.sqrt_t},
          {"modes", f.modes},
          {"constant_fit", to_json(f.constant_fit)},
          {"sqrt_fit", to_json(f.sqrt_fit)}};
}

inline json to_json(const coeffs::Coefficient& c) {
  switch (c.state) {
    case coeffs::Coefficient::State::known: return number(c.value);
    case coeffs::Coefficient::State::undetermined: return "undetermined";
    case coeffs::Coefficient::State::absent: return nullptr;
  }
  return nullptr;
}

inline json to_json(const coeffs::CoefficientTable& t) {
  json entries = json::array();
  for (const auto& [k, e] : t.entries) {
    json row = {{"k", k}, {"plain", to_json(e.plain)}, {"log", to_json(e.log)}};
    auto it = t.provenance.find(k);
    if (it != t.provenance.end()) row["source"] = it->second;
    entries.push_back(row);
  }
  return {{"side", t.side == coeffs::Side::heat ? "heat" : "cylinder"}, {"dimension", t.dimension}, {"entries", entries}};
}

inline json to_json(const coeffs::C1Result& r) {
  json j = {{"c1", r.value}, {"bulk", r.bulk}, {"boundary", r.boundary}, {"robin", r.robin}, {"corners", r.corners}};
  if (!r.validity_note.empty()) j["note"] = r.validity_note;
  return j;
}

inline json to_json(const zetafns::ZetaValue& z) {
  json j = {{"at", z.at}, {"value", number(z.value)}};
  if (z.derivative) j["derivative"] = number(*z.derivative);
  if (z.residue) j["residue"] = number(*z.residue);
  j["h2_estimate"] = z.h2_estimate;
  j["route"] = z.route;
  return j;
}

inline json to_json(const zetafns::HemisphereZetaReport& r) {
  json j = {{"pair", zetafns::to_string(r.pair)}, {"zeta_prime_0", r.closed}, {"binomial_route", r.binomial}};
  if (r.pair == zetafns::HemiPair::ND) j["barnes_route"] = r.barnes;
  j["max_difference"] = r.max_difference;
  return j;
}

inline json to_json(const casimir::CasimirResult& r) {
  json j = {{"pair", interval::to_string(r.pair)},
            {"h", r.h},
            {"route", casimir::to_string(r.route)},
            {"energy", number(r.energy)},
            {"tolerance", r.tolerance},
            {"residue", r.residue}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline json to_json(const casimir::SqrtFit& f) {
  return {{"columns", f.columns},
          {"coefficients", f.coefficients},
          {"sqrt_coefficient", f.sqrt_coefficient},
          {"expected", f.expected},
          {"relative_error", f.relative_error},
          {"residual_rms", f.residual_rms}};
}

inline json to_json(const casimir::RelationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"h", e.h}, {"lambda", e.lambda}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"deviation", e.deviation}, {"tolerance", e.tolerance}});
  return {{"pair", interval::to_string(r.pair)}, {"h_grid", r.h_grid}, {"F", r.f_values}, {"entries", entries}};
}

inline json to_json(const conformal::DiscActionReport& r) {
  return {{"closed_form", r.closed_form},
          {"hemisphere", r.hemisphere},
          {"cocycle", r.cocycle},
          {"hemisphere_plus_cocycle", r.combined},
          {"difference", r.difference},
          {"direct_cocycle", r.direct_cocycle},
          {"hemisphere_plus_direct_cocycle", r.direct_combined},
          {"tolerance", r.tolerance},
          {"agree", r.agree}};
}

inline json to_json(const verify::CheckResult& c) {
  return {{"name", c.name},
          {"observed", number(c.observed)},
          {"expected", number(c.expected)},
          {"tolerance", c.tolerance},
          {"tolerance_kind", c.relative ? "relative" : "absolute"},
          {"passed", c.passed}};
}

inline json to_json(const verify::CriterionResult& r, bool timings) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json j = {{"criterion", r.number}, {"tag", r.tag}, {"title", r.title}, {"passed", r.passed}, {"checks", checks}};
  if (!r.error.empty()) j["error"] = r.error;
  if (timings) {
    j["runtime_seconds"] = r.runtime_seconds;
    if (r.runtime_limit > 0) j["runtime_limit"] = r.runtime_limit;
  }
  return j;
}

}  // namespace hybridspec::io
