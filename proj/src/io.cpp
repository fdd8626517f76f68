#include "rmds/io.hpp"

#include <cmath>

namespace rmds {

json field_to_json(const FieldSpec& spec) {
  return json{{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}, {"name", spec.to_string()}};
}

FieldSpec field_from_json(const json& j) {
  require(j.is_object() && j.contains("p"), Errc::MalformedInput, "field must be an object with \"p\"");
  const u64 p = j.at("p").get<u64>();
  const unsigned m = j.value("m", 1u);
  require(is_prime(p), Errc::InvalidField, "field characteristic must be prime");
  require(m >= 1, Errc::InvalidField, "extension degree must be positive");
  if (!j.contains("modulus")) return smallest_field_spec(p, m);
  FieldSpec s{p, m, j.at("modulus").get<std::vector<u64>>()};
  validate_spec(s);
  return s;
}

json family_to_json(const SetFamily& f) {
  json sets = json::array();
  for (std::size_t i = 0; i < f.ell(); ++i) sets.push_back(f.members(i));
  return json{{"n", f.n()}, {"sets", sets}};
}

SetFamily family_from_json(const json& j) {
  require(j.contains("n") && j.contains("sets"), Errc::MalformedInput, "family needs \"n\" and \"sets\"");
  return SetFamily(j.at("n").get<std::size_t>(), j.at("sets").get<std::vector<std::vector<std::size_t>>>());
}

json pattern_to_json(const ErasurePattern& E) {
  json cells = json::array();
  for (auto [i, j] : E.cells()) cells.push_back({i, j});
  return json{{"m", E.m()}, {"n", E.n()}, {"erased", cells}};
}

ErasurePattern pattern_from_json(const json& j) {
  require(j.contains("m") && j.contains("n"), Errc::MalformedInput, "pattern needs \"m\" and \"n\"");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (const auto& c : j.value("erased", j.value("cells", json::array()))) {
    require(c.is_array() && c.size() == 2, Errc::MalformedInput, "cells are [row, column] pairs");
    cells.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  }
  return ErasurePattern(j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), cells);
}

json report_to_json(const VerificationReport& r, bool reproducible) {
  json out{{"property", r.property}, {"params", r.params}, {"verdict", verdict_name(r.verdict)}};
  if (r.witness) {
    const auto& w = *r.witness;
    json jw{{"kind", w.kind}, {"note", w.note}};
    if (w.family) jw["family"] = family_to_json(*w.family);
    if (w.pattern) jw["pattern"] = pattern_to_json(*w.pattern);
    if (!w.indices.empty()) jw["indices"] = w.indices;
    if (!w.words.empty()) jw["words"] = w.words;
    out["witness"] = jw;
  } else {
    out["witness"] = nullptr;
  }
  out["checked"] = r.checked;
  out["seed"] = r.seed;
  out["log2_error"] = std::isfinite(r.log2_error) ? json(r.log2_error) : json(nullptr);
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (!reproducible) out["wall_ms"] = r.wall_ms;
  return out;
}

json minor_to_json(const MinorDesc& M) { return json{{"rows", M.rows}, {"cols", M.cols}}; }

json trace_to_json(const FaultyTrace& T) {
  json D = json::array();
  for (const auto& M : T.D) D.push_back(minor_to_json(M));
  return json{{"B", T.B},
              {"R", T.R},
              {"D", D},
              {"outcome", T.outcome == TraceOutcome::Success ? "SUCCESS" : "trace"},
              {"seed", T.seed}};
}

json bigint_to_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<u64>::max())) return x.convert_to<u64>();
  return x.str();
}

json threshold_to_json(const Threshold& t) {
  json out{{"kind", threshold_name(t.kind)}, {"log2_threshold", t.log2}};
  out["threshold"] = t.value ? bigint_to_json(*t.value) : json(nullptr);
  if (t.L) out["L"] = *t.L;
  out["e_upper"] = kEUpper;
  if (!t.note.empty()) out["note"] = t.note;
  return out;
}

}  // namespace rmds
