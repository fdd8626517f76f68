#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rmds/bounds.hpp"
#include "rmds/codes.hpp"
#include "rmds/faulty.hpp"
#include "rmds/family.hpp"
#include "rmds/gf.hpp"
#include "rmds/matrix.hpp"
#include "rmds/report.hpp"

// JSON forms. Field elements are plain integers over prime fields and
// coefficient arrays (constant term first) otherwise; on input an integer
// over an extension field is read as the index Σ c_i p^i. All indices
// (columns, points, cells, rows) are 0-based.

namespace rmds {

using json = nlohmann::ordered_json;

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);  // {"p":…, "m":…, optional "modulus":[…]}

template <class Field>
json element_to_json(const Field& F, const typename Field::value_type& x) {
  if (F.degree() == 1) return F.to_coeffs(x)[0];
  return F.to_coeffs(x);
}

template <class Field>
typename Field::value_type element_from_json(const Field& F, const json& j) {
  if (j.is_array()) {
    const auto c = j.get<std::vector<u64>>();
    return F.from_coeffs(c);
  }
  require(j.is_number_unsigned() || j.is_number_integer(), Errc::MalformedInput, "field element must be an integer");
  const auto v = j.get<long long>();
  require(v >= 0, Errc::MalformedInput, "field element index must be nonnegative");
  require(!F.order() || static_cast<u64>(v) < *F.order(), Errc::MalformedInput, "field element index out of range");
  return F.element(static_cast<u64>(v));
}

// {"rows": r, "cols": c, "data": [[…], …]}
template <class Field>
json matrix_to_json(const Matrix<Field>& M) {
  json data = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(element_to_json(M.field(), M(i, j)));
    data.push_back(std::move(r));
  }
  return json{{"rows", M.rows()}, {"cols", M.cols()}, {"data", std::move(data)}};
}

// Accepts the object form or a bare array of rows.
template <class Field>
Matrix<Field> matrix_from_json(const Field& F, const json& in) {
  if (in.is_object()) {
    require(in.contains("data"), Errc::MalformedInput, "matrix object lacks \"data\"");
    const auto M = matrix_from_json(F, in.at("data"));
    require(M.rows() == in.value("rows", M.rows()) && M.cols() == in.value("cols", M.cols()), Errc::MalformedInput,
            "matrix shape disagrees with \"rows\"/\"cols\"");
    return M;
  }
  const json& j = in;
  require(j.is_array() && !j.empty() && j[0].is_array(), Errc::MalformedInput, "matrix must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  Matrix<Field> M(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, Errc::MalformedInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) M(i, c) = element_from_json(F, j[i][c]);
  }
  return M;
}

// {"field":…, "generator":[[…]], "label":…}
template <class Field>
json code_to_json(const Code<Field>& C) {
  return json{{"field", field_to_json(C.field.spec())}, {"label", C.label}, {"n", C.n()}, {"k", C.k()},
              {"generator", matrix_to_json(C.G)}};
}

template <class Field>
Code<Field> code_from_json(const Field& F, const json& j) {
  require(j.contains("generator"), Errc::MalformedInput, "code file lacks \"generator\"");
  auto G = matrix_from_json(F, j.at("generator"));
  return Code<Field>{F, std::move(G), j.value("label", std::string("code"))};
}

json family_to_json(const SetFamily& f);
SetFamily family_from_json(const json& j);
json pattern_to_json(const ErasurePattern& E);
ErasurePattern pattern_from_json(const json& j);
json report_to_json(const VerificationReport& r, bool reproducible);
json minor_to_json(const MinorDesc& M);
json trace_to_json(const FaultyTrace& T);
json bigint_to_json(const BigInt& x);  // number when it fits in 64 bits, decimal string otherwise
json threshold_to_json(const Threshold& t);

}  // namespace rmds
