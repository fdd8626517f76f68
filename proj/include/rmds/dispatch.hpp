#pragma once

#include <utility>

#include "rmds/gf.hpp"

namespace rmds {

// Calls fn with the engine suited to the field: word arithmetic for large
// prime fields, tables up to 2^20 elements, coefficient vectors otherwise.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  const auto q = spec.order();
  if (q && *q <= TableField::kMaxOrder) return std::forward<Fn>(fn)(TableField(spec));
  if (spec.m == 1) return std::forward<Fn>(fn)(PrimeField(spec.p));
  return std::forward<Fn>(fn)(ExtField(spec));
}

}  // namespace rmds
