#pragma once

#include <initializer_list>
#include <optional>
#include <string>

#include "frob/linalg.hpp"

namespace frob::test {

inline Scalar Q(const std::string& text, FieldSpec field = FieldSpec::rational()) {
  return parse_scalar(text, field);
}

inline Scalar Q(long value, FieldSpec field = FieldSpec::rational()) { return Scalar::from_int(field, value); }

inline Vector vec(std::initializer_list<const char*> entries, FieldSpec field = FieldSpec::rational()) {
  Vector v;
  for (const char* e : entries) v.push_back(Q(e, field));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows,
                  FieldSpec field = FieldSpec::rational()) {
  std::vector<Scalar> entries;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    cols = r.size();
    for (const char* e : r) entries.push_back(Q(e, field));
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

// Kind of the Error thrown by fn, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace frob::test
