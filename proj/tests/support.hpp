#pragma once

#include <doctest.h>

#include <sstream>
#include <string>

#include "qschubert/golden.hpp"

namespace qs = qschubert;

inline qs::Laurent vpow(int k, long c = 1) { return qs::Laurent::monomial(k, c); }
inline qs::Rat rat(const qs::Laurent& n, const qs::Laurent& d = qs::Laurent(1L)) {
  return qs::Rat(n, d);
}

template <class F>
qs::ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const qs::Error& e) {
    return e.kind();
  }
  return qs::ErrorKind::Internal;
}

inline std::string data_path(const std::string& file) {
  return std::string(QSCHUBERT_TEST_DATA) + "/" + file;
}

std::string read_text(const std::string& path);

namespace doctest {
template <>
struct StringMaker<qs::Laurent> {
  static String convert(const qs::Laurent& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<qs::Rat> {
  static String convert(const qs::Rat& x) { return x.str().c_str(); }
};
}  // namespace doctest
