#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace spherecheck {

using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Parses an optionally signed decimal integer; returns false on malformed input.
bool parse_integer(const std::string& text, Integer& out);

// Lexicographic comparison of equal-length vectors.
int compare_vectors(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace spherecheck
