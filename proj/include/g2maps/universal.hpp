#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2maps/qforms.hpp"

namespace g2maps {

enum class TernaryKind {
  Sum3Squares,  // a^2 + b^2 + c^2
  D122,         // a^2 + 2b^2 + 2c^2
  D115,         // a^2 + b^2 + 5c^2
  D1Hex,        // a^2 + 2(b^2 + bc + c^2)
};

std::string to_string(TernaryKind kind);
long ternary_value(TernaryKind kind, const std::array<long, 3>& v);

/// Exhaustive search. Among all solutions returns the one with
/// lexicographically smallest (|a|, |b|, |c|), preferring + over - in a, then
/// b, then c.
std::optional<std::array<long, 3>> solve_ternary(TernaryKind kind, long n);

struct Representation {
  int form_id = 0;
  long n = 0;
  Vec4 vector{};
  /// Case taken at the top level, used for histograms: "base", "scaled",
  /// "d=0", "d=1", "even", "odd".
  std::string case_label;
  std::vector<std::string> trace;
};

/// Follows the case analysis for q_form_id; the returned vector is checked
/// with evaluate. Throws std::logic_error naming the failing step.
Representation represent(int form_id, long n);

/// The fixed vectors with q(v) = 4 used as the base of the 4n recursion.
const Vec4& base_vector(int form_id);

struct UniversalReport {
  int form_id = 0;
  long max_n = 0;
  long checked = 0;
  std::map<std::string, long> case_counts;
  /// Brute-force cross-check; oracle_max = 0 when skipped.
  long oracle_max = 0;
  bool oracle_agrees = true;
  std::vector<long> oracle_missing;
};

/// represent(form_id, n) for 2 <= n <= max_n; throws std::logic_error with the
/// offending n on failure.
UniversalReport verify_universal(int form_id, long max_n, long oracle_max = 0, unsigned jobs = 1);

/// Values q(v) <= bound over a box of integer vectors, independent of the
/// short-vector enumerator.
std::set<long> enumerate_values(const QForm4& f, long bound);

}  // namespace g2maps
