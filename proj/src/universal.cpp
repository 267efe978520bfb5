#include "g2maps/universal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "g2maps/parallel.hpp"

namespace g2maps {

namespace {

long isqrt(long n) {
  if (n < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(long n, long& root) {
  root = isqrt(n);
  return root >= 0 && root * root == n;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

[[noreturn]] void fail(int form_id, long n, const std::string& step) {
  throw std::logic_error("represent q" + std::to_string(form_id) + " n=" + std::to_string(n) + ": " + step);
}

std::string vec_text(std::initializer_list<long> v) {
  std::string s = "(";
  bool first = true;
  for (long x : v) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Values of c solving the ternary equation for fixed a, b.
std::vector<long> third_coordinates(TernaryKind kind, long r, long b) {
  std::vector<long> cs;
  long s = 0;
  switch (kind) {
    case TernaryKind::Sum3Squares:
      if (is_square(r - b * b, s)) cs = {s, -s};
      break;
    case TernaryKind::D122:
      if ((r - 2 * b * b) % 2 == 0 && is_square((r - 2 * b * b) / 2, s)) cs = {s, -s};
      break;
    case TernaryKind::D115:
      if ((r - b * b) % 5 == 0 && is_square((r - b * b) / 5, s)) cs = {s, -s};
      break;
    case TernaryKind::D1Hex:
      // c^2 + b c + b^2 = r/2  <=>  (2c + b)^2 = 2r - 3b^2
      if (r % 2 == 0 && is_square(2 * r - 3 * b * b, s))
        for (long t : {s, -s})
          if (mod(t - b, 2) == 0) cs.push_back((t - b) / 2);
      break;
  }
  return cs;
}

bool b_in_range(TernaryKind kind, long r, long b) {
  switch (kind) {
    case TernaryKind::Sum3Squares:
    case TernaryKind::D115:
      return b * b <= r;
    case TernaryKind::D122:
      return 2 * b * b <= r;
    case TernaryKind::D1Hex:
      // b^2 + bc + c^2 >= 3b^2/4
      return 3 * b * b <= 2 * r;
  }
  return false;
}

}  // namespace

std::string to_string(TernaryKind kind) {
  switch (kind) {
    case TernaryKind::Sum3Squares:
      return "a^2+b^2+c^2";
    case TernaryKind::D122:
      return "a^2+2b^2+2c^2";
    case TernaryKind::D115:
      return "a^2+b^2+5c^2";
    case TernaryKind::D1Hex:
      return "a^2+2(b^2+bc+c^2)";
  }
  return "?";
}

long ternary_value(TernaryKind kind, const std::array<long, 3>& v) {
  const auto [a, b, c] = v;
  switch (kind) {
    case TernaryKind::Sum3Squares:
      return a * a + b * b + c * c;
    case TernaryKind::D122:
      return a * a + 2 * b * b + 2 * c * c;
    case TernaryKind::D115:
      return a * a + b * b + 5 * c * c;
    case TernaryKind::D1Hex:
      return a * a + 2 * (b * b + b * c + c * c);
  }
  return -1;
}

std::optional<std::array<long, 3>> solve_ternary(TernaryKind kind, long n) {
  if (n < 0) throw std::invalid_argument("solve_ternary: n must be >= 0");
  auto key = [](const std::array<long, 3>& v) {
    return std::array<long, 4>{std::abs(v[2]), v[0] < 0, v[1] < 0, v[2] < 0};
  };
  for (long a = 0; a * a <= n; ++a) {
    const long r = n - a * a;
    for (long b = 0; b_in_range(kind, r, b); ++b) {
      std::optional<std::array<long, 3>> best;
      for (long sa : {a, -a}) {
        for (long sb : {b, -b}) {
          for (long c : third_coordinates(kind, r, sb)) {
            std::array<long, 3> v{sa, sb, c};
            if (!best || key(v) < key(*best)) best = v;
          }
          if (b == 0) break;
        }
        if (a == 0) break;
      }
      if (best) return best;
    }
  }
  return std::nullopt;
}

const Vec4& base_vector(int form_id) {
  // Generated by the rule in test_universal: smallest sum of |v_i|, then the
  // lexicographically largest vector with q(v) = 4.
  static const std::array<Vec4, 4> table{{
      {0, 0, 0, 1},
      {1, 1, 0, 0},
      {0, 0, 0, 1},
      {0, 0, 1, 0},
  }};
  if (form_id < 1 || form_id > 4) throw std::invalid_argument("base_vector: form id must be 1..4");
  return table[form_id - 1];
}

namespace {

std::array<long, 3> require_ternary(int form_id, long n, TernaryKind kind, long t, Representation& rep) {
  auto sol = solve_ternary(kind, t);
  if (!sol) fail(form_id, n, "no solution of " + to_string(kind) + " = " + std::to_string(t));
  rep.trace.push_back(to_string(kind) + " = " + std::to_string(t) + " at " + vec_text({(*sol)[0], (*sol)[1], (*sol)[2]}));
  return *sol;
}

Vec4 represent_q1(long n, Representation& rep) {
  const long m = n % 8;
  long d;
  if (m == 2 || m == 3 || m == 5) d = 0;
  else if (m == 1 || m == 6 || m == 7) d = 1;
  else fail(1, n, "n mod 8 outside the d cases");
  rep.case_label = "d=" + std::to_string(d);
  rep.trace.push_back("d = " + std::to_string(d));
  auto [a, b, c] = require_ternary(1, n, TernaryKind::D122, n - 4 * d * d, rep);
  if (mod(a - b, 2) != 0) {
    std::swap(b, c);
    rep.trace.push_back("swap b, c");
  }
  if (mod(a - b, 2) != 0) fail(1, n, "a and b have different parity after the swap");
  return {c, (a + b) / 2, (b - a) / 2, d};
}

Vec4 represent_q2(long n, Representation& rep) {
  const long m = (3 * n) % 8;
  long d;
  if (m == 3) d = 1;
  else if (m == 1 || m == 2 || m == 5 || m == 6 || m == 7) d = 0;
  else fail(2, n, "3n mod 8 outside the d cases");
  rep.case_label = "d=" + std::to_string(d);
  rep.trace.push_back("d = " + std::to_string(d));
  auto [a, b, c] = require_ternary(2, n, TernaryKind::D115, 3 * n - 5 * d * d, rep);
  for (long* v : {&a, &b, &c})
    if (mod(*v, 3) == 2) *v = -*v;
  rep.trace.push_back("signs: " + vec_text({a, b, c}));
  if (!(mod(a - c, 3) == 0 && mod(b - d, 3) == 0)) {
    std::swap(a, b);
    rep.trace.push_back("swap a, b");
  }
  if (mod(a - c, 3) != 0 || mod(b - d, 3) != 0) fail(2, n, "a = c and b = d mod 3 not achievable");
  return {c, d, (b - d) / 3, (a - c) / 3};
}

Vec4 represent_q3(long n, Representation& rep) {
  const long m = n % 8;
  long d;
  if (m == 2 || m == 3 || m == 6 || m == 7) d = 0;
  else if (m == 1 || m == 5) d = 1;
  else fail(3, n, "n mod 8 outside the d cases");
  rep.case_label = "d=" + std::to_string(d);
  rep.trace.push_back("d = " + std::to_string(d));
  auto [a, b, c] = require_ternary(3, n, TernaryKind::D1Hex, n - 3 * d * d, rep);
  if (mod(b, 2) == 0 && mod(c, 2) == 0) fail(3, n, "b and c both even");
  if (mod(b - c, 2) == 0) {
    b = b + c;
    c = -c;
    rep.trace.push_back("(b, c) -> (b + c, -c)");
  }
  if (mod(b - c, 2) == 0) fail(3, n, "b and c still of equal parity");
  if (mod(a + c + d, 2) != 0) {
    std::swap(b, c);
    rep.trace.push_back("swap b, c");
  }
  if (mod(a + c + d, 2) != 0) fail(3, n, "a + c + d odd after the swap");
  const long t = (a + c + d) / 2;
  return {b + t, -t, c - t, d};
}

// The 48 signed permutations of v, permutations outermost.
std::vector<std::array<long, 3>> signed_permutations(const std::array<long, 3>& v) {
  std::vector<std::array<long, 3>> out;
  std::array<int, 3> idx{0, 1, 2};
  do {
    for (int s = 0; s < 8; ++s) {
      std::array<long, 3> p;
      for (int i = 0; i < 3; ++i) p[i] = (s >> (2 - i) & 1) ? -v[idx[i]] : v[idx[i]];
      out.push_back(p);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

Vec4 represent_q4(long n, Representation& rep) {
  if (n % 2 == 0) {
    rep.case_label = "even";
    const auto sol = require_ternary(4, n, TernaryKind::Sum3Squares, n, rep);
    for (const auto& [a, b, c] : signed_permutations(sol)) {
      if (mod(a - b, 3) != 0) continue;
      if (mod(a - b + 3 * c, 6) != 0) fail(4, n, "a - b + 3c not divisible by 6");
      rep.trace.push_back("arranged " + vec_text({a, b, c}));
      return {(2 * a + b) / 3, 0, (a - b + 3 * c) / 6, (b - a) / 3};
    }
    fail(4, n, "no signed permutation with a = b mod 3");
  }
  rep.case_label = "odd";
  const long d = 3;
  rep.trace.push_back("d = 3");
  const auto sol = require_ternary(4, n, TernaryKind::Sum3Squares, 4 * n - d * d, rep);
  for (long v : sol)
    if (mod(v, 2) == 0) fail(4, n, "a, b, c not all odd");
  for (const auto& [a, b, c] : signed_permutations(sol)) {
    if (mod(a - b, 3) != 0 || mod(a - b - c - d, 4) != 0) continue;
    if (mod(2 * a + b + d, 6) != 0 || mod(a - b + 3 * c - d, 12) != 0 || mod(b - a, 6) != 0)
      fail(4, n, "assembled coordinates not integral");
    rep.trace.push_back("arranged " + vec_text({a, b, c}));
    return {(2 * a + b + d) / 6, d / 3, (a - b + 3 * c - d) / 12, (b - a) / 6};
  }
  fail(4, n, "no signed permutation with a = b mod 3 and a = b + c + d mod 4");
}

}  // namespace

Representation represent(int form_id, long n) {
  if (form_id < 1 || form_id > 4) throw std::invalid_argument("represent: form id must be 1..4");
  if (n < 2) throw std::invalid_argument("represent: n must be > 1");
  Representation rep{form_id, n, {}, {}, {}};
  if (n == 4) {
    rep.vector = base_vector(form_id);
    rep.case_label = "base";
    rep.trace.push_back("base vector for 4");
  } else if (n % 4 == 0) {
    Representation inner = represent(form_id, n / 4);
    for (std::size_t i = 0; i < 4; ++i) rep.vector[i] = 2 * inner.vector[i];
    rep.case_label = "scaled";
    rep.trace.push_back("n = 4 * " + std::to_string(n / 4) + ", doubling");
    rep.trace.insert(rep.trace.end(), inner.trace.begin(), inner.trace.end());
  } else {
    switch (form_id) {
      case 1: rep.vector = represent_q1(n, rep); break;
      case 2: rep.vector = represent_q2(n, rep); break;
      case 3: rep.vector = represent_q3(n, rep); break;
      case 4: rep.vector = represent_q4(n, rep); break;
    }
  }
  if (evaluate(reference_form(form_id), rep.vector) != n) fail(form_id, n, "assembled vector does not evaluate to n");
  return rep;
}

std::set<long> enumerate_values(const QForm4& f, long bound) {
  const RatMat inv = inverse(f.rational_gram());
  std::array<long, 4> box;
  for (std::size_t i = 0; i < 4; ++i) box[i] = floor_sqrt(bound * inv(i, i)).get_si();
  std::array<std::array<long, 4>, 4> g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = f.gram()(i, j).get_si();
  std::set<long> out;
  for (long w = -box[0]; w <= box[0]; ++w)
    for (long x = -box[1]; x <= box[1]; ++x)
      for (long y = -box[2]; y <= box[2]; ++y)
        for (long z = -box[3]; z <= box[3]; ++z) {
          const long v[4] = {w, x, y, z};
          long q = 0;
          for (int i = 0; i < 4; ++i) {
            q += g[i][i] * v[i] * v[i];
            for (int j = i + 1; j < 4; ++j) q += 2 * g[i][j] * v[i] * v[j];
          }
          if (q > 0 && q <= bound) out.insert(q);
        }
  return out;
}

UniversalReport verify_universal(int form_id, long max_n, long oracle_max, unsigned jobs) {
  if (max_n < 2) throw std::invalid_argument("verify_universal: max must be >= 2");
  std::vector<long> ns(max_n - 1);
  std::iota(ns.begin(), ns.end(), 2);
  const auto reps = parallel_map(ns, [form_id](long n) { return represent(form_id, n); }, jobs);

  UniversalReport report;
  report.form_id = form_id;
  report.max_n = max_n;
  for (const auto& r : reps) {
    ++report.checked;
    ++report.case_counts[r.case_label];
  }
  if (oracle_max > 0) {
    report.oracle_max = oracle_max;
    const auto values = enumerate_values(reference_form(form_id), oracle_max);
    for (long n = 2; n <= oracle_max; ++n)
      if (!values.count(n)) report.oracle_missing.push_back(n);
    // A constructive representation of every n in range means the oracle must
    // see all of them, and 1 must be absent.
    report.oracle_agrees = report.oracle_missing.empty() && !values.count(1);
    if (oracle_max > max_n)
      for (long n = max_n + 1; n <= oracle_max; ++n) represent(form_id, n);
  }
  return report;
}

}  // namespace g2maps
