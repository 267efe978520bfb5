#include <cstdlib>

#include "doctest.h"
#include "g2maps/universal.hpp"

using namespace g2maps;

namespace {

const TernaryKind kinds[] = {TernaryKind::Sum3Squares, TernaryKind::D122, TernaryKind::D115, TernaryKind::D1Hex};

bool excluded_by_legendre(long n) {
  while (n > 0 && n % 4 == 0) n /= 4;
  return n % 8 == 7;
}

// First hit in the order (|a|, |b|, |c|) lexicographic, + before - from a to c.
std::optional<std::array<long, 3>> naive_ternary(TernaryKind kind, long n) {
  long r = 0;
  while ((r + 1) * (r + 1) <= 2 * n) ++r;
  for (long a = 0; a <= r; ++a)
    for (long b = 0; b <= r; ++b)
      for (long c = 0; c <= r; ++c)
        for (long sa : {1L, -1L})
          for (long sb : {1L, -1L})
            for (long sc : {1L, -1L}) {
              if ((a == 0 && sa < 0) || (b == 0 && sb < 0) || (c == 0 && sc < 0)) continue;
              std::array<long, 3> v{sa * a, sb * b, sc * c};
              if (ternary_value(kind, v) == n) return v;
            }
  return std::nullopt;
}

}  // namespace

TEST_CASE("ternary values") {
  CHECK(ternary_value(TernaryKind::Sum3Squares, {1, 2, 3}) == 14);
  CHECK(ternary_value(TernaryKind::D122, {1, 2, 3}) == 27);
  CHECK(ternary_value(TernaryKind::D115, {1, 2, 3}) == 50);
  CHECK(ternary_value(TernaryKind::D1Hex, {1, 2, 3}) == 39);
  for (auto k : kinds) CHECK_FALSE(to_string(k).empty());
}

TEST_CASE("solve_ternary examples") {
  auto s = solve_ternary(TernaryKind::Sum3Squares, 35);
  REQUIRE(s.has_value());
  CHECK(*s == std::array<long, 3>{1, 3, 5});
  CHECK_FALSE(solve_ternary(TernaryKind::Sum3Squares, 7).has_value());
  CHECK_FALSE(solve_ternary(TernaryKind::Sum3Squares, 28).has_value());
  CHECK(solve_ternary(TernaryKind::Sum3Squares, 0) == std::array<long, 3>{0, 0, 0});
}

TEST_CASE("sums of three squares follow Legendre's criterion") {
  for (long n = 1; n <= 10000; ++n) {
    CAPTURE(n);
    auto s = solve_ternary(TernaryKind::Sum3Squares, n);
    CHECK(s.has_value() == !excluded_by_legendre(n));
    if (s) CHECK(ternary_value(TernaryKind::Sum3Squares, *s) == n);
  }
}

TEST_CASE("ternary solver agrees with naive search and its tie-break") {
  for (auto k : kinds)
    for (long n = 0; n <= 300; ++n) {
      CAPTURE(to_string(k));
      CAPTURE(n);
      CHECK(solve_ternary(k, n) == naive_ternary(k, n));
    }
}

TEST_CASE("represent examples") {
  CHECK(represent(1, 2).vector == Vec4{1, 0, 0, 0});
  CHECK(represent(4, 3).vector == Vec4{1, 1, 0, 0});
  CHECK(represent(2, 4).case_label == "base");
  CHECK(represent(2, 8).case_label == "scaled");
  CHECK_FALSE(represent(3, 31).trace.empty());
  CHECK_THROWS_AS(represent(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(represent(5, 10), std::invalid_argument);
}

TEST_CASE("represent evaluates correctly and respects doubling") {
  for (int id = 1; id <= 4; ++id)
    for (long n = 2; n <= 1500; ++n) {
      auto r = represent(id, n);
      CHECK(evaluate(reference_form(id), r.vector) == n);
      Vec4 twice;
      for (int i = 0; i < 4; ++i) twice[i] = 2 * r.vector[i];
      CHECK(evaluate(reference_form(id), twice) == 4 * n);
      if (n % 4 == 0 && n != 4) {
        Vec4 inner = represent(id, n / 4).vector;
        for (auto& x : inner) x *= 2;
        CHECK(r.vector == inner);
      }
    }
}

TEST_CASE("base vectors: smallest l1 norm, then lexicographically largest, with q = 4") {
  for (int id = 1; id <= 4; ++id) {
    const auto& f = reference_form(id);
    Vec4 best{};
    long best_l1 = -1;
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            Vec4 v{a, b, c, d};
            if (evaluate(f, v) != 4) continue;
            long l1 = std::labs(a) + std::labs(b) + std::labs(c) + std::labs(d);
            if (best_l1 < 0 || l1 < best_l1 || (l1 == best_l1 && v > best)) {
              best = v;
              best_l1 = l1;
            }
          }
    CAPTURE(id);
    CHECK(base_vector(id) == best);
  }
}

TEST_CASE("box enumeration agrees with the short-vector enumerator") {
  for (int id = 1; id <= 4; ++id) CHECK(enumerate_values(reference_form(id), 60) == represented(reference_form(id), 60));
}

TEST_CASE("verify_universal with an oracle") {
  for (int id = 1; id <= 4; ++id) {
    auto r = verify_universal(id, 600, 400, 2);
    CHECK(r.checked == 599);
    CHECK(r.oracle_agrees);
    CHECK(r.oracle_missing.empty());
    long total = 0;
    for (const auto& [label, c] : r.case_counts) total += c;
    CHECK(total == r.checked);
    CHECK(r.case_counts["base"] == 1);
  }
  CHECK_THROWS_AS(verify_universal(1, 1), std::invalid_argument);
}
