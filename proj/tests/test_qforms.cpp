#include <random>

#include "doctest.h"
#include "g2maps/qforms.hpp"

using namespace g2maps;

namespace {

IntMat random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, 3), coef(-2, 2), sign(0, 1);
  IntMat u = IntMat::identity(4);
  for (int step = 0; step < 6; ++step) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    mpz_class c = coef(rng);
    for (int i = 0; i < 4; ++i) u(i, b) += c * u(i, a);
  }
  if (sign(rng))
    for (int i = 0; i < 4; ++i) u(i, 1) = -u(i, 1);
  return u;
}

// Counts by exhaustive box search; the box covers every vector of norm <= max_n
// because each form has minimum eigenvalue above 1/2.
std::map<long, long> theta_oracle(const QForm4& f, long max_n) {
  std::map<long, long> out;
  const long r = 5;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c)
        for (long d = -r; d <= r; ++d) {
          long v = evaluate(f, {a, b, c, d});
          if (v >= 1 && v <= max_n) ++out[v];
        }
  return out;
}

}  // namespace

TEST_CASE("reference forms") {
  CHECK(reference_form(1).determinant() == 64);
  CHECK(reference_form(2).determinant() == 25);
  CHECK(reference_form(3).determinant() == 36);
  CHECK(reference_form(4).determinant() == 81);
  CHECK_THROWS_AS(reference_form(5), std::invalid_argument);
  for (int id = 1; id <= 4; ++id) CHECK_FALSE(reference_form_text(id).empty());
  CHECK_THROWS(QForm4(IntMat{{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("evaluation") {
  // q4 = 2w^2 + 3x^2 + 4y^2 + 6z^2 - 2wx + 2wz + 2xy + 4yz
  CHECK(evaluate(reference_form(4), {1, 1, 0, 0}) == 3);
  CHECK(evaluate(reference_form(4), {0, 0, 1, 0}) == 4);
  CHECK(evaluate(reference_form(4), {1, 0, 0, 1}) == 10);
  CHECK(evaluate(reference_form(1), {1, 0, 0, 0}) == 2);
  CHECK(evaluate(reference_form(1), {0, 1, -1, 0}) == 4);
  CHECK(evaluate(reference_form(2), {1, 0, 0, -1}) == 3);
  CHECK(evaluate(reference_form(3), {1, -1, 0, 0}) == 3);
}

TEST_CASE("theta prefixes agree with a box count") {
  for (int id = 1; id <= 4; ++id) {
    const auto& f = reference_form(id);
    auto got = theta_prefix(f, 12);
    auto want = theta_oracle(f, 12);
    for (long n = 1; n <= 12; ++n) {
      CAPTURE(id);
      CAPTURE(n);
      CHECK((got.count(n) ? got[n] : 0) == (want.count(n) ? want[n] : 0));
    }
    auto vals = represented(f, 12);
    for (long n = 1; n <= 12; ++n) CHECK(vals.count(n) == (want.count(n) ? 1u : 0u));
  }
}

TEST_CASE("none of the reference forms represents 1") {
  for (int id = 1; id <= 4; ++id) CHECK_FALSE(represented(reference_form(id), 31).count(1));
}

TEST_CASE("reference forms are pairwise inequivalent") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(equivalent(reference_form(i), reference_form(j)).has_value() == (i == j));
}

TEST_CASE("equivalence under random unimodular changes of basis") {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    const int id = 1 + t % 4;
    const auto& f = reference_form(id);
    IntMat u = random_unimodular(rng);
    QForm4 g(u.transpose() * f.gram() * u);
    CHECK(theta_prefix(g, 10) == theta_prefix(f, 10));
    CHECK(g.determinant() == f.determinant());
    auto w = equivalent(f, g);
    REQUIRE(w.has_value());
    CHECK(is_witness(f, g, *w));
    auto back = equivalent(g, f);
    REQUIRE(back.has_value());
    CHECK(is_witness(g, f, *back));
    auto c = classify_form(g);
    REQUIRE(c.has_value());
    CHECK(c->form_id == id);
    CHECK(w->transpose() * f.gram() * *w == g.gram());
  }
}

TEST_CASE("witness checking rejects bad matrices") {
  const auto& f = reference_form(1);
  CHECK(is_witness(f, f, IntMat::identity(4)));
  IntMat twice = IntMat::identity(4);
  twice(0, 0) = 2;
  CHECK_FALSE(is_witness(f, f, twice));
  IntMat swap{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_FALSE(is_witness(f, f, swap));
}

TEST_CASE("conversion from rational gram matrices") {
  RatMat g = reference_form(3).rational_gram();
  CHECK(to_qform(g).gram() == reference_form(3).gram());
  g(0, 1) = mpq_class(1, 2);
  g(1, 0) = mpq_class(1, 2);
  CHECK_THROWS_AS(to_qform(g), std::domain_error);
}

TEST_CASE("an unrelated form is not classified") {
  QForm4 f(IntMat{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  CHECK_FALSE(classify_form(f).has_value());
}
