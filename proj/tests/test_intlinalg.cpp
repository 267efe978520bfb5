#include <random>

#include "doctest.h"
#include "g2maps/intlinalg.hpp"

using namespace g2maps;

namespace {

// Integer column combination of m with coefficients c.
std::vector<mpz_class> combine(const IntMat& m, const std::vector<long>& c) {
  std::vector<mpz_class> v(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] += m(i, j) * c[j];
  return v;
}

// Membership in the lattice of a full-rank lower-triangular basis, by forward
// substitution. Independent of solve()/in_lattice().
bool in_triangular(const IntMat& h, std::vector<mpz_class> v) {
  for (std::size_t j = 0; j < h.cols(); ++j) {
    const mpz_class& p = h(j, j);
    if (p == 0) return false;
    if (v[j] % p != 0) return false;
    mpz_class k = v[j] / p;
    for (std::size_t i = j; i < h.rows(); ++i) v[i] -= k * h(i, j);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

mpz_class det3(const IntMat& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

IntMat random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

IntMat random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), coef(-3, 3), sign(0, 1);
  IntMat u = IntMat::identity(n);
  for (int step = 0; step < 8; ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    mpz_class k = coef(rng);
    for (std::size_t i = 0; i < n; ++i) u(i, b) += k * u(i, a);
  }
  if (sign(rng))
    for (std::size_t i = 0; i < n; ++i) u(i, 0) = -u(i, 0);
  return u;
}

IntMat random_nonsingular(std::mt19937& rng, std::size_t n, int lo, int hi) {
  for (;;) {
    IntMat m = random_matrix(rng, n, lo, hi);
    if (det(to_rational(m)) != 0) return m;
  }
}

}  // namespace

TEST_CASE("floor, ceil and integer square root over Q") {
  CHECK(floor_div(mpq_class(7, 2)) == 3);
  CHECK(floor_div(mpq_class(-7, 2)) == -4);
  CHECK(ceil_div(mpq_class(-7, 2)) == -3);
  CHECK(ceil_div(mpq_class(6, 2)) == 3);
  CHECK(floor_sqrt(mpq_class(17, 4)) == 2);
  CHECK(floor_sqrt(mpq_class(0)) == 0);
  CHECK(floor_sqrt(mpq_class(99, 1)) == 9);
  CHECK_THROWS_AS(to_integer(RatMat{{mpq_class(1, 2)}}), std::domain_error);
}

TEST_CASE("hnf is lower triangular with reduced rows and spans the same lattice") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m = random_nonsingular(rng, 3, -6, 6);
    IntMat h = hnf(m);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(h(i, i) > 0);
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(h(i, j) == 0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(h(i, j) >= 0);
        CHECK(h(i, j) < h(i, i));
      }
    }
    // every column of m and a box of combinations lie in L(h)
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c) CHECK(in_triangular(h, combine(m, {a, b, c})));
    CHECK(abs(det3(h)) == abs(det3(m)));
  }
}

TEST_CASE("hnf handles rank deficiency by pushing zero columns right") {
  IntMat m{{2, 4, 6}, {1, 2, 3}};
  IntMat h = hnf(m);
  CHECK(h(0, 1) == 0);
  CHECK(h(1, 1) == 0);
  CHECK(h(0, 2) == 0);
  CHECK(h(1, 2) == 0);
}

TEST_CASE("hnf is invariant under unimodular column operations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMat m = random_nonsingular(rng, 3, -5, 5);
    IntMat u = random_unimodular(rng, 3);
    REQUIRE(abs(det3(u)) == 1);
    CHECK(hnf(m * u) == hnf(m));
  }
}

TEST_CASE("determinant, inverse and solve") {
  RatMat a{{2, 1}, {1, 3}};
  CHECK(det(a) == 5);
  RatMat inv = inverse(a);
  CHECK(a * inv == RatMat::identity(2));
  RatVec x = solve(a, {3, 4});
  CHECK(x[0] == 1);
  CHECK(x[1] == 1);
  CHECK_THROWS(inverse(RatMat{{1, 2}, {2, 4}}));
}

TEST_CASE("lattice intersection agrees with box enumeration") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat a = random_nonsingular(rng, 2, -4, 4), b = random_nonsingular(rng, 2, -4, 4);
    RatMat la = to_rational(a), lb = to_rational(b);
    RatMat meet = lattice_intersect(la, lb);
    CHECK(contains(la, meet));
    CHECK(contains(lb, meet));
    // any small vector in both lies in the intersection
    for (long x = -12; x <= 12; ++x)
      for (long y = -12; y <= 12; ++y) {
        RatVec v{x, y};
        if (in_lattice(la, v) && in_lattice(lb, v)) CHECK(in_lattice(meet, v));
      }
  }
}

TEST_CASE("lattice index equals the number of cosets") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat a = random_nonsingular(rng, 2, -3, 3);
    RatMat sub = to_rational(a);
    RatMat super = RatMat::identity(2);
    // cosets of L(a) in Z^2: points of a [0,1)^2
    long count = 0;
    const mpq_class d = det(sub);
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y) {
        // Cramer's rule for a t = (x, y)
        mpq_class t0 = (mpq_class(x) * a(1, 1) - mpq_class(y) * a(0, 1)) / d;
        mpq_class t1 = (mpq_class(y) * a(0, 0) - mpq_class(x) * a(1, 0)) / d;
        if (t0 >= 0 && t0 < 1 && t1 >= 0 && t1 < 1) ++count;
      }
    CHECK(lattice_index(sub, super) == count);
  }
  CHECK_THROWS(lattice_index(RatMat::identity(2), RatMat{{2, 0}, {0, 1}}));
}

TEST_CASE("lattice index is multiplicative along chains") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    RatMat l1 = to_rational(random_nonsingular(rng, 3, -3, 3));
    IntMat a = random_nonsingular(rng, 3, -2, 2), b = random_nonsingular(rng, 3, -2, 2);
    RatMat l2 = l1 * to_rational(a);
    RatMat l3 = l2 * to_rational(b);
    CHECK(lattice_index(l3, l1) == lattice_index(l3, l2) * lattice_index(l2, l1));
    CHECK(lattice_index(l2, l1) == abs(det3(a)));
  }
}

TEST_CASE("short vectors match brute force") {
  std::vector<RatMat> grams{
      RatMat{{2, 1}, {1, 2}},
      RatMat{{1, mpq_class(1, 2)}, {mpq_class(1, 2), 15}},
      RatMat{{3, 1, 0}, {1, 2, mpq_class(1, 2)}, {0, mpq_class(1, 2), 5}},
  };
  for (const auto& g : grams) {
    const mpq_class bound = 20;
    auto vs = short_vectors(g, bound);
    long brute = 0;
    const long r = 8;
    std::vector<long> v(g.rows());
    if (g.rows() == 2) {
      for (v[0] = -r; v[0] <= r; ++v[0])
        for (v[1] = -r; v[1] <= r; ++v[1])
          if ((v[0] || v[1]) && quadratic_value(g, v) <= bound) ++brute;
    } else {
      for (v[0] = -r; v[0] <= r; ++v[0])
        for (v[1] = -r; v[1] <= r; ++v[1])
          for (v[2] = -r; v[2] <= r; ++v[2])
            if ((v[0] || v[1] || v[2]) && quadratic_value(g, v) <= bound) ++brute;
    }
    CHECK(static_cast<long>(vs.size()) == brute);
    for (const auto& s : vs) CHECK(quadratic_value(g, s.coords) == s.value);
  }
}

TEST_CASE("positive definiteness is enforced") {
  CHECK_NOTHROW(check_positive_definite(RatMat{{2, 1}, {1, 2}}));
  CHECK_THROWS(check_positive_definite(RatMat{{1, 2}, {2, 1}}));
  CHECK_THROWS(check_positive_definite(RatMat{{1, 0}, {1, 1}}));
  CHECK_THROWS(short_vectors(RatMat{{-1}}, 3));
}

TEST_CASE("canonical basis is independent of the generating set") {
  RatMat a{{1, mpq_class(1, 2)}, {0, mpq_class(3, 2)}};
  RatMat b = a * RatMat{{2, 1}, {1, 1}};
  CHECK(canonical_basis(a) == canonical_basis(b));
}

TEST_CASE("lll reduction of skewed gram matrices") {
  std::mt19937 rng(41);
  const RatMat base{{2, 1, 0, 0}, {1, 3, 1, 0}, {0, 1, 3, 1}, {0, 0, 1, 4}};
  for (int trial = 0; trial < 100; ++trial) {
    IntMat u = random_unimodular(rng, 4);
    for (int again = 0; again < 3; ++again) u = u * random_unimodular(rng, 4);
    RatMat g = to_rational(u).transpose() * base * to_rational(u);
    IntMat v = lll_reduce(g);
    mpq_class dv = det(to_rational(v));
    CHECK((dv == 1 || dv == -1));
    RatMat r = to_rational(v).transpose() * g * to_rational(v);
    CHECK(2 * abs(r(0, 1)) <= r(0, 0));
    // LLL bound |b_i|^2 <= 2^(n-1) lambda_i^2, successive minima at most 4 here
    for (std::size_t i = 0; i < 4; ++i) CHECK(r(i, i) <= 32);
  }
  CHECK(lll_reduce(RatMat{{5}}) == IntMat::identity(1));
  CHECK_THROWS(lll_reduce(RatMat{{1, 2}, {2, 1}}));
}
