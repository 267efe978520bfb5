#include "g2maps/bqf.hpp"

#include <numeric>
#include <stdexcept>

#include "g2maps/intlinalg.hpp"

namespace g2maps {

bool BQF::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

KElem BQF::root() const {
  if (a <= 0 || discriminant() >= 0) throw std::domain_error("BQF::root: form must be positive definite");
  Disc disc(discriminant());
  return KElem(disc.radicand(), mpq_class(-b, 2 * a), mpq_class(disc.sqrt_scale(), 2 * a));
}

std::vector<BQF> reduced_forms(const Disc& disc) {
  const long delta = disc.value();
  std::vector<BQF> out;
  for (long a = 1; 3 * a * a <= -delta; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - delta;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      BQF f{a, b, c};
      if (f.primitive()) out.push_back(f);
    }
  }
  return out;
}

long class_number(const Disc& disc) { return static_cast<long>(reduced_forms(disc).size()); }

std::vector<CMPoint> cm_points_F1(const Disc& disc) {
  std::vector<CMPoint> out;
  for (const auto& f : reduced_forms(disc)) out.push_back(reduce_to_F1(f.root()).point);
  return out;
}

bool in_F1(const KElem& z) {
  if (z.im_coeff() <= 0) return false;
  const mpq_class half(1, 2);
  if (z.re() < -half || z.re() >= half) return false;
  mpq_class n = z.norm();
  return n > 1 || (n == 1 && z.re() <= 0);
}

Reduction reduce_to_F1(const KElem& z) {
  if (z.im_coeff() <= 0) throw std::domain_error("reduce_to_F1: point not in the upper half-plane");
  const Mat2 inversion{0, -1, 1, 0};
  KElem w = z;
  Mat2 m;
  for (;;) {
    mpz_class n = floor_div(w.re() + mpq_class(1, 2));
    if (n != 0) {
      w = w - mpq_class(n);
      m = Mat2{1, -n, 0, 1} * m;
    }
    if (w.norm() >= 1) break;
    w = mobius(inversion, w);
    m = inversion * m;
  }
  if (w.norm() == 1 && w.re() > 0) {
    w = mobius(inversion, w);
    m = inversion * m;
  }
  return {{w, Domain::F1}, m};
}

const std::array<Tile, 6>& gamma2_tile_maps() {
  static const std::array<Tile, 6> tiles{{
      {"z", Mat2{1, 0, 0, 1}},
      {"-1/z", Mat2{0, -1, 1, 0}},
      {"-1/(z-1)", Mat2{0, -1, 1, -1}},
      {"z/(z+1)", Mat2{1, 0, 1, 1}},
      {"(z-1)/z", Mat2{1, -1, 1, 0}},
      {"z+1", Mat2{1, 1, 0, 1}},
  }};
  return tiles;
}

std::vector<std::pair<std::string, CMPoint>> gamma2_tiles(const CMPoint& tau) {
  if (!in_F1(tau.z)) throw std::invalid_argument("gamma2_tiles: tau must lie in strict F1");
  std::vector<std::pair<std::string, CMPoint>> out;
  for (const auto& t : gamma2_tile_maps()) out.emplace_back(t.label, CMPoint{mobius(t.map, tau.z), Domain::None});
  return out;
}

namespace {

// |z - centre|^2 for a rational centre on the real axis.
mpq_class dist2(const KElem& z, const mpq_class& centre) {
  mpq_class dx = z.re() - centre;
  return dx * dx - z.radicand() * z.im_coeff() * z.im_coeff();
}

bool is_rho(const KElem& z) {
  return z.radicand() == -3 && z.re() == mpq_class(-1, 2) && z.im_coeff() == mpq_class(1, 2);
}

bool in_F1_closure(const KElem& z) {
  const mpq_class half(1, 2);
  return z.im_coeff() > 0 && z.re() >= -half && z.re() <= half && z.norm() >= 1;
}

}  // namespace

bool in_F2(const KElem& z) {
  if (z.im_coeff() <= 0) return false;
  if (z.re() < mpq_class(-1, 2) || z.re() >= mpq_class(3, 2)) return false;
  const mpq_class ninth(1, 9);
  if (dist2(z, -1) <= 1 && !(dist2(z, -1) == 1 && is_rho(z))) return false;
  if (dist2(z, 2) < 1) return false;
  if (dist2(z, mpq_class(1, 3)) < ninth) return false;
  if (dist2(z, mpq_class(2, 3)) <= ninth) return false;
  return true;
}

bool in_F2_closure(const KElem& z) {
  if (z.im_coeff() <= 0) return false;
  for (const auto& t : gamma2_tile_maps())
    if (in_F1_closure(mobius(t.map.inverse(), z))) return true;
  return false;
}

Reduction reduce_to_F2(const KElem& z) {
  Reduction r1 = reduce_to_F1(z);
  const Mat2 back = r1.matrix.inverse();
  const Tile* tile = nullptr;
  for (const auto& t : gamma2_tile_maps())
    if (t.map.congruent_mod2(back)) tile = &t;
  if (!tile) throw std::logic_error("reduce_to_F2: no tile matches the reduction matrix mod 2");
  Mat2 g = tile->map * r1.matrix;
  KElem w = mobius(g, z);
  if (in_F2(w)) return {{w, Domain::F2}, g};

  // w is on an excluded edge or vertex of F2; the side pairings finish it.
  static const std::array<Mat2, 6> pairings{{
      Mat2{1, 2, 0, 1},
      Mat2{1, -2, 0, 1},
      Mat2{1, 0, 2, 1},
      Mat2{1, 0, -2, 1},
      Mat2{-1, 2, -2, 3},
      Mat2{3, -2, 2, -1},
  }};
  for (const auto& p : pairings) {
    KElem w1 = mobius(p, w);
    if (in_F2(w1)) return {{w1, Domain::F2}, p * g};
    for (const auto& q : pairings) {
      KElem w2 = mobius(q, w1);
      if (in_F2(w2)) return {{w2, Domain::F2}, q * p * g};
    }
  }
  throw std::logic_error("reduce_to_F2: failed to reach strict F2 from " + w.to_string());
}

bool gamma1_equivalent(const KElem& z1, const KElem& z2) {
  return reduce_to_F1(z1).point.z == reduce_to_F1(z2).point.z;
}

bool gamma2_equivalent(const KElem& z1, const KElem& z2) {
  return reduce_to_F2(z1).point.z == reduce_to_F2(z2).point.z;
}

std::vector<Mat2> stabilizer(const KElem& tau) {
  if (!in_F1(tau)) throw std::invalid_argument("stabilizer: tau must lie in strict F1");
  static const std::array<Mat2, 3> candidates{{
      Mat2{0, -1, 1, 0},
      Mat2{0, -1, 1, 1},
      Mat2{-1, -1, 1, 0},
  }};
  std::vector<Mat2> out{Mat2::identity()};
  for (const auto& m : candidates)
    if (mobius(m, tau) == tau) out.push_back(m);
  return out;
}

}  // namespace g2maps
