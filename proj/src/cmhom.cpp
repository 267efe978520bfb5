#include "g2maps/cmhom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "g2maps/bqf.hpp"
#include "g2maps/parallel.hpp"

namespace g2maps {

CMLattice::CMLattice(KElem omega) : omega_(std::move(omega)) {
  if (omega_.im_coeff() <= 0) throw std::invalid_argument("CMLattice: omega must lie in the upper half-plane");
}

RatMat CMLattice::basis() const {
  return RatMat{{1, omega_.re()}, {0, omega_.im_coeff()}};
}

RatVec coords(const KElem& x) { return {x.re(), x.im_coeff()}; }

KElem from_coords(long d, const RatVec& v) { return KElem(d, v.at(0), v.at(1)); }

RatMat multiplication_matrix(const KElem& x) {
  // (a + b s)(u + v s) = (a u + d b v) + (b u + a v) s
  return RatMat{{x.re(), x.radicand() * x.im_coeff()}, {x.im_coeff(), x.re()}};
}

std::vector<KElem> lattice_elements(long d, const RatMat& basis) {
  std::vector<KElem> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(from_coords(d, basis.column(j)));
  return out;
}

namespace {

RatMat scaled(const RatMat& m, const mpq_class& s) {
  RatMat r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= s;
  return r;
}

void require_same_field(const CMLattice& l1, const CMLattice& l2) {
  if (l1.radicand() != l2.radicand()) throw std::invalid_argument("CM lattices lie in different fields");
}

}  // namespace

std::array<KElem, 2> hom_lattice(const CMLattice& l1, const CMLattice& l2) {
  require_same_field(l1, l2);
  const RatMat target = l2.basis();
  // beta*1 ∈ L2 and beta*omega1 ∈ L2
  RatMat pulled = multiplication_matrix(l1.omega().inverse()) * target;
  RatMat hom = lattice_intersect(target, pulled);
  auto elems = lattice_elements(l1.radicand(), hom);
  return {elems.at(0), elems.at(1)};
}

bool is_morphism(const KElem& beta, const CMLattice& l1, const CMLattice& l2) {
  const RatMat target = l2.basis();
  return in_lattice(target, coords(beta)) && in_lattice(target, coords(beta * l1.omega()));
}

long morphism_degree(const KElem& beta, const CMLattice& l1, const CMLattice& l2) {
  require_same_field(l1, l2);
  if (!is_morphism(beta, l1, l2)) throw std::domain_error("morphism_degree: " + beta.to_string() + " is not a morphism");
  mpq_class deg = beta.norm() * l1.omega().im_coeff() / l2.omega().im_coeff();
  if (deg.get_den() != 1) throw std::logic_error("morphism_degree: non-integral degree");
  return deg.get_num().get_si();
}

int kernel_two_torsion(const KElem& beta, const CMLattice& l1, const CMLattice& l2) {
  if (beta.is_zero()) throw std::domain_error("kernel_two_torsion: zero morphism");
  if (!is_morphism(beta, l1, l2)) throw std::domain_error("kernel_two_torsion: not a morphism");
  const RatMat base = l1.basis();
  RatMat preimage = multiplication_matrix(beta.inverse()) * l2.basis();
  RatMat torsion = lattice_intersect(preimage, scaled(base, mpq_class(1, 2)));
  return static_cast<int>(lattice_index(base, torsion).get_si());
}

HomProfile degree_profile(const CMLattice& l1, const CMLattice& l2, long bound) {
  auto basis = hom_lattice(l1, l2);
  const long d11 = morphism_degree(basis[0], l1, l2);
  const long d22 = morphism_degree(basis[1], l1, l2);
  const long d12 = morphism_degree(basis[0] + basis[1], l1, l2);
  RatMat gram{{d11, mpq_class(d12 - d11 - d22, 2)}, {mpq_class(d12 - d11 - d22, 2), d22}};
  HomProfile profile{{DegreePair{0, 4}}, basis};
  for (const auto& v : short_vectors(gram, bound)) {
    KElem beta = mpq_class(v.coords[0]) * basis[0] + mpq_class(v.coords[1]) * basis[1];
    long m = v.value.get_num().get_si();
    profile.pairs.insert({m, kernel_two_torsion(beta, l1, l2)});
  }
  return profile;
}

long endomorphism_discriminant(const CMLattice& l) {
  auto b = hom_lattice(l, l);
  mpq_class t00 = (b[0] * b[0]).trace(), t01 = (b[0] * b[1]).trace(), t11 = (b[1] * b[1]).trace();
  mpq_class disc = t00 * t11 - t01 * t01;
  if (disc.get_den() != 1 || disc >= 0) throw std::logic_error("endomorphism_discriminant: invalid value");
  return disc.get_num().get_si();
}

bool homothetic(const CMLattice& l1, const CMLattice& l2) {
  return l1.radicand() == l2.radicand() && gamma1_equivalent(l1.omega(), l2.omega());
}

std::set<long> primitive_norm_discriminants(long n) {
  if (n < 2) throw std::invalid_argument("primitive_norm_discriminants: n must be >= 2");
  std::set<long> out;
  const long radius = floor_sqrt(mpq_class(n)).get_si() + 2;
  for (long delta = -4 * n; delta < 0; ++delta) {
    long r = ((delta % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    const long c = (delta * delta - delta) / 4;
    bool found = false;
    // norm = (x + delta y/2)^2 - delta y^2/4, so |delta| y^2 <= 4n and x lies
    // within sqrt(n) of -delta y/2.
    for (long y = 1; !found && -delta * y * y <= 4 * n; ++y) {
      const long centre = -delta * y / 2;
      for (long x = centre - radius; x <= centre + radius && !found; ++x) {
        if (std::gcd(x, y) != 1) continue;
        if (x * x + delta * x * y + c * y * y == n) found = true;
      }
    }
    if (found) out.insert(delta);
  }
  return out;
}

std::vector<CMLattice> p_neighbors(const CMLattice& l, int p) {
  if (p != 1 && p != 2 && p != 3 && p != 5) throw std::invalid_argument("p_neighbors: unsupported p");
  if (p == 1) return {l};
  std::vector<CMLattice> out;
  // <1/p, omega> ~ <1, p*omega>
  out.emplace_back(mpq_class(p) * l.omega());
  for (int k = 0; k < p; ++k) out.emplace_back(mpq_class(1, p) * (l.omega() + mpq_class(k)));
  return out;
}

bool screen_pair(const CMLattice& le, const CMLattice& lf, long max_n, long bound) {
  const auto end = degree_profile(le, le, bound).pairs;
  const auto hom = degree_profile(le, lf, bound).pairs;
  for (long n = 2; n <= max_n; ++n) {
    bool ok = false;
    for (const auto& [m1, d1] : end) {
      if (m1 > 2 * n) break;
      if (hom.count({2 * n - m1, d1})) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

Disc59Report disc59_check() {
  const long d = -59;
  const KElem theta(d, mpq_class(1, 2), mpq_class(1, 2));
  const CMLattice order(theta);
  // norm(x + y theta) = x^2 + x y + 15 y^2
  RatMat gram{{1, mpq_class(1, 2)}, {mpq_class(1, 2), 15}};
  Disc59Report report;
  for (const auto& v : short_vectors(gram, 35)) {
    if (v.value != 35) continue;
    report.norm35.push_back(KElem(d, v.coords[0]) + mpq_class(v.coords[1]) * theta);
  }
  std::sort(report.norm35.begin(), report.norm35.end());
  for (const auto& g : report.norm35) {
    KElem half = mpq_class(1, 2) * (g - mpq_class(1));
    report.one_mod_two.push_back(in_lattice(order.basis(), coords(half)));
  }
  std::vector<KElem> expected;
  for (int s : {-1, 1})
    for (int t : {-1, 1}) expected.push_back(KElem(d, mpq_class(9 * s, 2), mpq_class(t, 2)));
  std::sort(expected.begin(), expected.end());
  report.passed = report.norm35 == expected &&
                  std::none_of(report.one_mod_two.begin(), report.one_mod_two.end(), [](bool b) { return b; });
  return report;
}

const std::vector<IsogenyCase>& isogeny_cases() {
  // Possible (p, -D) for E, F attached to a genus-2 curve with maps of
  // degrees 2, 3 and 4 to E; D = -59 already excluded (see disc59_check).
  static const std::vector<IsogenyCase> cases{
      {1, {3, 4, 7, 11, 12, 16, 19, 20, 24, 27, 28}},
      {2, {4, 7, 8, 12, 15, 16, 20, 23, 24, 31, 36, 39, 40}},
      {3, {3, 4, 8, 11, 12, 16, 19, 20}},
      {5, {3, 4, 7, 8, 11, 12, 15, 16, 19, 31, 35, 40, 76, 91, 104, 115, 124, 131, 136, 139, 140}},
  };
  return cases;
}

std::vector<ScreenedPair> screen_all(const std::vector<IsogenyCase>& cases, unsigned jobs) {
  struct Task {
    long delta;
    KElem tau;
    int p;
  };
  std::vector<Task> tasks;
  for (const auto& c : cases)
    for (long nd : c.neg_discs)
      for (const auto& pt : cm_points_F1(Disc(-nd))) tasks.push_back({-nd, pt.z, c.p});

  auto results = parallel_map(
      tasks,
      [](const Task& t) {
        std::vector<ScreenedPair> found;
        CMLattice le(t.tau);
        for (const auto& lf : p_neighbors(le, t.p))
          if (screen_pair(le, lf)) found.push_back({t.delta, endomorphism_discriminant(lf), homothetic(le, lf)});
        return found;
      },
      jobs);

  std::set<ScreenedPair> merged;
  for (const auto& r : results) merged.insert(r.begin(), r.end());
  return {merged.begin(), merged.end()};
}

}  // namespace g2maps
