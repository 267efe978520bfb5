#include "g2maps/periodlattice.hpp"

#include <stdexcept>

#include "g2maps/cmhom.hpp"

namespace g2maps {

RatVec kvec_coords(const KVec& v) { return {v[0].re(), v[0].im_coeff(), v[1].re(), v[1].im_coeff()}; }

KVec kvec_from_coords(long d, const RatVec& v) {
  if (v.size() != 4) throw std::invalid_argument("kvec_from_coords: need 4 coordinates");
  return {KElem(d, v[0], v[1]), KElem(d, v[2], v[3])};
}

KVec scale(const KElem& s, const KVec& v) { return {s * v[0], s * v[1]}; }

PeriodLattice::PeriodLattice(KElem tau, KElem sigma) : tau_(std::move(tau)), sigma_(std::move(sigma)) {
  if (tau_.radicand() != sigma_.radicand()) throw std::invalid_argument("PeriodLattice: tau and sigma lie in different fields");
  if (tau_.im_coeff() <= 0 || sigma_.im_coeff() <= 0)
    throw std::invalid_argument("PeriodLattice: tau and sigma must lie in the upper half-plane");
}

std::array<KVec, 4> PeriodLattice::generators() const {
  const long d = radicand();
  const mpq_class half(1, 2);
  const KElem zero(d, 0), one(d, 1);
  return {{
      {one, zero},
      {zero, one},
      {half * tau_, KElem(d, half)},
      {KElem(d, half), half * sigma_},
  }};
}

RatMat PeriodLattice::basis() const {
  RatMat b(4, 4);
  const auto gens = generators();
  for (std::size_t j = 0; j < 4; ++j) b.set_column(j, kvec_coords(gens[j]));
  return b;
}

Pairing Pairing::of(const PeriodLattice& p) {
  return {p.radicand(), p.tau().re(), p.tau().im_coeff(), p.sigma().re(), p.sigma().im_coeff()};
}

mpq_class pairing_value(const Pairing& pr, const KVec& x, const KVec& y) {
  for (const auto& v : {x, y})
    for (const auto& c : v)
      if (c.radicand() != pr.radicand) throw std::invalid_argument("pairing_value: vector outside the field");
  const KElem bdelta(pr.radicand, 0, pr.b), ddelta(pr.radicand, 0, pr.d);
  return (x[0] * y[0].conj() / bdelta + x[1] * y[1].conj() / ddelta).trace();
}

IntMat polarization_gram(const PeriodLattice& p) {
  const Pairing pr = Pairing::of(p);
  const auto gens = p.generators();
  RatMat g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = pairing_value(pr, gens[i], gens[j]);
  return to_integer(g);
}

const IntMat& standard_symplectic() {
  static const IntMat j{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  return j;
}

namespace {

// Multiplication by s on Q^4, acting on both components.
RatMat multiplication_matrix4(const KElem& s) {
  const RatMat m = multiplication_matrix(s);
  RatMat out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = out(i + 2, j + 2) = m(i, j);
  return out;
}

mpq_class degree_value(const Pairing& pr, const KElem& tau, const KVec& x) { return pairing_value(pr, scale(tau, x), x); }

KVec add(const KVec& x, const KVec& y) { return {x[0] + y[0], x[1] + y[1]}; }

template <std::size_t N>
RatMat polarize(const Pairing& pr, const KElem& tau, const std::array<KVec, N>& vs) {
  RatMat g(N, N);
  for (std::size_t i = 0; i < N; ++i) g(i, i) = degree_value(pr, tau, vs[i]);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      g(i, j) = g(j, i) = (degree_value(pr, tau, add(vs[i], vs[j])) - g(i, i) - g(j, j)) / 2;
  return g;
}

}  // namespace

std::array<KVec, 4> maps_module(const PeriodLattice& p) {
  const RatMat lambda = p.basis();
  const RatMat pulled = multiplication_matrix4(p.tau().inverse()) * lambda;
  const RatMat m = lattice_intersect(lambda, pulled);
  std::array<KVec, 4> out;
  for (std::size_t j = 0; j < 4; ++j) {
    out[j] = kvec_from_coords(p.radicand(), m.column(j));
    if (!in_lattice(lambda, kvec_coords(out[j])) || !in_lattice(lambda, kvec_coords(scale(p.tau(), out[j]))))
      throw std::logic_error("maps_module: basis vector outside Λ ∩ tau^-1 Λ");
  }
  return out;
}

DegreeForm degree_gram(const PeriodLattice& p) {
  const Pairing pr = Pairing::of(p);
  DegreeForm form{maps_module(p), {}};
  form.gram = polarize(pr, p.tau(), form.basis);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      mpq_class v = i == j ? form.gram(i, i) : form.gram(i, i) + form.gram(j, j) + 2 * form.gram(i, j);
      if (v.get_den() != 1) throw std::logic_error("degree_gram: q is not integer valued on the basis");
    }
  try {
    check_positive_definite(form.gram);
  } catch (const std::exception& e) {
    throw std::logic_error(std::string("degree_gram: ") + e.what());
  }
  return form;
}

RatMat coordinate_degree_gram(const PeriodLattice& p) {
  const long d = p.radicand();
  std::array<KVec, 4> unit;
  for (std::size_t j = 0; j < 4; ++j) {
    RatVec e(4, 0);
    e[j] = 1;
    unit[j] = kvec_from_coords(d, e);
  }
  return polarize(Pairing::of(p), p.tau(), unit);
}

std::set<long> represented_small_values(const DegreeForm& form, long bound) {
  std::set<long> out;
  for (const auto& v : short_vectors(form.gram, bound)) {
    if (v.value.get_den() != 1) throw std::logic_error("represented_small_values: non-integral value");
    out.insert(v.value.get_num().get_si());
  }
  return out;
}

bool is_candidate(const DegreeForm& form, long bound) {
  const auto values = represented_small_values(form, bound);
  if (static_cast<long>(values.size()) != bound - 1) return false;
  return *values.begin() == 2 && *values.rbegin() == bound;
}

}  // namespace g2maps
