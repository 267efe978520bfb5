#pragma once

#include <array>
#include <set>

#include "g2maps/intlinalg.hpp"
#include "g2maps/quadfield.hpp"

namespace g2maps {

/// A vector (z1, z2) in K^2.
using KVec = std::array<KElem, 2>;

/// Coordinates of a K^2 vector in Q^4: (re z1, im z1, re z2, im z2), where
/// "im" is the sqrt(d)-coefficient.
RatVec kvec_coords(const KVec& v);
KVec kvec_from_coords(long d, const RatVec& v);
KVec scale(const KElem& s, const KVec& v);

/// The lattice generated by (1,0), (0,1), (tau/2, 1/2), (1/2, sigma/2).
class PeriodLattice {
 public:
  PeriodLattice(KElem tau, KElem sigma);

  const KElem& tau() const { return tau_; }
  const KElem& sigma() const { return sigma_; }
  long radicand() const { return tau_.radicand(); }

  std::array<KVec, 4> generators() const;
  /// Columns are the generators in Q^4 coordinates.
  RatMat basis() const;

 private:
  KElem tau_;
  KElem sigma_;
};

/// tau = a + b*delta, sigma = c + d*delta with delta = sqrt(radicand).
struct Pairing {
  long radicand;
  mpq_class a, b, c, d;

  static Pairing of(const PeriodLattice& p);
};

/// Trace_{C/R}( x1*conj(y1)/(b delta) + x2*conj(y2)/(d delta) ). With this
/// argument order, pairing(b1, b3) = -1 and pairing(tau x, x) > 0 for x != 0.
mpq_class pairing_value(const Pairing& pairing, const KVec& x, const KVec& y);

/// Matrix of pairing_value on the generators; equals the standard symplectic
/// matrix [[0,0,-1,0],[0,0,0,-1],[1,0,0,0],[0,1,0,0]] for a principal
/// polarisation.
IntMat polarization_gram(const PeriodLattice& p);
const IntMat& standard_symplectic();

/// Basis of M = Λ ∩ tau^-1 Λ, the maps C -> E fixing a base point.
std::array<KVec, 4> maps_module(const PeriodLattice& p);

struct DegreeForm {
  std::array<KVec, 4> basis;
  /// gram(i,j) = (q(ci+cj) - q(ci) - q(cj))/2 with q(x) = <tau x, x>.
  RatMat gram;
};

/// Throws std::logic_error if the form is not positive definite or q is not
/// integer valued on the basis and pairwise sums.
DegreeForm degree_gram(const PeriodLattice& p);

/// Gram matrix of x -> <tau x, x> on the Q^4 coordinates themselves.
RatMat coordinate_degree_gram(const PeriodLattice& p);

/// {q(v) : v != 0, q(v) <= bound}.
std::set<long> represented_small_values(const DegreeForm& form, long bound = 31);

/// V = {2, ..., bound} exactly.
bool is_candidate(const DegreeForm& form, long bound = 31);

}  // namespace g2maps
