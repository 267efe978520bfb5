#pragma once

#include <array>
#include <compare>
#include <set>
#include <vector>

#include "g2maps/intlinalg.hpp"
#include "g2maps/quadfield.hpp"

namespace g2maps {

/// The lattice <1, omega> in K, standing in for the CM curve C/<1, omega>.
class CMLattice {
 public:
  explicit CMLattice(KElem omega);

  const KElem& omega() const { return omega_; }
  long radicand() const { return omega_.radicand(); }
  /// Columns (1, omega) in (re, sqrt(d)-coefficient) coordinates.
  RatMat basis() const;

 private:
  KElem omega_;
};

/// (degree m, number d of 2-torsion points in the kernel).
struct DegreePair {
  long m = 0;
  int d = 0;
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

struct HomProfile {
  std::set<DegreePair> pairs;
  std::array<KElem, 2> basis;
};

RatVec coords(const KElem& x);
KElem from_coords(long d, const RatVec& v);
/// Matrix of multiplication by x on (re, sqrt(d)-coefficient) coordinates.
RatMat multiplication_matrix(const KElem& x);
/// Lattice in K spanned by the columns, as field elements.
std::vector<KElem> lattice_elements(long d, const RatMat& basis);

/// Basis of {beta in K : beta L1 ⊆ L2}.
std::array<KElem, 2> hom_lattice(const CMLattice& l1, const CMLattice& l2);
bool is_morphism(const KElem& beta, const CMLattice& l1, const CMLattice& l2);

/// norm(beta) * covol(L1)/covol(L2); throws std::domain_error if beta is not
/// a morphism L1 -> L2.
long morphism_degree(const KElem& beta, const CMLattice& l1, const CMLattice& l2);

/// #(ker beta)[2] = [(beta^-1 L2 ∩ L1/2) : L1]; 1, 2 or 4.
int kernel_two_torsion(const KElem& beta, const CMLattice& l1, const CMLattice& l2);

/// All (m, d) with m <= bound realised by some beta in Hom(L1, L2),
/// including (0, 4) for the zero map.
HomProfile degree_profile(const CMLattice& l1, const CMLattice& l2, long bound = 62);

/// Discriminant of the multiplier ring End(L).
long endomorphism_discriminant(const CMLattice& l);
bool homothetic(const CMLattice& l1, const CMLattice& l2);

/// Discriminants -4n <= D < 0 whose order has a primitive element of norm n
/// (x, y coprime in x^2 + D xy + (D^2 - D) y^2 / 4).
std::set<long> primitive_norm_discriminants(long n);

/// For p = 1 the lattice itself, otherwise the p + 1 superlattices of index p,
/// normalised as <1, omega'>. p must be 1, 2, 3 or 5.
std::vector<CMLattice> p_neighbors(const CMLattice& l, int p);

/// For every n in [min_n, max_n] there are (m1, d) in End(E) and (m2, d) in
/// Hom(E, F) with m1 + m2 = 2n.
bool screen_pair(const CMLattice& le, const CMLattice& lf, long max_n = 31, long bound = 62);

struct Disc59Report {
  std::vector<KElem> norm35;
  /// For each element g of norm35: is (g - 1)/2 in the maximal order?
  std::vector<bool> one_mod_two;
  bool passed = false;
};

/// Elements of norm 35 in Z[(1+sqrt(-59))/2] and their classes mod 2.
Disc59Report disc59_check();

/// One line of the (p, discriminant) table for curves with maps of degrees
/// 2, 3 and 4: E has a cyclic p-isogeny to F and End E has one of these
/// discriminants (stored as positive -D).
struct IsogenyCase {
  int p;
  std::vector<long> neg_discs;
};
const std::vector<IsogenyCase>& isogeny_cases();

struct ScreenedPair {
  long delta_e = 0;
  long delta_f = 0;
  bool isomorphic = false;
  friend auto operator<=>(const ScreenedPair&, const ScreenedPair&) = default;
};

/// Runs screen_pair over every ideal class of every (p, D) case and returns
/// the surviving (D_E, D_F, E ≅ F) triples, sorted and deduplicated.
std::vector<ScreenedPair> screen_all(const std::vector<IsogenyCase>& cases, unsigned jobs = 1);

}  // namespace g2maps
