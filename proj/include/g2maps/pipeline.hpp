#pragma once

#include <string>
#include <vector>

#include "g2maps/cmhom.hpp"
#include "g2maps/golden.hpp"
#include "g2maps/periodlattice.hpp"
#include "g2maps/qforms.hpp"
#include "g2maps/quadfield.hpp"
#include "g2maps/universal.hpp"

namespace g2maps {

struct LemmaList {
  long degree = 0;
  std::vector<long> discs;  // negative, descending
};

struct StageReport {
  std::string name;
  double seconds = 0;
  long candidates = 0;
  long survivors = 0;
  /// Distinct (D_E, D_F) among the survivors.
  long survivor_pairs = 0;
};

/// Discriminants of orders with a cyclic endomorphism of degree n, for
/// n in {2, 3, 4, 5, 6, 7, 10, 35}.
std::vector<LemmaList> run_lemma_lists();

/// screen_all over the built-in (p, D) table. Throws std::logic_error if
/// D = -59 shows up or the -59 check fails.
std::vector<ScreenedPair> run_screen(unsigned jobs = 1, StageReport* report = nullptr);

/// If tau' = M tau, the sigma-side change of basis keeping the 2-torsion
/// identification: sigma' = [[s, r], [q, p]] sigma for M = [[p, q], [r, s]].
Mat2 induced_sigma_map(const Mat2& m);

/// (tau1, sigma1) and (tau2, sigma2) describe the same pair: the taus are
/// Γ(1)-equivalent and, after moving tau2 onto tau1 (up to automorphisms of
/// the curve), the sigmas are Γ(2)-equivalent.
bool pair_equivalent(const KElem& tau1, const KElem& sigma1, const KElem& tau2, const KElem& sigma2);

struct SearchCandidate {
  long delta_e = 0;
  long delta_f = 0;
  KElem tau;
  KElem sigma;
};

/// All (tau, sigma) with tau a CM point of D_E in F1 and sigma an F2 image of
/// a CM point rho of D_F, restricted to rho = tau for the listed isomorphic
/// cases and rho != tau otherwise when D_E = D_F.
std::vector<SearchCandidate> search_candidates(const std::vector<ScreenedPair>& screen);

struct ClassificationRow {
  int index = 0;
  long delta_e = 0;
  long delta_f = 0;
  KElem tau;
  KElem sigma;
  int form_id = 0;
  IntMat gram;
  /// U with U^T G_ref U = gram
  IntMat witness;
};

struct SearchResult {
  std::vector<ClassificationRow> rows;
  long polarization_checked = 0;
  /// Sweep survivors that were dropped as automorphic images of a kept row.
  std::vector<SearchCandidate> automorphic_duplicates;
  /// Candidates rejected with 1 among the represented values.
  long represents_one = 0;
  std::vector<StageReport> stages;
};

/// Runs degree_gram/is_candidate over search_candidates(screen), keeps one
/// pair per orbit under automorphisms of E, and classifies each survivor.
/// Throws std::logic_error on a polarization mismatch or an unclassifiable
/// survivor.
SearchResult run_search(const std::vector<ScreenedPair>& screen, unsigned jobs = 1);

std::vector<UniversalReport> run_universal(long max_n, long oracle_max = 0, unsigned jobs = 1);

struct RowMatch {
  int row = 0;         // ClassificationRow::index
  int golden_row = 0;  // 0 if unmatched
  bool same_representative = false;
  /// Matched only by discriminants and tau: sigma is not equivalent.
  bool sigma_differs = false;
  bool form_matches = false;
};

struct Comparison {
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

Comparison compare_lemma_lists(const std::vector<LemmaList>& lists, const Golden& golden);
Comparison compare_screen(const std::vector<ScreenedPair>& screen, const Golden& golden);

struct TableComparison : Comparison {
  std::vector<RowMatch> matches;
  /// Rows paired up by (D_E, D_F, tau) after exact pairing failed.
  std::vector<std::string> differences;
  std::vector<int> differing_golden_rows;
};

/// Pairs rows with reference rows by pair_equivalent; leftovers with the same
/// discriminants and Γ(1)-equivalent tau are paired as differences. Form ids
/// must agree in both cases.
TableComparison compare_table(const std::vector<ClassificationRow>& rows, const Golden& golden);

/// survivor_pairs never grows from one stage to the next, and no stage has
/// more survivors than candidates.
bool monotone(const std::vector<StageReport>& stages);

}  // namespace g2maps
