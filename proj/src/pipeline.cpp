#include "g2maps/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "g2maps/bqf.hpp"
#include "g2maps/parallel.hpp"

namespace g2maps {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string pair_text(long e, long f) { return "(" + std::to_string(e) + ", " + std::to_string(f) + ")"; }

// Larger imaginary part first, then smaller real part.
bool preferred(const KElem& x, const KElem& y) {
  if (x.im_coeff() != y.im_coeff()) return x.im_coeff() > y.im_coeff();
  return x.re() < y.re();
}

}  // namespace

std::vector<LemmaList> run_lemma_lists() {
  std::vector<LemmaList> out;
  for (long n : {2, 3, 4, 5, 6, 7, 10, 35}) {
    auto s = primitive_norm_discriminants(n);
    out.push_back({n, std::vector<long>(s.rbegin(), s.rend())});
  }
  return out;
}

std::vector<ScreenedPair> run_screen(unsigned jobs, StageReport* report) {
  const auto start = Clock::now();
  const Disc59Report check = disc59_check();
  if (!check.passed) throw std::logic_error("run_screen: the -59 exclusion check failed");
  long candidates = 0;
  for (const auto& c : isogeny_cases())
    for (long nd : c.neg_discs) {
      if (nd == 59) throw std::logic_error("run_screen: -59 present in the isogeny table");
      candidates += class_number(Disc(-nd)) * (c.p == 1 ? 1 : c.p + 1);
    }
  auto pairs = screen_all(isogeny_cases(), jobs);
  for (const auto& p : pairs)
    if (p.delta_e == -59 || p.delta_f == -59) throw std::logic_error("run_screen: -59 survived the screen");
  if (report) *report = {"screen", since(start), candidates, static_cast<long>(pairs.size()), static_cast<long>(pairs.size())};
  return pairs;
}

Mat2 induced_sigma_map(const Mat2& m) { return Mat2{m.d, m.c, m.b, m.a}; }

bool pair_equivalent(const KElem& tau1, const KElem& sigma1, const KElem& tau2, const KElem& sigma2) {
  if (tau1.radicand() != tau2.radicand() || sigma1.radicand() != sigma2.radicand()) return false;
  const Reduction r1 = reduce_to_F1(tau1), r2 = reduce_to_F1(tau2);
  if (!(r1.point.z == r2.point.z)) return false;
  const KElem s1 = reduce_to_F2(mobius(induced_sigma_map(r1.matrix), sigma1)).point.z;
  const KElem s2 = reduce_to_F2(mobius(induced_sigma_map(r2.matrix), sigma2)).point.z;
  for (const auto& g : stabilizer(r1.point.z))
    if (reduce_to_F2(mobius(induced_sigma_map(g), s1)).point.z == s2) return true;
  return false;
}

std::vector<SearchCandidate> search_candidates(const std::vector<ScreenedPair>& screen) {
  std::vector<SearchCandidate> out;
  for (const auto& p : screen) {
    const auto taus = cm_points_F1(Disc(p.delta_e));
    const auto rhos = cm_points_F1(Disc(p.delta_f));
    for (const auto& tau : taus)
      for (const auto& rho : rhos) {
        if (p.delta_e == p.delta_f && (rho.z == tau.z) != p.isomorphic) continue;
        std::set<KElem> sigmas;
        for (const auto& [label, image] : gamma2_tiles(rho)) sigmas.insert(reduce_to_F2(image.z).point.z);
        for (const auto& s : sigmas) out.push_back({p.delta_e, p.delta_f, tau.z, s});
      }
  }
  return out;
}

namespace {

struct Evaluated {
  bool polarization_ok = false;
  bool candidate = false;
  bool represents_one = false;
  RatMat gram;
};

long distinct_pairs(const std::vector<SearchCandidate>& cs) {
  std::set<std::pair<long, long>> s;
  for (const auto& c : cs) s.insert({c.delta_e, c.delta_f});
  return static_cast<long>(s.size());
}

}  // namespace

SearchResult run_search(const std::vector<ScreenedPair>& screen, unsigned jobs) {
  SearchResult result;
  auto start = Clock::now();
  const auto candidates = search_candidates(screen);
  const auto evaluated = parallel_map(
      candidates,
      [](const SearchCandidate& c) {
        PeriodLattice lattice(c.tau, c.sigma);
        Evaluated e;
        e.polarization_ok = polarization_gram(lattice) == standard_symplectic();
        if (!e.polarization_ok) return e;
        DegreeForm form = degree_gram(lattice);
        const auto values = represented_small_values(form);
        e.represents_one = values.count(1) > 0;
        e.candidate = is_candidate(form);
        e.gram = form.gram;
        return e;
      },
      jobs);

  std::vector<SearchCandidate> survivors;
  std::vector<RatMat> grams;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!evaluated[i].polarization_ok)
      throw std::logic_error("run_search: polarization mismatch at tau = " + candidates[i].tau.to_string() +
                             ", sigma = " + candidates[i].sigma.to_string());
    ++result.polarization_checked;
    if (evaluated[i].represents_one) ++result.represents_one;
    if (evaluated[i].candidate) {
      survivors.push_back(candidates[i]);
      grams.push_back(evaluated[i].gram);
    }
  }
  result.stages.push_back({"sweep", since(start), static_cast<long>(candidates.size()),
                           static_cast<long>(survivors.size()), distinct_pairs(survivors)});

  // One representative per orbit of automorphisms of E.
  start = Clock::now();
  std::vector<std::size_t> order(survivors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return preferred(survivors[a].sigma, survivors[b].sigma);
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    const auto& c = survivors[i];
    bool duplicate = false;
    for (std::size_t k : kept) {
      const auto& o = survivors[k];
      if (o.delta_e == c.delta_e && o.delta_f == c.delta_f && pair_equivalent(o.tau, o.sigma, c.tau, c.sigma)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate)
      result.automorphic_duplicates.push_back(c);
    else
      kept.push_back(i);
  }
  std::vector<SearchCandidate> kept_candidates;
  for (std::size_t k : kept) kept_candidates.push_back(survivors[k]);
  result.stages.push_back({"dedupe", since(start), static_cast<long>(survivors.size()),
                           static_cast<long>(kept.size()), distinct_pairs(kept_candidates)});

  start = Clock::now();
  const auto classified = parallel_map(
      kept, [&](std::size_t k) { return classify_form(to_qform(grams[k])); }, jobs);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& c = survivors[kept[i]];
    if (!classified[i])
      throw std::logic_error("run_search: form at tau = " + c.tau.to_string() + ", sigma = " + c.sigma.to_string() +
                             " matches none of q1..q4");
    result.rows.push_back(
        {0, c.delta_e, c.delta_f, c.tau, c.sigma, classified[i]->form_id, to_integer(grams[kept[i]]), classified[i]->witness});
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    if (a.delta_e != b.delta_e) return a.delta_e > b.delta_e;
    if (a.delta_f != b.delta_f) return a.delta_f > b.delta_f;
    if (!(a.tau == b.tau)) return preferred(a.tau, b.tau);
    return preferred(a.sigma, b.sigma);
  });
  for (std::size_t i = 0; i < result.rows.size(); ++i) result.rows[i].index = static_cast<int>(i + 1);
  result.stages.push_back({"classify", since(start), static_cast<long>(kept.size()),
                           static_cast<long>(result.rows.size()), distinct_pairs(kept_candidates)});
  return result;
}

std::vector<UniversalReport> run_universal(long max_n, long oracle_max, unsigned jobs) {
  std::vector<UniversalReport> out;
  for (int id = 1; id <= 4; ++id) out.push_back(verify_universal(id, max_n, oracle_max, jobs));
  return out;
}

Comparison compare_lemma_lists(const std::vector<LemmaList>& lists, const Golden& golden) {
  Comparison c;
  std::map<long, std::vector<long>> got;
  for (const auto& l : lists) got[l.degree] = l.discs;
  for (const auto& [deg, expected] : golden.lemma_lists) {
    auto it = got.find(deg);
    if (it == got.end()) {
      c.mismatches.push_back("degree " + std::to_string(deg) + ": missing");
      continue;
    }
    std::set<long> a(it->second.begin(), it->second.end()), b(expected.begin(), expected.end());
    if (a != b) c.mismatches.push_back("degree " + std::to_string(deg) + ": computed list differs from reference");
  }
  for (const auto& [deg, _] : got)
    if (!golden.lemma_lists.count(deg)) c.mismatches.push_back("degree " + std::to_string(deg) + ": not in reference");
  return c;
}

Comparison compare_screen(const std::vector<ScreenedPair>& screen, const Golden& golden) {
  Comparison c;
  std::set<ScreenedPair> a(screen.begin(), screen.end()), b(golden.screen.begin(), golden.screen.end());
  for (const auto& p : a)
    if (!b.count(p))
      c.mismatches.push_back("unexpected " + pair_text(p.delta_e, p.delta_f) + (p.isomorphic ? " isomorphic" : " non-isomorphic"));
  for (const auto& p : b)
    if (!a.count(p))
      c.mismatches.push_back("missing " + pair_text(p.delta_e, p.delta_f) + (p.isomorphic ? " isomorphic" : " non-isomorphic"));
  return c;
}

TableComparison compare_table(const std::vector<ClassificationRow>& rows, const Golden& golden) {
  TableComparison c;
  if (rows.size() != golden.table.size())
    c.mismatches.push_back("row count " + std::to_string(rows.size()) + ", expected " + std::to_string(golden.table.size()));
  std::vector<bool> used(golden.table.size(), false);
  std::vector<RowMatch> matches;
  for (const auto& row : rows) matches.push_back({row.index, 0, false, false, false});

  auto same_discs = [](const ClassificationRow& row, const GoldenRow& ref) {
    return ref.delta_e == row.delta_e && ref.delta_f == row.delta_f && ref.tau.radicand() == row.tau.radicand() &&
           ref.sigma.radicand() == row.sigma.radicand();
  };
  auto pair_up = [&](std::size_t r, std::size_t g, bool loose) {
    const auto& row = rows[r];
    const auto& ref = golden.table[g];
    used[g] = true;
    RowMatch& m = matches[r];
    m.golden_row = ref.index;
    m.same_representative = ref.tau == row.tau && ref.sigma == row.sigma;
    m.sigma_differs = loose;
    m.form_matches = ref.form_id == row.form_id;
    const std::string label = "row " + std::to_string(row.index) + " (reference row " + std::to_string(ref.index) + ")";
    if (!m.form_matches)
      c.mismatches.push_back(label + ": form q" + std::to_string(row.form_id) + ", reference q" + std::to_string(ref.form_id));
    if (loose) {
      c.differences.push_back(label + ": sigma " + row.sigma.pretty() + " with tau " + row.tau.pretty() +
                              " is not equivalent to reference sigma " + ref.sigma.pretty() + " with tau " + ref.tau.pretty());
      c.differing_golden_rows.push_back(ref.index);
    }
  };

  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t g = 0; g < golden.table.size(); ++g) {
      const auto& ref = golden.table[g];
      if (used[g] || !same_discs(rows[r], ref)) continue;
      if (!pair_equivalent(rows[r].tau, rows[r].sigma, ref.tau, ref.sigma)) continue;
      pair_up(r, g, false);
      break;
    }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (matches[r].golden_row != 0) continue;
    for (std::size_t g = 0; g < golden.table.size(); ++g) {
      const auto& ref = golden.table[g];
      if (used[g] || !same_discs(rows[r], ref) || !gamma1_equivalent(rows[r].tau, ref.tau)) continue;
      pair_up(r, g, true);
      break;
    }
    if (matches[r].golden_row == 0) {
      const auto& row = rows[r];
      c.mismatches.push_back("row " + std::to_string(row.index) + " " + pair_text(row.delta_e, row.delta_f) +
                             " tau = " + row.tau.pretty() + ", sigma = " + row.sigma.pretty() + " has no reference row");
    }
  }
  for (std::size_t g = 0; g < golden.table.size(); ++g)
    if (!used[g]) c.mismatches.push_back("reference row " + std::to_string(golden.table[g].index) + " not reproduced");
  c.matches = std::move(matches);
  return c;
}

bool monotone(const std::vector<StageReport>& stages) {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].survivors > stages[i].candidates) return false;
    if (i > 0 && stages[i].survivor_pairs > stages[i - 1].survivor_pairs) return false;
  }
  return true;
}

}  // namespace g2maps
