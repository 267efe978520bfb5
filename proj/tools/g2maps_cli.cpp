#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2maps/pipeline.hpp"

using nlohmann::ordered_json;
using namespace g2maps;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kMismatch = 2;
constexpr int kInvariant = 3;

ordered_json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json flat(const IntMat& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(integer(m(i, j)));
  return a;
}

std::string flat_text(const IntMat& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += (s.empty() ? "" : " ") + m(i, j).get_str();
  return s;
}

ordered_json stages_json(const std::vector<StageReport>& stages, bool timings) {
  ordered_json a = ordered_json::array();
  for (const auto& s : stages) {
    ordered_json o{{"name", s.name}, {"candidates", s.candidates}, {"survivors", s.survivors}, {"survivor_pairs", s.survivor_pairs}};
    if (timings) o["seconds"] = s.seconds;
    a.push_back(o);
  }
  return a;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  unsigned jobs = 1;
  std::string golden_path;
  bool timings = false;
  std::string format = "json";
  int form = 0;
  long n = 0;
  long max = 10000;
  long oracle_max = 0;
};

Golden golden_for(const Options& o) { return o.golden_path.empty() ? default_golden() : load_golden(o.golden_path); }

int cmd_lemma_lists(const Options& o) {
  const auto lists = run_lemma_lists();
  const auto cmp = compare_lemma_lists(lists, golden_for(o));
  ordered_json out;
  out["lemma_lists"] = ordered_json::array();
  for (const auto& l : lists) out["lemma_lists"].push_back({{"degree", l.degree}, {"discriminants", l.discs}});
  out["mismatches"] = cmp.mismatches;
  print(out);
  return cmp.ok() ? kOk : kMismatch;
}

int cmd_screen(const Options& o) {
  StageReport stage;
  const auto pairs = run_screen(o.jobs, &stage);
  const auto cmp = compare_screen(pairs, golden_for(o));
  ordered_json out;
  out["pairs"] = ordered_json::array();
  for (const auto& p : pairs)
    out["pairs"].push_back({{"delta_e", p.delta_e}, {"delta_f", p.delta_f}, {"isomorphic", p.isomorphic}});
  out["stages"] = stages_json({stage}, o.timings);
  out["mismatches"] = cmp.mismatches;
  print(out);
  return cmp.ok() ? kOk : kMismatch;
}

void print_table(const std::vector<ClassificationRow>& rows, const TableComparison& cmp) {
  std::cout << std::left << std::setw(4) << "no" << std::setw(6) << "D_E" << std::setw(6) << "D_F" << std::setw(24) << "tau"
            << std::setw(26) << "sigma" << std::setw(6) << "form" << "reference\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& m = cmp.matches[i];
    std::string ref = m.golden_row ? std::to_string(m.golden_row) : "-";
    if (m.sigma_differs) ref += " (sigma differs)";
    else if (m.golden_row && !m.same_representative) ref += " (equivalent)";
    if (m.golden_row && !m.form_matches) ref += " (form differs)";
    std::cout << std::setw(4) << r.index << std::setw(6) << r.delta_e << std::setw(6) << r.delta_f << std::setw(24)
              << r.tau.pretty() << std::setw(26) << r.sigma.pretty() << std::setw(6) << ("q" + std::to_string(r.form_id))
              << ref << "\n";
  }
}

int cmd_classify(const Options& o) {
  const auto golden = golden_for(o);
  StageReport screen_stage;
  const auto screen = run_screen(o.jobs, &screen_stage);
  const auto result = run_search(screen, o.jobs);
  const auto cmp = compare_table(result.rows, golden);
  std::vector<StageReport> stages{screen_stage};
  stages.insert(stages.end(), result.stages.begin(), result.stages.end());
  if (!monotone(stages)) throw std::logic_error("classify: survivor counts grew between stages");

  if (o.format == "json") {
    ordered_json out;
    out["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const auto& r = result.rows[i];
      const auto& m = cmp.matches[i];
      out["rows"].push_back({{"index", r.index},
                             {"delta_e", r.delta_e},
                             {"delta_f", r.delta_f},
                             {"tau", r.tau.to_string()},
                             {"sigma", r.sigma.to_string()},
                             {"form_id", r.form_id},
                             {"gram", flat(r.gram)},
                             {"witness", flat(r.witness)},
                             {"reference_row", m.golden_row},
                             {"same_representative", m.same_representative},
                             {"sigma_differs", m.sigma_differs}});
    }
    out["polarization_checked"] = result.polarization_checked;
    out["represents_one"] = result.represents_one;
    out["automorphic_duplicates"] = ordered_json::array();
    for (const auto& d : result.automorphic_duplicates)
      out["automorphic_duplicates"].push_back(
          {{"delta_e", d.delta_e}, {"delta_f", d.delta_f}, {"tau", d.tau.to_string()}, {"sigma", d.sigma.to_string()}});
    out["stages"] = stages_json(stages, o.timings);
    out["differences"] = cmp.differences;
    out["mismatches"] = cmp.mismatches;
    print(out);
  } else if (o.format == "csv") {
    std::cout << "index,delta_e,delta_f,tau,sigma,form_id,gram,witness\n";
    for (const auto& r : result.rows)
      std::cout << r.index << "," << r.delta_e << "," << r.delta_f << ",\"" << r.tau.to_string() << "\",\""
                << r.sigma.to_string() << "\"," << r.form_id << ",\"" << flat_text(r.gram) << "\",\""
                << flat_text(r.witness) << "\"\n";
  } else {
    print_table(result.rows, cmp);
  }
  if (o.format != "json") {
    for (const auto& d : cmp.differences) std::cerr << "difference: " << d << "\n";
    for (const auto& m : cmp.mismatches) std::cerr << "mismatch: " << m << "\n";
  }
  return cmp.ok() ? kOk : kMismatch;
}

int cmd_represent(const Options& o) {
  const auto rep = represent(o.form, o.n);
  ordered_json out{{"form_id", rep.form_id}, {"n", rep.n}, {"vector", rep.vector}, {"case", rep.case_label}, {"trace", rep.trace}};
  print(out);
  return kOk;
}

int cmd_verify_universal(const Options& o) {
  ordered_json out = ordered_json::array();
  bool agrees = true;
  for (int id = 1; id <= 4; ++id) {
    if (o.form != 0 && id != o.form) continue;
    const auto r = verify_universal(id, o.max, o.oracle_max, o.jobs);
    ordered_json counts = ordered_json::object();
    for (const auto& [label, c] : r.case_counts) counts[label] = c;
    out.push_back({{"form_id", r.form_id},
                   {"max", r.max_n},
                   {"checked", r.checked},
                   {"case_counts", counts},
                   {"oracle_max", r.oracle_max},
                   {"oracle_agrees", r.oracle_agrees},
                   {"oracle_missing", r.oracle_missing}});
    agrees = agrees && r.oracle_agrees;
  }
  print(ordered_json{{"reports", out}});
  return agrees ? kOk : kInvariant;
}

int cmd_check59(const Options&) {
  const auto r = disc59_check();
  ordered_json elems = ordered_json::array();
  for (const auto& e : r.norm35) elems.push_back(e.to_string());
  print(ordered_json{{"norm_35", elems}, {"one_mod_two", r.one_mod_two}, {"passed", r.passed}});
  return r.passed ? kOk : kMismatch;
}

int cmd_golden(const Options& o) {
  std::cout << golden_to_json(golden_for(o)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 curves with maps of every degree to an elliptic curve"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "worker threads (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--golden", o.golden_path, "reference data override (JSON)")->check(CLI::ExistingFile);
  app.add_flag("--timings", o.timings, "include stage timings in JSON output");

  auto* lemma = app.add_subcommand("lemma-lists", "discriminants with cyclic endomorphisms of degree 2..35");
  auto* screen = app.add_subcommand("screen", "candidate (D_E, D_F) pairs");
  auto* classify = app.add_subcommand("classify", "the (tau, sigma) pairs and their degree forms");
  classify->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  auto* rep = app.add_subcommand("represent", "write n with one of q1..q4");
  rep->add_option("--form", o.form, "form id 1..4")->required()->check(CLI::Range(1, 4));
  rep->add_option("--n", o.n, "integer > 1")->required();
  auto* verify = app.add_subcommand("verify-universal", "represent every n in [2, max]");
  verify->add_option("--form", o.form, "form id 1..4 (default: all)")->check(CLI::Range(1, 4));
  verify->add_option("--max", o.max, "largest n")->capture_default_str();
  verify->add_option("--oracle-max", o.oracle_max, "brute-force cross-check bound");
  auto* check59 = app.add_subcommand("check-59", "elements of norm 35 in the order of discriminant -59");
  auto* golden = app.add_subcommand("golden", "print the reference data as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  if (o.jobs == 0) o.jobs = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (*lemma) return cmd_lemma_lists(o);
    if (*screen) return cmd_screen(o);
    if (*classify) return cmd_classify(o);
    if (*rep) return cmd_represent(o);
    if (*verify) return cmd_verify_universal(o);
    if (*check59) return cmd_check59(o);
    if (*golden) return cmd_golden(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kBadInput;
}
