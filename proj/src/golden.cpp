#include "g2maps/golden.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace g2maps {

namespace {

using nlohmann::json;

KElem k(const std::string& s) { return KElem::parse(s); }

Golden build_default() {
  Golden g;
  g.lemma_lists = {
      {2, {-4, -7, -8}},
      {3, {-3, -8, -11, -12}},
      {4, {-7, -12, -15, -16}},
      {5, {-4, -11, -16, -19, -20}},
      {6, {-8, -15, -20, -23, -24}},
      {7, {-3, -7, -12, -19, -24, -27, -28}},
      {10, {-4, -15, -24, -31, -36, -39, -40}},
      {35, {-19, -31, -35, -40, -59, -76, -91, -104, -115, -124, -131, -136, -139, -140}},
  };

  const std::vector<std::pair<long, long>> pairs{
      {-3, -3},   {-4, -4},   {-4, -100}, {-7, -7},   {-8, -8},   {-8, -32},
      {-8, -72},  {-11, -11}, {-12, -3},  {-12, -12}, {-12, -48}, {-16, -4},
      {-16, -16}, {-16, -64}, {-19, -19}, {-20, -20}, {-24, -24}, {-36, -36},
  };
  const std::vector<long> iso{-3, -4, -7, -8, -11, -12, -16, -19, -20};
  for (auto [e, f] : pairs)
    g.screen.push_back({e, f, e == f && std::find(iso.begin(), iso.end(), e) != iso.end()});
  std::sort(g.screen.begin(), g.screen.end());

  g.table = {
      {1, -4, -100, k("sqrt(-1)"), k("5*sqrt(-1)"), 2},
      {2, -4, -100, k("sqrt(-1)"), k("(12 + 5*sqrt(-1))/13"), 2},
      {3, -8, -32, k("sqrt(-2)"), k("sqrt(-2)/4"), 1},
      {4, -8, -32, k("sqrt(-2)"), k("(4 + sqrt(-2))/4"), 1},
      {5, -8, -32, k("sqrt(-2)"), k("(1 + sqrt(-2))/2"), 1},
      {6, -8, -32, k("sqrt(-2)"), k("(2 + sqrt(-2))/4"), 1},
      {7, -8, -72, k("sqrt(-2)"), k("(6 + sqrt(-2))/6"), 3},
      {8, -8, -72, k("sqrt(-2)"), k("(2 + 3*sqrt(-2))/2"), 3},
      {9, -12, -3, k("sqrt(-3)"), k("(-1 + sqrt(-3))/2"), 2},
      {10, -12, -3, k("sqrt(-3)"), k("(1 + sqrt(-3))/2"), 2},
      {11, -16, -4, k("2*sqrt(-1)"), k("sqrt(-1)"), 1},
      {12, -16, -4, k("2*sqrt(-1)"), k("1 + sqrt(-1)"), 1},
      {13, -20, -20, k("sqrt(-5)"), k("sqrt(-5)"), 2},
      {14, -20, -20, k("(1 + sqrt(-5))/2"), k("(1 + sqrt(-5))/2"), 2},
      {15, -24, -24, k("sqrt(-6)"), k("(2 + sqrt(-6))/2"), 3},
      {16, -24, -24, k("sqrt(-6)/2"), k("(6 + sqrt(-6))/7"), 3},
      {17, -36, -36, k("3*sqrt(-1)"), k("(6 + 3*sqrt(-1))/5"), 4},
      {18, -36, -36, k("3*sqrt(-1)"), k("(4 + 3*sqrt(-1))/5"), 4},
      {19, -36, -36, k("(1 + 3*sqrt(-1))/2"), k("1 + 3*sqrt(-1)"), 4},
      {20, -36, -36, k("(1 + 3*sqrt(-1))/2"), k("(3 + sqrt(-1))/3"), 4},
  };
  return g;
}

}  // namespace

const Golden& default_golden() {
  static const Golden g = build_default();
  return g;
}

Golden load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open golden file " + path);
  Golden g = default_golden();
  try {
    json j = json::parse(in);
    if (j.contains("lemma_lists")) {
      g.lemma_lists.clear();
      for (const auto& [deg, list] : j.at("lemma_lists").items())
        g.lemma_lists[std::stol(deg)] = list.get<std::vector<long>>();
    }
    if (j.contains("screen")) {
      g.screen.clear();
      for (const auto& p : j.at("screen"))
        g.screen.push_back({p.at("delta_e").get<long>(), p.at("delta_f").get<long>(), p.at("isomorphic").get<bool>()});
      std::sort(g.screen.begin(), g.screen.end());
    }
    if (j.contains("table")) {
      g.table.clear();
      for (const auto& r : j.at("table"))
        g.table.push_back({r.at("index").get<int>(), r.at("delta_e").get<long>(), r.at("delta_f").get<long>(),
                           KElem::parse(r.at("tau").get<std::string>()), KElem::parse(r.at("sigma").get<std::string>()),
                           r.at("form_id").get<int>()});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed golden file " + path + ": " + e.what());
  }
  return g;
}

std::string golden_to_json(const Golden& g) {
  json j;
  j["lemma_lists"] = json::object();
  for (const auto& [deg, list] : g.lemma_lists) j["lemma_lists"][std::to_string(deg)] = list;
  j["screen"] = json::array();
  for (const auto& p : g.screen)
    j["screen"].push_back({{"delta_e", p.delta_e}, {"delta_f", p.delta_f}, {"isomorphic", p.isomorphic}});
  j["table"] = json::array();
  for (const auto& r : g.table)
    j["table"].push_back({{"index", r.index},
                          {"delta_e", r.delta_e},
                          {"delta_f", r.delta_f},
                          {"tau", r.tau.to_string()},
                          {"sigma", r.sigma.to_string()},
                          {"form_id", r.form_id}});
  return j.dump(2);
}

}  // namespace g2maps
