#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2maps/cmhom.hpp"
#include "g2maps/quadfield.hpp"

namespace g2maps {

struct GoldenRow {
  int index = 0;
  long delta_e = 0;
  long delta_f = 0;
  KElem tau;
  KElem sigma;
  int form_id = 0;
};

/// Published reference data the pipeline is compared against.
struct Golden {
  /// degree -> discriminants (negative, descending)
  std::map<long, std::vector<long>> lemma_lists;
  std::vector<ScreenedPair> screen;
  std::vector<GoldenRow> table;
};

const Golden& default_golden();

/// JSON with keys "lemma_lists" ({"2": [-4, ...], ...}), "screen"
/// ([{"delta_e", "delta_f", "isomorphic"}]) and "table" ([{"index",
/// "delta_e", "delta_f", "tau", "sigma", "form_id"}]). Missing keys keep the
/// defaults. Throws std::invalid_argument on malformed input.
Golden load_golden(const std::string& path);
std::string golden_to_json(const Golden& g);

}  // namespace g2maps
