#pragma once

// Framing-anomaly obstruction groups
//   outer: sum_{i+j=n} H^i_red(so(n)) (x) H^j_red(L)
//   inner: sum_{i+j=n} H^i_red(so(n)) (x) H^j(L)
// and the presets for the BF, Chern-Simons and abelian higher
// Chern-Simons targets.

#include "framing/graded_dims.hpp"
#include "framing/lie.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framing::anomaly {

inline constexpr const char* kToolVersion = "0.1.0";

struct Cell {
  int i = 0;
  int j = 0;
  std::size_t dim = 0;
  std::vector<std::string> labels;

  bool operator==(const Cell&) const = default;
};

struct Report {
  int n = 0;
  std::string mode;  // "outer" or "inner"
  std::vector<Cell> cells;
  std::size_t total = 0;
  std::string verdict;  // "vanishes" or "potential anomaly"
  std::vector<std::string> notes;
  std::string tool_version = kToolVersion;

  bool operator==(const Report&) const = default;
};

/// Rejects coefficient spaces with a degree-0 slot (use inner_group).
Report outer_group(int n, const LabeledSpace& hred_l);
Report inner_group(int n, const LabeledSpace& h_l);
Report bf_group(int n, lie::SimpleType type);

/// A target expanded to labelled H_red(L) and H(L).
struct Target {
  std::string spec;
  LabeledSpace hred, h;
  std::vector<std::string> notes;
};

struct PresetOptions {
  /// Degree window used for targets with infinitely many classes and for
  /// file targets.
  std::optional<std::pair<int, int>> window;
  std::optional<int> word_cap;
};

/// "cs:<type>", "bf:<type>", "abelian_cs", "trivial", "file:<path>",
/// "betti:<dims>" (H_red(L) given directly).
Target expand_preset(const std::string& spec, int n, const PresetOptions& opts = {});

/// Outer (or inner) group of an expanded target; bf targets use the H(g) tables.
Report compute(const std::string& spec, int n, bool inner, const PresetOptions& opts = {});

std::string render_json(const Report& r);
Report parse_report(const std::string& json_text);
std::string render_table(const Report& r);

}  // namespace framing::anomaly
