#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gallai/detectors.hpp"
#include "gallai/graph_core.hpp"

namespace gallai {

/// A coloring together with the detector verdicts that make it a lower-bound
/// witness: no rainbow P5 and no monochromatic copy of the target in any
/// color. Only produced by verify_witness.
struct WitnessCertificate {
  ColoredComplete coloring;
  TargetGraph target;
  std::string name;
  bool rainbow_p5_absent = false;
  bool search_exhausted = false;
  std::vector<bool> mono_absent;  // index c-1 for color c
  int order() const { return coloring.order(); }
};

struct WitnessFailure {
  std::string reason;
  std::optional<Embedding> found;
};

using WitnessResult = std::variant<WitnessCertificate, WitnessFailure>;

inline bool has_rainbow_p5(const ColoredComplete& c) {
  return c.order() >= 5 && find_rainbow_path(c, 4).has_value();
}

inline WitnessResult verify_witness(const ColoredComplete& c, const TargetGraph& h,
                                    std::string name = {}) {
  if (!c.exact())
    return WitnessFailure{"coloring is not exact: " + std::to_string(c.used_color_count()) +
                              " of " + std::to_string(c.declared_colors()) + " colors used",
                          std::nullopt};
  if (c.order() >= 5) {
    if (auto p = find_rainbow_path(c, 4))
      return WitnessFailure{"rainbow P5 found", p};
  }
  std::vector<bool> absent;
  for (int col = 1; col <= c.declared_colors(); ++col) {
    if (auto e = find_mono_copy(c, h, ColorMask{1} << col))
      return WitnessFailure{"monochromatic " + describe(h) + " found in color " +
                                std::to_string(col),
                            e};
    absent.push_back(true);
  }
  WitnessCertificate cert{c, h, std::move(name), true, true, std::move(absent)};
  return cert;
}

inline bool is_certificate(const WitnessResult& r) {
  return std::holds_alternative<WitnessCertificate>(r);
}

/// Re-runs both detectors on the stored coloring and compares verdicts.
inline bool replay(const WitnessCertificate& cert) {
  auto again = verify_witness(cert.coloring, cert.target);
  if (!is_certificate(again)) return false;
  const auto& r = std::get<WitnessCertificate>(again);
  return r.rainbow_p5_absent == cert.rainbow_p5_absent &&
         r.search_exhausted == cert.search_exhausted && r.mono_absent == cert.mono_absent;
}

}  // namespace gallai
