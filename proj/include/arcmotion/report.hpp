#ifndef ARCMOTION_REPORT_HPP
#define ARCMOTION_REPORT_HPP

/*
 * Result record of a numeric check: which check ran, whether its hypotheses
 * held on the supplied data, the measured quantities, the bounds they were
 * tested against, and the verdict.  Values are stored as full-precision
 * decimal strings so reports are scalar-type agnostic and serialize stably.
 *
 * When hypotheses_met is false the check renders no verdict: pass stays
 * false and callers must not read it as a failure of the bound itself.
 */

#include "arcmotion/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arcmotion {

struct LemmaReport {
  std::string lemma_id;
  bool hypotheses_met = false;
  std::vector<std::pair<std::string, std::string>> measured;
  std::vector<std::pair<std::string, std::string>> bound;
  bool pass = false;

  template <typename S>
  void add_measured(const std::string &name, const S &value) {
    measured.emplace_back(name, scalar_str(value));
  }
  template <typename S>
  void add_bound(const std::string &name, const S &value) {
    bound.emplace_back(name, scalar_str(value));
  }
  void note(const std::string &name, bool value) {
    measured.emplace_back(name, value ? "true" : "false");
  }
};

}  // namespace arcmotion

#endif
