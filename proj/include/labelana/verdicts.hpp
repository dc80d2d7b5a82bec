#pragma once

#include <string>
#include <vector>

#include "labelana/jsonutil.hpp"

namespace labelana {

enum class Question { Simple, IH, PurelyInfinite, GaugeInvariantIdeals, InfiniteProjectionExists };
enum class Status { Certified, Refuted, Unknown };

const char* question_name(Question q);
const char* status_name(Status s);

// Rule tags name the combinatorial content of the applied result. A verdict
// may carry several corroborating rules; `rule` is the primary one.
namespace rules {
inline constexpr const char* simple_le_trivial_lattice = "simple.certify.le-and-trivial-lattice";
inline constexpr const char* simple_disagreeable_cofinal = "simple.certify.disagreeable-and-cofinal";
inline constexpr const char* simple_cofinal_cycle = "simple.certify.cofinal-disagreeable-cycle";
inline constexpr const char* simple_refute_le = "simple.refute.exitless-cycle";
inline constexpr const char* simple_refute_lattice = "simple.refute.nontrivial-ideal-lattice";
inline constexpr const char* ih_disagreeable_connects = "ih.certify.disagreeable-and-connects";
inline constexpr const char* ih_refute_no_connect = "ih.refute.star-without-connects";
inline constexpr const char* pi_quotients_connect = "pi.certify.quotients-connect";
inline constexpr const char* pi_cofinal_cycle = "pi.certify.cofinal-disagreeable-cycle";
inline constexpr const char* pi_refute_exitless_loop = "pi.refute.exitless-loop-at-minimal-set";
inline constexpr const char* pi_refute_single_root = "pi.refute.single-root-loops-at-minimal-set";
inline constexpr const char* pi_refute_not_sd = "pi.refute.not-strongly-disagreeable";
inline constexpr const char* pi_refute_simple_no_ih = "pi.refute.simple-without-ih";
inline constexpr const char* gauge_sd = "gauge.certify.strongly-disagreeable";
inline constexpr const char* proj_loop_exit = "projection.certify.loop-with-exit";
}  // namespace rules

struct RuleApplication {
  std::string tag;
  Json certificate;
};

struct Verdict {
  Question question;
  Status status = Status::Unknown;
  std::string rule;                     // primary tag, empty when Unknown
  std::vector<RuleApplication> rules;   // every rule that fired
  std::vector<std::string> caveats;

  bool cites(const std::string& tag) const {
    for (const auto& r : rules) {
      if (r.tag == tag) return true;
    }
    return false;
  }
};

}  // namespace labelana
