#pragma once

#include <string>

namespace ncgrass {

/**
 * Result of an identity check. Undefined means some participating
 * quasideterminant or inverse did not exist for this input, so the claim
 * is vacuous there; callers record it and move on instead of failing.
 * Degenerate marks inputs where the statement collapses to 0 = 0 and the
 * check confirms exactly that collapse.
 */
enum class Outcome { Pass, Fail, Undefined, Degenerate };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Degenerate: return "degenerate";
    default: return "undefined";
  }
}

}  // namespace ncgrass
