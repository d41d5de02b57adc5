#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bagwl/interner.hpp"

namespace bagwl {

enum class Outcome { kDistinguished, kPossiblyIsomorphic };

/// Graph representations (sorted color multisets) of both inputs at one round.
struct RoundFingerprint {
  std::uint32_t round = 0;
  std::vector<ColorId> first;
  std::vector<ColorId> second;

  friend bool operator==(const RoundFingerprint&, const RoundFingerprint&) = default;
};

/// Result of a pairwise test. `round` is the first round at which the
/// representations differed (Distinguished), or the round at which the joint
/// coloring stabilized (PossiblyIsomorphic). Round 0 is the initial coloring.
/// `converged` is false only when the round budget ran out first.
struct Verdict {
  Outcome outcome = Outcome::kPossiblyIsomorphic;
  std::uint32_t round = 0;
  bool converged = true;
  std::vector<RoundFingerprint> trace;

  bool distinguished() const { return outcome == Outcome::kDistinguished; }

  static Verdict distinguished_at(std::uint32_t t) {
    return {Outcome::kDistinguished, t, true, {}};
  }
  static Verdict possibly_isomorphic(std::uint32_t t, bool converged = true) {
    return {Outcome::kPossiblyIsomorphic, t, converged, {}};
  }
};

/// "DISTINGUISHED@t" or "POSSIBLY_ISOMORPHIC@t".
std::string to_string(const Verdict& v);

}  // namespace bagwl
