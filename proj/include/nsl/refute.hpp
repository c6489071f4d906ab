#pragma once

// Constructive refutation that a monad has an infimum or a supremum. For any
// candidate L the engine returns a certificate that L fails: either a member
// beyond L (so L is not a bound) or a strictly better bound (so L is not the
// greatest lower / least upper one).

#include <string>
#include <variant>
#include <vector>

#include "nsl/nset.hpp"

namespace nsl::nsets {

struct Witness {
  RationalFunction point;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BetterBound {
  RationalFunction bound;
  friend bool operator==(const BetterBound&, const BetterBound&) = default;
};

using RefutationResult = std::variant<Witness, BetterBound>;

enum class Extremum { Infimum, Supremum };

/// Center a of a two-sided monad mon(a); throws std::invalid_argument otherwise.
RationalFunction monad_center(const NSet& s);

/// Requires s = monad(a) and eps a positive infinitesimal
/// (std::invalid_argument otherwise).
RefutationResult refute_infimum(const NSet& s, const RationalFunction& candidate, const RationalFunction& eps);
RefutationResult refute_supremum(const NSet& s, const RationalFunction& candidate, const RationalFunction& eps);
RefutationResult refute(Extremum which, const NSet& s, const RationalFunction& candidate, const RationalFunction& eps);

/// One checked fact backing a certificate.
struct CertificateFact {
  std::string statement;
  bool holds;
};

/// Re-derives the certificate from scratch with membership and order tests.
std::vector<CertificateFact> certify(Extremum which, const NSet& s, const RationalFunction& candidate,
                                     const RefutationResult& result);
bool verify(Extremum which, const NSet& s, const RationalFunction& candidate, const RefutationResult& result);

std::string to_string(const RefutationResult& r);

}  // namespace nsl::nsets
