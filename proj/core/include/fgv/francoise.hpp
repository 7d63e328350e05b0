#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fgv/abelian.hpp"

namespace fgv {

/// (g, r) with source = g dF + dr and r(0, 0) = 0. Only obtainable through
/// verified(), which checks the identity exactly.
class FrancoisePair {
 public:
  /// Throws InternalConsistencyError if source != g dF + dr or r has a
  /// constant term.
  static FrancoisePair verified(BivarPoly g, BivarPoly r, const PolyForm1& source, const OvalFamily& family);

  const BivarPoly& g() const noexcept { return g_; }
  const BivarPoly& r() const noexcept { return r_; }
  friend bool operator==(const FrancoisePair&, const FrancoisePair&) = default;

 private:
  FrancoisePair(BivarPoly g, BivarPoly r) : g_(std::move(g)), r_(std::move(r)) {}
  BivarPoly g_;
  BivarPoly r_;
};

/// The form has a nonzero period, carried as witness.
struct NoSolution {
  PeriodPoly witness;
};

using Decomposition = std::variant<FrancoisePair, NoSolution>;

/// Relative-exactness decomposition w = g dF + dr over the polynomials.
///
/// For each homogeneous degree e of w the unknown coefficients of g (degree
/// e - 1) and r (degree e + 1, no constant term) are solved from the dx and
/// dy coefficient equations by fraction-free elimination, columns in
/// descending graded-lex order, g before r. Free unknowns are set to zero,
/// which fixes the representative modulo g -> g + s(F), r -> r - S(F): the
/// pure powers of y in r come out zero ("solver-canonical").
///
/// The linear solve and the period are computed independently and must
/// agree: an inconsistent system with a zero period (or the reverse) raises
/// InternalConsistencyError.
Decomposition decompose(const PolyForm1& w, const OvalFamily& family);

/// Ordered Francoise pairs (g_i, r_i), i = 1..m, with g_0 = 1 implicit.
class FrancoiseSequence {
 public:
  FrancoiseSequence() = default;
  FrancoiseSequence(std::vector<FrancoisePair> pairs, bool obstructed)
      : pairs_(std::move(pairs)), obstructed_(obstructed) {}

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  /// Pair i, 1-based.
  const FrancoisePair& pair(std::size_t i) const { return pairs_.at(i - 1); }
  const std::vector<FrancoisePair>& pairs() const noexcept { return pairs_; }
  /// g_i with g_0 = 1.
  BivarPoly g(std::size_t i) const { return i == 0 ? BivarPoly(Rational(1)) : pair(i).g(); }
  /// True when the iteration stopped at a nonzero Melnikov function.
  bool obstructed() const noexcept { return obstructed_; }

  friend bool operator==(const FrancoiseSequence&, const FrancoiseSequence&) = default;

 private:
  std::vector<FrancoisePair> pairs_;
  bool obstructed_ = false;
};

struct MelnikovResult {
  /// M_1..M_m.
  std::vector<PeriodPoly> melnikov;
  std::optional<unsigned> first_nonzero;
  FrancoiseSequence sequence;
};

inline constexpr unsigned kDefaultMaxOrder = 10;

/// M_1 = -period(w); while M_k vanishes, (g_k, r_k) = decompose(g_{k-1} w)
/// and M_{k+1} = (-1)^(k+1) period(g_k w). Stops at the first nonzero M or
/// after max_order Melnikov functions.
MelnikovResult melnikov_sequence(const OvalFamily& family, const PolyForm1& w, unsigned max_order = kDefaultMaxOrder);

struct SequenceLength {
  enum class Kind { finite, exceeds_max, obstructed };
  Kind kind = Kind::exceeds_max;
  unsigned value = 0;  // meaningful for finite only

  friend bool operator==(const SequenceLength&, const SequenceLength&) = default;
};

/// Smallest l with g_{l+1} = 0 among the first max_order pairs.
SequenceLength sequence_length(const FrancoiseSequence& seq, unsigned max_order);

/// d(g_{i-1} w) == dg_i ^ dF for every i in the sequence.
bool gelfand_leray_holds(const FrancoiseSequence& seq, const PolyForm1& w, const OvalFamily& family);

}  // namespace fgv
