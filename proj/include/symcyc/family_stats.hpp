#pragma once

#include "symcyc/counting.hpp"
#include "symcyc/cycle.hpp"
#include "symcyc/hypercube.hpp"
#include "symcyc/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace symcyc {

// The six set-pair families. A pair (A,B) of subsets of E_t is keyed by its
// sizes, the q-values of the derived sets, and the boundary pattern
// (A n {1,t}, B n {1,t}). Closed forms are products of composition counts and
// (for four of the kinds) a Smirnov-word factor.
enum class FamilyKind {
  Partition,            // disjoint, covering
  DisjointNotCovering,  // disjoint, not covering
  IntersectCover3,      // intersecting Sperner, covering; keyed by q(AnB), q(A-B), q(B-A)
  IntersectCover2,      // intersecting Sperner, covering; keyed by q(AnB), q(A^B)
  IntersectNotCover4,   // intersecting Sperner, not covering; four q-parameters
  IntersectNotCover3,   // intersecting Sperner, not covering; three q-parameters
};

inline constexpr int kFamilyCount = 6;
extern const FamilyKind kAllFamilies[kFamilyCount];

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

// Which of {1, t} a subset touches.
enum class EndTouch : std::uint8_t { None = 0, Lo = 1, Hi = 2, Both = 3 };

EndTouch end_touch_of(Mask mask, int t);
EndTouch reverse(EndTouch e);                 // ground-set reversal swaps 1 <-> t
std::string_view end_touch_label(EndTouch e);  // "-", "1", "t", "1t"

struct StatKey {
  EndTouch pattern_a = EndTouch::None;
  EndTouch pattern_b = EndTouch::None;
  // -1 marks parameters the family does not use.
  std::int16_t j_prime = -1;     // |A|
  std::int16_t j_dblprime = -1;  // |B|
  std::int16_t j = -1;           // |A n B| (not-covering kinds)
  std::int16_t ell_prime = -1;     // q(A) or q(A-B)
  std::int16_t ell_dblprime = -1;  // q(B) or q(B-A)
  std::int16_t ell_cap = -1;       // q(A n B)
  std::int16_t ell_delta = -1;     // q(A symdiff B)
  std::int16_t ell = -1;           // q(A u B)
  friend auto operator<=>(const StatKey&, const StatKey&) = default;
};

// ---- classification ----

struct PairClassification {
  // Every (kind, key) the ordered pair belongs to; empty when the pair fits no
  // family (empty member, one set inside the other, ...).
  std::vector<std::pair<FamilyKind, StatKey>> keys;
  GroundSubset inter, uni, a_minus_b, b_minus_a, sym_diff;
};

PairClassification classify_pair(const GroundSubset& a, const GroundSubset& b);

// ---- exhaustive oracle ----

inline constexpr int kDefaultOracleBound = 8;
inline constexpr int kMaxOracleBound = 10;

struct OracleCounts {
  std::uint64_t pairs = 0;
  // Distinct (A n B, A symdiff B) witnesses; equals `pairs` for the kinds
  // whose key determines the pair.
  std::uint64_t configurations = 0;
};

using StatTable = std::map<StatKey, OracleCounts>;

// Tallies all 4^t ordered pairs; refuses t > bound (and any bound above
// kMaxOracleBound).
StatTable oracle_table(int t, FamilyKind kind, int bound = kDefaultOracleBound);

// ---- closed forms ----

enum class Transform { None, Reverse, Swap, SwapReverse };
std::string_view transform_label(Transform tr);

struct SymmetryResult {
  StatKey key;
  Transform transform = Transform::None;
};

// Maps a key whose pattern has no case-table item onto a covered one via
// ground-set reversal and/or the swap (A,B) -> (B,A). Returns nothing if the
// pattern is unreachable even under the symmetry group.
std::optional<SymmetryResult> symmetry_extend(FamilyKind kind, const StatKey& key);

StatKey reverse_key(const StatKey& key);
StatKey swap_key(const StatKey& key);

struct ClosedForm {
  bool covered = false;
  CountValue value;
  int item = 0;  // 1-based case-table item number that was evaluated
  Transform transform = Transform::None;
};

// Evaluates the tabulated product for the item covering the key's pattern,
// extending by symmetry when needed. Throws std::invalid_argument on even
// q-parameters. For IntersectCover2 / IntersectNotCover3 the products count
// distinct (A n B, A symdiff B) configurations (see counts_configurations),
// restricted to configurations whose pattern-pinned endpoints fit into the
// difference sets; the verification report documents both resolutions.
ClosedForm closed_form(FamilyKind kind, const StatKey& key, int t);

// True for the two kinds whose key does not determine the split of A symdiff B
// into (A-B, B-A); their products enumerate configurations, not ordered pairs.
// Resolved empirically against the exhaustive oracle and surfaced in reports.
bool counts_configurations(FamilyKind kind);

// ---- sweep comparison ----

enum class MatchState { Match, Mismatch, UncoveredNonempty };
std::string_view match_label(MatchState m);

struct SweepRow {
  StatKey key;
  ClosedForm closed;
  OracleCounts oracle;
  MatchState state = MatchState::Match;
};

struct UncoveredPattern {
  EndTouch pattern_a, pattern_b;
  std::uint64_t oracle_pairs = 0;  // 0 = "uncovered, empty"
};

struct FamilySweep {
  FamilyKind kind{};
  int t = 0;
  bool reading_configurations = false;
  std::vector<SweepRow> rows;  // key-sorted
  std::vector<UncoveredPattern> uncovered_patterns;
  std::uint64_t total_pairs = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t uncovered_nonempty = 0;
  // Keys where the product differs from the ordered-pair tally; nonzero only
  // for the configuration-counting kinds (diagnostic, not a failure).
  std::uint64_t pair_reading_mismatches = 0;
  bool all_match() const { return mismatches == 0 && uncovered_nonempty == 0; }
};

// Compares closed forms (with symmetry extension) against the exhaustive
// oracle on every key present on either side.
FamilySweep full_sweep(int t, FamilyKind kind, int bound = kDefaultOracleBound);

}  // namespace symcyc
