#include "symcyc/family_stats.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <utility>

namespace symcyc {

const FamilyKind kAllFamilies[kFamilyCount] = {
    FamilyKind::Partition,        FamilyKind::DisjointNotCovering,
    FamilyKind::IntersectCover3,  FamilyKind::IntersectCover2,
    FamilyKind::IntersectNotCover4, FamilyKind::IntersectNotCover3,
};

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Partition: return "partition";
    case FamilyKind::DisjointNotCovering: return "disjoint-noncover";
    case FamilyKind::IntersectCover3: return "intersect-cover3";
    case FamilyKind::IntersectCover2: return "intersect-cover2";
    case FamilyKind::IntersectNotCover4: return "intersect-noncover4";
    case FamilyKind::IntersectNotCover3: return "intersect-noncover3";
  }
  return "?";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (FamilyKind kind : kAllFamilies)
    if (family_name(kind) == name) return kind;
  return std::nullopt;
}

EndTouch end_touch_of(Mask mask, int t) {
  const bool lo = (mask & 1u) != 0;
  const bool hi = ((mask >> (t - 1)) & 1u) != 0;
  if (lo && hi) return EndTouch::Both;
  if (lo) return EndTouch::Lo;
  if (hi) return EndTouch::Hi;
  return EndTouch::None;
}

EndTouch reverse(EndTouch e) {
  switch (e) {
    case EndTouch::Lo: return EndTouch::Hi;
    case EndTouch::Hi: return EndTouch::Lo;
    default: return e;
  }
}

std::string_view end_touch_label(EndTouch e) {
  switch (e) {
    case EndTouch::None: return "-";
    case EndTouch::Lo: return "1";
    case EndTouch::Hi: return "t";
    case EndTouch::Both: return "1t";
  }
  return "?";
}

std::string_view transform_label(Transform tr) {
  switch (tr) {
    case Transform::None: return "direct";
    case Transform::Reverse: return "reverse";
    case Transform::Swap: return "swap";
    case Transform::SwapReverse: return "swap+reverse";
  }
  return "?";
}

std::string_view match_label(MatchState m) {
  switch (m) {
    case MatchState::Match: return "yes";
    case MatchState::Mismatch: return "no";
    case MatchState::UncoveredNonempty: return "uncovered";
  }
  return "?";
}

bool counts_configurations(FamilyKind kind) {
  return kind == FamilyKind::IntersectCover2 || kind == FamilyKind::IntersectNotCover3;
}

// ---------------------------------------------------------------------------
// classification

PairClassification classify_pair(const GroundSubset& a, const GroundSubset& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("classify_pair: subsets on different ground sets");
  const int t = a.ground_size();

  PairClassification out{{},
                         set_intersection(a, b),
                         set_union(a, b),
                         set_difference(a, b),
                         set_difference(b, a),
                         sym_difference(a, b)};
  if (a.empty() || b.empty()) return out;

  const auto jp = static_cast<std::int16_t>(a.size());
  const auto jpp = static_cast<std::int16_t>(b.size());
  const EndTouch pa = end_touch_of(a.mask(), t);
  const EndTouch pb = end_touch_of(b.mask(), t);
  const bool covers = out.uni.size() == t;

  StatKey key;
  key.pattern_a = pa;
  key.pattern_b = pb;
  key.j_prime = jp;
  key.j_dblprime = jpp;

  if (out.inter.empty()) {
    key.ell_prime = static_cast<std::int16_t>(q_of_set(a));
    key.ell_dblprime = static_cast<std::int16_t>(q_of_set(b));
    if (covers) {
      out.keys.emplace_back(FamilyKind::Partition, key);
    } else {
      key.ell = static_cast<std::int16_t>(q_of_set(out.uni));
      out.keys.emplace_back(FamilyKind::DisjointNotCovering, key);
    }
    return out;
  }

  // Intersecting; the Sperner condition max{|A|,|B|} < |A u B|.
  if (std::max(jp, jpp) >= out.uni.size()) return out;

  const auto lcap = static_cast<std::int16_t>(q_of_set(out.inter));
  const auto ldelta = static_cast<std::int16_t>(q_of_set(out.sym_diff));
  if (covers) {
    StatKey key3 = key;
    key3.ell_cap = lcap;
    key3.ell_prime = static_cast<std::int16_t>(q_of_set(out.a_minus_b));
    key3.ell_dblprime = static_cast<std::int16_t>(q_of_set(out.b_minus_a));
    out.keys.emplace_back(FamilyKind::IntersectCover3, key3);

    StatKey key2 = key;
    key2.ell_cap = lcap;
    key2.ell_delta = ldelta;
    out.keys.emplace_back(FamilyKind::IntersectCover2, key2);
  } else {
    const auto ell = static_cast<std::int16_t>(q_of_set(out.uni));
    StatKey key4 = key;
    key4.j = static_cast<std::int16_t>(out.inter.size());
    key4.ell_prime = static_cast<std::int16_t>(q_of_set(out.a_minus_b));
    key4.ell_dblprime = static_cast<std::int16_t>(q_of_set(out.b_minus_a));
    key4.ell_cap = lcap;
    key4.ell = ell;
    out.keys.emplace_back(FamilyKind::IntersectNotCover4, key4);

    StatKey key3 = key;
    key3.j = key4.j;
    key3.ell_delta = ldelta;
    key3.ell_cap = lcap;
    key3.ell = ell;
    out.keys.emplace_back(FamilyKind::IntersectNotCover3, key3);
  }
  return out;
}

// ---------------------------------------------------------------------------
// oracle

StatTable oracle_table(int t, FamilyKind kind, int bound) {
  require_ground_size(t);
  if (bound > kMaxOracleBound)
    throw std::invalid_argument("oracle bound exceeds the hard cap of 10");
  if (t > bound)
    throw std::invalid_argument("oracle sweep refused: t exceeds the configured bound");

  StatTable table;
  std::map<StatKey, std::set<std::pair<Mask, Mask>>> configs;
  const bool quotient = counts_configurations(kind);
  const Mask n = Mask{1} << t;
  for (Mask am = 1; am < n; ++am) {
    const GroundSubset a(t, am);
    for (Mask bm = 1; bm < n; ++bm) {
      const GroundSubset b(t, bm);
      const PairClassification cls = classify_pair(a, b);
      for (const auto& [k, key] : cls.keys) {
        if (k != kind) continue;
        ++table[key].pairs;
        if (quotient) configs[key].emplace(cls.inter.mask(), cls.sym_diff.mask());
      }
    }
  }
  for (auto& [key, counts] : table)
    counts.configurations = quotient ? configs[key].size() : counts.pairs;
  return table;
}

// ---------------------------------------------------------------------------
// the closed-form case table, one row per boundary-pattern item

namespace {

// Smirnov letters as Parikh indices.
constexpr std::int8_t TH = 0, AL = 1, BE = 2, GA = 3;
constexpr std::int8_t NO_LETTER = -1;

struct ItemSpec {
  EndTouch pa, pb;
  int item;  // case-table item number
  std::int8_t first, last;
  std::array<std::int8_t, 4> eps;  // per-q-parameter sign in kind-specific order
};

// clang-format off
constexpr ItemSpec kPartitionItems[] = {
    // order: [ell', ell'']
    {EndTouch::Lo,   EndTouch::Hi,   1, NO_LETTER, NO_LETTER, {+1, +1}},
    {EndTouch::Both, EndTouch::None, 2, NO_LETTER, NO_LETTER, {+1, -1}},
};

constexpr ItemSpec kDisjointItems[] = {
    // Smirnov over (theta, alpha, beta) = (outside, A, B); order: [ell, ell', ell'']
    {EndTouch::None, EndTouch::None, 1, TH, TH, {+1, -1, -1}},
    {EndTouch::Both, EndTouch::None, 2, AL, AL, {-1, +1, -1}},
    {EndTouch::None, EndTouch::Hi,   3, TH, BE, {+1, -1, +1}},
    {EndTouch::Lo,   EndTouch::None, 4, AL, TH, {+1, +1, -1}},
    {EndTouch::Lo,   EndTouch::Hi,   5, AL, BE, {-1, +1, +1}},
};

constexpr ItemSpec kCover3Items[] = {
    // Smirnov over (theta, alpha, beta) = (AnB, A-B, B-A); order: [ell_cap, ell', ell'']
    {EndTouch::Lo,   EndTouch::Both, 1, TH, BE, {+1, -1, +1}},
    {EndTouch::Lo,   EndTouch::Hi,   2, AL, BE, {-1, +1, +1}},
    {EndTouch::Both, EndTouch::Both, 3, TH, TH, {+1, -1, -1}},
    {EndTouch::Both, EndTouch::None, 4, AL, AL, {-1, +1, -1}},
    {EndTouch::Both, EndTouch::Hi,   5, AL, TH, {+1, +1, -1}},
};

constexpr ItemSpec kCover2Items[] = {
    // order: [ell_cap, ell_delta]
    {EndTouch::Lo,   EndTouch::Both, 1, NO_LETTER, NO_LETTER, {+1, +1}},
    {EndTouch::Lo,   EndTouch::Hi,   2, NO_LETTER, NO_LETTER, {-1, +1}},
    {EndTouch::Both, EndTouch::Both, 3, NO_LETTER, NO_LETTER, {+1, -1}},
    {EndTouch::Both, EndTouch::None, 4, NO_LETTER, NO_LETTER, {-1, +1}},
    {EndTouch::Both, EndTouch::Hi,   5, NO_LETTER, NO_LETTER, {+1, +1}},
};

constexpr ItemSpec kNotCover4Items[] = {
    // Smirnov over (theta, alpha, beta, gamma) = (outside, A-B, B-A, AnB);
    // order: [ell, ell', ell'', ell_cap]
    {EndTouch::Lo,   EndTouch::Lo,   1,  GA, TH, {+1, -1, -1, +1}},
    {EndTouch::Lo,   EndTouch::Both, 2,  GA, BE, {-1, -1, +1, +1}},
    {EndTouch::Lo,   EndTouch::None, 3,  AL, TH, {+1, +1, -1, -1}},
    {EndTouch::Lo,   EndTouch::Hi,   4,  AL, BE, {-1, +1, +1, -1}},
    {EndTouch::Both, EndTouch::Both, 5,  GA, GA, {-1, -1, -1, +1}},
    {EndTouch::Both, EndTouch::None, 6,  AL, AL, {-1, +1, -1, -1}},
    {EndTouch::Both, EndTouch::Hi,   7,  AL, GA, {-1, +1, -1, +1}},
    {EndTouch::None, EndTouch::None, 8,  TH, TH, {+1, -1, -1, -1}},
    {EndTouch::None, EndTouch::Hi,   9,  TH, BE, {+1, -1, +1, -1}},
    {EndTouch::Hi,   EndTouch::Hi,   10, TH, GA, {+1, -1, -1, +1}},
};

constexpr ItemSpec kNotCover3Items[] = {
    // Smirnov over (theta, alpha, beta) = (outside, A symdiff B, AnB);
    // order: [ell, ell_delta, ell_cap]
    {EndTouch::Lo,   EndTouch::Lo,   1,  BE, TH, {+1, -1, +1}},
    {EndTouch::Lo,   EndTouch::Both, 2,  BE, AL, {-1, +1, +1}},
    {EndTouch::Lo,   EndTouch::None, 3,  AL, TH, {+1, +1, -1}},
    {EndTouch::Lo,   EndTouch::Hi,   4,  AL, AL, {-1, +1, -1}},
    {EndTouch::Both, EndTouch::Both, 5,  BE, BE, {-1, -1, +1}},
    {EndTouch::Both, EndTouch::None, 6,  AL, AL, {-1, +1, -1}},
    {EndTouch::Both, EndTouch::Hi,   7,  AL, BE, {-1, +1, +1}},
    {EndTouch::None, EndTouch::None, 8,  TH, TH, {+1, -1, -1}},
    {EndTouch::None, EndTouch::Hi,   9,  TH, AL, {+1, +1, -1}},
    {EndTouch::Hi,   EndTouch::Hi,   10, TH, BE, {+1, -1, +1}},
};
// clang-format on

std::pair<const ItemSpec*, std::size_t> item_table(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Partition: return {kPartitionItems, std::size(kPartitionItems)};
    case FamilyKind::DisjointNotCovering: return {kDisjointItems, std::size(kDisjointItems)};
    case FamilyKind::IntersectCover3: return {kCover3Items, std::size(kCover3Items)};
    case FamilyKind::IntersectCover2: return {kCover2Items, std::size(kCover2Items)};
    case FamilyKind::IntersectNotCover4: return {kNotCover4Items, std::size(kNotCover4Items)};
    case FamilyKind::IntersectNotCover3: return {kNotCover3Items, std::size(kNotCover3Items)};
  }
  return {nullptr, 0};
}

const ItemSpec* find_item(FamilyKind kind, EndTouch pa, EndTouch pb) {
  auto [items, count] = item_table(kind);
  for (std::size_t i = 0; i < count; ++i)
    if (items[i].pa == pa && items[i].pb == pb) return &items[i];
  return nullptr;
}

// Composition count that treats out-of-domain arguments as empty products of
// choices rather than errors: impossible keys must evaluate to zero.
CountValue comp0(int parts, int total) {
  if (parts < 1 || total < 1) return CountValue{};
  return compositions(parts, total);
}

bool touches(EndTouch e, bool lo) {
  if (lo) return e == EndTouch::Lo || e == EndTouch::Both;
  return e == EndTouch::Hi || e == EndTouch::Both;
}

// How many of {1, t} the boundary pattern pins inside A-B (resp. B-A). The
// quotient-keyed products see only (A n B, A symdiff B); a configuration is
// realized by an actual pair iff these pinned endpoints fit into the
// difference sets. Without this condition the ({1,t}, -) products count
// tilings that no pair attains (first at t = 3, j' - j = 1); the sweep
// reports surface that resolution.
int pinned_in_first_difference(EndTouch a, EndTouch b) {
  int n = 0;
  if (touches(a, true) && !touches(b, true)) ++n;
  if (touches(a, false) && !touches(b, false)) ++n;
  return n;
}

CountValue smirnov3(std::int8_t first, std::int8_t last, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return CountValue{};
  return smirnov_count(3, {a, b, c}, first, last);
}

CountValue smirnov4(std::int8_t first, std::int8_t last, int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) return CountValue{};
  return smirnov_count(4, {a, b, c, d}, first, last);
}

void require_odd_parameters(const StatKey& key) {
  for (int ell : {key.ell_prime, key.ell_dblprime, key.ell_cap, key.ell_delta, key.ell})
    if (ell != -1 && ell % 2 == 0)
      throw std::invalid_argument("q-parameters must be odd");
}

CountValue evaluate_item(FamilyKind kind, const ItemSpec& spec, const StatKey& key, int t) {
  const int jp = key.j_prime, jpp = key.j_dblprime, j = key.j;
  const auto rho = [&spec](int ell, int slot) { return (ell + spec.eps[slot]) / 2; };

  switch (kind) {
    case FamilyKind::Partition: {
      if (key.ell_prime != key.ell_dblprime) return CountValue{};  // conditional equality
      return comp0(rho(key.ell_prime, 0), jp) * comp0(rho(key.ell_dblprime, 1), jpp);
    }
    case FamilyKind::DisjointNotCovering: {
      const int r_out = rho(key.ell, 0), r_a = rho(key.ell_prime, 1),
                r_b = rho(key.ell_dblprime, 2);
      return smirnov3(spec.first, spec.last, r_out, r_a, r_b) *
             comp0(r_out, t - jp - jpp) * comp0(r_a, jp) * comp0(r_b, jpp);
    }
    case FamilyKind::IntersectCover3: {
      const int r_cap = rho(key.ell_cap, 0), r_a = rho(key.ell_prime, 1),
                r_b = rho(key.ell_dblprime, 2);
      return smirnov3(spec.first, spec.last, r_cap, r_a, r_b) *
             comp0(r_cap, jp + jpp - t) * comp0(r_a, t - jpp) * comp0(r_b, t - jp);
    }
    case FamilyKind::IntersectCover2: {
      if (key.ell_cap != key.ell_delta) return CountValue{};  // conditional equality
      // split feasibility: |A-B| = t - j'', |B-A| = t - j'
      if (t - jpp < pinned_in_first_difference(spec.pa, spec.pb) ||
          t - jp < pinned_in_first_difference(spec.pb, spec.pa))
        return CountValue{};
      return comp0(rho(key.ell_cap, 0), jp + jpp - t) *
             comp0(rho(key.ell_delta, 1), 2 * t - jp - jpp);
    }
    case FamilyKind::IntersectNotCover4: {
      const int r_out = rho(key.ell, 0), r_a = rho(key.ell_prime, 1),
                r_b = rho(key.ell_dblprime, 2), r_cap = rho(key.ell_cap, 3);
      return smirnov4(spec.first, spec.last, r_out, r_a, r_b, r_cap) *
             comp0(r_out, t - (jp + jpp - j)) * comp0(r_a, jp - j) * comp0(r_b, jpp - j) *
             comp0(r_cap, j);
    }
    case FamilyKind::IntersectNotCover3: {
      // split feasibility: |A-B| = j' - j, |B-A| = j'' - j
      if (jp - j < pinned_in_first_difference(spec.pa, spec.pb) ||
          jpp - j < pinned_in_first_difference(spec.pb, spec.pa))
        return CountValue{};
      const int r_out = rho(key.ell, 0), r_delta = rho(key.ell_delta, 1),
                r_cap = rho(key.ell_cap, 2);
      return smirnov3(spec.first, spec.last, r_out, r_delta, r_cap) *
             comp0(r_out, t - (jp + jpp - j)) * comp0(r_delta, jp + jpp - 2 * j) *
             comp0(r_cap, j);
    }
  }
  return CountValue{};
}

}  // namespace

// ---------------------------------------------------------------------------
// symmetry extension

StatKey reverse_key(const StatKey& key) {
  StatKey out = key;
  out.pattern_a = reverse(key.pattern_a);
  out.pattern_b = reverse(key.pattern_b);
  return out;  // rho and endpoint incidence are reversal-invariant, so all q stay
}

StatKey swap_key(const StatKey& key) {
  StatKey out = key;
  std::swap(out.pattern_a, out.pattern_b);
  std::swap(out.j_prime, out.j_dblprime);
  std::swap(out.ell_prime, out.ell_dblprime);
  return out;  // intersection/union/symdiff parameters are swap-invariant
}

std::optional<SymmetryResult> symmetry_extend(FamilyKind kind, const StatKey& key) {
  const std::pair<Transform, StatKey> attempts[] = {
      {Transform::Reverse, reverse_key(key)},
      {Transform::Swap, swap_key(key)},
      {Transform::SwapReverse, reverse_key(swap_key(key))},
  };
  for (const auto& [tr, mapped] : attempts)
    if (find_item(kind, mapped.pattern_a, mapped.pattern_b)) return SymmetryResult{mapped, tr};
  return std::nullopt;
}

ClosedForm closed_form(FamilyKind kind, const StatKey& key, int t) {
  require_ground_size(t);
  require_odd_parameters(key);
  if (const ItemSpec* spec = find_item(kind, key.pattern_a, key.pattern_b))
    return {true, evaluate_item(kind, *spec, key, t), spec->item, Transform::None};
  if (auto sym = symmetry_extend(kind, key)) {
    const ItemSpec* spec = find_item(kind, sym->key.pattern_a, sym->key.pattern_b);
    return {true, evaluate_item(kind, *spec, sym->key, t), spec->item, sym->transform};
  }
  return {};
}

// ---------------------------------------------------------------------------
// sweep

namespace {

bool pattern_covered(FamilyKind kind, EndTouch pa, EndTouch pb) {
  if (find_item(kind, pa, pb)) return true;
  StatKey probe;
  probe.pattern_a = pa;
  probe.pattern_b = pb;
  return symmetry_extend(kind, probe).has_value();
}

std::vector<std::int16_t> odd_values(int t) {
  std::vector<std::int16_t> vals;
  for (int v = 1; v <= t; v += 2) vals.push_back(static_cast<std::int16_t>(v));
  return vals;
}

// Every parameter key the closed forms could claim, per kind, over covered
// patterns; used to catch products that are positive on keys the oracle never
// produces.
template <class Fn>
void enumerate_candidate_keys(int t, FamilyKind kind, Fn&& fn) {
  const std::vector<std::int16_t> odd = odd_values(t);
  const int odd_n = static_cast<int>(odd.size());
  for (int pa = 0; pa < 4; ++pa) {
    for (int pb = 0; pb < 4; ++pb) {
      StatKey key;
      key.pattern_a = static_cast<EndTouch>(pa);
      key.pattern_b = static_cast<EndTouch>(pb);
      if (!pattern_covered(kind, key.pattern_a, key.pattern_b)) continue;
      switch (kind) {
        case FamilyKind::Partition:
          for (int jp = 1; jp <= t - 1; ++jp)
            for (int i = 0; i < odd_n; ++i) {
              key.j_prime = static_cast<std::int16_t>(jp);
              key.j_dblprime = static_cast<std::int16_t>(t - jp);
              key.ell_prime = key.ell_dblprime = odd[i];  // unequal pairs evaluate to zero
              fn(key);
            }
          break;
        case FamilyKind::DisjointNotCovering:
          for (int jp = 1; jp <= t - 2; ++jp)
            for (int jpp = 1; jp + jpp <= t - 1; ++jpp)
              for (int i1 = 0; i1 < odd_n; ++i1)
                for (int i2 = 0; i2 < odd_n; ++i2)
                  for (int i3 = 0; i3 < odd_n; ++i3) {
                    key.j_prime = static_cast<std::int16_t>(jp);
                    key.j_dblprime = static_cast<std::int16_t>(jpp);
                    key.ell_prime = odd[i1];
                    key.ell_dblprime = odd[i2];
                    key.ell = odd[i3];
                    fn(key);
                  }
          break;
        case FamilyKind::IntersectCover3:
        case FamilyKind::IntersectCover2:
          for (int jp = 2; jp <= t - 1; ++jp)
            for (int jpp = std::max(2, t + 1 - jp); jpp <= t - 1; ++jpp) {
              key.j_prime = static_cast<std::int16_t>(jp);
              key.j_dblprime = static_cast<std::int16_t>(jpp);
              if (kind == FamilyKind::IntersectCover2) {
                for (int i1 = 0; i1 < odd_n; ++i1) {
                  key.ell_cap = key.ell_delta = odd[i1];  // unequal pairs are zero
                  fn(key);
                }
              } else {
                for (int i1 = 0; i1 < odd_n; ++i1)
                  for (int i2 = 0; i2 < odd_n; ++i2)
                    for (int i3 = 0; i3 < odd_n; ++i3) {
                      key.ell_cap = odd[i1];
                      key.ell_prime = odd[i2];
                      key.ell_dblprime = odd[i3];
                      fn(key);
                    }
              }
            }
          break;
        case FamilyKind::IntersectNotCover4:
        case FamilyKind::IntersectNotCover3:
          for (int j = 1; j <= t - 3; ++j)
            for (int jp = j + 1; jp <= t - 2; ++jp)
              for (int jpp = j + 1; jp + jpp - j <= t - 1; ++jpp) {
                key.j = static_cast<std::int16_t>(j);
                key.j_prime = static_cast<std::int16_t>(jp);
                key.j_dblprime = static_cast<std::int16_t>(jpp);
                for (int i1 = 0; i1 < odd_n; ++i1)
                  for (int i2 = 0; i2 < odd_n; ++i2)
                    for (int i3 = 0; i3 < odd_n; ++i3) {
                      if (kind == FamilyKind::IntersectNotCover4) {
                        for (int i4 = 0; i4 < odd_n; ++i4) {
                          key.ell = odd[i1];
                          key.ell_prime = odd[i2];
                          key.ell_dblprime = odd[i3];
                          key.ell_cap = odd[i4];
                          fn(key);
                        }
                      } else {
                        key.ell = odd[i1];
                        key.ell_delta = odd[i2];
                        key.ell_cap = odd[i3];
                        fn(key);
                      }
                    }
              }
          break;
      }
    }
  }
}

}  // namespace

FamilySweep full_sweep(int t, FamilyKind kind, int bound) {
  FamilySweep sweep;
  sweep.kind = kind;
  sweep.t = t;
  sweep.reading_configurations = counts_configurations(kind);

  StatTable oracle = oracle_table(t, kind, bound);

  // Keys the closed forms claim but the oracle never met become zero-count
  // oracle rows so the comparison flags them.
  enumerate_candidate_keys(t, kind, [&](const StatKey& key) {
    if (oracle.count(key)) return;
    ClosedForm cf = closed_form(kind, key, t);
    if (cf.covered && !cf.value.is_zero()) oracle.emplace(key, OracleCounts{});
  });

  for (const auto& [key, counts] : oracle) {
    SweepRow row{key, closed_form(kind, key, t), counts, MatchState::Match};
    const std::uint64_t expected =
        sweep.reading_configurations ? counts.configurations : counts.pairs;
    if (!row.closed.covered) {
      row.state = MatchState::UncoveredNonempty;
      ++sweep.uncovered_nonempty;
    } else if (row.closed.value == CountValue{expected}) {
      row.state = MatchState::Match;
    } else {
      row.state = MatchState::Mismatch;
      ++sweep.mismatches;
    }
    if (row.closed.covered && sweep.reading_configurations &&
        row.closed.value != CountValue{counts.pairs})
      ++sweep.pair_reading_mismatches;
    sweep.total_pairs += counts.pairs;
    sweep.rows.push_back(std::move(row));
  }

  for (int pa = 0; pa < 4; ++pa)
    for (int pb = 0; pb < 4; ++pb) {
      const auto ea = static_cast<EndTouch>(pa), eb = static_cast<EndTouch>(pb);
      if (pattern_covered(kind, ea, eb)) continue;
      UncoveredPattern up{ea, eb, 0};
      for (const auto& [key, counts] : oracle)
        if (key.pattern_a == ea && key.pattern_b == eb) up.oracle_pairs += counts.pairs;
      sweep.uncovered_patterns.push_back(up);
    }
  return sweep;
}

}  // namespace symcyc
