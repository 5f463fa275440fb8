#include "symcyc/identities.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace symcyc;

namespace {

SignVec sv(std::initializer_list<int> entries) {
  SignVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (int e : entries) v[i++] = e;
  return v;
}

}  // namespace

TEST_CASE("intersection poset of two singletons") {
  const std::vector<GroundSubset> family{GroundSubset::of(3, {1}), GroundSubset::of(3, {2})};
  const IntersectionPoset poset(family);
  CHECK(poset.top() == GroundSubset::of(3, {1, 2}));
  REQUIRE(poset.elements().size() == 3);  // {}, {1}, {2}
  CHECK(poset.elements()[0] == GroundSubset(3));
  CHECK(poset.mu_to_top(0) == 1);   // mu({}, top)
  CHECK(poset.mu_to_top(1) == -1);  // mu({1}, top)
  CHECK(poset.mu_to_top(2) == -1);  // mu({2}, top)
}

TEST_CASE("moebius union decomposition on degenerate families") {
  const SymmetricCycle r = SymmetricCycle::distinguished(4);
  // single member
  CHECK(check_moebius({GroundSubset::of(4, {2, 3})}, r));
  // nested members (the union equals a member)
  CHECK(check_moebius({GroundSubset::of(4, {2}), GroundSubset::of(4, {2, 3})}, r));
  // repeated members
  CHECK(check_moebius({GroundSubset::of(4, {1, 3}), GroundSubset::of(4, {1, 3})}, r));
  // empty member sets
  CHECK(check_moebius({GroundSubset(4), GroundSubset::of(4, {2})}, r));
}

TEST_CASE("valuation identity, anchored instance") {
  const SymmetricCycle r = SymmetricCycle::distinguished(3);
  const GroundSubset a = GroundSubset::of(3, {1}), b = GroundSubset::of(3, {2});
  CHECK(decompose(negate_at(a), r).x == sv({0, 1, 0}));
  CHECK(decompose(negate_at(b), r).x == sv({1, -1, 1}));
  CHECK(decompose(negate_at(set_union(a, b)), r).x == sv({0, 0, 1}));
  CHECK(check_valuation(a, b, r));
  CHECK(check_valuation(a, a, r));
}

TEST_CASE("disjoint unions satisfy the inclusion-exclusion relation with sigma(1)") {
  for (int t = 3; t <= 6; ++t) {
    const SymmetricCycle r = SymmetricCycle::distinguished(t);
    XVec sigma1 = XVec::Zero(t);
    sigma1[0] = 1;
    for (Mask am = 0; am < (Mask{1} << t); ++am)
      for (Mask bm = 0; bm < (Mask{1} << t); ++bm) {
        if ((am & bm) != 0) continue;
        const XVec xa = decompose(sign_vec_from_mask(am, t), r).x;
        const XVec xb = decompose(sign_vec_from_mask(bm, t), r).x;
        const XVec xu = decompose(sign_vec_from_mask(am | bm, t), r).x;
        CHECK((xa + xb).eval() == (sigma1 + xu).eval());
      }
  }
}

TEST_CASE("negative-part identities, anchored instance") {
  const SymmetricCycle r = SymmetricCycle::distinguished(3);
  const SignVec v = sv({-1, 1, -1});
  const Decomposition dec = decompose(v, r);
  long long sum_neg = 0;
  for (const SignVec& u : dec.q_vertices()) sum_neg += negative_part(u).size();
  CHECK(sum_neg == 5);  // 3 + 1 + 1
  CHECK(check_negpart_identities(v, r));
  CHECK(check_negpart_identities(all_ones(3), r));
}

TEST_CASE("pairwise identities, anchored instance and skip semantics") {
  const SymmetricCycle r = SymmetricCycle::distinguished(3);
  const SignVec v = sv({-1, 1, -1});
  const Decomposition dec = decompose(v, r);
  const auto qs = dec.q_vertices();
  long long pair_dist = 0, pair_dot = 0;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      pair_dist += distance(qs[i], qs[j]);
      pair_dot += scalar_product(qs[i], qs[j]);
    }
  CHECK(pair_dist == 6);  // (q^2 - 1) t / 4 at q = 3, t = 3
  CHECK(pair_dot == -3);  // (1 - q) t / 2
  CHECK(check_pairwise_identities(v, r) == PairwiseOutcome::Pass);
  CHECK(check_pairwise_identities(all_ones(3), r) == PairwiseOutcome::Skipped);
}

TEST_CASE("pairwise identities hold for q = 5 vertices") {
  const SymmetricCycle r = SymmetricCycle::distinguished(5);
  const SignVec v = parse_sign_vector("+-+-+");
  const Decomposition dec = decompose(v, r);
  REQUIRE(dec.q() == 5);
  CHECK(check_pairwise_identities(v, r) == PairwiseOutcome::Pass);
}

TEST_CASE("two-tope identity, anchored instances") {
  const SymmetricCycle r = SymmetricCycle::distinguished(3);
  CHECK(check_two_tope(all_ones(3), all_ones(3), r));
  // T1 = (-1,1,-1): sum of d(Q', R^0) over Q' in {R^3, R^1, R^5} is 3+1+1 = 5
  const Decomposition d1 = decompose(sv({-1, 1, -1}), r);
  long long sum = 0;
  for (const SignVec& u : d1.q_vertices()) sum += distance(u, all_ones(3));
  CHECK(sum == 5);
  CHECK(check_two_tope(sv({-1, 1, -1}), all_ones(3), r));
  for (Mask am = 0; am < 8; ++am)
    for (Mask bm = 0; bm < 8; ++bm)
      CHECK(check_two_tope(sign_vec_from_mask(am, 3), sign_vec_from_mask(bm, 3), r));
}

TEST_CASE("coherent decomposition in the 0/1 cube") {
  const SymmetricCycle r = SymmetricCycle::distinguished(3);
  CHECK(check_coherent_decomposition(all_ones(3), r));   // image is the zero word
  CHECK(check_coherent_decomposition(sv({-1, 1, -1}), r));
  SplitMix64 rng(9);
  for (int t = 3; t <= 5; ++t) {
    const SymmetricCycle d = random_cycle(t, rng);
    for (Mask m = 0; m < (Mask{1} << t); ++m)
      CHECK(check_coherent_decomposition(sign_vec_from_mask(m, t), d));
  }
}

TEST_CASE("weight equivalences on even ground sets") {
  CHECK(check_weight_equivalences(4));
  CHECK(check_weight_equivalences(6));
  CHECK_THROWS_AS(check_weight_equivalences(5), std::invalid_argument);
}

TEST_CASE("suites pass at reduced ranges") {
  SuiteOptions opts;
  opts.t_max = 5;
  for (Suite s : kAllSuites) {
    const VerificationReport report = run_suite(s, opts);
    CHECK(report.passed());
    CHECK(report.checked > 0);
    if (s == Suite::Pairwise) CHECK(report.skipped > 0);
    if (s == Suite::Readings) CHECK(!report.notes.empty());
  }
}

TEST_CASE("suite reports are reproducible for a fixed seed") {
  SuiteOptions opts;
  opts.t_max = 4;
  opts.seed = 42;
  const VerificationReport a = run_suite(Suite::Moebius, opts);
  const VerificationReport b = run_suite(Suite::Moebius, opts);
  CHECK(a.checked == b.checked);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.seed == 42);
}
