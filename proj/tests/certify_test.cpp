#include "lvrank/certify.hpp"

#include <gtest/gtest.h>

#include "frac.hpp"

#include "lvrank/foliation.hpp"
#include "lvrank/genlab.hpp"
#include "lvrank/linalg.hpp"
#include "oracles.hpp"

namespace lvrank {
namespace {

using oracle::from_ints;
using oracle::ints;

const RatVector kSevenCert = ints({2, 1, 1, 2, 1, 1, 2});

TEST(SymSkew, Examples) {
  const RatMatrix pp = from_ints({{0, 1}, {-1, 0}}).entries();
  EXPECT_EQ(sym_part(pp), RatMatrix(2, 2));
  EXPECT_EQ(skew_part(pp), pp);
  const RatMatrix a = from_ints({{-1, 3}, {1, 0}}).entries();
  EXPECT_EQ(sym_part(a), from_ints({{-1, 2}, {2, 0}}).entries());
  EXPECT_EQ(skew_part(a), from_ints({{0, 1}, {-1, 0}}).entries());
  EXPECT_EQ(sym_part(oracle::seven_species().entries())(0, 1), frac(-1, 2));
}

TEST(VerifyCertificate, Examples) {
  const InteractionMatrix a = oracle::seven_species();
  EXPECT_TRUE(verify_certificate(a, {kSevenCert}));
  const RatMatrix s = sym_part(scale_rows(a.entries(), kSevenCert));
  RatMatrix expected(7, 7);
  expected(6, 6) = -2;
  EXPECT_EQ(s, expected);
  EXPECT_TRUE(verify_certificate(from_ints({{0, 1}, {-1, 0}}), {ints({1, 1})}));
  const InteractionMatrix bad = from_ints({{0, 1}, {1, 0}});
  EXPECT_FALSE(verify_certificate(bad, {ints({1, 1})}));
  EXPECT_EQ(scaled_form(bad, ints({1, 1}), ints({1, 1})), 2);
  EXPECT_FALSE(verify_certificate(a, {ints({1, 1, 1, 1, 1, 1, 0})}));
}

TEST(AlmostSkew, Examples) {
  const InteractionMatrix a = oracle::seven_species();
  EXPECT_TRUE(is_almost_skew(a, {kSevenCert}));
  EXPECT_FALSE(is_almost_skew(a, {RatVector(7, Rational(1))}));
  EXPECT_TRUE(is_almost_skew(from_ints({{0, 2, 0}, {-2, 0, 1}, {0, -1, 0}}),
                             {RatVector(3, Rational(1))}));
}

TEST(FindCertificate, Examples) {
  const CertifyOutcome seven = find_certificate(oracle::seven_species());
  ASSERT_TRUE(std::holds_alternative<Certified>(seven));
  EXPECT_EQ(std::get<Certified>(seven).certificate.c, kSevenCert);

  const InteractionMatrix bad = from_ints({{0, 1}, {1, 0}});
  const CertifyOutcome refuted = find_certificate(bad);
  ASSERT_TRUE(std::holds_alternative<RefutedAlgebra>(refuted));
  const auto& r = std::get<RefutedAlgebra>(refuted);
  EXPECT_GT(scaled_form(bad, r.candidate, r.witness), 0);

  const CertifyOutcome diag = find_certificate(from_ints({{-1, 0}, {0, -1}}));
  ASSERT_TRUE(std::holds_alternative<Certified>(diag));
  EXPECT_EQ(std::get<Certified>(diag).certificate.c, ints({1, 1}));

  const InteractionMatrix positive = from_ints({{1, 0}, {0, -1}});
  const CertifyOutcome p = find_certificate(positive);
  ASSERT_TRUE(std::holds_alternative<RefutedAlgebra>(p));
  const auto& pr = std::get<RefutedAlgebra>(p);
  EXPECT_GT(scaled_form(positive, pr.candidate, pr.witness), 0);
}

TEST(FindCertificate, OneSidedWeakEdgeIsRefuted) {
  const InteractionMatrix a = from_ints({{-1, 3}, {0, 0}});
  const CertifyOutcome o = find_certificate(a);
  ASSERT_TRUE(std::holds_alternative<RefutedAlgebra>(o));
  const auto& r = std::get<RefutedAlgebra>(o);
  EXPECT_GT(scaled_form(a, r.candidate, r.witness), 0);
}

TEST(FindCertificate, CyclicWeakGraphBestEffort) {
  // A White triangle can still be dissipative (skew-symmetric), though not
  // stably so.
  const InteractionMatrix skew =
      from_ints({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  const CertifyOutcome o = find_certificate(skew);
  ASSERT_TRUE(std::holds_alternative<Certified>(o));
  EXPECT_TRUE(verify_certificate(skew, std::get<Certified>(o).certificate));
  EXPECT_TRUE(std::holds_alternative<RefutedGraph>(is_stably_dissipative(skew)));
}

TEST(IsStablyDissipative, Examples) {
  const CertifyOutcome seven = is_stably_dissipative(oracle::seven_species());
  ASSERT_TRUE(std::holds_alternative<Certified>(seven));
  const CertifyOutcome fc = is_stably_dissipative(oracle::food_chain());
  ASSERT_TRUE(std::holds_alternative<Certified>(fc));
  EXPECT_EQ(std::get<Certified>(fc).certificate.c, ints({1, 1, 1}));
  EXPECT_TRUE(std::holds_alternative<RefutedGraph>(
      is_stably_dissipative(from_ints({{2, 0}, {0, -1}}))));
  EXPECT_STREQ(outcome_name(seven), "Certified");
}

TEST(IsStablyDissipative, SemidefiniteBlackBlockIsUnknown) {
  // Dissipative, but the Black block form is only semidefinite: a small
  // perturbation of the strong link breaks it.
  const InteractionMatrix a = from_ints({{-1, 1}, {1, -1}});
  EXPECT_TRUE(std::holds_alternative<Certified>(find_certificate(a)));
  EXPECT_TRUE(std::holds_alternative<Unknown>(is_stably_dissipative(a)));
}

TEST(Lemma1Seed, BlackVertices) {
  EXPECT_EQ(lemma1_seed(oracle::seven_species(), {kSevenCert}),
            std::vector<std::size_t>{6});
  EXPECT_TRUE(lemma1_seed(from_ints({{0, 1}, {-1, 0}}), {ints({1, 1})}).empty());
  EXPECT_EQ(lemma1_seed(oracle::food_chain(), {ints({1, 1, 1})}),
            std::vector<std::size_t>{0});
}

// Properties over the generated suite: certification, exact re-verification
// against the minor oracle, scaling invariance, and kernel transport.
TEST(Certify, GeneratedSuite) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const GenConfig cfg = oracle::config(seed, 1 + seed % 10);
    const InteractionMatrix a = sample_matrix(random_sd_graph(cfg), cfg);
    const CertifyOutcome o = is_stably_dissipative(a);
    ASSERT_TRUE(std::holds_alternative<Certified>(o)) << render_matrix(a);
    const RatVector& c = std::get<Certified>(o).certificate.c;
    EXPECT_TRUE(verify_certificate(a, {c}));
    EXPECT_TRUE(is_almost_skew(a, {c}));
    RatMatrix neg = sym_part(scale_rows(a.entries(), c));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) neg(i, j) = -neg(i, j);
    if (a.size() <= 8) EXPECT_TRUE(oracle::psd_by_minors(neg));
    RatVector scaled = c;
    for (auto& x : scaled) x *= frac(7, 3);
    EXPECT_TRUE(verify_certificate(a, {scaled}));
    // Ker(A^T) = diag(c) Ker(A).
    const auto ker = kernel_basis(a).vectors;
    const auto ker_t = kernel_basis_T(a).vectors;
    ASSERT_EQ(ker.size(), ker_t.size());
    std::vector<RatVector> moved;
    for (const auto& v : ker) {
      RatVector w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = c[i] * v[i];
      moved.push_back(w);
    }
    if (!ker.empty()) {
      std::vector<RatVector> both = moved;
      both.insert(both.end(), ker_t.begin(), ker_t.end());
      EXPECT_EQ(exact_rank(rows_to_matrix(both, a.size())), ker.size());
    }
  }
}

// All-Black tree where coordinate descent on the 2^k grid stalls at a
// negative margin; the concave ascent over the scales finds a certificate.
TEST(FindCertificate, GridStallRecoveredByAscent) {
  const InteractionMatrix a = parse_matrix(
      R"([["-94141/8000","0","10717/1000","0"],)"
      R"(["-9931/8000","-13629/10000","0","0"],)"
      R"(["-10743/20000","0","-208069/80000","-1272/625"],)"
      R"(["0","0","1041/100","-9359/2400"]])");
  const CertifyOutcome outcome = is_stably_dissipative(a);
  const auto* cert = std::get_if<Certified>(&outcome);
  ASSERT_NE(cert, nullptr) << outcome_name(outcome);
  EXPECT_TRUE(verify_certificate(a, cert->certificate));
  RatMatrix form = sym_part(scale_rows(a.entries(), cert->certificate.c));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) form(i, j) = -form(i, j);
  EXPECT_TRUE(oracle::pd_by_sylvester(form));
}

}  // namespace
}  // namespace lvrank
