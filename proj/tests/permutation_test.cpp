#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "permpoly/permutation.hpp"

using namespace permpoly;

namespace {

// Independent oracle for the nested construction: evaluate
// -[((a-1)^{p-2} + 1)^{p-2} - 1]^{p-2} pointwise with residue powers only,
// no polynomial machinery.
u64 nested_form_value(u64 a, u64 p) {
    const u64 t1 = pow_mod(sub_mod(a, 1 % p, p), p - 2, p);
    const u64 t2 = pow_mod(add_mod(t1, 1, p), p - 2, p);
    const u64 t3 = pow_mod(sub_mod(t2, 1, p), p - 2, p);
    return neg_mod(t3, p);
}

// The value table every transposition (a b) must realize.
std::vector<u64> swapped_identity(u64 p, u64 a, u64 b) {
    std::vector<u64> t(static_cast<std::size_t>(p));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
    return t;
}

bool next_vector(std::vector<u64>& v, u64 p) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

const u64 kOddPrimesTo31[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

// =============================================================================
// transposition_simple
// =============================================================================

TEST(TranspositionSimple, ClosedFormCoefficients) {
    EXPECT_EQ(transposition_simple(PrimeModulus(2)).coeffs(),
              (std::vector<u64>{1, 1}));  // 1 - x == x + 1 mod 2
    EXPECT_EQ(transposition_simple(PrimeModulus(3)).coeffs(),
              (std::vector<u64>{1, 2}));
    EXPECT_EQ(transposition_simple(PrimeModulus(5)).coeffs(),
              (std::vector<u64>{1, 2, 1, 1}));
}

TEST(TranspositionSimple, ValueTableContractThrough97) {
    for (u64 pv : {2u,  3u,  5u,  7u,  11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u,
                   43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u}) {
        const PrimeModulus p(pv);
        EXPECT_EQ(table_of(transposition_simple(p)).values(),
                  swapped_identity(pv, 0, 1))
            << "p=" << pv;
    }
}

TEST(TranspositionSimple, DegreeIsPMinus2ForOddPrimes) {
    for (u64 pv : kOddPrimesTo31)
        EXPECT_EQ(transposition_simple(PrimeModulus(pv)).degree(), pv - 2);
}

// =============================================================================
// transposition_general
// =============================================================================

TEST(TranspositionGeneral, ZeroOneCoincidesWithSimple) {
    const PrimeModulus p(5);
    EXPECT_EQ(transposition_general(p, TranspositionSpec(p, 0, 1)),
              transposition_simple(p));
}

TEST(TranspositionGeneral, SwapOrderIrrelevant) {
    const PrimeModulus p(5);
    EXPECT_EQ(transposition_general(p, TranspositionSpec(p, 1, 0)),
              transposition_simple(p));
    for (u64 pv : {3u, 5u, 7u, 11u, 13u}) {
        const PrimeModulus pm(pv);
        for (u64 a = 0; a < pv; ++a)
            for (u64 b = a + 1; b < pv; ++b)
                EXPECT_EQ(transposition_general(pm, TranspositionSpec(pm, a, b)),
                          transposition_general(pm, TranspositionSpec(pm, b, a)));
    }
}

TEST(TranspositionGeneral, HandCheckedTable) {
    const PrimeModulus p(5);
    EXPECT_EQ(table_of(transposition_general(p, TranspositionSpec(p, 2, 4))).values(),
              (std::vector<u64>{0, 1, 4, 3, 2}));
}

TEST(TranspositionGeneral, TableSwapsPairAndFixesRest) {
    for (u64 pv : {3u, 5u, 7u, 11u, 13u}) {
        const PrimeModulus p(pv);
        for (u64 a = 0; a < pv; ++a)
            for (u64 b = a + 1; b < pv; ++b)
                EXPECT_EQ(
                    table_of(transposition_general(p, TranspositionSpec(p, a, b)))
                        .values(),
                    swapped_identity(pv, a, b))
                    << "p=" << pv << " a=" << a << " b=" << b;
    }
}

TEST(TranspositionGeneral, RejectsDegenerateAndEvenCases) {
    const PrimeModulus p5(5), p2(2);
    EXPECT_THROW(TranspositionSpec(p5, 3, 3), DegeneratePair);
    EXPECT_THROW(transposition_general(p2, TranspositionSpec(p2, 0, 1)),
                 EvenModulus);
}

// =============================================================================
// transposition_chen_mullen
// =============================================================================

TEST(TranspositionChenMullen, SmallPrimes) {
    EXPECT_EQ(transposition_chen_mullen(PrimeModulus(3)).coeffs(),
              (std::vector<u64>{1, 2}));
    EXPECT_EQ(transposition_chen_mullen(PrimeModulus(5)).coeffs(),
              (std::vector<u64>{1, 2, 1, 1}));
}

TEST(TranspositionChenMullen, MatchesPointwiseOracle) {
    for (u64 pv : {3u, 5u, 7u, 11u, 13u}) {
        const PrimeModulus p(pv);
        const FunctionTable t = table_of(transposition_chen_mullen(p));
        for (u64 a = 0; a < pv; ++a)
            EXPECT_EQ(t[static_cast<std::size_t>(a)], nested_form_value(a, pv))
                << "p=" << pv << " a=" << a;
    }
}

TEST(TranspositionChenMullen, EqualsSimpleForm) {
    for (u64 pv : kOddPrimesTo31)
        EXPECT_EQ(transposition_chen_mullen(PrimeModulus(pv)),
                  transposition_simple(PrimeModulus(pv)))
            << "p=" << pv;
}

TEST(TranspositionChenMullen, RawExpansionDegree) {
    // The unreduced nested form has degree (p-2)^3.
    for (u64 pv : {3u, 5u, 7u}) {
        const u64 d = (pv - 2) * (pv - 2) * (pv - 2);
        EXPECT_EQ(transposition_chen_mullen_raw(PrimeModulus(pv)).degree(), d);
    }
}

TEST(TranspositionChenMullen, RejectsEvenModulus) {
    EXPECT_THROW(transposition_chen_mullen(PrimeModulus(2)), EvenModulus);
}

// =============================================================================
// transposition_rational
// =============================================================================

TEST(TranspositionRational, ZeroOneHandDivision) {
    // (x^5 - x)/(x(x-1)) = x^3 + x^2 + x + 1; scaled by 1 and shifted by x.
    const PrimeModulus p(5);
    EXPECT_EQ(transposition_rational(p, TranspositionSpec(p, 0, 1)).coeffs(),
              (std::vector<u64>{1, 2, 1, 1}));
}

TEST(TranspositionRational, HandCheckedTableAtP3) {
    const PrimeModulus p(3);
    EXPECT_EQ(table_of(transposition_rational(p, TranspositionSpec(p, 0, 2))).values(),
              (std::vector<u64>{2, 1, 0}));
}

TEST(TranspositionRational, AllPairsSwapTableAtP7) {
    const PrimeModulus p(7);
    for (u64 a = 0; a < 7; ++a)
        for (u64 b = a + 1; b < 7; ++b)
            EXPECT_EQ(
                table_of(transposition_rational(p, TranspositionSpec(p, a, b)))
                    .values(),
                swapped_identity(7, a, b))
                << "a=" << a << " b=" << b;
}

TEST(TranspositionRational, AgreesWithGeneralForm) {
    for (u64 pv : {3u, 5u, 7u, 11u, 13u}) {
        const PrimeModulus p(pv);
        for (u64 a = 0; a < pv; ++a)
            for (u64 b = a + 1; b < pv; ++b) {
                const TranspositionSpec spec(p, a, b);
                EXPECT_EQ(transposition_rational(p, spec),
                          transposition_general(p, spec))
                    << "p=" << pv << " a=" << a << " b=" << b;
            }
    }
}

TEST(TranspositionRational, RejectsEvenModulus) {
    const PrimeModulus p2(2);
    EXPECT_THROW(transposition_rational(p2, TranspositionSpec(p2, 0, 1)),
                 EvenModulus);
}

// =============================================================================
// Involution: a transposition composed with itself is the identity
// =============================================================================

TEST(Transpositions, SelfCompositionIsIdentity) {
    for (u64 pv : kOddPrimesTo31) {
        const PrimeModulus p(pv);
        const Polynomial f = transposition_simple(p).poly();
        EXPECT_EQ(canonical_reduce(poly_compose(f, f, true)).poly(),
                  Polynomial::monomial(p, 1))
            << "p=" << pv;
    }
    const PrimeModulus p(11);
    for (u64 b = 1; b < 11; b += 3) {
        const Polynomial f =
            transposition_general(p, TranspositionSpec(p, 0, b)).poly();
        EXPECT_EQ(canonical_reduce(poly_compose(f, f, true)).poly(),
                  Polynomial::monomial(p, 1));
    }
}

// =============================================================================
// is_permutation
// =============================================================================

TEST(IsPermutation, Examples) {
    const PrimeModulus p5(5), p3(3);
    EXPECT_TRUE(is_permutation(FunctionTable(p5, {1, 0, 2, 3, 4})));
    EXPECT_FALSE(is_permutation(FunctionTable(p3, {0, 0, 2})));
    EXPECT_TRUE(is_permutation(FunctionTable::identity(p5)));
}

// =============================================================================
// Moments and the degree criterion
// =============================================================================

TEST(Moment, TranspositionTableValues) {
    const PrimeModulus p(5);
    const FunctionTable t(p, {1, 0, 2, 3, 4});
    EXPECT_EQ(moment(t, 0).value(), 0u);
    EXPECT_EQ(moment(t, 1).value(), 4u);  // 0+0+4+9+16 = 29 == 4
}

TEST(Moment, ZeroTable) {
    const PrimeModulus p(5);
    EXPECT_EQ(moment(FunctionTable(p, std::vector<u64>(5, 0)), 0).value(), 0u);
}

TEST(Moment, IndexRangeIsChecked) {
    const PrimeModulus p(5);
    const FunctionTable t = FunctionTable::identity(p);
    EXPECT_NO_THROW(moment(t, 4));
    EXPECT_THROW(moment(t, 5), KOutOfRange);
}

TEST(Moment, ProfileMatchesSingleMoments) {
    std::mt19937_64 rng(17);
    const PrimeModulus p(11);
    std::uniform_int_distribution<u64> dist(0, 10);
    std::vector<u64> v(11);
    for (u64& x : v) x = dist(rng);
    const FunctionTable t(p, v);
    const MomentProfile profile = moment_profile(t);
    ASSERT_EQ(profile.moments.size(), 11u);
    for (u64 k = 0; k < 11; ++k)
        EXPECT_EQ(profile.moments[static_cast<std::size_t>(k)],
                  moment(t, k).value());
}

TEST(DegreeViaMoments, HandExamples) {
    const PrimeModulus p(5);
    EXPECT_EQ(canonical_degree_via_moments(FunctionTable(p, {1, 0, 2, 3, 4})), 3u);
    EXPECT_EQ(canonical_degree_via_moments(FunctionTable::identity(p)), 1u);
    EXPECT_EQ(canonical_degree_via_moments(FunctionTable(p, std::vector<u64>(5, 0))),
              std::nullopt);
    EXPECT_EQ(canonical_degree_via_moments(FunctionTable(p, std::vector<u64>(5, 2))),
              0u);
}

TEST(DegreeViaMoments, MatchesInterpolationExhaustively) {
    for (u64 pv : {2u, 3u, 5u}) {
        const PrimeModulus p(pv);
        std::vector<u64> v(static_cast<std::size_t>(pv), 0);
        do {
            const FunctionTable t(p, v);
            EXPECT_EQ(canonical_degree_via_moments(t), interpolate(t).degree());
        } while (next_vector(v, pv));
    }
}

TEST(DegreeViaMoments, MatchesInterpolationRandomized) {
    std::mt19937_64 rng(90210);
    for (u64 pv : {7u, 11u}) {
        const PrimeModulus p(pv);
        std::uniform_int_distribution<u64> dist(0, pv - 1);
        for (int round = 0; round < 500; ++round) {
            std::vector<u64> v(static_cast<std::size_t>(pv));
            for (u64& x : v) x = dist(rng);
            const FunctionTable t(p, v);
            EXPECT_EQ(canonical_degree_via_moments(t), interpolate(t).degree())
                << "p=" << pv;
        }
    }
}

TEST(DegreeViaMoments, PermutationsHaveVanishingZerothMoment) {
    // Exhaustive through p = 7, sampled at p = 11. Odd primes only: at p = 2
    // the element sum is 1, so permutations there reach degree p - 1.
    for (u64 pv : {3u, 5u, 7u}) {
        const PrimeModulus p(pv);
        std::vector<u64> perm(static_cast<std::size_t>(pv));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            EXPECT_EQ(moment(FunctionTable(p, perm), 0).value(), 0u);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::mt19937_64 rng(4);
    const PrimeModulus p(11);
    std::vector<u64> perm(11);
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 200; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const FunctionTable t(p, perm);
        EXPECT_EQ(moment(t, 0).value(), 0u);
        const auto d = canonical_degree_via_moments(t);
        ASSERT_TRUE(d.has_value());
        EXPECT_LE(*d, 9u);  // degree <= p - 2 follows from the zero moment
    }
}

// =============================================================================
// verify_transposition_forms
// =============================================================================

TEST(VerifyForms, AllChecksPassAtSmallPrimes) {
    for (u64 pv : {3u, 5u, 7u}) {
        const Report report = verify_transposition_forms(PrimeModulus(pv));
        EXPECT_EQ(report.p, pv);
        ASSERT_EQ(report.checks.size(), 4u);
        EXPECT_TRUE(report.all_passed()) << "p=" << pv;
        for (const CheckResult& c : report.checks)
            EXPECT_TRUE(c.witness.empty());
        EXPECT_NO_THROW(require_all(report));
    }
}

TEST(VerifyForms, RejectsEvenModulus) {
    EXPECT_THROW(verify_transposition_forms(PrimeModulus(2)), EvenModulus);
}

TEST(VerifyForms, RequireAllThrowsOnFailure) {
    Report report;
    report.p = 5;
    report.checks.push_back({"some_check", true, ""});
    report.checks.push_back({"failing_check", false, "a=1 b=2"});
    try {
        require_all(report);
        FAIL() << "expected VerificationFailure";
    } catch (const VerificationFailure& e) {
        EXPECT_EQ(e.check(), "failing_check");
        EXPECT_EQ(e.witness(), "a=1 b=2");
    }
}

// =============================================================================
// hermite_scan
// =============================================================================

TEST(HermiteScan, AllAffineAtP3) {
    const Report report = hermite_scan(PrimeModulus(3));
    EXPECT_TRUE(report.all_passed());
    ASSERT_EQ(report.degree_histogram.size(), 1u);
    EXPECT_EQ(report.degree_histogram.at(1), 6u);
}

TEST(HermiteScan, DegreesAtP5) {
    const Report report = hermite_scan(PrimeModulus(5));
    EXPECT_TRUE(report.all_passed());
    // 20 affine permutations; everything else needs the maximal degree 3.
    // Degrees 2 and 4 (the divisors of p-1 above 1) never appear.
    EXPECT_EQ(report.degree_histogram,
              (std::map<std::size_t, u64>{{1, 20}, {3, 100}}));
}

TEST(HermiteScan, FullEnumerationAtP7) {
    const Report report = hermite_scan(PrimeModulus(7));
    EXPECT_TRUE(report.all_passed());
    u64 total = 0;
    for (const auto& [d, count] : report.degree_histogram) {
        total += count;
        EXPECT_NE(d, 2u);
        EXPECT_NE(d, 3u);
        EXPECT_NE(d, 6u);
        EXPECT_LE(d, 5u);
    }
    EXPECT_EQ(total, 5040u);
}

TEST(HermiteScan, EvenPrimeScans) {
    // Both permutations of Z_2 are degree 1; the p-2 bound is not meaningful
    // here, so only the divisor check is reported.
    const Report report = hermite_scan(PrimeModulus(2));
    EXPECT_TRUE(report.all_passed());
    ASSERT_EQ(report.checks.size(), 1u);
    EXPECT_EQ(report.degree_histogram.at(1), 2u);
}

TEST(HermiteScan, BudgetIsEnforced) {
    EXPECT_THROW(hermite_scan(PrimeModulus(11)), TooLarge);
    EXPECT_THROW(hermite_scan(PrimeModulus(13), u64{39916800}), TooLarge);
    EXPECT_NO_THROW(hermite_scan(PrimeModulus(7)));
}
