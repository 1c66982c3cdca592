#include <doctest.h>

#include <cmath>
#include <random>

#include "cograph/branching.hpp"
#include "cograph/editing.hpp"

using namespace cograph;

namespace {

// Injection b -> a with b'_i >= a_{f(i)}, by trying every assignment.
bool dominates_exhaustive(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<char> used(a.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == b.size()) return true;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (used[j] || b[i] < a[j]) continue;
            used[j] = 1;
            if (go(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return go(0);
}

std::vector<double> random_entries(std::mt19937_64& rng, std::size_t max_len, int max_entry) {
    std::vector<double> v(1 + rng() % max_len);
    for (auto& x : v) x = static_cast<double>(1 + rng() % static_cast<unsigned>(max_entry));
    return v;
}

}  // namespace

TEST_CASE("branching factors of simple vectors") {
    CHECK(branching_factor({1, 1, 1}) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(branching_factor({1, 2, 2, 2}) == doctest::Approx((1 + std::sqrt(13.0)) / 2).epsilon(1e-10));
    CHECK(branching_factor({2, 2, 2, 2}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(branching_factor({1, 1}) == doctest::Approx(2.0).epsilon(1e-12));
    // x^2 = x + 1
    CHECK(branching_factor({1, 2}) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
    CHECK(branching_factor({1, 4, 2, 5, 4, 4}) < 1.969);
    CHECK(branching_factor({1}) == 1.0);
}

TEST_CASE("multiplicities are handled without expansion") {
    BranchingVector v;
    v.add(1).add(3, 8);
    const std::vector<double> flat{1, 3, 3, 3, 3, 3, 3, 3, 3};
    CHECK(branching_factor(v) == doctest::Approx(branching_factor(BranchingVector(flat))).epsilon(1e-10));
    BranchingVector huge;
    huge.add(1, 2).add(40, std::uint64_t{1} << 40);
    const double f = branching_factor(huge);
    CHECK(f > 2.0);
    CHECK(std::abs(normalized_residual(huge, f)) < 1e-6);
    CHECK(v.to_string() == "(1, 3^8)");
}

TEST_CASE("bad vectors are rejected") {
    CHECK_THROWS_AS(BranchingVector({0.0}), InputError);
    CHECK_THROWS_AS(BranchingVector({1.0, -2.0}), InputError);
    CHECK_THROWS_AS(branching_factor(BranchingVector()), InputError);
}

TEST_CASE("domination") {
    CHECK(dominates({1, 1, 2, 3, 4}, {1, 2, 3, 5}));
    CHECK(dominates({1, 2, 2}, {1, 2, 2}));
    CHECK(dominates({1}, {2}));
    CHECK_FALSE(dominates({2}, {1}));
    CHECK_FALSE(dominates({1, 2}, {1, 2, 3}));
}

TEST_CASE("greedy domination equals exhaustive injection search") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 5000; ++it) {
        const auto a = random_entries(rng, 5, 5);
        const auto b = random_entries(rng, 5, 5);
        REQUIRE(dominates(BranchingVector(a), BranchingVector(b)) == dominates_exhaustive(a, b));
    }
}

TEST_CASE("factor is monotone under domination, appending and raising") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 3000; ++it) {
        const auto a = random_entries(rng, 6, 8);
        const auto b = random_entries(rng, 6, 8);
        const double fa = branching_factor(BranchingVector(a));
        const double fb = branching_factor(BranchingVector(b));
        REQUIRE(std::abs(normalized_residual(BranchingVector(a), fa)) < 1e-6);
        if (dominates(BranchingVector(a), BranchingVector(b))) REQUIRE(fb <= fa + 1e-9);
        auto longer = a;
        longer.push_back(static_cast<double>(1 + rng() % 8));
        REQUIRE(branching_factor(BranchingVector(longer)) >= fa - 1e-9);
        auto raised = a;
        raised[rng() % raised.size()] += 1;
        REQUIRE(branching_factor(BranchingVector(raised)) <= fa + 1e-9);
    }
}

TEST_CASE("two-plus-exponential family") {
    for (int d = 2; d <= 40; ++d) {
        const double f2 = std::pow(2.0, d) - 2 * std::pow(2.0, d - 1) - std::pow(2.0, d);
        CHECK(f2 < 0);
        const double a = two_plus_exponential_factor(d);
        CHECK(a > 2);
        CHECK(std::abs(std::pow(2 / a, 1) * 1 + std::pow(2 / a, d) - 1) < 1e-9);
    }
    // the closed form agrees with the generic root finder when 2^d is small
    for (int d = 2; d <= 10; ++d) {
        BranchingVector v;
        v.add(1, 2).add(d, std::uint64_t{1} << d);
        CHECK(two_plus_exponential_factor(d) == doctest::Approx(branching_factor(v)).epsilon(1e-8));
    }
    // factor decreases towards 2
    for (int d = 2; d < 30; ++d) CHECK(two_plus_exponential_factor(d + 1) < two_plus_exponential_factor(d));
}

TEST_CASE("calibration") {
    const EpsilonCalibration loose = calibrate_c(2.0, CalibrationFamily{});
    CHECK(loose.chosen_c <= 4);
    CHECK(loose.certified_factor <= 4.0);
    for (double eps : {1.0, 0.5, 0.25, 0.1}) {
        const EpsilonCalibration cal = calibrate_c(eps, CalibrationFamily{});
        CHECK(cal.certified_factor <= 2 + eps);
        if (cal.chosen_c > 1) CHECK(two_plus_exponential_factor(cal.chosen_c - 1) > 2 + eps);
    }
    CalibrationFamily stair;
    stair.kind = CalibrationFamily::Kind::Staircase;
    const EpsilonCalibration s = calibrate_c(1.0, stair);
    CHECK(s.certified_factor <= 3.0);
    CHECK(staircase_factor(s.chosen_c, 0.5, 0, 2) == doctest::Approx(s.certified_factor));
    // a staircase 1..c plus two copies of c/2, against the generic root
    BranchingVector direct;
    for (int i = 1; i <= 8; ++i) direct.add(i);
    direct.add(4, 2);
    CHECK(staircase_factor(8, 0.5, 0, 2) == doctest::Approx(branching_factor(direct)).epsilon(1e-9));

    CHECK_THROWS_AS(calibrate_c(0, CalibrationFamily{}), InputError);
    stair.alpha = 1.5;
    CHECK_THROWS_AS(calibrate_c(1.0, stair), InputError);
    CHECK_THROWS_AS(calibrate_c(1e-9, CalibrationFamily{}, 50), RefusalError);
}
