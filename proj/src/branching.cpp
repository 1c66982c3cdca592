#include "cograph/branching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cograph/editing.hpp"

namespace cograph {

BranchingVector::BranchingVector(std::initializer_list<double> entries)
    : BranchingVector(std::vector<double>(entries)) {}

BranchingVector::BranchingVector(const std::vector<double>& entries) {
    for (double e : entries) terms_.push_back({e, 1});
    canonicalize();
}

BranchingVector::BranchingVector(std::vector<BranchTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

BranchingVector& BranchingVector::add(double value, std::uint64_t count) {
    terms_.push_back({value, count});
    canonicalize();
    return *this;
}

void BranchingVector::canonicalize() {
    for (const auto& t : terms_)
        if (!(t.value > 0) || !std::isfinite(t.value)) throw InputError("branching vector entries must be positive");
    std::erase_if(terms_, [](const BranchTerm& t) { return t.count == 0; });
    std::sort(terms_.begin(), terms_.end(), [](const BranchTerm& a, const BranchTerm& b) { return a.value < b.value; });
    std::vector<BranchTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().value == t.value)
            merged.back().count += t.count;
        else
            merged.push_back(t);
    }
    terms_ = std::move(merged);
}

std::uint64_t BranchingVector::size() const {
    std::uint64_t n = 0;
    for (const auto& t : terms_) n += t.count;
    return n;
}

double BranchingVector::min_entry() const {
    if (terms_.empty()) throw InputError("empty branching vector");
    return terms_.front().value;
}

std::string BranchingVector::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << ", ";
        first = false;
        os << t.value;
        if (t.count > 1) os << "^" << t.count;
    }
    os << ')';
    return os.str();
}

namespace {

// log of sum m_i x^-c_i, evaluated as a log-sum-exp.
double log_weight(const std::vector<BranchTerm>& terms, double x) {
    const double lx = std::log(x);
    double peak = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) peak = std::max(peak, std::log(static_cast<double>(t.count)) - t.value * lx);
    double s = 0;
    for (const auto& t : terms) s += std::exp(std::log(static_cast<double>(t.count)) - t.value * lx - peak);
    return peak + std::log(s);
}

template <typename F>
double bisect_decreasing(F&& f, double lo, double hi) {
    // f(lo) >= 0 >= f(hi)
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double normalized_residual(const BranchingVector& v, double x) { return std::exp(log_weight(v.terms(), x)) - 1.0; }

double branching_factor(const BranchingVector& v) {
    if (v.empty()) throw InputError("empty branching vector");
    const double n = static_cast<double>(v.size());
    if (v.size() == 1) return 1.0;
    auto f = [&](double x) { return log_weight(v.terms(), x); };
    double hi = n + 1.0;
    while (f(hi) > 0) hi *= 2;  // only for entries below 1
    return bisect_decreasing(f, 1.0, hi);
}

bool dominates(const BranchingVector& a, const BranchingVector& b) {
    // Sorted greedy: the i-th smallest of b must be >= the i-th smallest of a.
    if (b.size() > a.size()) return false;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t ia = 0;
    std::uint64_t used_a = 0;
    for (const auto& t : tb) {
        std::uint64_t need = t.count;
        while (need > 0) {
            if (ia >= ta.size()) return false;
            if (ta[ia].value > t.value) return false;
            const std::uint64_t take = std::min(need, ta[ia].count - used_a);
            need -= take;
            used_a += take;
            if (used_a == ta[ia].count) {
                ++ia;
                used_a = 0;
            }
        }
    }
    return true;
}

double two_plus_exponential_factor(int d) {
    if (d < 1) throw InputError("exponent must be positive");
    // a^d - 2a^(d-1) - 2^d = 0  <=>  2/a + (2/a)^d = 1
    return bisect_decreasing([d](double a) { return 2.0 / a + std::pow(2.0 / a, d) - 1.0; }, 2.0, 4.0);
}

double staircase_factor(int c, double alpha, double beta, int gamma) {
    if (c < 1) throw InputError("staircase length must be positive");
    std::vector<BranchTerm> terms;
    for (int i = 1; i <= c; ++i) terms.push_back({static_cast<double>(i), 1});
    const double tail = alpha * c + beta;
    if (gamma > 0 && tail > 0) terms.push_back({tail, static_cast<std::uint64_t>(gamma)});
    return branching_factor(BranchingVector(std::move(terms)));
}

EpsilonCalibration calibrate_c(double epsilon, const CalibrationFamily& family, int cap) {
    if (!(epsilon > 0)) throw InputError("epsilon must be positive");
    const double target = 2.0 + epsilon;
    if (family.kind == CalibrationFamily::Kind::TwoPlusExponential) {
        for (int d = 2; d <= cap; ++d) {
            const double f = two_plus_exponential_factor(d);
            if (f <= target) return {epsilon, d, f};
        }
    } else {
        if (!(family.alpha > 0 && family.alpha < 1)) throw InputError("staircase alpha must lie in (0, 1)");
        if (family.gamma < 0) throw InputError("staircase gamma must be nonnegative");
        for (int c = 1; c <= cap; ++c) {
            if (family.alpha * c + family.beta <= 0) continue;
            const double f = staircase_factor(c, family.alpha, family.beta, family.gamma);
            if (f <= target) return {epsilon, c, f};
        }
    }
    throw RefusalError("calibration did not reach factor " + std::to_string(target) + " below c = " + std::to_string(cap));
}

}  // namespace cograph
