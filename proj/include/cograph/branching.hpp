#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cograph {

// Entry value with multiplicity, so (c-1)^{2^{c-1}} needs one term.
struct BranchTerm {
    double value = 1;
    std::uint64_t count = 1;
    bool operator==(const BranchTerm&) const = default;
};

class BranchingVector {
public:
    BranchingVector() = default;
    BranchingVector(std::initializer_list<double> entries);
    explicit BranchingVector(const std::vector<double>& entries);
    explicit BranchingVector(std::vector<BranchTerm> terms);

    BranchingVector& add(double value, std::uint64_t count = 1);

    // Sorted by value, equal values merged.
    const std::vector<BranchTerm>& terms() const { return terms_; }
    std::uint64_t size() const;
    bool empty() const { return terms_.empty(); }
    double min_entry() const;

    std::string to_string() const;

    bool operator==(const BranchingVector&) const = default;

private:
    void canonicalize();
    std::vector<BranchTerm> terms_;
};

// Largest real root of x^max - sum x^(max - c_i), by bisection on [1, N+1].
double branching_factor(const BranchingVector& v);

// Value of sum m_i x^-c_i - 1 at x; zero at the factor.
double normalized_residual(const BranchingVector& v, double x);

// a dominates b: injection f from b's entries into a's with b_i >= a_f(i).
bool dominates(const BranchingVector& a, const BranchingVector& b);

struct CalibrationFamily {
    enum class Kind { TwoPlusExponential, Staircase } kind = Kind::TwoPlusExponential;
    double alpha = 0.5;
    double beta = 0;
    int gamma = 2;
};

struct EpsilonCalibration {
    double epsilon = 0;
    int chosen_c = 0;
    double certified_factor = 0;
};

// Root of a^d - 2a^(d-1) - 2^d, the factor of (1,1)+(d)^{2^d}.
double two_plus_exponential_factor(int d);

// Factor of (1,2,...,c) + (alpha c + beta)^gamma.
double staircase_factor(int c, double alpha, double beta, int gamma);

inline constexpr int kCalibrationCap = 100000;

EpsilonCalibration calibrate_c(double epsilon, const CalibrationFamily& family, int cap = kCalibrationCap);

}  // namespace cograph
