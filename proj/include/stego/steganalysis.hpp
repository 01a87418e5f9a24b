#pragma once

#include <map>
#include <string>

#include "stego/image.hpp"
#include "stego/stats.hpp"

namespace stego {

struct AttackReport {
    std::string method;
    double statistic = 0.0;
    double estimate = 0.0;          // method-defined range, never NaN
    double verdict_threshold = 0.0; // estimate above this flags embedding
    std::map<std::string, double> details;

    std::string to_json() const; // single-line UTF-8 JSON
};

/// Regularized lower incomplete gamma P(a,x), series for x < a+1 and
/// continued fraction otherwise. Absolute error <= 1e-10 within 500
/// iterations or NoConvergence.
double regularized_lower_gamma(double a, double x);

/// Pairs-of-values test: chi-square over the (2k,2k+1) histogram bins with
/// pair sum > 4; estimate is the embedding probability 1 - P(dof/2, chi2/2).
AttackReport chi_square_attack(const Image& img);

/// RS analysis over non-overlapping horizontal groups of 4 with mask
/// [0,1,1,0]; estimate is the recovered embedding rate, clamped to
/// [-0.2, 1.2]. Throws Degenerate on constant images or complex roots.
AttackReport rs_attack(const Image& img);

/// L1 distance between cover and stego co-occurrence matrices, normalized
/// by the pair count.
double cooc_distortion(const Image& cover, const Image& stego, Offset off);

AttackReport cooc_attack(const Image& cover, const Image& stego, Offset off);

} // namespace stego
