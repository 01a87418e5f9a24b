#include "stego/steganalysis.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "stego/error.hpp"

namespace stego {

std::string AttackReport::to_json() const {
    nlohmann::json j;
    j["method"] = method;
    j["statistic"] = statistic;
    j["estimate"] = estimate;
    j["verdict_threshold"] = verdict_threshold;
    j["details"] = details;
    return j.dump();
}

double regularized_lower_gamma(double a, double x) {
    if (a <= 0.0) fail(Err::BadParams, "gamma parameter a must be positive");
    if (x < 0.0) fail(Err::BadParams, "gamma argument x must be nonnegative");
    if (x == 0.0) return 0.0;

    constexpr int max_iter = 500;
    constexpr double eps = 1e-15;
    const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);

    if (x < a + 1.0) {
        // series: P(a,x) = x^a e^-x / Gamma(a) * sum x^n / (a(a+1)...(a+n))
        double ap = a;
        double term = 1.0 / a;
        double sum = term;
        for (int i = 0; i < max_iter; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * eps)
                return std::clamp(sum * std::exp(log_prefactor), 0.0, 1.0);
        }
        fail(Err::NoConvergence, "series did not converge");
    }

    // modified Lentz continued fraction for Q(a,x)
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= max_iter; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < eps)
            return std::clamp(1.0 - h * std::exp(log_prefactor), 0.0, 1.0);
    }
    fail(Err::NoConvergence, "continued fraction did not converge");
}

AttackReport chi_square_attack(const Image& img) {
    const Histogram h = histogram(img);

    double chi2 = 0.0;
    int categories = 0;
    for (int k = 0; k < 128; ++k) {
        const std::uint64_t sum = h.counts[2 * k] + h.counts[2 * k + 1];
        if (sum <= 4) continue; // too sparse for the chi-square approximation
        const double expected = static_cast<double>(sum) / 2.0;
        const double dev = static_cast<double>(h.counts[2 * k]) - expected;
        chi2 += dev * dev / expected;
        ++categories;
    }
    if (categories < 2)
        fail(Err::NotEnoughData, "fewer than two usable value pairs");

    const int dof = categories - 1;
    const double p_embed = 1.0 - regularized_lower_gamma(dof / 2.0, chi2 / 2.0);

    AttackReport rep;
    rep.method = "chisq";
    rep.statistic = chi2;
    rep.estimate = p_embed;
    rep.verdict_threshold = 0.5;
    rep.details = {{"chi2", chi2},
                   {"dof", static_cast<double>(dof)},
                   {"categories", static_cast<double>(categories)}};
    return rep;
}

namespace {

inline int flip_up(int x) { return x ^ 1; }                 // F1
inline int flip_down(int x) { return ((x + 1) ^ 1) - 1; }   // F-1, may leave [0,255]

inline int roughness(const int* g) {
    return std::abs(g[1] - g[0]) + std::abs(g[2] - g[1]) + std::abs(g[3] - g[2]);
}

struct GroupStats {
    std::int64_t regular_m = 0, singular_m = 0;   // mask M
    std::int64_t regular_mm = 0, singular_mm = 0; // mask -M
    std::int64_t groups = 0;
    std::int64_t flat = 0; // groups with f == 0
};

// mask [0,1,1,0], flipping the two interior pixels
GroupStats group_stats(const Image& img, bool flip_all_lsb) {
    GroupStats st;
    const int groups_per_row = img.width / 4;
#pragma omp parallel
    {
        GroupStats local;
#pragma omp for nowait
        for (int y = 0; y < img.height; ++y) {
            for (int gx = 0; gx < groups_per_row; ++gx) {
                int g[4], up[4], down[4];
                for (int i = 0; i < 4; ++i) {
                    int v = img.at(4 * gx + i, y);
                    if (flip_all_lsb) v = flip_up(v);
                    g[i] = v;
                    up[i] = (i == 1 || i == 2) ? flip_up(v) : v;
                    down[i] = (i == 1 || i == 2) ? flip_down(v) : v;
                }
                const int base = roughness(g);
                const int fu = roughness(up);
                const int fd = roughness(down);
                if (base == 0) ++local.flat;
                if (fu > base) ++local.regular_m;
                if (fu < base) ++local.singular_m;
                if (fd > base) ++local.regular_mm;
                if (fd < base) ++local.singular_mm;
                ++local.groups;
            }
        }
#pragma omp critical(stego_rs_merge)
        {
            st.regular_m += local.regular_m;
            st.singular_m += local.singular_m;
            st.regular_mm += local.regular_mm;
            st.singular_mm += local.singular_mm;
            st.groups += local.groups;
            st.flat += local.flat;
        }
    }
    return st;
}

} // namespace

AttackReport rs_attack(const Image& img) {
    if (img.width < 4) fail(Err::ImageTooSmall, "rs analysis needs width >= 4");

    const GroupStats plain = group_stats(img, false);
    if (plain.flat == plain.groups)
        fail(Err::Degenerate, "every group is flat");
    const GroupStats flipped = group_stats(img, true);

    const double n = static_cast<double>(plain.groups);
    const double rm = plain.regular_m / n, sm = plain.singular_m / n;
    const double rmm = plain.regular_mm / n, smm = plain.singular_mm / n;
    const double rm1 = flipped.regular_m / n, sm1 = flipped.singular_m / n;
    const double rmm1 = flipped.regular_mm / n, smm1 = flipped.singular_mm / n;

    const double d0 = rm - sm;
    const double d1 = rm1 - sm1;
    const double dm0 = rmm - smm;
    const double dm1 = rmm1 - smm1;

    // 2(d1+d0) z^2 + (dm0-dm1-d1-3d0) z + (d0-dm0) = 0, smaller-|z| root
    const double a = 2.0 * (d1 + d0);
    const double b = dm0 - dm1 - d1 - 3.0 * d0;
    const double c = d0 - dm0;

    double z;
    if (std::fabs(a) < 1e-12) {
        if (std::fabs(b) < 1e-12) fail(Err::Degenerate, "estimator equation vanished");
        z = -c / b;
    } else {
        const double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) fail(Err::Degenerate, "no real root");
        const double root = std::sqrt(disc);
        const double z1 = (-b + root) / (2.0 * a);
        const double z2 = (-b - root) / (2.0 * a);
        z = std::fabs(z1) <= std::fabs(z2) ? z1 : z2;
    }

    double estimate = z / (z - 0.5);
    estimate = std::clamp(estimate, -0.2, 1.2);

    AttackReport rep;
    rep.method = "rs";
    rep.statistic = d0;
    rep.estimate = estimate;
    rep.verdict_threshold = 0.10;
    rep.details = {{"R_M", rm},     {"S_M", sm},     {"R_-M", rmm},   {"S_-M", smm},
                   {"R_M'", rm1},   {"S_M'", sm1},   {"R_-M'", rmm1}, {"S_-M'", smm1},
                   {"z", z},        {"groups", n}};
    return rep;
}

double cooc_distortion(const Image& cover, const Image& stego, Offset off) {
    if (cover.width != stego.width || cover.height != stego.height)
        fail(Err::DimensionMismatch, "cover and stego dimensions differ");
    const CoocMatrix a = cooccurrence(cover, off);
    const CoocMatrix b = cooccurrence(stego, off);
    const std::uint64_t l1 = cooc_l1_distance(a, b);
    return static_cast<double>(l1) / static_cast<double>(a.total());
}

AttackReport cooc_attack(const Image& cover, const Image& stego, Offset off) {
    const double d = cooc_distortion(cover, stego, off);
    AttackReport rep;
    rep.method = "cooc";
    rep.statistic = d;
    rep.estimate = d;
    rep.verdict_threshold = 0.05;
    rep.details = {{"dx", static_cast<double>(off.dx)},
                   {"dy", static_cast<double>(off.dy)}};
    return rep;
}

} // namespace stego
