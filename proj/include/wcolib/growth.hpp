#ifndef WCOLIB_GROWTH_HPP
#define WCOLIB_GROWTH_HPP

#include <cmath>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

struct GrowthSample {
    int r = 0;
    int value = 0;
    bool exact = false;
};

// Least-squares exponent of value against r on a log-log scale; when dividing
// out a log r factor fits better by residual sum, the log flag is set and the
// exponent comes from that model.
struct GrowthFit {
    std::vector<GrowthSample> samples;
    double alpha = 0.0;
    bool log_factor = false;
    double residual = 0.0;
};

namespace detail {

struct LsqFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

inline LsqFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LsqFit fit;
    double denom = n * sxx - sx * sx;
    fit.slope = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
        fit.residual += e * e;
    }
    return fit;
}

}  // namespace detail

inline GrowthFit growth_fit(const std::vector<GrowthSample>& samples_in,
                            bool use_inexact = false) {
    GrowthFit out;
    for (const auto& s : samples_in)
        if ((s.exact || use_inexact) && s.r >= 2 && s.value >= 1) out.samples.push_back(s);
    if (out.samples.size() < 3) throw TooFewPoints();

    std::vector<double> lx, ly, ly_div;
    for (const auto& s : out.samples) {
        double logr = std::log2(static_cast<double>(s.r));
        double logv = std::log2(static_cast<double>(s.value));
        lx.push_back(logr);
        ly.push_back(logv);
        ly_div.push_back(logv - std::log2(std::max(1.0, logr)));
    }
    auto plain = detail::least_squares(lx, ly);
    auto divided = detail::least_squares(lx, ly_div);
    if (divided.residual < plain.residual) {
        out.alpha = divided.slope;
        out.log_factor = true;
        out.residual = divided.residual;
    } else {
        out.alpha = plain.slope;
        out.log_factor = false;
        out.residual = plain.residual;
    }
    return out;
}

}  // namespace wcolib

#endif  // WCOLIB_GROWTH_HPP
