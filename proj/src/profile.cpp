#include "cwave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

ScalarProfile::ScalarProfile(ParamKind kind, std::vector<double> params,
                             std::vector<double> values, Interp interp)
    : kind_(kind), interp_(interp), s_(std::move(params)), v_(std::move(values)) {
    if (s_.empty() || s_.size() != v_.size())
        throw Error(ErrorCode::InvalidGrid, "profile needs matching nonempty knot/value lists");
    for (std::size_t i = 1; i < s_.size(); ++i)
        if (!(s_[i] > s_[i - 1]))
            throw Error(ErrorCode::InvalidGrid, "profile knots must be strictly increasing");
    const double lo = param_origin();
    if (s_.front() < lo - 1e-14)
        throw Error(ErrorCode::InvalidGrid,
                    kind_ == ParamKind::Radius ? "radius knots must be >= 0"
                                               : "ellipsoidal knots must be >= 1");
    for (double v : v_)
        if (!std::isfinite(v))
            throw Error(ErrorCode::InvalidGrid, "profile values must be finite");

    const std::size_t n = s_.size();
    slope_.assign(n, 0.0);
    if (interp_ == Interp::CubicHermite && n >= 2) {
        // Fritsch-Carlson monotone slopes.
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            d[i] = (v_[i + 1] - v_[i]) / (s_[i + 1] - s_[i]);
        slope_[0] = d[0];
        slope_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                slope_[i] = 0.0;
            } else {
                const double w1 = 2.0 * (s_[i + 1] - s_[i]) + (s_[i] - s_[i - 1]);
                const double w2 = (s_[i + 1] - s_[i]) + 2.0 * (s_[i] - s_[i - 1]);
                slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) { slope_[i] = slope_[i + 1] = 0.0; continue; }
            const double a = slope_[i] / d[i], b = slope_[i + 1] / d[i];
            const double r2 = a * a + b * b;
            if (r2 > 9.0) {
                const double t = 3.0 / std::sqrt(r2);
                slope_[i] = t * a * d[i];
                slope_[i + 1] = t * b * d[i];
            }
        }
    }

    cum_.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        cum_[i + 1] = cum_[i] + piece_integral(static_cast<int>(i), s_[i], s_[i + 1]);
}

double ScalarProfile::param_origin() const {
    return kind_ == ParamKind::Radius ? 0.0 : 1.0;
}

int ScalarProfile::interval_of(double s) const {
    const auto it = std::upper_bound(s_.begin(), s_.end(), s);
    int i = static_cast<int>(it - s_.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(s_.size()) - 2);
}

double ScalarProfile::operator()(double s) const {
    if (s <= s_.front()) return v_.front();
    if (s >= s_.back()) return v_.back();
    const int i = interval_of(s);
    const double h = s_[i + 1] - s_[i];
    const double t = (s - s_[i]) / h;
    if (interp_ == Interp::Linear)
        return v_[i] + t * (v_[i + 1] - v_[i]);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * v_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
           (-2 * t3 + 3 * t2) * v_[i + 1] + (t3 - t2) * h * slope_[i + 1];
}

double ScalarProfile::piece_integral(int i, double from, double to) const {
    // Integral of the interpolant over [from, to] within knot interval i.
    const double h = s_[i + 1] - s_[i];
    const double ta = (from - s_[i]) / h, tb = (to - s_[i]) / h;
    if (interp_ == Interp::Linear) {
        auto anti = [&](double t) {
            return h * (v_[i] * t + 0.5 * (v_[i + 1] - v_[i]) * t * t);
        };
        return anti(tb) - anti(ta);
    }
    auto anti = [&](double t) {
        const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
        const double h00 = 0.5 * t4 - t3 + t;
        const double h10 = 0.25 * t4 - (2.0 / 3.0) * t3 + 0.5 * t2;
        const double h01 = -0.5 * t4 + t3;
        const double h11 = 0.25 * t4 - t3 / 3.0;
        return h * (h00 * v_[i] + h10 * h * slope_[i] + h01 * v_[i + 1] +
                    h11 * h * slope_[i + 1]);
    };
    return anti(tb) - anti(ta);
}

double ScalarProfile::integral_to(double s) const {
    const double lo = param_origin();
    double acc = 0.0;
    // leading constant extension [lo, s_front)
    if (s <= s_.front()) return v_.front() * (s - lo);
    acc += v_.front() * (s_.front() - lo);
    if (s >= s_.back())
        return acc + cum_.back() + v_.back() * (s - s_.back());
    const int i = interval_of(s);
    return acc + cum_[i] + piece_integral(i, s_[i], s);
}

ScalarProfile ScalarProfile::load_csv(const std::string& path, ParamKind kind,
                                      Interp interp) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ConfigParse, "cannot open profile CSV: " + path);
    std::vector<double> s, v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double a, b;
        if (ls >> a >> b) {
            s.push_back(a);
            v.push_back(b);
        } else if (!s.empty()) {
            throw Error(ErrorCode::ConfigParse, "malformed profile row in " + path);
        }
        // non-numeric first line is treated as a header and skipped
    }
    return ScalarProfile(kind, std::move(s), std::move(v), interp);
}

void ScalarProfile::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::ConfigParse, "cannot write profile CSV: " + path);
    out << (kind_ == ParamKind::Radius ? "r,b\n" : "s,b\n");
    char buf[80];
    for (std::size_t i = 0; i < s_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s_[i], v_[i]);
        out << buf;
    }
}

}  // namespace cwave
