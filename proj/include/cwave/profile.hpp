#pragma once

#include <string>
#include <vector>

namespace cwave {

enum class ParamKind { Radius, EllipsoidalSum };
enum class Interp { Linear, CubicHermite };

// Sampled 1-D profile b(s) of either the radius s = |x| or the ellipsoidal
// parameter s = |x| + |x-e|.  Strictly increasing knots; evaluation outside
// the knot range extends by the nearest endpoint value.
class ScalarProfile {
  public:
    ScalarProfile(ParamKind kind, std::vector<double> params,
                  std::vector<double> values,
                  Interp interp = Interp::CubicHermite);

    // Uniform knots on [lo, hi] sampling a callable.
    template <typename F>
    static ScalarProfile sample(ParamKind kind, F&& f, double lo, double hi,
                                int n_knots, Interp interp = Interp::CubicHermite) {
        std::vector<double> s(n_knots), v(n_knots);
        for (int i = 0; i < n_knots; ++i) {
            s[i] = lo + (hi - lo) * i / (n_knots - 1);
            v[i] = f(s[i]);
        }
        return ScalarProfile(kind, std::move(s), std::move(v), interp);
    }

    double operator()(double s) const;

    // Exact integral of the interpolant (with constant extension) from the
    // parameter origin (0 for radius kind, 1 for ellipsoidal kind) to s.
    double integral_to(double s) const;

    ParamKind kind() const { return kind_; }
    Interp interp() const { return interp_; }
    const std::vector<double>& knots() const { return s_; }
    const std::vector<double>& values() const { return v_; }
    double domain_min() const { return s_.front(); }
    double domain_max() const { return s_.back(); }
    double param_origin() const;

    // Two-column CSV (parameter, value); an optional non-numeric header line
    // is skipped on read and written back on save.
    static ScalarProfile load_csv(const std::string& path, ParamKind kind,
                                  Interp interp = Interp::CubicHermite);
    void save_csv(const std::string& path) const;

  private:
    int interval_of(double s) const;
    double piece_integral(int i, double from, double to) const;

    ParamKind kind_;
    Interp interp_;
    std::vector<double> s_, v_;
    std::vector<double> slope_;   // Hermite knot slopes (monotone limited)
    std::vector<double> cum_;     // integral of interpolant from s_[0] to s_[i]
};

}  // namespace cwave
