#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "cwave/profile.hpp"
#include "cwave/types.hpp"

namespace cwave {

enum class ClassTag { A1, A2, A3, General };
enum class Symmetry { None, Radial, Ellipsoidal };

// One matrix entry: a constant, a symmetric profile of |x| or |x|+|x-e|,
// or an arbitrary spatial function.
class ScalarField {
  public:
    enum class Kind { Constant, Radial, Ellipsoidal, General };

    static ScalarField constant(double c);
    static ScalarField radial(ScalarProfile p);
    static ScalarField ellipsoidal(ScalarProfile p);
    static ScalarField general(std::function<double(const Vec3&)> f);
    static ScalarField zero() { return constant(0.0); }

    double operator()(const Vec3& x) const;

    Kind kind() const { return kind_; }
    bool has_symmetry(Symmetry s) const;
    const ScalarProfile* profile() const { return profile_ ? profile_.get() : nullptr; }

    // Value as a function of the symmetry parameter (radius or ellipsoidal sum).
    double at_param(double s) const;
    // Exact integral over the symmetry parameter from its origin to s
    // (Constant and profile-backed kinds only).
    double integral_param_to(double s) const;

  private:
    Kind kind_ = Kind::Constant;
    double c_ = 0.0;
    std::shared_ptr<const ScalarProfile> profile_;
    std::function<double(const Vec3&)> fn_;
};

struct PrescribedEntries {
    ScalarField first;   // A2: beta_12, A3: beta_11
    ScalarField second;  // A2: beta_21, A3: beta_22
};

// The 2x2 potential with class tag and symmetry kind.  Immutable after
// construction; evaluation is pure and thread-safe.
class MatrixPotential {
  public:
    MatrixPotential(std::array<ScalarField, 4> entries, ClassTag tag, Symmetry sym)
        : entries_(std::move(entries)), class_tag_(tag), symmetry_(sym) {}

    static MatrixPotential zero();
    static MatrixPotential general(std::array<ScalarField, 4> entries,
                                   Symmetry sym = Symmetry::None);

    Mat2 eval(const Vec3& x) const;
    Vec2 row_sums(const Vec3& x) const;

    // Matrix as a function of the symmetry parameter.  Requires matching
    // symmetry (Radial for radius, Ellipsoidal for the confocal parameter).
    Mat2 at_param(double s) const;

    // Entrywise transpose; for A2/A3 the class is preserved with prescribed
    // entries swapped.
    MatrixPotential transposed() const;

    ClassTag class_tag() const { return class_tag_; }
    Symmetry symmetry() const { return symmetry_; }
    const ScalarField& entry(int i, int j) const { return entries_[2 * i + j]; }

  private:
    std::array<ScalarField, 4> entries_;  // row major
    ClassTag class_tag_;
    Symmetry symmetry_;
};

MatrixPotential build_potential(ClassTag tag, const ScalarProfile& unknown,
                                const std::optional<PrescribedEntries>& prescribed,
                                Symmetry symmetry);

struct Comparability {
    bool is_comparable = false;
    double min_margin = 0.0;
};

// Entrywise P1 >= P2 over the sample grid; min_margin is the smallest
// entry difference encountered.
Comparability comparability(const MatrixPotential& p1, const MatrixPotential& p2,
                            const std::vector<Vec3>& sample_grid);

inline double ellipsoidal_param(const Vec3& x) {
    return x.norm() + (x - kFocusE).norm();
}

}  // namespace cwave
