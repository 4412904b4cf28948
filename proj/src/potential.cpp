#include "cwave/potential.hpp"

#include <cmath>

#include "cwave/errors.hpp"

namespace cwave {

ScalarField ScalarField::constant(double c) {
    ScalarField f;
    f.kind_ = Kind::Constant;
    f.c_ = c;
    return f;
}

ScalarField ScalarField::radial(ScalarProfile p) {
    if (p.kind() != ParamKind::Radius)
        throw Error(ErrorCode::SymmetryMismatch, "radial field needs a radius profile");
    ScalarField f;
    f.kind_ = Kind::Radial;
    f.profile_ = std::make_shared<const ScalarProfile>(std::move(p));
    return f;
}

ScalarField ScalarField::ellipsoidal(ScalarProfile p) {
    if (p.kind() != ParamKind::EllipsoidalSum)
        throw Error(ErrorCode::SymmetryMismatch,
                    "ellipsoidal field needs an ellipsoidal-sum profile");
    ScalarField f;
    f.kind_ = Kind::Ellipsoidal;
    f.profile_ = std::make_shared<const ScalarProfile>(std::move(p));
    return f;
}

ScalarField ScalarField::general(std::function<double(const Vec3&)> fn) {
    ScalarField f;
    f.kind_ = Kind::General;
    f.fn_ = std::move(fn);
    return f;
}

double ScalarField::operator()(const Vec3& x) const {
    switch (kind_) {
        case Kind::Constant: return c_;
        case Kind::Radial: return (*profile_)(x.norm());
        case Kind::Ellipsoidal: return (*profile_)(ellipsoidal_param(x));
        case Kind::General: return fn_(x);
    }
    return 0.0;
}

bool ScalarField::has_symmetry(Symmetry s) const {
    switch (s) {
        case Symmetry::None: return true;
        case Symmetry::Radial: return kind_ == Kind::Constant || kind_ == Kind::Radial;
        case Symmetry::Ellipsoidal:
            return kind_ == Kind::Constant || kind_ == Kind::Ellipsoidal;
    }
    return false;
}

double ScalarField::at_param(double s) const {
    switch (kind_) {
        case Kind::Constant: return c_;
        case Kind::Radial:
        case Kind::Ellipsoidal: return (*profile_)(s);
        case Kind::General:
            throw Error(ErrorCode::SymmetryMismatch,
                        "general field has no symmetry parameter");
    }
    return 0.0;
}

double ScalarField::integral_param_to(double s) const {
    switch (kind_) {
        case Kind::Constant: return c_ * (s - 0.0);
        case Kind::Radial:
        case Kind::Ellipsoidal: return profile_->integral_to(s);
        case Kind::General:
            throw Error(ErrorCode::SymmetryMismatch,
                        "general field has no symmetry parameter");
    }
    return 0.0;
}

MatrixPotential MatrixPotential::zero() {
    return MatrixPotential({ScalarField::zero(), ScalarField::zero(),
                            ScalarField::zero(), ScalarField::zero()},
                           ClassTag::A1, Symmetry::Radial);
}

MatrixPotential MatrixPotential::general(std::array<ScalarField, 4> entries,
                                         Symmetry sym) {
    for (const auto& e : entries)
        if (!e.has_symmetry(sym))
            throw Error(ErrorCode::SymmetryMismatch, "entry breaks declared symmetry");
    return MatrixPotential(std::move(entries), ClassTag::General, sym);
}

Mat2 MatrixPotential::eval(const Vec3& x) const {
    return {entries_[0](x), entries_[1](x), entries_[2](x), entries_[3](x)};
}

Vec2 MatrixPotential::row_sums(const Vec3& x) const {
    const Mat2 m = eval(x);
    return {m.a + m.b, m.c + m.d};
}

Mat2 MatrixPotential::at_param(double s) const {
    if (symmetry_ == Symmetry::None)
        throw Error(ErrorCode::SymmetryMismatch, "potential has no symmetry parameter");
    return {entries_[0].at_param(s), entries_[1].at_param(s),
            entries_[2].at_param(s), entries_[3].at_param(s)};
}

MatrixPotential MatrixPotential::transposed() const {
    return MatrixPotential({entries_[0], entries_[2], entries_[1], entries_[3]},
                           class_tag_, symmetry_);
}

MatrixPotential build_potential(ClassTag tag, const ScalarProfile& unknown,
                                const std::optional<PrescribedEntries>& prescribed,
                                Symmetry symmetry) {
    if (symmetry == Symmetry::Radial && unknown.kind() != ParamKind::Radius)
        throw Error(ErrorCode::SymmetryMismatch,
                    "radial symmetry requires a radius profile");
    if (symmetry == Symmetry::Ellipsoidal && unknown.kind() != ParamKind::EllipsoidalSum)
        throw Error(ErrorCode::SymmetryMismatch,
                    "ellipsoidal symmetry requires an ellipsoidal-sum profile");
    if (symmetry == Symmetry::None)
        throw Error(ErrorCode::SymmetryMismatch,
                    "admissible classes carry radial or ellipsoidal symmetry");

    const ScalarField u = symmetry == Symmetry::Radial
                              ? ScalarField::radial(unknown)
                              : ScalarField::ellipsoidal(unknown);

    switch (tag) {
        case ClassTag::A1:
            if (prescribed)
                throw Error(ErrorCode::ClassMismatch,
                            "A1 has no prescribed entries (all four equal)");
            return MatrixPotential({u, u, u, u}, ClassTag::A1, symmetry);
        case ClassTag::A2: {
            if (!prescribed)
                throw Error(ErrorCode::ClassMismatch, "A2 needs prescribed off-diagonal");
            const auto& p = *prescribed;
            if (!p.first.has_symmetry(symmetry) || !p.second.has_symmetry(symmetry))
                throw Error(ErrorCode::SymmetryMismatch,
                            "prescribed entries break declared symmetry");
            return MatrixPotential({u, p.first, p.second, u}, ClassTag::A2, symmetry);
        }
        case ClassTag::A3: {
            if (!prescribed)
                throw Error(ErrorCode::ClassMismatch, "A3 needs prescribed diagonal");
            const auto& p = *prescribed;
            if (!p.first.has_symmetry(symmetry) || !p.second.has_symmetry(symmetry))
                throw Error(ErrorCode::SymmetryMismatch,
                            "prescribed entries break declared symmetry");
            return MatrixPotential({p.first, u, u, p.second}, ClassTag::A3, symmetry);
        }
        case ClassTag::General:
            throw Error(ErrorCode::ClassUnderdetermined,
                        "General class has no single unknown profile");
    }
    throw Error(ErrorCode::ClassMismatch, "unknown class tag");
}

Comparability comparability(const MatrixPotential& p1, const MatrixPotential& p2,
                            const std::vector<Vec3>& sample_grid) {
    if (sample_grid.empty())
        throw Error(ErrorCode::EmptyGrid, "comparability needs a nonempty grid");
    Comparability out;
    out.min_margin = std::numeric_limits<double>::infinity();
    for (const Vec3& x : sample_grid) {
        const Mat2 d = p1.eval(x) - p2.eval(x);
        for (double v : {d.a, d.b, d.c, d.d})
            out.min_margin = std::min(out.min_margin, v);
    }
    out.is_comparable = out.min_margin >= 0.0;
    return out;
}

}  // namespace cwave
