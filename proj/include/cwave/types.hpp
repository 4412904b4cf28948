#pragma once

#include <array>
#include <cmath>

namespace cwave {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
    double u1 = 0.0, u2 = 0.0;

    Vec2 operator+(const Vec2& o) const { return {u1 + o.u1, u2 + o.u2}; }
    Vec2 operator-(const Vec2& o) const { return {u1 - o.u1, u2 - o.u2}; }
    Vec2 operator*(double s) const { return {u1 * s, u2 * s}; }
    double dot(const Vec2& o) const { return u1 * o.u1 + u2 * o.u2; }
    double sum() const { return u1 + u2; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// 2x2 real matrix, row major: [a b; c d].
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    Vec2 operator*(const Vec2& v) const {
        return {a * v.u1 + b * v.u2, c * v.u1 + d * v.u2};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 transposed() const { return {a, c, b, d}; }
    double entry_sum() const { return a + b + c + d; }

    // Solves (I - this) w = rhs.
    Vec2 solve_shifted(const Vec2& rhs) const {
        const double m11 = 1.0 - a, m12 = -b, m21 = -c, m22 = 1.0 - d;
        const double det = m11 * m22 - m12 * m21;
        return {(m22 * rhs.u1 - m12 * rhs.u2) / det,
                (m11 * rhs.u2 - m21 * rhs.u1) / det};
    }
};

inline constexpr double kPi = 3.14159265358979323846;

// Unit offset of the separated receiver/source point.
inline constexpr Vec3 kFocusE{1.0, 0.0, 0.0};

// The constant source coupling vector (both components driven equally).
struct CouplingVector {
    static constexpr double component = 1.0;
    static Vec2 as_vec2() { return {1.0, 1.0}; }
};

}  // namespace cwave
