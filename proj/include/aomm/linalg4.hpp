#pragma once

// Dense complex 4x4 helpers sized for the four-mode system. Partial-pivot
// elimination on a fixed 4x4 beats pulling in a full linear-algebra
// dependency for this one solve.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "aomm/errors.hpp"

namespace aomm {

using cplx = std::complex<double>;

struct Vec4c {
    std::array<cplx, 4> v{};

    cplx& operator[](std::size_t i) { return v[i]; }
    const cplx& operator[](std::size_t i) const { return v[i]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : v) m = std::max(m, std::abs(x));
        return m;
    }
};

inline Vec4c operator+(Vec4c a, const Vec4c& b) {
    for (std::size_t i = 0; i < 4; ++i) a[i] += b[i];
    return a;
}

inline Vec4c operator-(Vec4c a, const Vec4c& b) {
    for (std::size_t i = 0; i < 4; ++i) a[i] -= b[i];
    return a;
}

inline Vec4c operator*(const cplx& s, Vec4c a) {
    for (std::size_t i = 0; i < 4; ++i) a[i] *= s;
    return a;
}

struct Mat4c {
    std::array<cplx, 16> a{};

    cplx& operator()(std::size_t i, std::size_t j) { return a[4 * i + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[4 * i + j]; }

    static Mat4c identity() {
        Mat4c m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx trace() const { return a[0] + a[5] + a[10] + a[15]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a) m = std::max(m, std::abs(x));
        return m;
    }
};

inline Mat4c operator+(Mat4c a, const Mat4c& b) {
    for (std::size_t i = 0; i < 16; ++i) a.a[i] += b.a[i];
    return a;
}

inline Mat4c operator-(Mat4c a, const Mat4c& b) {
    for (std::size_t i = 0; i < 16; ++i) a.a[i] -= b.a[i];
    return a;
}

inline Mat4c operator*(const cplx& s, Mat4c a) {
    for (std::size_t i = 0; i < 16; ++i) a.a[i] *= s;
    return a;
}

inline Vec4c operator*(const Mat4c& m, const Vec4c& x) {
    Vec4c y;
    for (std::size_t i = 0; i < 4; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

inline Mat4c operator*(const Mat4c& p, const Mat4c& q) {
    Mat4c r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += p(i, k) * q(k, j);
            r(i, j) = acc;
        }
    return r;
}

// Gaussian elimination with partial pivoting. Throws SingularSystemError on a
// zero pivot column.
inline Vec4c solve4(Mat4c m, Vec4c rhs) {
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m(col, col));
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double mag = std::abs(m(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0)
            throw SingularSystemError("singular sideband system (zero pivot in column " +
                                      std::to_string(col) + ")");
        if (pivot != col) {
            for (std::size_t j = col; j < 4; ++j) std::swap(m(col, j), m(pivot, j));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (m(r, col) == cplx{0.0, 0.0}) continue;
            const cplx factor = m(r, col) / m(col, col);
            m(r, col) = 0.0;
            for (std::size_t j = col + 1; j < 4; ++j) m(r, j) -= factor * m(col, j);
            rhs[r] -= factor * rhs[col];
        }
    }
    Vec4c x;
    for (std::size_t ii = 4; ii-- > 0;) {
        cplx acc = rhs[ii];
        for (std::size_t j = ii + 1; j < 4; ++j) acc -= m(ii, j) * x[j];
        x[ii] = acc / m(ii, ii);
    }
    return x;
}

inline double residual_norm(const Mat4c& m, const Vec4c& x, const Vec4c& rhs) {
    return (m * x - rhs).max_abs();
}

} // namespace aomm
