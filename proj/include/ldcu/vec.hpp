#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ldcu {

// Small fixed-size vector of conserved quantities. Derives from std::array so
// aggregate initialisation (Vec<3>{1.0, 0.0, 2.5}) keeps working, while the
// arithmetic operators below are found through ADL.
template <std::size_t N>
struct Vec : std::array<double, N> {};

template <std::size_t N>
using Mat = std::array<Vec<N>, N>; // row-major

template <std::size_t N>
constexpr Vec<N> operator+(const Vec<N>& a, const Vec<N>& b)
{
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> operator-(const Vec<N>& a, const Vec<N>& b)
{
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(double s, const Vec<N>& a)
{
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(const Vec<N>& a, double s)
{
    return s * a;
}

template <std::size_t N>
constexpr Vec<N>& operator+=(Vec<N>& a, const Vec<N>& b)
{
    for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
    return a;
}

template <std::size_t N>
constexpr Vec<N> matvec(const Mat<N>& m, const Vec<N>& x)
{
    Vec<N> r{};
    for (std::size_t i = 0; i < N; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < N; ++k) s += m[i][k] * x[k];
        r[i] = s;
    }
    return r;
}

template <std::size_t N>
constexpr Mat<N> matmul(const Mat<N>& a, const Mat<N>& b)
{
    Mat<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < N; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

template <std::size_t N>
double max_abs(const Vec<N>& a)
{
    double m = 0.0;
    for (double x : a) m = std::fmax(m, std::fabs(x));
    return m;
}

template <std::size_t N>
double max_abs(const Mat<N>& a)
{
    double m = 0.0;
    for (const auto& row : a) m = std::fmax(m, max_abs(row));
    return m;
}

} // namespace ldcu
