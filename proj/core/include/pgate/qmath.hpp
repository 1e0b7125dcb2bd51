// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>

// Minimal dense complex linear algebra for 2- and 4-dimensional operators.
// Everything is a value type over std::array; operations are pure functions.
//
// Index convention used project-wide: operators on the joint input/output
// space live on H_in (x) H_out with the input factor first, i.e. the flat
// index of |i_in, i_out> is 2*i_in + i_out. kron() takes the input factor as
// its first argument and partial_trace_in() sums over that factor.
// Basis order is {H, V} = {0, 1}.

namespace pgate::qmath {

using Complex = std::complex<double>;

template <std::size_t N>
struct CVec {
  std::array<Complex, N> e{};

  Complex& operator[](std::size_t i) { return e[i]; }
  const Complex& operator[](std::size_t i) const { return e[i]; }
  static constexpr std::size_t size() { return N; }
};

template <std::size_t N>
struct CMat {
  std::array<Complex, N * N> e{};

  Complex& operator()(std::size_t r, std::size_t c) { return e[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return e[r * N + c]; }
  static constexpr std::size_t dim() { return N; }
};

using Vec2 = CVec<2>;
using Vec4 = CVec<4>;
using Mat2 = CMat<2>;
using Mat4 = CMat<4>;

template <std::size_t N>
CMat<N> identity() {
  CMat<N> m;
  for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
  return m;
}

template <std::size_t N>
CMat<N> operator+(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

template <std::size_t N>
CMat<N> operator-(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

template <std::size_t N>
CMat<N> operator*(const Complex& s, const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.e[i] = s * a.e[i];
  return r;
}

template <std::size_t N>
CMat<N> operator*(double s, const CMat<N>& a) {
  return Complex(s, 0.0) * a;
}

template <std::size_t N>
CMat<N> operator*(const CMat<N>& a, const CMat<N>& b) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <std::size_t N>
CVec<N> operator*(const CMat<N>& a, const CVec<N>& v) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
  return r;
}

template <std::size_t N>
CMat<N> adjoint(const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

template <std::size_t N>
CMat<N> transpose(const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a(j, i);
  return r;
}

template <std::size_t N>
Complex trace(const CMat<N>& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

// |v><w|
template <std::size_t N>
CMat<N> outer(const CVec<N>& v, const CVec<N>& w) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = v[i] * std::conj(w[j]);
  return r;
}

// <v|w>, conjugate-linear in the first argument.
template <std::size_t N>
Complex dot(const CVec<N>& v, const CVec<N>& w) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(v[i]) * w[i];
  return s;
}

template <std::size_t N>
double norm2(const CVec<N>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::norm(v[i]);
  return s;
}

template <std::size_t N>
CVec<N> conj(const CVec<N>& v) {
  CVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(v[i]);
  return r;
}

template <std::size_t N>
double max_abs(const CMat<N>& a) {
  double m = 0.0;
  for (const auto& x : a.e) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
bool is_hermitian(const CMat<N>& a, double tol = 1e-12) {
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale) return false;
  return true;
}

template <std::size_t N>
CMat<N> hermitize(const CMat<N>& a) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

// Tensor product, input factor first: kron(a,b)[2i+k, 2j+l] = a(i,j) b(k,l).
Mat4 kron(const Mat2& a, const Mat2& b);

// Trace over the input (first) factor of an operator on H_in (x) H_out.
Mat2 partial_trace_in(const Mat4& m);

// Eigenvalues of Hermitian matrices, ascending. 2x2 is closed form, 4x4 uses
// cyclic complex Jacobi rotations driven to 1e-14 relative off-diagonal norm.
// Throws std::invalid_argument if the input is not Hermitian within hermTol.
std::array<double, 2> eigenvalues_hermitian(const Mat2& m, double hermTol = 1e-9);
std::array<double, 4> eigenvalues_hermitian(const Mat4& m, double hermTol = 1e-9);

double min_eigenvalue(const Mat2& m, double hermTol = 1e-9);
double min_eigenvalue(const Mat4& m, double hermTol = 1e-9);

}  // namespace pgate::qmath
