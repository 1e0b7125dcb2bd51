// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pgate::qmath {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat2 partial_trace_in(const Mat4& m) {
  Mat2 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) r(a, b) = m(a, b) + m(2 + a, 2 + b);
  return r;
}

std::array<double, 2> eigenvalues_hermitian(const Mat2& m, double hermTol) {
  if (!is_hermitian(m, hermTol)) throw std::invalid_argument("eigenvalues_hermitian: matrix is not Hermitian");
  const double a = m(0, 0).real();
  const double c = m(1, 1).real();
  const double mean = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), std::abs(m(0, 1)));
  return {mean - disc, mean + disc};
}

namespace {

// One complex Jacobi rotation zeroing A(p,q) of a Hermitian A, applied in
// place as A <- R^dag A R with R unitary on the (p,q) plane.
void jacobi_rotate(Mat4& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex u = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // R columns: col_p = (c, -s*conj(u)), col_q = (s, c*conj(u)).
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(u) * akq;
    a(k, q) = s * akp + c * std::conj(u) * akq;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * u * aqk;
    a(q, k) = s * apk + c * u * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);
}

double offdiag_norm(const Mat4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

std::array<double, 4> eigenvalues_hermitian(const Mat4& m, double hermTol) {
  if (!is_hermitian(m, hermTol)) throw std::invalid_argument("eigenvalues_hermitian: matrix is not Hermitian");
  Mat4 a = hermitize(m);
  const double scale = std::max(1.0, max_abs(a));
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) jacobi_rotate(a, p, q);
  }
  std::array<double, 4> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigenvalue(const Mat2& m, double hermTol) { return eigenvalues_hermitian(m, hermTol)[0]; }

double min_eigenvalue(const Mat4& m, double hermTol) { return eigenvalues_hermitian(m, hermTol)[0]; }

}  // namespace pgate::qmath
