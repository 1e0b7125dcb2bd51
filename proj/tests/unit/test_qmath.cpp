// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "pgate/qmath.hpp"
#include "pgate/rng.hpp"
#include "test_random.hpp"

using namespace pgate;
using qmath::Complex;
using qmath::Mat2;
using qmath::Mat4;

namespace {

Mat2 diag2(Complex a, Complex b) {
  Mat2 m;
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat2 sigma_z() { return diag2(1.0, -1.0); }

Mat2 sigma_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

double mat_dist(const Mat4& a, const Mat4& b) { return qmath::max_abs(a - b); }
double mat_dist(const Mat2& a, const Mat2& b) { return qmath::max_abs(a - b); }

}  // namespace

TEST_SUITE("qmath") {

TEST_CASE("kron identity and projector cases") {
  CHECK(mat_dist(qmath::kron(qmath::identity<2>(), qmath::identity<2>()), qmath::identity<4>()) == 0.0);

  const Mat4 proj = qmath::kron(diag2(1.0, 0.0), diag2(1.0, 0.0));
  Mat4 expected;
  expected(0, 0) = 1.0;
  CHECK(mat_dist(proj, expected) == 0.0);

  const Mat4 zz = qmath::kron(sigma_z(), sigma_z());
  Mat4 zzExpected;
  zzExpected(0, 0) = 1.0;
  zzExpected(1, 1) = -1.0;
  zzExpected(2, 2) = -1.0;
  zzExpected(3, 3) = 1.0;
  CHECK(mat_dist(zz, zzExpected) == 0.0);
}

TEST_CASE("kron is bilinear and satisfies the mixed-product rule") {
  rng::Philox4x32 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 a = testsupport::random_matrix<2>(gen);
    const Mat2 b = testsupport::random_matrix<2>(gen);
    const Mat2 c = testsupport::random_matrix<2>(gen);
    const Mat2 d = testsupport::random_matrix<2>(gen);
    const Complex s = testsupport::random_complex(gen);

    CHECK(mat_dist(qmath::kron(a, b) * qmath::kron(c, d), qmath::kron(a * c, b * d)) < 1e-12);
    CHECK(mat_dist(qmath::kron(s * a + c, b), s * qmath::kron(a, b) + qmath::kron(c, b)) < 1e-12);
    CHECK(std::abs(qmath::trace(qmath::kron(a, b)) - qmath::trace(a) * qmath::trace(b)) < 1e-12);
  }
}

TEST_CASE("partial_trace_in on product and entangled states") {
  rng::Philox4x32 gen(12);
  const Mat2 rho = testsupport::random_matrix<2>(gen);
  const Mat2 sigma = testsupport::random_matrix<2>(gen);
  const Mat2 expected = qmath::trace(rho) * sigma;
  CHECK(mat_dist(qmath::partial_trace_in(qmath::kron(rho, sigma)), expected) < 1e-12);

  // Unnormalized |Phi+> = |HH> + |VV>: tracing out the input leaves 1.
  qmath::Vec4 bell;
  bell[0] = 1.0;
  bell[3] = 1.0;
  CHECK(mat_dist(qmath::partial_trace_in(qmath::outer(bell, bell)), qmath::identity<2>()) < 1e-12);

  CHECK(mat_dist(qmath::partial_trace_in(qmath::identity<4>()), 2.0 * qmath::identity<2>()) < 1e-12);
}

TEST_CASE("partial_trace_in is linear and trace-preserving") {
  rng::Philox4x32 gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 m = testsupport::random_matrix<4>(gen);
    const Mat4 n = testsupport::random_matrix<4>(gen);
    const Complex s = testsupport::random_complex(gen);
    CHECK(std::abs(qmath::trace(qmath::partial_trace_in(m)) - qmath::trace(m)) < 1e-12);
    CHECK(mat_dist(qmath::partial_trace_in(s * m + n),
                   s * qmath::partial_trace_in(m) + qmath::partial_trace_in(n)) < 1e-12);
  }
}

TEST_CASE("min_eigenvalue on known matrices") {
  Mat4 diag;
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 4.0;
  diag(3, 3) = 2.0;
  CHECK(qmath::min_eigenvalue(diag) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(qmath::min_eigenvalue(sigma_x()) == doctest::Approx(-1.0).epsilon(1e-12));

  qmath::Vec4 bell;
  bell[0] = 1.0;
  bell[3] = 1.0;
  const auto ev = qmath::eigenvalues_hermitian(qmath::outer(bell, bell));
  CHECK(std::abs(ev[0]) < 1e-12);
  CHECK(std::abs(ev[1]) < 1e-12);
  CHECK(std::abs(ev[2]) < 1e-12);
  CHECK(ev[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("min_eigenvalue rejects non-Hermitian input") {
  Mat2 m;
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(qmath::min_eigenvalue(m), std::invalid_argument);
}

TEST_CASE("eigenvalues match trace invariants on random Hermitian matrices") {
  rng::Philox4x32 gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 h = testsupport::random_hermitian<4>(gen, 2.0);
    const auto ev = qmath::eigenvalues_hermitian(h);
    double sum = 0.0, sumSq = 0.0;
    for (double v : ev) {
      sum += v;
      sumSq += v * v;
    }
    CHECK(sum == doctest::Approx(qmath::trace(h).real()).epsilon(1e-10));
    CHECK(sumSq == doctest::Approx(qmath::trace(h * h).real()).epsilon(1e-10));
    CHECK(std::is_sorted(ev.begin(), ev.end()));
  }
}

TEST_CASE("M'M is positive semidefinite") {
  rng::Philox4x32 gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 m = testsupport::random_matrix<4>(gen, 2.0);
    const Mat4 gram = qmath::adjoint(m) * m;
    CHECK(qmath::min_eigenvalue(gram) >= -1e-9 * qmath::trace(gram).real());

    const Mat2 m2 = testsupport::random_matrix<2>(gen, 2.0);
    const Mat2 gram2 = qmath::adjoint(m2) * m2;
    CHECK(qmath::min_eigenvalue(gram2) >= -1e-9 * std::max(1.0, qmath::trace(gram2).real()));
  }
}

TEST_CASE("2x2 closed form agrees with 4x4 Jacobi on embedded blocks") {
  rng::Philox4x32 gen(16);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 h = testsupport::random_hermitian<2>(gen, 3.0);
    const auto ev2 = qmath::eigenvalues_hermitian(h);
    Mat4 embedded;
    embedded(0, 0) = h(0, 0);
    embedded(0, 1) = h(0, 1);
    embedded(1, 0) = h(1, 0);
    embedded(1, 1) = h(1, 1);
    embedded(2, 2) = 100.0;
    embedded(3, 3) = 100.0;
    const auto ev4 = qmath::eigenvalues_hermitian(embedded);
    CHECK(ev4[0] == doctest::Approx(ev2[0]).epsilon(1e-12));
    CHECK(ev4[1] == doctest::Approx(ev2[1]).epsilon(1e-12));
  }
}

}  // TEST_SUITE
