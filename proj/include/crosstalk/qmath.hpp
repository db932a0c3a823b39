// Fixed-shape complex linear algebra for one and two qubits.
//
// Basis order is |0>,|1> for Vec2 and |00>,|01>,|10>,|11> for Vec4; the
// tensor product places u_a * v_b at index 2a+b.

#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace crosstalk {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Complex<Scalar>, 2, 1>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<Complex<Scalar>, 4, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using Mat4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;

using Vec2d = Vec2<double>;
using Vec4d = Vec4<double>;
using Mat2d = Mat2<double>;
using Mat4d = Mat4<double>;

namespace detail {

template <typename A, typename B>
void require_same_shape(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace detail

/// <u|v>, conjugate-linear in the first (bra) argument.
template <typename DerivedU, typename DerivedV>
auto inner(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedU)
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedV)
  EIGEN_STATIC_ASSERT_SAME_VECTOR_SIZE(DerivedU, DerivedV)
  detail::require_same_shape(u, v, "inner");
  // Eigen's dot() conjugates its left operand.
  return u.dot(v);
}

/// |uv>: component 2a+b is u_a * v_b.
template <typename Scalar>
Vec4<Scalar> tensor_vec(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
  Vec4<Scalar> out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out(2 * a + b) = u(a) * v(b);
    }
  }
  return out;
}

/// Kronecker product a (x) b in the fixed basis order.
template <typename Scalar>
Mat4<Scalar> tensor_mat(const Mat2<Scalar>& a, const Mat2<Scalar>& b) {
  Mat4<Scalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

template <typename DerivedM, typename DerivedV>
auto mat_apply(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedV>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(DerivedV)
  if (m.cols() != v.rows()) {
    throw std::invalid_argument("mat_apply: dimension mismatch");
  }
  return (m * v).eval();
}

template <typename DerivedA, typename DerivedB>
auto mat_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  return (a * b).eval();
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint().eval();
}

template <typename Derived>
auto frobenius_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

/// [a, b] = ab - ba.
template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (mat_mul(a, b) - mat_mul(b, a)).eval();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

// Named single-qubit matrices.

template <typename Scalar = double>
Mat2<Scalar> identity2() {
  return Mat2<Scalar>::Identity();
}

template <typename Scalar = double>
Mat2<Scalar> sigma1() {
  Mat2<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  return m;
}

template <typename Scalar = double>
Mat2<Scalar> sigma2() {
  const Complex<Scalar> i(0, 1);
  Mat2<Scalar> m;
  m << Scalar(0), -i, i, Scalar(0);
  return m;
}

template <typename Scalar = double>
Mat2<Scalar> sigma3() {
  Mat2<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

template <typename Scalar = double>
Mat2<Scalar> hadamard() {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Mat2<Scalar> m;
  m << r, r, r, -r;
  return m;
}

/// cos(angle) for even k, sin(angle) for odd k.
template <typename Scalar>
Scalar cos_or_sin(int k, Scalar angle) {
  return (k & 1) == 0 ? std::cos(angle) : std::sin(angle);
}

template <typename Scalar = double>
Vec2<Scalar> ket(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("ket: bit must be 0 or 1");
  Vec2<Scalar> v = Vec2<Scalar>::Zero();
  v(bit) = Scalar(1);
  return v;
}

}  // namespace crosstalk
