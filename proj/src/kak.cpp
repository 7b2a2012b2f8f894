// Copyright 2026 The dqcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "dqcbench/circuits.hpp"
#include "dqcbench/error.hpp"

namespace dqcbench::circuits {

namespace gates {

Mat2 x() { return (Mat2() << 0, 1, 1, 0).finished(); }
Mat2 y() { return (Mat2() << 0, Complex(0, -1), Complex(0, 1), 0).finished(); }
Mat2 z() { return (Mat2() << 1, 0, 0, -1).finished(); }
Mat2 h() { return (Mat2() << 1, 1, 1, -1).finished() / std::numbers::sqrt2; }

Mat2 rz(double theta) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Mat2 ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return (Mat2() << c, -s, s, c).finished();
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Mat4 cnot_ab() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

Mat4 cnot_ba() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 3) = m(2, 2) = m(3, 1) = 1;
  return m;
}

Mat4 swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

}  // namespace gates

namespace {

const Mat4& magic_basis() {
  static const Mat4 b = [] {
    const Complex i(0, 1);
    Mat4 m;
    m << 1, 0, 0, i,  //
        0, i, 1, 0,   //
        0, i, -1, 0,  //
        1, 0, 0, -i;
    return Mat4(m / std::numbers::sqrt2);
  }();
  return b;
}

struct KronFactors {
  Complex phase;
  Mat2 first;
  Mat2 second;
};

// K = phase * (first x second) for a local two-qubit unitary K.
KronFactors kron_factor(const Mat4& k) {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  k.cwiseAbs().maxCoeff(&row, &col);
  const int ra = static_cast<int>(row / 2), rb = static_cast<int>(row % 2);
  const int ca = static_cast<int>(col / 2), cb = static_cast<int>(col % 2);
  Mat2 f;
  Mat2 s;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      f(x, y) = k(2 * x + rb, 2 * y + cb);
      s(x, y) = k(2 * ra + x, 2 * ca + y);
    }
  }
  f /= std::sqrt(f.determinant());
  s /= std::sqrt(s.determinant());
  return {k(row, col) / (f(ra, ca) * s(rb, cb)), f, s};
}

Complex relative_phase(const Mat4& target, const Mat4& v) {
  // target = phase * v for unitary v; tr(v^dag target) / 4 is that phase.
  const Complex t = (v.adjoint() * target).trace() / 4.0;
  return t / std::abs(t);
}

}  // namespace

Mat4 canonical_gate(double a, double b, double c) {
  // XX, YY and ZZ are diagonal in the magic basis.
  const Mat4& m = magic_basis();
  const Mat4 xx = gates::kron(gates::x(), gates::x());
  const Mat4 yy = gates::kron(gates::y(), gates::y());
  const Mat4 zz = gates::kron(gates::z(), gates::z());
  Mat4 d = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const double phase = a * (m.adjoint() * xx * m)(k, k).real() + b * (m.adjoint() * yy * m)(k, k).real() +
                         c * (m.adjoint() * zz * m)(k, k).real();
    d(k, k) = std::polar(1.0, phase);
  }
  return m * d * m.adjoint();
}

Mat4 sequence_unitary(const std::vector<Gate>& sequence) {
  Mat4 u = Mat4::Identity();
  for (const Gate& g : sequence) {
    Mat4 step;
    switch (g.kind) {
      case GateKind::SingleQubit:
        step = g.q0 == 0 ? gates::kron(g.unitary, Mat2::Identity()) : gates::kron(Mat2::Identity(), g.unitary);
        break;
      case GateKind::CNOT:
        step = g.q0 == 0 ? gates::cnot_ab() : gates::cnot_ba();
        break;
      case GateKind::Swap:
        step = gates::swap();
        break;
      default:
        throw Error("sequence_unitary handles only unitary gates");
    }
    u = step * u;
  }
  return u;
}

KakDecomposition kak_decompose(const Mat4& u) {
  if ((u.adjoint() * u - Mat4::Identity()).cwiseAbs().maxCoeff() > 1e-8) {
    throw Error("kak_decompose: input is not unitary");
  }
  const Complex det_root = std::pow(u.determinant(), 0.25);
  const Mat4 su = u / det_root;
  const Mat4& mb = magic_basis();
  const Mat4 um = mb.adjoint() * su * mb;
  const Mat4 m2 = um.transpose() * um;

  // m2 is symmetric unitary: its real and imaginary parts are commuting real
  // symmetric matrices, so a generic combination shares their eigenbasis.
  Eigen::Matrix4d p;
  bool found = false;
  for (int attempt = 0; attempt < 64 && !found; ++attempt) {
    const double w = 0.5 + std::fmod(attempt * 0.6180339887498949, 1.0) * 3.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m2.real() + w * m2.imag());
    p = solver.eigenvectors();
    const Mat4 d2 = p.transpose().cast<Complex>() * m2 * p.cast<Complex>();
    found = (d2 - Mat4(d2.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-9;
  }
  if (!found) throw Error("kak_decompose: failed to diagonalize");
  if (p.determinant() < 0) p.col(0) *= -1;

  const Mat4 pc = p.cast<Complex>();
  Eigen::Vector4cd d = (pc.transpose() * m2 * pc).diagonal().cwiseSqrt();
  Mat4 o1 = um * pc * d.cwiseInverse().asDiagonal();
  if (o1.determinant().real() < 0) {
    d(0) = -d(0);
    o1.col(0) *= -1;
  }
  const KronFactors left = kron_factor(mb * o1 * mb.adjoint());
  const KronFactors right = kron_factor(mb * pc.transpose() * mb.adjoint());

  // Solve angle(d_k) = a x_k + b y_k + c z_k + phi on the magic-basis
  // eigenvalues x, y, z of XX, YY, ZZ.
  Eigen::Matrix4d coeffs;
  const Mat4 xx = mb.adjoint() * gates::kron(gates::x(), gates::x()) * mb;
  const Mat4 yy = mb.adjoint() * gates::kron(gates::y(), gates::y()) * mb;
  const Mat4 zz = mb.adjoint() * gates::kron(gates::z(), gates::z()) * mb;
  Eigen::Vector4d angles;
  for (int k = 0; k < 4; ++k) {
    coeffs.row(k) << xx(k, k).real(), yy(k, k).real(), zz(k, k).real(), 1.0;
    angles(k) = std::arg(d(k));
  }
  const Eigen::Vector4d sol = coeffs.partialPivLu().solve(angles);

  KakDecomposition out;
  out.a = sol(0);
  out.b = sol(1);
  out.c = sol(2);
  out.after = {left.first, left.second};
  out.before = {right.first, right.second};
  const Mat4 core = gates::kron(out.after[0], out.after[1]) * canonical_gate(out.a, out.b, out.c) *
                    gates::kron(out.before[0], out.before[1]);
  out.phase = relative_phase(u, core);

  // Three-CNOT realisation of Can(a, b, c), up to a global phase.
  constexpr double half_pi = std::numbers::pi / 2;
  auto& seq = out.sequence;
  seq.push_back(Gate::single(0, out.before[0]));
  seq.push_back(Gate::single(1, gates::rz(-half_pi) * out.before[1]));
  seq.push_back(Gate::cnot(1, 0));
  seq.push_back(Gate::single(0, gates::rz(half_pi - 2 * out.c)));
  seq.push_back(Gate::single(1, gates::ry(2 * out.a - half_pi)));
  seq.push_back(Gate::cnot(0, 1));
  seq.push_back(Gate::single(0, Mat2::Identity()));
  seq.push_back(Gate::single(1, gates::ry(half_pi - 2 * out.b)));
  seq.push_back(Gate::cnot(1, 0));
  seq.push_back(Gate::single(0, out.after[0] * gates::rz(half_pi)));
  seq.push_back(Gate::single(1, out.after[1]));
  out.sequence_phase = relative_phase(u, sequence_unitary(seq));
  return out;
}

}  // namespace dqcbench::circuits
