#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ctcsim/layout.hpp"

namespace ctcsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Unit-norm complex amplitude vector over a layout's composite basis.
class PureState {
public:
    PureState(LayoutPtr layout, Vector amplitudes, double tol = kDefaultTol);

    /// Computational basis state |composite⟩.
    static PureState basis(LayoutPtr layout, int composite);
    /// Basis state from per-subsystem digits.
    static PureState basis(LayoutPtr layout, std::span<const int> digits);
    /// Rescales the given vector to unit norm (error on the zero vector).
    static PureState normalized(LayoutPtr layout, Vector amplitudes);

    const LayoutPtr& layout() const { return layout_; }
    const Vector& amplitudes() const { return amplitudes_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }
    Complex amplitude(int composite) const { return amplitudes_(composite); }

private:
    LayoutPtr layout_;
    Vector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a layout.
///
/// Validates all three properties at construction; eigenvalues in
/// [-1e-10, 0) are tolerated (treated as zero), anything more negative
/// is a hard error.
class DensityOperator {
public:
    DensityOperator(LayoutPtr layout, Matrix matrix, double tol = kDefaultTol);

    static DensityOperator from_pure(const PureState& state);
    /// I/dim on the given layout.
    static DensityOperator maximally_mixed(LayoutPtr layout);

    const LayoutPtr& layout() const { return layout_; }
    const Matrix& matrix() const { return matrix_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }

private:
    LayoutPtr layout_;
    Matrix matrix_;
};

/// Square complex matrix over a layout, optionally flagged (and then
/// verified) unitary. The timeline correlation operator carries
/// unitary_flag = false.
class LinearOperator {
public:
    LinearOperator(LayoutPtr layout, Matrix matrix, bool unitary_flag,
                   double tol = kDefaultTol);

    static LinearOperator identity(LayoutPtr layout);

    const LayoutPtr& layout() const { return layout_; }
    const Matrix& matrix() const { return matrix_; }
    bool unitary_flag() const { return unitary_flag_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }

    PureState apply(const PureState& state) const;
    DensityOperator conjugate(const DensityOperator& rho) const;  // M rho M†
    LinearOperator adjoint() const;

    /// True iff M†M = I within tol, regardless of the flag.
    bool is_unitary(double tol = kDefaultTol) const;
    /// True iff every column is a single computational basis vector.
    bool is_basis_permutation(double tol = kDefaultTol) const;
    /// For a basis permutation, the image index of basis column `j`.
    int basis_image(int j, double tol = kDefaultTol) const;

private:
    LayoutPtr layout_;
    Matrix matrix_;
    bool unitary_flag_;
};

}  // namespace ctcsim
