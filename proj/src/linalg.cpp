#include "qwalk/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {
constexpr double kHermitianTol = 1e-12;
}

double hermiticity_defect(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw GraphError("hermiticity_defect: matrix must be square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw GraphError("unitarity_defect: matrix must be square");
    }
    CMatrix gram = m.adjoint() * m;
    gram -= CMatrix::Identity(m.rows(), m.cols());
    return gram.cwiseAbs().maxCoeff();
}

double fidelity(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) {
        throw GraphError("fidelity: dimension mismatch");
    }
    return std::abs(u.dot(v));
}

HermitianEigensystem::HermitianEigensystem(const CMatrix& h) {
    if (hermiticity_defect(h) > kHermitianTol) {
        throw GraphError("expm: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw InvariantViolation("expm: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

CVector HermitianEigensystem::apply_exp(double t, const CVector& v) const {
    if (v.size() != eigenvalues_.size()) {
        throw GraphError("expm: dimension mismatch");
    }
    CVector coeffs = eigenvectors_.adjoint() * v;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::exp(Complex(0.0, -eigenvalues_[k] * t));
    }
    return eigenvectors_ * coeffs;
}

CVector expm_apply_hermitian(const CMatrix& h, double t, const CVector& v) {
    return HermitianEigensystem(h).apply_exp(t, v);
}

SymmetricEigensystem::SymmetricEigensystem(const RMatrix& m) {
    if (m.rows() != m.cols() || (m - m.transpose()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw GraphError("expm: matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw InvariantViolation("expm: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

RVector SymmetricEigensystem::apply_exp(double t, const RVector& v) const {
    if (v.size() != eigenvalues_.size()) {
        throw GraphError("expm: dimension mismatch");
    }
    RVector coeffs = eigenvectors_.transpose() * v;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::exp(eigenvalues_[k] * t);
    }
    return eigenvectors_ * coeffs;
}

} // namespace qwalk
