#ifndef QWALK_LINALG_HPP
#define QWALK_LINALG_HPP

#include <complex>

#include <Eigen/Core>

namespace qwalk {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// ||M - M'||_max
double hermiticity_defect(const CMatrix& m);

// ||M'M - I||_max
double unitarity_defect(const CMatrix& m);

// |<u|v>|
double fidelity(const CVector& u, const CVector& v);

// e^{-iHt} v for Hermitian H, via full spectral decomposition. Exact to
// roundoff at desk scale; this is the reference every time-stepped engine
// is judged against. Rejects non-Hermitian input (defect > 1e-12).
CVector expm_apply_hermitian(const CMatrix& h, double t, const CVector& v);

// Cached spectral form of a Hermitian matrix, for repeated times.
class HermitianEigensystem {
public:
    explicit HermitianEigensystem(const CMatrix& h);

    CVector apply_exp(double t, const CVector& v) const; // e^{-iHt} v
    const RVector& eigenvalues() const { return eigenvalues_; }
    const CMatrix& eigenvectors() const { return eigenvectors_; }

private:
    RVector eigenvalues_;
    CMatrix eigenvectors_;
};

// Same machinery for a real symmetric generator: e^{Mt} v. Drives the
// classical master equation, where the exponent is real.
class SymmetricEigensystem {
public:
    explicit SymmetricEigensystem(const RMatrix& m);

    RVector apply_exp(double t, const RVector& v) const;
    const RVector& eigenvalues() const { return eigenvalues_; }

private:
    RVector eigenvalues_;
    RMatrix eigenvectors_;
};

} // namespace qwalk

#endif
