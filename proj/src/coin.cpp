#include "qwalk/coin.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kUnitaryTol = 1e-12;

void require_unitary(const CMatrix& u, const char* what) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw GraphError(std::string(what) + ": matrix must be square");
    }
    if (unitarity_defect(u) > kUnitaryTol) {
        throw GraphError(std::string(what) + ": matrix is not unitary");
    }
}

// in-place Hadamard butterfly over the qubits of y; cheaper than the dense
// block multiply and exact on permuted pairs
void apply_hadamard_blocks(CoinedState& s) {
    const int dim = s.register_dim();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int x = 0; x < dim; ++x) {
        for (int b = 0; b < 2; ++b) {
            for (int bit = 1; bit < dim; bit <<= 1) {
                for (int y = 0; y < dim; ++y) {
                    if ((y & bit) == 0) {
                        const auto i0 = s.index(x, y, b);
                        const auto i1 = s.index(x, y | bit, b);
                        const Complex a = s.amps[i0];
                        const Complex c = s.amps[i1];
                        s.amps[i0] = (a + c) * inv_sqrt2;
                        s.amps[i1] = (a - c) * inv_sqrt2;
                    }
                }
            }
        }
    }
}

void apply_grover_blocks(CoinedState& s) {
    const int dim = s.register_dim();
    for (int x = 0; x < dim; ++x) {
        for (int b = 0; b < 2; ++b) {
            Complex mean = 0.0;
            for (int y = 0; y < dim; ++y) {
                mean += s.amps[s.index(x, y, b)];
            }
            mean /= static_cast<double>(dim);
            for (int y = 0; y < dim; ++y) {
                auto& a = s.amps[s.index(x, y, b)];
                a = 2.0 * mean - a;
            }
        }
    }
}

void apply_matrix_block(CoinedState& s, const CMatrix& u, int x, int b) {
    const int dim = s.register_dim();
    CVector block(dim);
    for (int y = 0; y < dim; ++y) {
        block[y] = s.amps[s.index(x, y, b)];
    }
    block = u * block;
    for (int y = 0; y < dim; ++y) {
        s.amps[s.index(x, y, b)] = block[y];
    }
}

} // namespace

CoinOp CoinOp::hadamard() {
    CoinOp c;
    c.kind_ = Kind::hadamard;
    return c;
}

CoinOp CoinOp::grover() {
    CoinOp c;
    c.kind_ = Kind::grover;
    return c;
}

CoinOp CoinOp::dft() {
    CoinOp c;
    c.kind_ = Kind::dft;
    return c;
}

CoinOp CoinOp::custom(CMatrix u) {
    require_unitary(u, "coin");
    CoinOp c;
    c.kind_ = Kind::custom;
    c.custom_ = std::move(u);
    return c;
}

CoinOp CoinOp::position_conditioned(std::vector<CMatrix> per_x) {
    if (per_x.empty()) {
        throw GraphError("coin: conditioned coin needs at least one unitary");
    }
    for (const auto& u : per_x) {
        require_unitary(u, "coin");
        if (u.rows() != per_x.front().rows()) {
            throw GraphError("coin: conditioned unitaries must share a dimension");
        }
    }
    CoinOp c;
    c.kind_ = Kind::custom;
    c.conditioned_ = true;
    c.per_x_ = std::move(per_x);
    return c;
}

CMatrix CoinOp::matrix(int n) const {
    const int dim = 1 << n;
    switch (kind_) {
    case Kind::hadamard: {
        // H^{(x)n}: entry (j,k) = (-1)^{popcount(j&k)} / sqrt(dim)
        CMatrix m(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                const int sign = std::popcount(static_cast<unsigned>(j & k)) % 2 ? -1 : 1;
                m(j, k) = Complex(sign * scale, 0.0);
            }
        }
        return m;
    }
    case Kind::grover: {
        CMatrix m = CMatrix::Constant(dim, dim, Complex(2.0 / dim, 0.0));
        m -= CMatrix::Identity(dim, dim);
        return m;
    }
    case Kind::dft: {
        CMatrix m(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < dim; ++j) {
            for (int k = 0; k < dim; ++k) {
                const double angle = 2.0 * std::numbers::pi * j * k / dim;
                m(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
            }
        }
        return m;
    }
    case Kind::custom:
        if (conditioned_) {
            throw GraphError("coin: conditioned coin has no single matrix");
        }
        if (custom_.rows() != dim) {
            throw GraphError("coin: custom coin dimension mismatch");
        }
        return custom_;
    }
    throw GraphError("coin: unknown kind");
}

void CoinOp::apply(CoinedState& s) const {
    switch (kind_) {
    case Kind::hadamard:
        apply_hadamard_blocks(s);
        return;
    case Kind::grover:
        apply_grover_blocks(s);
        return;
    case Kind::dft: {
        const CMatrix m = matrix(s.n);
        for (int x = 0; x < s.register_dim(); ++x) {
            for (int b = 0; b < 2; ++b) {
                apply_matrix_block(s, m, x, b);
            }
        }
        return;
    }
    case Kind::custom: {
        const int dim = s.register_dim();
        if (conditioned_) {
            if (per_x_.front().rows() != dim) {
                throw GraphError("coin: conditioned coin dimension mismatch");
            }
            for (int x = 0; x < dim; ++x) {
                for (int b = 0; b < 2; ++b) {
                    if (x < static_cast<int>(per_x_.size())) {
                        apply_matrix_block(s, per_x_[x], x, b);
                    }
                }
            }
            return;
        }
        if (custom_.rows() != dim) {
            throw GraphError("coin: custom coin dimension mismatch");
        }
        for (int x = 0; x < dim; ++x) {
            for (int b = 0; b < 2; ++b) {
                apply_matrix_block(s, custom_, x, b);
            }
        }
        return;
    }
    }
}

CoinOp CoinOp::from_name(const std::string& name) {
    if (name == "hadamard") {
        return hadamard();
    }
    if (name == "grover") {
        return grover();
    }
    if (name == "dft") {
        return dft();
    }
    throw GraphError("coin: unknown coin '" + name + "'");
}

std::string CoinOp::name() const {
    switch (kind_) {
    case Kind::hadamard: return "hadamard";
    case Kind::grover: return "grover";
    case Kind::dft: return "dft";
    case Kind::custom: return conditioned_ ? "conditioned" : "custom";
    }
    return "?";
}

} // namespace qwalk
