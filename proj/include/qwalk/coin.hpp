#ifndef QWALK_COIN_HPP
#define QWALK_COIN_HPP

#include <string>
#include <vector>

#include "qwalk/coined_state.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

// The quantum coin toss C on the y register, identity on x and the flag.
// hadamard is the default (a Hadamard on each qubit of y); grover is the
// diffusion 2|s><s| - I; dft the discrete Fourier coin. Custom unitaries
// and per-position conditioned coins are checked for unitarity (defect
// <= 1e-12) at construction.
class CoinOp {
public:
    enum class Kind { hadamard, grover, dft, custom };

    static CoinOp hadamard();
    static CoinOp grover();
    static CoinOp dft();
    static CoinOp custom(CMatrix u);
    // one unitary per position x < per_x.size(); identity for larger x
    static CoinOp position_conditioned(std::vector<CMatrix> per_x);

    Kind kind() const { return kind_; }
    bool is_position_conditioned() const { return conditioned_; }

    // coin unitary on the y register; applies in place
    void apply(CoinedState& s) const;

    // dense 2^n x 2^n coin matrix, for verification paths
    CMatrix matrix(int n) const;

    static CoinOp from_name(const std::string& name);
    std::string name() const;

private:
    CoinOp() = default;

    Kind kind_ = Kind::hadamard;
    bool conditioned_ = false;
    CMatrix custom_;
    std::vector<CMatrix> per_x_;
};

} // namespace qwalk

#endif
