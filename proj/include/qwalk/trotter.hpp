#ifndef QWALK_TROTTER_HPP
#define QWALK_TROTTER_HPP

#include <functional>

#include "qwalk/coined_state.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk {

// The product can interleave colors within each slice (the Lie product
// formula reading, first-order error O(1/j)) or raise each color factor
// to the j-th power before moving on (the product as typeset, which
// collapses to a single slice since each factor's j-th power recombines
// exactly). Both are exposed; interleaved is the default and the one the
// convergence checks use.
enum class TrotterOrdering { interleaved, per_color_power };

TrotterOrdering ordering_from_name(const std::string& name);
std::string ordering_name(TrotterOrdering o);

struct TrotterPlan {
    double gamma = 1.0;
    double t = 0.0;
    int slices = 1; // j
    TrotterOrdering ordering = TrotterOrdering::interleaved;
};

// V_c: |x,z,b> -> |x, z^y_c(x), b> with y_c(x) = (c-x) mod N. Writes the
// color-c neighbor into the second register; its own inverse.
void v_c_apply(CoinedState& s, const Graph& g, int c);

// e^{-i tau T} where T swaps the registers on flag-1 states and kills
// flag-0 states. Applied analytically: identity on the b=0 block; on b=1
// each off-diagonal pair {|x,y>,|y,x>} rotates by (cos tau, -i sin tau)
// and diagonal |x,x> picks up e^{-i tau}.
void t_exp_apply(CoinedState& s, double tau);

// One color factor V_c O e^{-i tau_gamma T} O V_c (V_c first). Starting
// in the |.,0,0> subspace the output is back in it exactly: the second
// oracle call uncomputes the flag via A_xy = A_yx and the closing V_c
// erases the register via y_c(y_c(x)) = x. Two quantum calls.
void color_factor_apply(CoinedState& s, const Graph& g, int c, double tau_gamma,
                        OracleCounter& ctr);

// The discretized continuous walk from |x0,0,0>. Interleaved ordering
// runs j slices of all N color factors at tau = gamma*t/j; per-color
// ordering runs each color's factor j times before the next color.
// Exactly 2Nj quantum calls either way. on_slice, when given, sees the
// state after each interleaved slice (1-based); the per-color ordering
// has no time-ordered intermediate states, so it reports none.
CoinedState trotter_run(const Graph& g, int x0, const TrotterPlan& plan, OracleCounter& ctr,
                        const std::function<void(int, const CoinedState&)>& on_slice = {});

// The same evolution with identity V_{N-1}V_{N-1} inserted at the start
// and the V pairs regrouped across neighboring factors, so each inner
// factor reads O e^{-i tau T} O V_c V_{c-1 mod N}. Algebraically equal to
// the interleaved product; exists to check that regrouping is an identity.
CoinedState trotter_run_regrouped(const Graph& g, int x0, const TrotterPlan& plan,
                                  OracleCounter& ctr);

// Dense H = gamma sum_c V_c O T O V_c over the full register space, for
// desk-scale verification (N <= 8): Hermitian, restriction to |.,0,0>
// equals gamma A, and the subspace is preserved.
CMatrix build_hamiltonian_dense(const Graph& g, double gamma);

} // namespace qwalk

#endif
