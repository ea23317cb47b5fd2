#ifndef READCHAN_TWODIM_HPP
#define READCHAN_TWODIM_HPP

#include <string>
#include <vector>

#include "readchan/core.hpp"
#include "readchan/enumerate.hpp"
#include "readchan/spectral.hpp"

namespace readchan {

// Axis 1 = rows, axis 2 = columns.
struct Params2D {
    ChannelParams p1;
    ChannelParams p2;
    int q = 2;
};

// Entry alpha -> the q1 x q2 row-major folding of 0^(q1*q2-alpha) 1^alpha,
// blocks placed where the entries were; requires q = q1*q2 + 1.
BitMatrix mu_2d(const BitMatrix& B, int q1, int q2);

// Each q1 x q2 block collapses to its weight (the map is written lambda in
// the source material; the name avoids the eigenvalue lambda).
BitMatrix lambda_2d(const BitMatrix& B, int q1, int q2);

// Stacks column-folded 1-D codewords into n1 x n2 matrices: strip k1 of
// delta1 rows starts at row (k1-1)*delta1 + ell1 + 1, the top ell1-delta1
// rows are zero, and every choice sequence from C^(t1+1) yields a matrix.
// C must be a (delta1*ell2, delta1*delta2)-read code of length n2*delta1.
std::vector<BitMatrix> fold_1d_code_to_2d(const std::vector<Word>& C, const Params2D& p,
                                          int n1, unsigned long long budget = 1ull << 24);

// Dispatch over the column-axis regimes, each reduced to a 1-D capacity
// (q-ary units):
//   delta2 = 1      -> C_q(ell1, delta1)
//   delta2 >= ell2  -> (ell2/delta2) * C_q(ell2*ell1, ell2*delta1)
//   delta2 | ell2   -> C_q(delta2*ell1, delta2*delta1)
//   otherwise       -> {lower C_q(delta1*ell2, delta1*delta2), upper C_q(ell1, delta1)}
// Bound kinds compose conservatively (a lower bound keeps the 1-D pair's
// lower member, an upper keeps its upper member).
CapacityResult capacity_2d(const Params2D& p);

struct IdentityCheck {
    std::string name;
    unsigned long long lhs = 0;
    unsigned long long rhs = 0;
    bool is_inequality = false;  // pass means lhs <= rhs
    bool pass = false;
};

struct EqualityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

// Brute-force finite-size identities on an n1 x n2 grid:
//  - column-step collapse: A(n1,n2,(l1,l2),(d1,d2)) = A_{d2+1}(n1,t2,(l1,l2/d2),(d1,1))
//    (when d2 | l2 and d2 | n2),
//  - alphabet folding: A_q(n1,n2,...) = A_2(q1*n1, q2*n2, scaled) with
//    q1 = q-1, q2 = 1 (when q > 2),
//  - step refinement: A(...,(d1,d2)) <= A(...,(d1,1)).
EqualityReport finite_equalities_check(const Params2D& p, int n1, int n2,
                                       const EnumOptions& opts = {});

std::string to_json(const EqualityReport& report);

}  // namespace readchan

#endif
