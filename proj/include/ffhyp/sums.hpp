#pragma once

#include <complex>
#include <vector>

#include "ffhyp/characters.hpp"

namespace ffhyp {

// J(A,B) = sum over x in F_q of A(x) B(1-x). Exact, O(q) via the dlog
// table; terms at x = 0 and x = 1 vanish by the chi(0) = 0 convention.
CycInt jacobi(const Character& A, const Character& B);

// Independent float route: direct complex summation.
std::complex<double> jacobi_complex(const Character& A, const Character& B);

// Batched sweep kernel: J(C, A omega^l) for l = 0..q-2 in one pass over x.
std::vector<CycInt> jacobi_row(const Character& C, const Character& A);

// Greene binomial coefficient (A choose B) = B(-1)/q * J(A, conj(B)).
RationalCyc binom(const Character& A, const Character& B);

struct BinomialIdentityReport {
    bool reflect = false;    // (A|B) = (A|A conj(B))
    bool twist = false;      // (A|B) = B(-1) (B conj(A)|B)
    bool conjugate = false;  // (A|B) = conj(AB)(-1) (conj(B)|conj(A))
    bool all() const { return reflect && twist && conjugate; }
};

BinomialIdentityReport binomial_identity_check(const Character& A, const Character& B);

// All (q-1)^2 Jacobi sums of a field, indexed by character index pair.
class JacobiTable {
public:
    static JacobiTable build(const FieldTable& F);

    const FieldTable& field() const { return *F_; }
    const CycInt& at(int64_t a_idx, int64_t b_idx) const;
    const CycInt& at(const Character& A, const Character& B) const {
        return at(A.index(), B.index());
    }

    // (A choose B) through the table.
    RationalCyc binom(const Character& A, const Character& B) const;

    friend bool operator==(const JacobiTable& x, const JacobiTable& y) {
        return x.sums_ == y.sums_;
    }

private:
    friend class JacobiCacheAccess;
    JacobiTable() = default;
    const FieldTable* F_ = nullptr;
    std::vector<CycInt> sums_;  // index a*n + b
};

}  // namespace ffhyp
