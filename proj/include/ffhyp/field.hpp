#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffhyp {

// Element of F_q, identified by its canonical index: the coefficient
// vector of the reduced polynomial representative read as a base-p
// integer (constant coefficient = least significant digit).
struct Fe {
    int32_t v = 0;
    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

struct PrimePower {
    int64_t p = 0;
    int64_t r = 0;
    int64_t q = 0;
};

// Hard upper bound on q for any field construction.
inline constexpr int64_t kFieldCap = 10000;

bool is_prime(int64_t m);
std::vector<int64_t> prime_factors(int64_t m);  // distinct primes, ascending

// Enumerates monic degree-r polynomials over F_p low-degree-first and
// returns the first irreducible one (coefficients low degree first,
// length r+1, leading 1).
std::vector<int32_t> lex_smallest_irreducible(int64_t p, int64_t r);

// F_q = F_p[t]/(modulus) with full exp/dlog tables for the fixed
// generator g. Immutable after construction; shareable across threads.
class FieldTable {
public:
    static FieldTable make(int64_t p, int64_t r);

    int64_t p() const { return pp_.p; }
    int64_t r() const { return pp_.r; }
    int64_t q() const { return pp_.q; }
    // Order of F_q^x = order of the root of unity for character values.
    int32_t n() const { return static_cast<int32_t>(pp_.q - 1); }
    const PrimePower& prime_power() const { return pp_; }
    const std::vector<int32_t>& modulus() const { return modulus_; }
    Fe generator() const { return g_; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe element(int64_t index) const;
    bool is_zero(Fe x) const { return x.v == 0; }

    std::vector<int32_t> coeffs(Fe x) const;              // length r
    Fe from_coeffs(const std::vector<int32_t>& c) const;  // reduces mod p

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // rejects 0
    Fe pow(Fe a, int64_t e) const;
    Fe minus_one() const { return neg(one()); }

    // dlog(x) = the m in [0, q-1) with g^m = x; rejects 0.
    int32_t dlog(Fe x) const;
    Fe exp(int64_t e) const;  // g^(e mod (q-1))

    const std::vector<int64_t>& qm1_prime_factors() const { return qm1_primes_; }

    // String form of an element, e.g. "2+t" or "3" (r = 1 prints residues).
    std::string to_string(Fe x) const;

    friend bool operator==(const FieldTable& a, const FieldTable& b);

private:
    FieldTable() = default;
    friend class FieldCacheAccess;  // cache loader; re-verifies invariants

    PrimePower pp_;
    std::vector<int32_t> modulus_;  // monic, length r+1, low degree first
    Fe g_{0};
    std::vector<int32_t> dlog_;     // size q, dlog_[0] = -1
    std::vector<Fe> exp_;           // size q-1, exp_[m] = g^m
    std::vector<int64_t> qm1_primes_;

    void build_tables();  // from (pp_, modulus_, g_)
    void verify() const;  // full invariant check; throws on violation
};

}  // namespace ffhyp
