#pragma once

#include <vector>

#include "ffhyp/cyclotomic.hpp"
#include "ffhyp/field.hpp"

namespace ffhyp {

// Multiplicative character omega^l relative to the field's fixed
// generator g, where omega(g) = zeta_{q-1}. Every character, including
// the trivial one, takes the value 0 at 0.
class Character {
public:
    Character(const FieldTable& F, int64_t l)
        : F_(&F), l_(static_cast<int32_t>(((l % F.n()) + F.n()) % F.n())) {}

    const FieldTable& field() const { return *F_; }
    int32_t index() const { return l_; }
    bool is_trivial() const { return l_ == 0; }

    // Exponent of zeta_{q-1} at x, or -1 when the value is 0 (x = 0).
    int32_t value_exp(Fe x) const {
        if (x.v == 0) return -1;
        return static_cast<int32_t>((static_cast<int64_t>(l_) * F_->dlog(x)) % F_->n());
    }
    CycInt operator()(Fe x) const {
        if (x.v == 0) return CycInt(F_->n());
        return CycInt::root(F_->n(), value_exp(x));
    }

    Character conj() const { return Character(*F_, -l_); }
    Character operator*(const Character& o) const { return Character(*F_, l_ + o.l_); }

    // Value at -1: always +1 or -1 for q odd.
    int sign_at_minus_one() const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.F_ == b.F_ && a.l_ == b.l_;
    }

private:
    const FieldTable* F_;
    int32_t l_;
};

inline Character trivial_character(const FieldTable& F) { return Character(F, 0); }
inline Character omega(const FieldTable& F) { return Character(F, 1); }
// The quadratic character (q odd, so (q-1)/2 is an integer).
inline Character legendre_character(const FieldTable& F) { return Character(F, F.n() / 2); }

// sum over x in F_q of chi(x): q-1 for the trivial character, else 0.
CycInt sum_over_field(const Character& chi);

// sum over all characters of chi(x): q-1 at x = 1, else 0. Accepts
// x = 0 (all terms vanish, so the sum is 0).
CycInt sum_over_characters(const FieldTable& F, Fe x);

// Multiplicative Fourier transform: fhat(nu) = sum_l f(l) conj(nu)(l).
// Input indexed by element canonical index (size q), output by character
// index (size q-1).
std::vector<CycInt> fourier_transform(const FieldTable& F, const std::vector<CycInt>& f);

}  // namespace ffhyp
