#include "ffhyp/characters.hpp"

#include <stdexcept>

namespace ffhyp {

int Character::sign_at_minus_one() const {
    // dlog(-1) = (q-1)/2, so the value is (-1)^l.
    if (F_->q() % 2 == 0) throw std::logic_error("even q");
    int64_t e = (static_cast<int64_t>(l_) * (F_->n() / 2)) % F_->n();
    return e == 0 ? 1 : -1;
}

CycInt sum_over_field(const Character& chi) {
    const FieldTable& F = chi.field();
    CycInt acc(F.n());
    for (int64_t i = 1; i < F.q(); ++i) acc[static_cast<size_t>(chi.value_exp(F.element(i)))] += 1;
    return acc;
}

CycInt sum_over_characters(const FieldTable& F, Fe x) {
    CycInt acc(F.n());
    if (F.is_zero(x)) return acc;  // every chi(0) = 0
    const int64_t d = F.dlog(x);
    for (int64_t l = 0; l < F.n(); ++l) acc[static_cast<size_t>((l * d) % F.n())] += 1;
    return acc;
}

std::vector<CycInt> fourier_transform(const FieldTable& F, const std::vector<CycInt>& f) {
    if (static_cast<int64_t>(f.size()) != F.q())
        throw std::invalid_argument("fourier_transform: f must be total on F_q");
    const int n = F.n();
    std::vector<CycInt> out;
    out.reserve(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        Character nu_bar = Character(F, l).conj();
        CycInt acc(n);
        for (int64_t i = 1; i < F.q(); ++i)
            acc += f[static_cast<size_t>(i)].rotated(nu_bar.value_exp(F.element(i)));
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace ffhyp
