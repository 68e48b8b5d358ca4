#include "ffhyp/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffhyp {

bool is_prime(int64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (int64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

std::vector<int64_t> prime_factors(int64_t m) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= m; d = d == 2 ? 3 : d + 2) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

using Poly = std::vector<int32_t>;  // coefficients mod p, low degree first

int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// a mod m, m monic; in-place coefficient arithmetic mod p
Poly pmod(Poly a, const Poly& m, int64_t p) {
    const int dm = deg(m);
    for (int i = deg(a); i >= dm; --i) {
        int64_t c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int k = 0; k <= dm; ++k) {
            int64_t v = a[static_cast<size_t>(i - dm + k)] - c * m[static_cast<size_t>(k)] % p;
            a[static_cast<size_t>(i - dm + k)] = static_cast<int32_t>(((v % p) + p) % p);
        }
    }
    a.resize(static_cast<size_t>(dm > 0 ? dm : 1), 0);
    return a;
}

Poly pmul(const Poly& a, const Poly& b, int64_t p) {
    const int da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return Poly{0};
    Poly out(static_cast<size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int64_t v = out[static_cast<size_t>(i + j)] +
                        static_cast<int64_t>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
            out[static_cast<size_t>(i + j)] = static_cast<int32_t>(v % p);
        }
    }
    return out;
}

bool divides(const Poly& d, const Poly& a, int64_t p) {
    // d monic
    Poly rem = pmod(a, d, p);
    return deg(rem) < 0;
}

Poly poly_of_index(int64_t idx, int64_t p, int64_t len) {
    Poly c(static_cast<size_t>(len), 0);
    for (int64_t i = 0; i < len; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int32_t>(idx % p);
        idx /= p;
    }
    return c;
}

}  // namespace

std::vector<int32_t> lex_smallest_irreducible(int64_t p, int64_t r) {
    if (r == 1) return {0, 1};  // t
    int64_t count = 1;
    for (int64_t i = 0; i < r; ++i) count *= p;
    // Lex order on (a_0, .., a_{r-1}) with a_0 most significant.
    for (int64_t m = 0; m < count; ++m) {
        Poly f(static_cast<size_t>(r + 1), 0);
        int64_t rem = m;
        for (int64_t i = 0; i < r; ++i) {
            int64_t pw = 1;
            for (int64_t k = 0; k < r - 1 - i; ++k) pw *= p;
            f[static_cast<size_t>(i)] = static_cast<int32_t>((rem / pw) % p);
            rem %= pw;
        }
        f[static_cast<size_t>(r)] = 1;
        if (f[0] == 0) continue;  // t | f
        // f of degree r is reducible iff some monic divisor of degree in [1, r/2] exists
        bool irred = true;
        for (int64_t d = 1; irred && 2 * d <= r; ++d) {
            int64_t dn = 1;
            for (int64_t k = 0; k < d; ++k) dn *= p;
            for (int64_t gi = 0; gi < dn; ++gi) {
                Poly g = poly_of_index(gi, p, d + 1);
                g[static_cast<size_t>(d)] = 1;
                if (divides(g, f, p)) {
                    irred = false;
                    break;
                }
            }
        }
        if (irred) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldTable FieldTable::make(int64_t p, int64_t r) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("degree r must be >= 1, got " + std::to_string(r));
    int64_t q = 1;
    for (int64_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kFieldCap)
            throw std::invalid_argument("q = " + std::to_string(p) + "^" + std::to_string(r) +
                                        " exceeds the field cap " + std::to_string(kFieldCap));
    }

    FieldTable F;
    F.pp_ = PrimePower{p, r, q};
    F.modulus_ = lex_smallest_irreducible(p, r);
    F.qm1_primes_ = prime_factors(q - 1);

    // Generator: first element (canonical order) of multiplicative order q-1.
    auto mul_idx = [&](int64_t a, int64_t b) {
        Poly pa = poly_of_index(a, p, r), pb = poly_of_index(b, p, r);
        Poly pr = pmod(pmul(pa, pb, p), F.modulus_, p);
        int64_t idx = 0, pw = 1;
        for (int64_t i = 0; i < r; ++i) {
            idx += (i < static_cast<int64_t>(pr.size()) ? pr[static_cast<size_t>(i)] : 0) * pw;
            pw *= p;
        }
        return idx;
    };
    auto pow_idx = [&](int64_t a, int64_t e) {
        int64_t acc = 1, base = a;
        while (e > 0) {
            if (e & 1) acc = mul_idx(acc, base);
            base = mul_idx(base, base);
            e >>= 1;
        }
        return acc;
    };
    int64_t g = -1;
    for (int64_t cand = 1; cand < q; ++cand) {
        bool full_order = true;
        for (int64_t ell : F.qm1_primes_) {
            if (pow_idx(cand, (q - 1) / ell) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) {
            g = cand;
            break;
        }
    }
    F.g_ = Fe{static_cast<int32_t>(g)};

    F.exp_.resize(static_cast<size_t>(q - 1));
    F.dlog_.assign(static_cast<size_t>(q), -1);
    int64_t acc = 1;
    for (int64_t m = 0; m < q - 1; ++m) {
        F.exp_[static_cast<size_t>(m)] = Fe{static_cast<int32_t>(acc)};
        F.dlog_[static_cast<size_t>(acc)] = static_cast<int32_t>(m);
        acc = mul_idx(acc, g);
    }
    F.verify();
    return F;
}

void FieldTable::verify() const {
    const int64_t q = pp_.q;
    if (static_cast<int64_t>(dlog_.size()) != q || static_cast<int64_t>(exp_.size()) != q - 1)
        throw std::runtime_error("field table: wrong table sizes");
    if (dlog_[0] != -1) throw std::runtime_error("field table: dlog defined at 0");
    std::vector<bool> seen(static_cast<size_t>(q), false);
    for (int64_t m = 0; m < q - 1; ++m) {
        Fe x = exp_[static_cast<size_t>(m)];
        if (x.v <= 0 || x.v >= q || seen[static_cast<size_t>(x.v)])
            throw std::runtime_error("field table: exp table is not a bijection");
        seen[static_cast<size_t>(x.v)] = true;
        if (dlog_[static_cast<size_t>(x.v)] != m)
            throw std::runtime_error("field table: dlog(g^m) != m");
    }
    if (exp_[0].v != 1) throw std::runtime_error("field table: g^0 != 1");
    for (int64_t ell : prime_factors(q - 1))
        if (exp_.size() > 1 && pow(g_, (q - 1) / ell).v == 1)
            throw std::runtime_error("field table: generator order below q-1");
    if (deg(modulus_) != pp_.r || modulus_[static_cast<size_t>(pp_.r)] != 1)
        throw std::runtime_error("field table: modulus not monic of degree r");
}

Fe FieldTable::element(int64_t index) const {
    if (index < 0 || index >= pp_.q) throw std::out_of_range("element index out of range");
    return Fe{static_cast<int32_t>(index)};
}

std::vector<int32_t> FieldTable::coeffs(Fe x) const {
    return poly_of_index(x.v, pp_.p, pp_.r);
}

Fe FieldTable::from_coeffs(const std::vector<int32_t>& c) const {
    int64_t idx = 0, pw = 1;
    for (int64_t i = 0; i < pp_.r; ++i) {
        int64_t ci = i < static_cast<int64_t>(c.size()) ? c[static_cast<size_t>(i)] : 0;
        ci = ((ci % pp_.p) + pp_.p) % pp_.p;
        idx += ci * pw;
        pw *= pp_.p;
    }
    return Fe{static_cast<int32_t>(idx)};
}

Fe FieldTable::add(Fe a, Fe b) const {
    int64_t out = 0, pw = 1, av = a.v, bv = b.v;
    for (int64_t i = 0; i < pp_.r; ++i) {
        out += ((av + bv) % pp_.p) * pw;
        av /= pp_.p;
        bv /= pp_.p;
        pw *= pp_.p;
    }
    return Fe{static_cast<int32_t>(out)};
}

Fe FieldTable::neg(Fe a) const {
    int64_t out = 0, pw = 1, av = a.v;
    for (int64_t i = 0; i < pp_.r; ++i) {
        out += ((pp_.p - av % pp_.p) % pp_.p) * pw;
        av /= pp_.p;
        pw *= pp_.p;
    }
    return Fe{static_cast<int32_t>(out)};
}

Fe FieldTable::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldTable::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    int64_t e = dlog_[static_cast<size_t>(a.v)] + dlog_[static_cast<size_t>(b.v)];
    return exp_[static_cast<size_t>(e % (pp_.q - 1))];
}

Fe FieldTable::inv(Fe a) const {
    if (a.v == 0) throw std::invalid_argument("inverse of 0 in F_q");
    int64_t e = pp_.q - 1 - dlog_[static_cast<size_t>(a.v)];
    return exp_[static_cast<size_t>(e % (pp_.q - 1))];
}

Fe FieldTable::pow(Fe a, int64_t e) const {
    if (a.v == 0) {
        if (e <= 0) throw std::invalid_argument("0^e with e <= 0");
        return Fe{0};
    }
    int64_t n = pp_.q - 1;
    int64_t ex = (dlog_[static_cast<size_t>(a.v)] % n) * (e % n) % n;
    ex = ((ex % n) + n) % n;
    return exp_[static_cast<size_t>(ex)];
}

int32_t FieldTable::dlog(Fe x) const {
    if (x.v == 0) throw std::invalid_argument("dlog of 0");
    return dlog_[static_cast<size_t>(x.v)];
}

Fe FieldTable::exp(int64_t e) const {
    int64_t n = pp_.q - 1;
    return exp_[static_cast<size_t>(((e % n) + n) % n)];
}

std::string FieldTable::to_string(Fe x) const {
    if (pp_.r == 1) return std::to_string(x.v);
    auto c = coeffs(x);
    std::string s;
    for (int64_t i = 0; i < pp_.r; ++i) {
        if (c[static_cast<size_t>(i)] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[0]);
        } else {
            if (c[static_cast<size_t>(i)] != 1) s += std::to_string(c[static_cast<size_t>(i)]);
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool operator==(const FieldTable& a, const FieldTable& b) {
    return a.pp_.p == b.pp_.p && a.pp_.r == b.pp_.r && a.modulus_ == b.modulus_ &&
           a.g_ == b.g_ && a.dlog_ == b.dlog_ && a.exp_ == b.exp_;
}

}  // namespace ffhyp
