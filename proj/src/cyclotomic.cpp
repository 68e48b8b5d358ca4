#include "ffhyp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ffhyp {

int64_t chk_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in cyclotomic arithmetic (cap exceeded)");
    return out;
}

int64_t chk_sub(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in cyclotomic arithmetic (cap exceeded)");
    return out;
}

int64_t chk_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in cyclotomic arithmetic (cap exceeded)");
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<int64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = chk_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<int64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = chk_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<int64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = chk_add(c[i + j], chk_mul(a.c[i], b.c[j]));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::div_exact_monic(const IntPoly& d) const {
    if (d.is_zero() || d.c.back() != 1)
        throw std::invalid_argument("div_exact_monic: divisor must be monic");
    std::vector<int64_t> rem = c;
    const int dd = d.degree();
    const int dq = degree() - dd;
    if (dq < 0) {
        if (!is_zero()) throw std::invalid_argument("div_exact_monic: inexact division");
        return IntPoly();
    }
    std::vector<int64_t> quo(static_cast<size_t>(dq) + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        int64_t f = rem[static_cast<size_t>(i)];
        if (f == 0) continue;
        quo[static_cast<size_t>(i - dd)] = f;
        for (int k = 0; k <= dd; ++k)
            rem[static_cast<size_t>(i - dd + k)] =
                chk_sub(rem[static_cast<size_t>(i - dd + k)], chk_mul(f, d.c[static_cast<size_t>(k)]));
    }
    for (int64_t v : rem)
        if (v != 0) throw std::invalid_argument("div_exact_monic: inexact division");
    return IntPoly(std::move(quo));
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + static_cast<double>(c[i]);
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        int64_t v = coeff(i);
        if (v == 0) continue;
        if (!s.empty()) s += v > 0 ? "+" : "-";
        else if (v < 0) s += "-";
        int64_t av = v > 0 ? v : -v;
        if (av != 1 || i == 0) s += std::to_string(av);
        if (i >= 1) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

std::mutex g_memo_mutex;
std::map<int, IntPoly> g_phi;
std::map<int, std::vector<std::complex<double>>> g_roots;

IntPoly compute_phi(int n, std::map<int, IntPoly>& memo);

const IntPoly& phi_memo(int n, std::map<int, IntPoly>& memo) {
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, compute_phi(n, memo)).first;
    return it->second;
}

IntPoly compute_phi(int n, std::map<int, IntPoly>& memo) {
    std::vector<int64_t> xn(static_cast<size_t>(n) + 1, 0);
    xn[0] = -1;
    xn[static_cast<size_t>(n)] = 1;
    IntPoly num(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = num.div_exact_monic(phi_memo(d, memo));
    return num;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return phi_memo(n, g_phi);
}

const std::vector<std::complex<double>>& unit_roots(int n) {
    if (n < 1) throw std::invalid_argument("unit_roots: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_roots.find(n);
    if (it == g_roots.end()) {
        std::vector<std::complex<double>> v(static_cast<size_t>(n));
        for (int e = 0; e < n; ++e) {
            double t = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
            v[static_cast<size_t>(e)] = {std::cos(t), std::sin(t)};
        }
        it = g_roots.emplace(n, std::move(v)).first;
    }
    return it->second;
}

CycInt CycInt::root(int n, int64_t e) {
    CycInt a(n);
    a.c_[static_cast<size_t>(((e % n) + n) % n)] = 1;
    return a;
}

void CycInt::require_same(const CycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt order mismatch: " + std::to_string(n_) +
                                                " vs " + std::to_string(o.n_));
}

CycInt CycInt::operator+(const CycInt& o) const {
    require_same(o);
    CycInt out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = chk_add(c_[i], o.c_[i]);
    return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = chk_add(c_[i], o.c_[i]);
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    require_same(o);
    CycInt out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = chk_sub(c_[i], o.c_[i]);
    return out;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = chk_sub(c_[i], o.c_[i]);
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = chk_sub(0, c_[i]);
    return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
    require_same(o);
    CycInt out(n_);
    const size_t n = static_cast<size_t>(n_);
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            size_t k = i + j;
            if (k >= n) k -= n;
            out.c_[k] = chk_add(out.c_[k], chk_mul(c_[i], o.c_[j]));
        }
    }
    return out;
}

CycInt CycInt::scaled(int64_t k) const {
    CycInt out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = chk_mul(c_[i], k);
    return out;
}

CycInt CycInt::rotated(int64_t e) const {
    const int64_t n = n_;
    int64_t s = ((e % n) + n) % n;
    CycInt out(n_);
    for (int64_t i = 0; i < n; ++i) {
        int64_t k = i + s;
        if (k >= n) k -= n;
        out.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(i)];
    }
    return out;
}

CycInt CycInt::conj() const {
    CycInt out(n_);
    const int64_t n = n_;
    for (int64_t i = 0; i < n; ++i) out.c_[static_cast<size_t>((n - i) % n)] = c_[static_cast<size_t>(i)];
    return out;
}

std::vector<int64_t> CycInt::canonical() const {
    const IntPoly& phi = cyclotomic_polynomial(n_);
    const int dphi = phi.degree();
    std::vector<int64_t> rem = c_;
    for (int i = n_ - 1; i >= dphi; --i) {
        int64_t f = rem[static_cast<size_t>(i)];
        if (f == 0) continue;
        for (int k = 0; k <= dphi; ++k)
            rem[static_cast<size_t>(i - dphi + k)] =
                chk_sub(rem[static_cast<size_t>(i - dphi + k)], chk_mul(f, phi.c[static_cast<size_t>(k)]));
    }
    rem.resize(static_cast<size_t>(dphi));
    return rem;
}

bool CycInt::is_zero() const {
    for (int64_t v : canonical())
        if (v != 0) return false;
    return true;
}

bool CycInt::equals(const CycInt& o) const {
    require_same(o);
    return (*this - o).is_zero();
}

bool CycInt::as_integer(int64_t* out) const {
    std::vector<int64_t> can = canonical();
    for (size_t i = 1; i < can.size(); ++i)
        if (can[i] != 0) return false;
    if (out) *out = can.empty() ? 0 : can[0];
    return true;
}

CycInt CycInt::exact_div_int(int64_t k) const {
    if (k <= 0) throw std::invalid_argument("exact_div_int: k must be positive");
    std::vector<int64_t> can = canonical();
    CycInt out(n_);
    for (size_t i = 0; i < can.size(); ++i) {
        if (can[i] % k != 0)
            throw std::domain_error("exact_div_int: coefficient " + std::to_string(can[i]) +
                                    " not divisible by " + std::to_string(k));
        out.c_[i] = can[i] / k;
    }
    return out;
}

std::complex<double> CycInt::embed() const {
    const auto& roots = unit_roots(n_);
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) acc += static_cast<double>(c_[i]) * roots[i];
    return acc;
}

std::string CycInt::to_string() const {
    std::vector<int64_t> can = canonical();
    std::string s;
    for (size_t i = 0; i < can.size(); ++i) {
        int64_t v = can[i];
        if (v == 0) continue;
        if (!s.empty()) s += v > 0 ? "+" : "-";
        else if (v < 0) s += "-";
        int64_t av = v > 0 ? v : -v;
        if (av != 1 || i == 0) s += std::to_string(av);
        if (i >= 1) {
            s += "z";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

RationalCyc::RationalCyc(CycInt n, int64_t d) : num(std::move(n)), den(d) {
    if (den < 1) throw std::invalid_argument("RationalCyc: denominator must be >= 1");
}

RationalCyc RationalCyc::operator+(const RationalCyc& o) const {
    return {num.scaled(o.den) + o.num.scaled(den), chk_mul(den, o.den)};
}

RationalCyc RationalCyc::operator-(const RationalCyc& o) const {
    return {num.scaled(o.den) - o.num.scaled(den), chk_mul(den, o.den)};
}

RationalCyc RationalCyc::operator*(const RationalCyc& o) const {
    return {num * o.num, chk_mul(den, o.den)};
}

bool RationalCyc::equals(const RationalCyc& o) const {
    return num.scaled(o.den).equals(o.num.scaled(den));
}

std::string RationalCyc::to_string() const {
    std::string s = num.to_string();
    if (den != 1) {
        bool atom = s.find('+') == std::string::npos && s.find('-', 1) == std::string::npos;
        s = (atom ? s : "(" + s + ")") + "/" + std::to_string(den);
    }
    return s;
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
    if (c.empty() || o.c.empty()) return CycPoly();
    const int n = c[0].num.n();
    CycPoly out;
    out.c.assign(c.size() + o.c.size() - 1, RationalCyc::integer(n, 0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            out.c[i + j] = out.c[i + j] + c[i] * o.c[j];
    return out;
}

bool CycPoly::equals(const CycPoly& o) const {
    size_t m = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < m; ++i) {
        if (i >= c.size()) {
            if (!o.c[i].is_zero()) return false;
        } else if (i >= o.c.size()) {
            if (!c[i].is_zero()) return false;
        } else if (!c[i].equals(o.c[i])) {
            return false;
        }
    }
    return true;
}

std::complex<double> CycPoly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].embed();
    return acc;
}

std::string CycPoly::to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const auto& v = c[static_cast<size_t>(i)];
        if (v.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + v.to_string() + ")";
        if (i >= 1) {
            s += "*x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace ffhyp
