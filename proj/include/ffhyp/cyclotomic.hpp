#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ffhyp {

// Overflow-checked int64 helpers. Coefficient growth is bounded by the
// configured caps; any overflow is a hard error, never silent wraparound.
int64_t chk_add(int64_t a, int64_t b);
int64_t chk_sub(int64_t a, int64_t b);
int64_t chk_mul(int64_t a, int64_t b);

// Univariate polynomial over Z, low degree first. Zero polynomial = {}.
struct IntPoly {
    std::vector<int64_t> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<int64_t> coeffs) : c(std::move(coeffs)) { normalize(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    // Exact division by a monic divisor; throws if a remainder survives.
    IntPoly div_exact_monic(const IntPoly& d) const;

    std::complex<double> eval(std::complex<double> x) const;
    std::string to_string(const std::string& var = "x") const;
};

// Phi_n, computed by dividing x^n - 1 by Phi_d over all proper divisors
// d | n. Memoized; thread-safe.
const IntPoly& cyclotomic_polynomial(int n);

// exp(2*pi*i*e/n) for e = 0..n-1. Memoized; thread-safe.
const std::vector<std::complex<double>>& unit_roots(int n);

// Element of Z[zeta_n] as a group-ring vector: sum_e c[e] * zeta^e with
// zeta^n = 1. Not kept reduced; equality goes through the canonical form
// (remainder mod Phi_n).
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(int n) : n_(n), c_(static_cast<size_t>(n), 0) {}

    static CycInt integer(int n, int64_t v) {
        CycInt a(n);
        a.c_[0] = v;
        return a;
    }
    static CycInt root(int n, int64_t e);  // zeta^(e mod n)

    int n() const { return n_; }
    const std::vector<int64_t>& raw() const { return c_; }
    int64_t& operator[](size_t i) { return c_[i]; }
    int64_t operator[](size_t i) const { return c_[i]; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;  // cyclic convolution
    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);

    CycInt scaled(int64_t k) const;
    CycInt rotated(int64_t e) const;  // * zeta^e
    CycInt conj() const;              // index map e -> -e mod n

    // Remainder of sum c[e] x^e modulo Phi_n; length phi(n). The unique
    // Z-basis form: two CycInt are equal iff canonical forms coincide.
    std::vector<int64_t> canonical() const;
    bool is_zero() const;
    bool equals(const CycInt& o) const;
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.equals(b); }

    // Is the element a rational integer? If so, writes it to *out.
    bool as_integer(int64_t* out) const;

    // Quotient by k in Z[zeta_n]; every canonical coefficient must be
    // divisible by k, otherwise a hard error (caller bug).
    CycInt exact_div_int(int64_t k) const;

    std::complex<double> embed() const;  // evaluate at zeta = exp(2*pi*i/n)

    std::string to_string() const;  // canonical form, e.g. "2-z^3"

private:
    int n_ = 0;
    std::vector<int64_t> c_;
    void require_same(const CycInt& o) const;
};

// num/den with den a positive rational integer. Denominators are never
// reduced; equality is cross-multiplied CycInt equality.
struct RationalCyc {
    CycInt num;
    int64_t den = 1;

    RationalCyc() = default;
    RationalCyc(CycInt n, int64_t d);
    static RationalCyc integer(int n, int64_t v) { return {CycInt::integer(n, v), 1}; }

    RationalCyc operator+(const RationalCyc& o) const;
    RationalCyc operator-(const RationalCyc& o) const;
    RationalCyc operator*(const RationalCyc& o) const;
    bool equals(const RationalCyc& o) const;
    friend bool operator==(const RationalCyc& a, const RationalCyc& b) { return a.equals(b); }
    bool is_zero() const { return num.is_zero(); }

    std::complex<double> embed() const { return num.embed() / static_cast<double>(den); }
    std::string to_string() const;
};

// Polynomial with RationalCyc coefficients, low degree first.
struct CycPoly {
    std::vector<RationalCyc> c;

    CycPoly() = default;
    static CycPoly constant(RationalCyc v) { return CycPoly{{std::move(v)}}; }
    static CycPoly one(int n) { return constant(RationalCyc::integer(n, 1)); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    CycPoly operator*(const CycPoly& o) const;
    bool equals(const CycPoly& o) const;
    friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.equals(b); }

    std::complex<double> eval(std::complex<double> x) const;
    std::string to_string() const;
};

}  // namespace ffhyp
