#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace superquant {

using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "a" or "a/b" with optional sign; rejects anything else (no floats).
Rat parse_rational(const std::string& s);
std::string rational_to_string(const Rat& r);

/// Canonical a/b (mpq_class's two-argument constructor does not reduce).
inline Rat frac(long a, long b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

/// Element of the quartic number field Q(i, sqrt2), stored as
/// a + b*i + c*sqrt2 + d*i*sqrt2 with rational a,b,c,d.
struct CNum {
    Rat a, b, c, d;

    CNum() : a(0), b(0), c(0), d(0) {}
    CNum(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    static CNum of(long v) { return CNum(Rat(v), 0, 0, 0); }
    static CNum of(Rat v) {
        // mpq_class(num, den) does not reduce; keep the entry point canonical
        v.canonicalize();
        return CNum(std::move(v), 0, 0, 0);
    }
    static CNum i() { return CNum(0, 1, 0, 0); }
    static CNum sqrt2() { return CNum(0, 0, 1, 0); }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_one() const { return a == 1 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    CNum operator-() const { return CNum(-a, -b, -c, -d); }
    CNum operator+(const CNum& o) const { return CNum(a + o.a, b + o.b, c + o.c, d + o.d); }
    CNum operator-(const CNum& o) const { return CNum(a - o.a, b - o.b, c - o.c, d - o.d); }
    CNum operator*(const CNum& o) const;
    CNum inv() const;  // throws on zero
    CNum conj_i() const { return CNum(a, -b, c, -d); }      // i -> -i
    CNum conj_sqrt2() const { return CNum(a, b, -c, -d); }  // sqrt2 -> -sqrt2

    bool operator==(const CNum& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    std::string str() const;
};

/// Polynomial in the formal parameter hbar with CNum coefficients,
/// coefficient of hbar^k at index k, no trailing zeros.
struct HPoly {
    std::vector<CNum> c;

    HPoly() = default;
    explicit HPoly(CNum v);
    static HPoly hbar_power(int k, CNum coeff);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    const CNum& leading() const;

    HPoly operator-() const;
    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator*(const HPoly& o) const;
    bool operator==(const HPoly& o) const { return c == o.c; }

    HPoly conj_i() const;

    /// Euclidean division; remainder has degree < deg(divisor).
    static void divmod(const HPoly& num, const HPoly& den, HPoly& quot, HPoly& rem);
    /// Monic gcd.
    static HPoly gcd(HPoly x, HPoly y);

    std::string str() const;
};

/// Element of the field Q(i,sqrt2)(hbar): a reduced fraction of HPoly.
/// Canonical form: gcd(num,den) = 1 and den is monic, so equality is
/// coefficient-wise. The zero element is 0/1.
class Scalar {
  public:
    Scalar() : num_(), den_(CNum::of(1)) {}
    Scalar(long v) : num_(CNum::of(v)), den_(CNum::of(1)) { normalize(); }
    Scalar(const Rat& v) : num_(CNum::of(v)), den_(CNum::of(1)) { normalize(); }
    Scalar(const CNum& v) : num_(v), den_(CNum::of(1)) { normalize(); }
    Scalar(HPoly num, HPoly den);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(CNum::i()); }
    static Scalar sqrt2() { return Scalar(CNum::sqrt2()); }
    static Scalar hbar() { return Scalar(HPoly::hbar_power(1, CNum::of(1)), HPoly(CNum::of(1))); }
    /// hbar/i = -i*hbar
    static Scalar hbar_over_i();
    /// i/hbar
    static Scalar i_over_hbar();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True if the value lies in Q (no i, no sqrt2, no hbar).
    bool is_rational() const;
    /// The rational value; requires is_rational().
    Rat to_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Antilinear conjugation: i -> -i, fixes sqrt2 and hbar.
    Scalar conj() const;

    Scalar pow(int e) const;  // e may be negative for invertible scalars

    const HPoly& num() const { return num_; }
    const HPoly& den() const { return den_; }
    bool den_is_one() const { return den_.degree() == 0 && den_.c[0].is_one(); }

    std::string str() const;

  private:
    void normalize();
    HPoly num_, den_;
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }
inline Scalar operator*(const Rat& v, const Scalar& s) { return Scalar(v) * s; }

}  // namespace superquant
