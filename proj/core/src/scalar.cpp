#include "superquant/scalar.hpp"

#include <sstream>

namespace superquant {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw Error("invalid rational literal: " + s);
    }
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("invalid rational literal: " + s);
    }
}

std::string rational_to_string(const Rat& r) { return r.get_str(); }

CNum CNum::operator*(const CNum& o) const {
    // (a + b i + c r + d i r)(a' + b' i + c' r + d' i r), r^2 = 2, i^2 = -1
    Rat two(2);
    return CNum(
        a * o.a - b * o.b + two * (c * o.c - d * o.d),
        a * o.b + b * o.a + two * (c * o.d + d * o.c),
        a * o.c + c * o.a - (b * o.d + d * o.b),
        a * o.d + d * o.a + b * o.c + c * o.b);
}

CNum CNum::inv() const {
    if (is_zero()) throw Error("division by zero in Q(i,sqrt2)");
    // Multiply by the three Galois conjugates; the product of all four is rational.
    CNum g1 = conj_i();
    CNum g2 = conj_sqrt2();
    CNum g3 = g1.conj_sqrt2();
    CNum prod = g1 * g2 * g3;
    CNum norm = *this * prod;
    if (!norm.is_rational() || norm.a == 0) throw Error("norm failure in Q(i,sqrt2) inverse");
    Rat inv_norm = Rat(1) / norm.a;
    return CNum(prod.a * inv_norm, prod.b * inv_norm, prod.c * inv_norm, prod.d * inv_norm);
}

std::string CNum::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rat& v, const char* unit) {
        if (v == 0) return;
        if (!first) os << (v > 0 ? "+" : "");
        os << v.get_str();
        if (*unit) os << "*" << unit;
        first = false;
    };
    emit(a, "");
    emit(b, "i");
    emit(c, "sqrt2");
    emit(d, "i*sqrt2");
    if (first) os << "0";
    return os.str();
}

HPoly::HPoly(CNum v) {
    if (!v.is_zero()) c.push_back(std::move(v));
}

HPoly HPoly::hbar_power(int k, CNum coeff) {
    HPoly r;
    if (coeff.is_zero()) return r;
    r.c.assign(static_cast<size_t>(k) + 1, CNum());
    r.c.back() = std::move(coeff);
    return r;
}

void HPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

const CNum& HPoly::leading() const {
    if (c.empty()) throw Error("leading coefficient of zero polynomial");
    return c.back();
}

HPoly HPoly::operator-() const {
    HPoly r;
    r.c.reserve(c.size());
    for (const auto& v : c) r.c.push_back(-v);
    return r;
}

HPoly HPoly::operator+(const HPoly& o) const {
    HPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < c.size()) r.c[k] = r.c[k] + c[k];
        if (k < o.c.size()) r.c[k] = r.c[k] + o.c[k];
    }
    r.trim();
    return r;
}

HPoly HPoly::operator-(const HPoly& o) const { return *this + (-o); }

HPoly HPoly::operator*(const HPoly& o) const {
    HPoly r;
    if (c.empty() || o.c.empty()) return r;
    r.c.assign(c.size() + o.c.size() - 1, CNum());
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        for (size_t k = 0; k < o.c.size(); ++k) {
            if (o.c[k].is_zero()) continue;
            r.c[j + k] = r.c[j + k] + c[j] * o.c[k];
        }
    }
    r.trim();
    return r;
}

HPoly HPoly::conj_i() const {
    HPoly r;
    r.c.reserve(c.size());
    for (const auto& v : c) r.c.push_back(v.conj_i());
    return r;
}

void HPoly::divmod(const HPoly& num, const HPoly& den, HPoly& quot, HPoly& rem) {
    if (den.is_zero()) throw Error("polynomial division by zero");
    quot = HPoly();
    rem = num;
    CNum lead_inv = den.leading().inv();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        CNum factor = rem.leading() * lead_inv;
        if (quot.c.size() < static_cast<size_t>(shift) + 1) quot.c.resize(shift + 1);
        quot.c[shift] = quot.c[shift] + factor;
        // rem -= factor * hbar^shift * den
        for (size_t k = 0; k < den.c.size(); ++k) {
            size_t idx = k + shift;
            rem.c[idx] = rem.c[idx] - factor * den.c[k];
        }
        rem.trim();
    }
    quot.trim();
}

HPoly HPoly::gcd(HPoly x, HPoly y) {
    while (!y.is_zero()) {
        HPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
        if (!y.is_zero()) {
            // keep remainders monic to limit coefficient growth
            CNum inv = y.leading().inv();
            for (auto& v : y.c) v = v * inv;
        }
    }
    if (!x.is_zero()) {
        CNum inv = x.leading().inv();
        for (auto& v : x.c) v = v * inv;
    }
    return x;
}

std::string HPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c[k].str() << ")";
        if (k == 1) os << "*hb";
        if (k > 1) os << "*hb^" << k;
        first = false;
    }
    return os.str();
}

Scalar::Scalar(HPoly num, HPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("Scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        if (!(den_.degree() == 0 && den_.c[0].is_one())) den_ = HPoly(CNum::of(1));
        return;
    }
    if (den_.degree() == 0 && den_.c[0].is_one()) return;
    if (den_.degree() > 0 && num_.degree() > 0) {
        HPoly g = HPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            HPoly q, r;
            HPoly::divmod(num_, g, q, r);
            num_ = q;
            HPoly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    if (den_.degree() == 0 && den_.c[0].is_one()) return;
    CNum inv = den_.leading().inv();
    for (auto& v : den_.c) v = v * inv;
    for (auto& v : num_.c) v = v * inv;
}

Scalar Scalar::hbar_over_i() {
    // hbar/i = -i*hbar
    return Scalar(HPoly::hbar_power(1, CNum(0, -1, 0, 0)), HPoly(CNum::of(1)));
}

Scalar Scalar::i_over_hbar() {
    return Scalar(HPoly(CNum::i()), HPoly::hbar_power(1, CNum::of(1)));
}

bool Scalar::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.c[0] == CNum::of(1) &&
           den_.c[0] == CNum::of(1);
}

bool Scalar::is_rational() const {
    if (num_.is_zero()) return true;
    return num_.degree() == 0 && den_.degree() == 0 && num_.c[0].is_rational() &&
           den_.c[0].is_rational();
}

Rat Scalar::to_rational() const {
    if (!is_rational()) throw Error("Scalar is not rational: " + str());
    if (num_.is_zero()) return Rat(0);
    return num_.c[0].a / den_.c[0].a;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_is_one() && o.den_is_one()) {
        Scalar r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (den_is_one() && o.den_is_one()) {
        Scalar r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error("Scalar division by zero");
    if (is_zero()) return Scalar();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("Scalar inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::conj() const {
    Scalar r;
    r.num_ = num_.conj_i();
    r.den_ = den_.conj_i();
    r.normalize();
    return r;
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar::one();
    Scalar base = e > 0 ? *this : inv();
    int k = e > 0 ? e : -e;
    Scalar r = Scalar::one();
    for (int j = 0; j < k; ++j) r = r * base;
    return r;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.str() + ")";
    if (!(den_.degree() == 0 && den_.c[0] == CNum::of(1))) s += "/(" + den_.str() + ")";
    return s;
}

}  // namespace superquant
