#include "padic/padic_number.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

// Strips powers of p from v; returns the exponent removed.
long strip_p(long p, mpz_class& v) {
    long k = 0;
    mpz_class q, r;
    mpz_class mp(p);
    while (v != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), mp.get_mpz_t());
        if (r != 0) break;
        v = q;
        ++k;
    }
    return k;
}

}  // namespace

PadicNumber PadicNumber::zero(long p, long abs_prec) {
    return PadicNumber(p, true, mpz_class(0), 0, 0, abs_prec);
}

PadicNumber PadicNumber::from_unit(long p, const mpz_class& unit, long val, long rel_prec) {
    if (rel_prec < 1) return zero(p, val);
    mpz_class u = unit % zpow(p, rel_prec);
    if (u < 0) u += zpow(p, rel_prec);
    if (u == 0) return zero(p, val + rel_prec);
    if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
        throw PadicError("from_unit: unit part divisible by p");
    return PadicNumber(p, false, std::move(u), val, rel_prec, 0);
}

PadicNumber PadicNumber::from_residue(long p, const mpz_class& residue, long abs_prec) {
    mpz_class v = residue % zpow(p, abs_prec);
    if (v < 0) v += zpow(p, abs_prec);
    if (v == 0) return zero(p, abs_prec);
    long k = strip_p(p, v);
    return PadicNumber(p, false, std::move(v), k, abs_prec - k, 0);
}

PadicNumber PadicNumber::from_integer(long p, const mpz_class& value, long abs_prec) {
    return from_residue(p, value, abs_prec);
}

PadicNumber PadicNumber::from_rational(long p, const mpz_class& num, const mpz_class& den, long abs_prec) {
    if (den == 0) throw PadicError("from_rational: zero denominator");
    mpz_class n = num, d = den;
    if (n == 0) return zero(p, abs_prec);
    long vn = strip_p(p, n);
    long vd = strip_p(p, d);
    long val = vn - vd;
    long rel = abs_prec;  // relative precision for an exactly-known rational
    mpz_class mod = zpow(p, rel);
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw PadicError("from_rational: denominator not invertible");
    mpz_class u = (n * dinv) % mod;
    if (u < 0) u += mod;
    return from_unit(p, u, val, rel);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    mpz_class u = zpow(p_, rel_) - unit_;
    return PadicNumber(p_, false, std::move(u), val_, rel_, 0);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw PadicError("mixed primes");
    long p = a.p_;
    long abs = std::min(a.abs_precision(), b.abs_precision());
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, abs);
    if (a.zero_ || b.zero_) {
        const PadicNumber& x = a.zero_ ? b : a;
        // Truncate the known summand to the zero's absolute precision.
        if (x.val_ >= abs) return PadicNumber::zero(p, abs);
        return PadicNumber::from_unit(p, x.unit_, x.val_, std::min(x.rel_, abs - x.val_));
    }
    long val = std::min(a.val_, b.val_);
    if (abs <= val) return PadicNumber::zero(p, abs);
    long window = abs - val;  // digits available above the common valuation
    mpz_class mod = zpow(p, window);
    mpz_class s = a.unit_ * zpow(p, a.val_ - val) + b.unit_ * zpow(p, b.val_ - val);
    s %= mod;
    if (s < 0) s += mod;
    if (s == 0) return PadicNumber::zero(p, abs);
    mpz_class v = s;
    long k = 0;
    {
        mpz_class q, r, mp(p);
        while (true) {
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), mp.get_mpz_t());
            if (r != 0) break;
            v = q;
            ++k;
        }
    }
    return PadicNumber::from_unit(p, v, val + k, window - k);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw PadicError("mixed primes");
    long p = a.p_;
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, a.abs_ + b.abs_);
    if (a.zero_) return PadicNumber::zero(p, a.abs_ + b.val_);
    if (b.zero_) return PadicNumber::zero(p, b.abs_ + a.val_);
    long rel = std::min(a.rel_, b.rel_);
    mpz_class mod = zpow(p, rel);
    mpz_class u = (a.unit_ * b.unit_) % mod;
    return PadicNumber::from_unit(p, u, a.val_ + b.val_, rel);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw DivisionByIndistinguishableZero();
    mpz_class mod = zpow(p_, rel_);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw PadicError("inverse: unit not invertible");
    return PadicNumber(p_, false, std::move(inv), -val_, rel_, 0);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    if (b.zero_) throw DivisionByIndistinguishableZero();
    return a * b.inverse();
}

PadicNumber PadicNumber::pow(long k) const {
    if (k == 0) {
        if (zero_) return from_integer(p_, 1, std::max<long>(1, abs_));
        return from_unit(p_, 1, 0, rel_);
    }
    if (k < 0) return inverse().pow(-k);
    PadicNumber r = *this;
    PadicNumber acc = from_unit(p_, 1, 0, zero_ ? std::max<long>(1, abs_) : rel_);
    long e = k;
    while (e > 0) {
        if (e & 1) acc = acc * r;
        r = r * r;
        e >>= 1;
    }
    return acc;
}

PadicNumber PadicNumber::shift(long k) const {
    if (zero_) return zero(p_, abs_ + k);
    return PadicNumber(p_, false, unit_, val_ + k, rel_, 0);
}

mpz_class PadicNumber::residue(long digits) const {
    if (digits <= 0) return mpz_class(0);
    if (abs_precision() < digits)
        throw PrecisionExhausted("residue requested beyond absolute precision");
    if (zero_) return mpz_class(0);
    if (val_ < 0) throw PadicError("residue of a non-integral value");
    if (val_ >= digits) return mpz_class(0);
    mpz_class r = (unit_ * zpow(p_, val_)) % zpow(p_, digits);
    return r;
}

bool PadicNumber::congruent(const PadicNumber& other, long digits) const {
    return residue(digits) == other.residue(digits);
}

bool PadicNumber::same_value(const PadicNumber& other) const {
    long digits = std::min(abs_precision(), other.abs_precision());
    if (zero_ || other.zero_) return ((zero_ ? 0 : val_) >= digits) && ((other.zero_ ? 0 : other.val_) >= digits);
    if (val_ < 0 || other.val_ < 0) {
        if (val_ != other.val_) return false;
        long rel = std::min(rel_, other.rel_);
        return (unit_ - other.unit_) % zpow(p_, rel) == 0;
    }
    return congruent(other, digits);
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << abs_ << ")";
    } else {
        os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_precision() << ")";
    }
    return os.str();
}

}  // namespace padic
