#pragma once

#include <gmpxx.h>

#include <string>

#include "padic/errors.hpp"
#include "padic/qrat.hpp"

namespace padic {

// An element of Q_p known to finite precision.
//
// A nonzero value is stored as unit * p^val with unit coprime to p and reduced
// modulo p^rel, so the element is known modulo p^(val+rel).  A value whose
// digits all vanish within the window is a flagged zero: it represents
// O(p^abs) and remembers only the absolute precision abs.  Comparisons against
// zero therefore always answer "zero at this precision", never "zero".
class PadicNumber {
public:
    static constexpr long kDefaultPrecision = 48;

    // Flagged zero known to O(p^abs_prec).
    static PadicNumber zero(long p, long abs_prec = kDefaultPrecision);

    // Exact (small or big) integer, known modulo p^abs_prec.
    static PadicNumber from_integer(long p, const mpz_class& value, long abs_prec = kDefaultPrecision);

    // num/den with den coprime to... den may carry powers of p; the valuation
    // is adjusted and the unit inverted modulo p^rel.
    static PadicNumber from_rational(long p, const mpz_class& num, const mpz_class& den,
                                     long abs_prec = kDefaultPrecision);

    // unit * p^val with unit already coprime to p (unit is reduced mod p^rel).
    static PadicNumber from_unit(long p, const mpz_class& unit, long val, long rel_prec);

    // Residue class r mod p^abs_prec interpreted as an element of Z_p known to
    // absolute precision abs_prec (the sampler's constructor).
    static PadicNumber from_residue(long p, const mpz_class& residue, long abs_prec);

    long prime() const { return p_; }
    bool is_zero_at_precision() const { return zero_; }

    // Certified nonzero at a comfortable margin below the precision window.
    bool certified_nonzero(long margin = kSafetyMarginDigits) const {
        return !zero_ && rel_ >= 1 && val_ + margin <= abs_precision();
    }

    long valuation() const {
        if (zero_) throw PrecisionExhausted("valuation of a value indistinguishable from zero");
        return val_;
    }
    // Absolute precision: the value is known modulo p^abs.
    long abs_precision() const { return zero_ ? abs_ : val_ + rel_; }
    long rel_precision() const { return zero_ ? 0 : rel_; }
    const mpz_class& unit() const { return unit_; }

    // |x| = q^{-v(x)} as an exact rational.
    mpq_class norm() const { return zero_ ? mpq_class(0) : qpow(p_, -val_); }
    NormValue norm_value() const {
        return zero_ ? NormValue::zero() : NormValue::int_exp(p_, val_);
    }

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber inverse() const;
    PadicNumber pow(long k) const;
    // x * p^k
    PadicNumber shift(long k) const;

    // The residue of the value modulo p^digits (requires val >= 0 and
    // abs_precision >= digits).
    mpz_class residue(long digits) const;

    // Equality modulo p^digits.
    bool congruent(const PadicNumber& other, long digits) const;

    // Exact equality of the stored data (same residue class at the coarser of
    // the two precisions); used by tests.
    bool same_value(const PadicNumber& other) const;

    std::string to_string() const;

private:
    PadicNumber(long p, bool zero, mpz_class unit, long val, long rel, long abs)
        : p_(p), zero_(zero), unit_(std::move(unit)), val_(val), rel_(rel), abs_(abs) {}

    long p_;
    bool zero_;
    mpz_class unit_;  // 0 when zero_, otherwise in [1, p^rel), coprime to p
    long val_;        // valuation; meaningless when zero_
    long rel_;        // relative precision in digits; 0 when zero_
    long abs_;        // absolute precision bound for flagged zeros
};

}  // namespace padic
