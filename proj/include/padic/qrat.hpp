#pragma once

#include <gmpxx.h>

#include <string>

#include "padic/errors.hpp"

namespace padic {

// q^k for integer k (possibly negative), as an exact rational.
mpq_class qpow(long q, long k);

// p^k for k >= 0 as an integer.
mpz_class zpow(long p, long k);

// A norm value q^{-t} with t rational (denominator = a ramification index),
// or exact zero.  Valuations in extensions live in (1/e)Z; the value is kept
// as an exponent so that products collapsing to integral powers of q stay
// exact rationals.
class NormValue {
public:
    NormValue() : zero_(true), q_(0), expo_(0) {}
    static NormValue zero() { return NormValue(); }
    // q^{-expo}
    static NormValue exp(long q, mpq_class expo) {
        NormValue v;
        v.zero_ = false;
        v.q_ = q;
        v.expo_ = std::move(expo);
        return v;
    }
    static NormValue int_exp(long q, long neg_exp) { return exp(q, mpq_class(neg_exp)); }
    static NormValue frac_exp(long q, long num, long den) {
        mpq_class e(num, den);
        e.canonicalize();
        return exp(q, e);
    }

    bool is_zero() const { return zero_; }
    long q() const { return q_; }
    // t with value = q^{-t}; only valid when nonzero.
    const mpq_class& exponent() const { return expo_; }
    bool is_integral_power() const { return zero_ || expo_.get_den() == 1; }

    // Exact rational value; throws for genuine fractional powers.
    mpq_class to_mpq() const {
        if (zero_) return mpq_class(0);
        if (expo_.get_den() != 1) throw PadicError("norm value is an irrational fractional power of q");
        return qpow(q_, -static_cast<long>(expo_.get_num().get_si()));
    }

    double to_double() const;

    NormValue pow(long k) const {
        if (zero_) return zero();
        return exp(q_, expo_ * k);
    }
    friend NormValue operator*(const NormValue& a, const NormValue& b) {
        if (a.zero_ || b.zero_) return zero();
        return exp(a.q_, a.expo_ + b.expo_);
    }
    friend bool operator==(const NormValue& a, const NormValue& b) {
        if (a.zero_ != b.zero_) return false;
        return a.zero_ || a.expo_ == b.expo_;
    }
    friend bool operator!=(const NormValue& a, const NormValue& b) { return !(a == b); }
    // Value order (smaller norm = larger exponent).
    friend bool operator<(const NormValue& a, const NormValue& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.expo_ > b.expo_;
    }
    friend bool operator<=(const NormValue& a, const NormValue& b) { return a < b || a == b; }

private:
    bool zero_;
    long q_;
    mpq_class expo_;
};

// Formats a rational as "num/den" (or "num" when integral).
std::string rational_to_string(const mpq_class& r);

double rational_to_double(const mpq_class& r);

}  // namespace padic
