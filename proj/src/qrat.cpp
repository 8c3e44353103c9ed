#include "padic/qrat.hpp"

#include <cmath>
#include <sstream>

namespace padic {

mpz_class zpow(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

mpq_class qpow(long q, long k) {
    if (k >= 0) return mpq_class(zpow(q, k));
    mpq_class r(mpz_class(1), zpow(q, -k));
    r.canonicalize();
    return r;
}

double NormValue::to_double() const {
    if (zero_) return 0.0;
    return std::pow(static_cast<double>(q_), -static_cast<double>(twice_neg_exp_) / 2.0);
}

std::string rational_to_string(const mpq_class& r) {
    std::ostringstream os;
    if (r.get_den() == 1) {
        os << r.get_num();
    } else {
        os << r.get_num() << "/" << r.get_den();
    }
    return os.str();
}

double rational_to_double(const mpq_class& r) { return r.get_d(); }

}  // namespace padic
