#include "padic/linalg.hpp"

#include <utility>

namespace padic {

namespace {

// Locates the entry of minimal valuation in the trailing submatrix starting
// at (s, s).  Returns false if every remaining entry is zero at precision.
bool find_pivot(const PMat& m, size_t s, size_t& pr, size_t& pc) {
    bool found = false;
    long best = 0;
    for (size_t i = s; i < m.size(); ++i) {
        for (size_t j = s; j < m[i].size(); ++j) {
            if (m[i][j].is_zero_at_precision()) continue;
            long v = m[i][j].valuation();
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

PadicNumber padic_det(PMat m) {
    const size_t n = m.size();
    if (n == 0) throw PadicError("empty matrix");
    long p = m[0][0].prime();
    PadicNumber det = PadicNumber::from_integer(p, 1);
    int sign = 1;
    for (size_t s = 0; s < n; ++s) {
        size_t pr = s, pc = s;
        if (!find_pivot(m, s, pr, pc)) {
            // Singular at precision: the determinant is zero up to the sum of
            // what the remaining diagonal could contribute.
            long abs = 0;
            for (size_t i = s; i < n; ++i) abs += m[i][i].abs_precision();
            PadicNumber z = PadicNumber::zero(p, abs);
            return det * z;
        }
        if (pr != s) {
            std::swap(m[pr], m[s]);
            sign = -sign;
        }
        if (pc != s) {
            for (size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][s]);
            sign = -sign;
        }
        const PadicNumber& pivot = m[s][s];
        for (size_t i = s + 1; i < n; ++i) {
            if (m[i][s].is_zero_at_precision()) continue;
            PadicNumber factor = m[i][s] / pivot;
            for (size_t j = s; j < n; ++j) m[i][j] = m[i][j] - factor * m[s][j];
        }
        det = det * pivot;
    }
    return sign < 0 ? -det : det;
}

RankInfo padic_rank(PMat m, long zero_threshold) {
    RankInfo info;
    if (m.empty()) return info;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    const size_t steps = rows < cols ? rows : cols;
    for (size_t s = 0; s < steps; ++s) {
        size_t pr = s, pc = s;
        if (!find_pivot(m, s, pr, pc)) {
            // All remaining entries are flagged zeros; trust the decision only
            // if each is known deeply enough.
            for (size_t i = s; i < rows; ++i)
                for (size_t j = s; j < cols; ++j)
                    if (m[i][j].abs_precision() < zero_threshold) info.ambiguous = true;
            return info;
        }
        if (m[pr][pc].valuation() >= zero_threshold) {
            info.ambiguous = true;
            return info;
        }
        if (pr != s) std::swap(m[pr], m[s]);
        if (pc != s)
            for (size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][s]);
        const PadicNumber& pivot = m[s][s];
        for (size_t i = s + 1; i < rows; ++i) {
            if (m[i][s].is_zero_at_precision()) continue;
            PadicNumber factor = m[i][s] / pivot;
            for (size_t j = s; j < cols; ++j) m[i][j] = m[i][j] - factor * m[s][j];
        }
        ++info.rank;
    }
    return info;
}

std::vector<PadicNumber> padic_solve(PMat m, std::vector<PadicNumber> rhs) {
    const size_t n = m.size();
    if (n == 0 || rhs.size() != n) throw PadicError("solve: bad dimensions");
    std::vector<size_t> colperm(n);
    for (size_t i = 0; i < n; ++i) colperm[i] = i;
    for (size_t s = 0; s < n; ++s) {
        size_t pr = s, pc = s;
        if (!find_pivot(m, s, pr, pc)) throw DivisionByIndistinguishableZero("solve: singular at precision");
        if (pr != s) {
            std::swap(m[pr], m[s]);
            std::swap(rhs[pr], rhs[s]);
        }
        if (pc != s) {
            for (size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][s]);
            std::swap(colperm[pc], colperm[s]);
        }
        const PadicNumber pivot = m[s][s];
        for (size_t i = s + 1; i < n; ++i) {
            if (m[i][s].is_zero_at_precision()) continue;
            PadicNumber factor = m[i][s] / pivot;
            for (size_t j = s; j < n; ++j) m[i][j] = m[i][j] - factor * m[s][j];
            rhs[i] = rhs[i] - factor * rhs[s];
        }
    }
    long p = rhs[0].prime();
    std::vector<PadicNumber> x(n, PadicNumber::zero(p));
    for (size_t si = n; si-- > 0;) {
        PadicNumber acc = rhs[si];
        for (size_t j = si + 1; j < n; ++j) acc = acc - m[si][j] * x[j];
        x[si] = acc / m[si][si];
    }
    std::vector<PadicNumber> out(n, PadicNumber::zero(p));
    for (size_t i = 0; i < n; ++i) out[colperm[i]] = x[i];
    return out;
}

}  // namespace padic
