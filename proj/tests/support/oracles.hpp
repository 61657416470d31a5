#pragma once

// Brute-force reference computations, written independently of the library's
// closed-form kernels. They only share the value types.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "hamlie/exponent.hpp"
#include "hamlie/tensor.hpp"

namespace hamlie::test {

/// [t^a, t^b] straight from the defining sum, as a map exponent -> coefficient
/// (t^0 kept, zero coefficients skipped, like terms merged).
inline std::map<Exponent, Rational> naive_bracket(const Exponent& a, const Exponent& b)
{
    std::map<Exponent, Rational> out;
    const std::size_t n = a.n();
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational c = a.at(i) * b.at_bar(i) - b.at(i) * a.at_bar(i);
        if (c == 0) {
            continue;
        }
        std::vector<Rational> coords;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            Rational v = a[k] + b[k];
            if (k == i - 1 || k == n + i - 1) {
                v -= 1;
            }
            coords.push_back(v);
        }
        out[Exponent(coords)] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// c(r) evaluated as [r12,r13] + [r12,r23] + [r13,r23] in the tensor cube of
/// the free associative algebra, then folded into H^{(x)3} by xy - yx -> [x,y].
/// Throws if the symmetric parts fail to cancel.
inline TensorElement brute_force_cybe(const TensorElement& r)
{
    using Word = std::vector<Exponent>;
    using Triple = std::array<Word, 3>;
    using Sum = std::map<Triple, Rational>;

    auto place = [&](std::size_t sa, std::size_t sb) {
        Sum out;
        for (const auto& [k, c] : r.terms()) {
            Triple t;
            t[sa] = {k[0]};
            t[sb] = {k[1]};
            out[t] += c;
        }
        return out;
    };
    auto mul = [](const Sum& x, const Sum& y) {
        Sum out;
        for (const auto& [kx, cx] : x) {
            for (const auto& [ky, cy] : y) {
                Triple t;
                for (std::size_t s = 0; s < 3; ++s) {
                    t[s] = kx[s];
                    t[s].insert(t[s].end(), ky[s].begin(), ky[s].end());
                }
                out[t] += cx * cy;
            }
        }
        return out;
    };
    auto add_commutator = [&](Sum& acc, const Sum& x, const Sum& y) {
        for (const auto& [k, c] : mul(x, y)) {
            acc[k] += c;
        }
        for (const auto& [k, c] : mul(y, x)) {
            acc[k] -= c;
        }
    };

    const Sum r12 = place(0, 1);
    const Sum r13 = place(0, 2);
    const Sum r23 = place(1, 2);
    Sum total;
    add_commutator(total, r12, r13);
    add_commutator(total, r12, r23);
    add_commutator(total, r13, r23);

    TensorElement out(r.n(), 3);
    Sum symmetric;
    for (const auto& [k, c] : total) {
        if (c == 0) {
            continue;
        }
        std::size_t longs = 0;
        std::size_t slot = 0;
        for (std::size_t s = 0; s < 3; ++s) {
            if (k[s].empty() || k[s].size() > 2) {
                throw std::logic_error("unexpected word length in CYBE expansion");
            }
            if (k[s].size() == 2) {
                ++longs;
                slot = s;
            }
        }
        if (longs != 1) {
            throw std::logic_error("unexpected word shape in CYBE expansion");
        }
        // xy = (xy - yx)/2 + (xy + yx)/2
        Triple sym = k;
        if (sym[slot][1] < sym[slot][0]) {
            std::swap(sym[slot][0], sym[slot][1]);
        }
        symmetric[sym] += c;
        for (const auto& [e, bc] : naive_bracket(k[slot][0], k[slot][1])) {
            TensorKey key;
            for (std::size_t s = 0; s < 3; ++s) {
                key.push_back(s == slot ? e : k[s][0]);
            }
            out.add_term(key, c * bc / 2);
        }
    }
    for (const auto& [k, c] : symmetric) {
        if (c != 0) {
            throw std::logic_error("symmetric part of the CYBE expansion does not cancel");
        }
    }
    return out;
}

} // namespace hamlie::test
