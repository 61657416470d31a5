#include "hamlie/tensor.hpp"

#include <algorithm>
#include <optional>

#include "hamlie/errors.hpp"

namespace hamlie {

TensorElement::TensorElement(std::size_t n, std::size_t m) : m_n(n), m_arity(m)
{
    if (n == 0) {
        throw DimensionError("n must be positive");
    }
    if (m == 0) {
        throw ArityError("tensor arity must be positive");
    }
}

TensorElement TensorElement::product_of(const std::vector<HElement>& factors)
{
    if (factors.empty()) {
        throw ArityError("tensor arity must be positive");
    }
    TensorElement out = as_tensor(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = tensor_product(out, as_tensor(factors[i]));
    }
    return out;
}

Rational TensorElement::coefficient(const TensorKey& key) const
{
    const auto it = m_terms.find(key);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const TensorKey& key, const Rational& c)
{
    if (key.size() != m_arity) {
        throw ArityError("key of arity " + std::to_string(key.size()) + " in tensor of arity "
                         + std::to_string(m_arity));
    }
    for (const auto& e : key) {
        if (e.n() != m_n) {
            throw DimensionError("slot exponent of length " + std::to_string(e.size()) + " in ambient n="
                                 + std::to_string(m_n));
        }
    }
    if (c == 0 || std::any_of(key.begin(), key.end(), [](const Exponent& e) { return e.is_zero(); })) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void TensorElement::check_compatible(const TensorElement& other) const
{
    if (other.m_n != m_n) {
        throw DimensionError("ambient mismatch: n=" + std::to_string(m_n) + " vs n=" + std::to_string(other.m_n));
    }
    if (other.m_arity != m_arity) {
        throw ArityError("arity mismatch: " + std::to_string(m_arity) + " vs " + std::to_string(other.m_arity));
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    check_compatible(other);
    for (const auto& [k, c] : other.m_terms) {
        add_term(k, c);
    }
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    check_compatible(other);
    for (const auto& [k, c] : other.m_terms) {
        add_term(k, -c);
    }
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s)
{
    if (s == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto& [k, c] : m_terms) {
        c *= s;
    }
    return *this;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b)
{
    if (a.n() != b.n()) {
        throw DimensionError("ambient mismatch in tensor product");
    }
    TensorElement out(a.n(), a.arity() + b.arity());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            TensorKey key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.add_term(key, ca * cb);
        }
    }
    return out;
}

TensorElement tensor(const HElement& x, const HElement& y)
{
    return tensor_product(as_tensor(x), as_tensor(y));
}

TensorElement as_tensor(const HElement& x)
{
    TensorElement out(x.n(), 1);
    for (const auto& [e, c] : x.terms()) {
        out.add_term({e}, c);
    }
    return out;
}

TensorElement swap_slots(const TensorElement& v, std::size_t i, std::size_t j)
{
    if (i >= v.arity() || j >= v.arity()) {
        throw ArityError("slot index outside tensor arity");
    }
    TensorElement out(v.n(), v.arity());
    for (const auto& [k, c] : v.terms()) {
        TensorKey key = k;
        std::swap(key[i], key[j]);
        out.add_term(key, c);
    }
    return out;
}

namespace {

void require_arity(const TensorElement& v, std::size_t m, const char* op)
{
    if (v.arity() != m) {
        throw ArityError(std::string(op) + " needs arity " + std::to_string(m) + ", got "
                         + std::to_string(v.arity()));
    }
}

} // namespace

TensorElement twist(const TensorElement& v)
{
    require_arity(v, 2, "twist");
    return swap_slots(v, 0, 1);
}

TensorElement cyclic(const TensorElement& v)
{
    require_arity(v, 3, "cyclic");
    TensorElement out(v.n(), 3);
    for (const auto& [k, c] : v.terms()) {
        out.add_term({k[1], k[2], k[0]}, c);
    }
    return out;
}

TensorElement act_in_slot(const HElement& x, const TensorElement& v, std::size_t slot)
{
    if (x.n() != v.n()) {
        throw DimensionError("ambient mismatch between element and tensor");
    }
    if (slot >= v.arity()) {
        throw ArityError("slot index outside tensor arity");
    }
    TensorElement out(v.n(), v.arity());
    for (const auto& [k, c] : v.terms()) {
        for (const auto& [a, ca] : x.terms()) {
            const Rational scale = c * ca;
            for (const auto& t : monomial_bracket(a, k[slot])) {
                TensorKey key = k;
                key[slot] = t.exponent;
                out.add_term(key, scale * t.coefficient);
            }
        }
    }
    return out;
}

TensorElement diag_action(const HElement& x, const TensorElement& v)
{
    if (x.n() != v.n()) {
        throw DimensionError("ambient mismatch between element and tensor");
    }
    TensorElement out(v.n(), v.arity());
    for (std::size_t slot = 0; slot < v.arity(); ++slot) {
        out += act_in_slot(x, v, slot);
    }
    return out;
}

TensorElement skew_part(const TensorElement& v)
{
    TensorElement out = v - twist(v);
    out *= Rational(1, 2);
    return out;
}

bool is_skew(const TensorElement& v)
{
    return (v + twist(v)).is_zero();
}

Grade tensor_grade(const TensorKey& key)
{
    Grade g = grade(key.front());
    for (std::size_t i = 1; i < key.size(); ++i) {
        g += grade(key[i]);
    }
    return g;
}

std::map<Grade, TensorElement> tensor_grade_decompose(const TensorElement& v)
{
    std::map<Grade, TensorElement> parts;
    for (const auto& [k, c] : v.terms()) {
        parts.try_emplace(tensor_grade(k), v.n(), v.arity()).first->second.add_term(k, c);
    }
    return parts;
}

TensorElement sigma_eigen_defect(std::size_t p, const TensorElement& v)
{
    require_arity(v, 2, "sigma_eigen_defect");
    check_index(v.n(), p);
    std::optional<Grade> mu;
    for (const auto& [k, c] : v.terms()) {
        Grade g = tensor_grade(k);
        if (!mu) {
            mu = std::move(g);
        } else if (!(g == *mu)) {
            throw HomogeneityError("tensor is not homogeneous");
        }
    }
    if (!mu) {
        return TensorElement(v.n(), v.arity());
    }
    TensorElement out = diag_action(HElement::monomial(sigma(v.n(), p)), v);
    out -= mu->at(p) * v;
    return out;
}

long coordinate_spread(const TensorElement& v)
{
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& [k, c] : v.terms()) {
        for (const auto& e : k) {
            for (const auto& x : e.coords()) {
                if (!lo || x < *lo) {
                    lo = x;
                }
                if (!hi || x > *hi) {
                    hi = x;
                }
            }
        }
    }
    if (!lo) {
        return 0;
    }
    return ceil_abs(Rational(*hi - *lo));
}

std::string to_string(const TensorElement& v)
{
    if (v.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            mag = abs(c);
        }
        first = false;
        if (mag != 1) {
            out += hamlie::to_string(mag) + "*";
        }
        for (std::size_t s = 0; s < k.size(); ++s) {
            out += s ? " (x) t^(" : "t^(";
            for (std::size_t i = 0; i < k[s].size(); ++i) {
                out += (i ? "," : "") + hamlie::to_string(k[s][i]);
            }
            out += ")";
        }
    }
    return out;
}

} // namespace hamlie
