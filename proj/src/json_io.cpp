#include "hamlie/json_io.hpp"

#include <set>

#include "hamlie/errors.hpp"

namespace hamlie {

Json to_json(const Exponent& e)
{
    Json out = Json::array();
    for (const auto& c : e.coords()) {
        out.push_back(to_string(c));
    }
    return out;
}

namespace {

template <class Flavor>
Json element_to_json(const BasicElement<Flavor>& u)
{
    Json terms = Json::array();
    for (const auto& [e, c] : u.terms()) {
        terms.push_back(Json{{"c", to_string(c)}, {"e", to_json(e)}});
    }
    return Json{{"n", u.n()}, {"terms", std::move(terms)}};
}

} // namespace

Json to_json(const BarElement& u)
{
    return element_to_json(u);
}

Json to_json(const HElement& u)
{
    return element_to_json(u);
}

Json to_json(const TensorElement& v)
{
    Json terms = Json::array();
    for (const auto& [k, c] : v.terms()) {
        Json slots = Json::array();
        for (const auto& e : k) {
            slots.push_back(to_json(e));
        }
        terms.push_back(Json{{"c", to_string(c)}, {"e", std::move(slots)}});
    }
    return Json{{"n", v.n()}, {"m", v.arity()}, {"terms", std::move(terms)}};
}

Json to_json(const CheckReport& r)
{
    Json out;
    out["passed"] = r.passed;
    out["defect"] = r.defect ? to_json(*r.defect) : Json(nullptr);
    out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    out["description"] = r.description;
    return out;
}

std::string serialize(const Json& j)
{
    return j.dump() + "\n";
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
}

namespace {

void require_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> allowed)
{
    if (!j.is_object()) {
        throw ParseError(where, "expected an object");
    }
    for (const char* k : required) {
        if (!j.contains(k)) {
            throw ParseError(where, std::string("missing key '") + k + "'");
        }
    }
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed) {
            ok = ok || item.key() == k;
        }
        if (!ok) {
            throw ParseError(where, "unexpected key '" + item.key() + "'");
        }
    }
}

Rational parse_rational_at(const Json& j, const std::string& where)
{
    if (!j.is_string()) {
        throw ParseError(where, "expected a rational string");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where, e.what());
    }
}

std::size_t parse_n(const Json& j)
{
    const Json& n = j.at("n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
        throw ParseError("n", "expected a positive integer");
    }
    return n.get<std::size_t>();
}

Exponent parse_exponent(const Json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array()) {
        throw ParseError(where, "expected an array of rationals");
    }
    if (j.size() != 2 * n) {
        throw ParseError(where, "expected " + std::to_string(2 * n) + " coordinates, got " + std::to_string(j.size()));
    }
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        coords.push_back(parse_rational_at(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return Exponent(std::move(coords));
}

Rational parse_coefficient(const Json& term, const std::string& where)
{
    Rational c = parse_rational_at(term.at("c"), where + ".c");
    if (c == 0) {
        throw ParseError(where + ".c", "zero coefficient");
    }
    return c;
}

const Json& terms_array(const Json& j)
{
    const Json& terms = j.at("terms");
    if (!terms.is_array()) {
        throw ParseError("terms", "expected an array");
    }
    return terms;
}

template <class Flavor>
BasicElement<Flavor> parse_element(const Json& j)
{
    require_keys(j, "", {"n", "terms"}, {"n", "terms"});
    const std::size_t n = parse_n(j);
    BasicElement<Flavor> out(n);
    const Json& terms = terms_array(j);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = "terms[" + std::to_string(i) + "]";
        require_keys(terms[i], where, {"c", "e"}, {"c", "e"});
        const Rational c = parse_coefficient(terms[i], where);
        Exponent e = parse_exponent(terms[i].at("e"), n, where + ".e");
        if (!Flavor::keeps_unit && e.is_zero()) {
            throw ParseError(where + ".e", "zero exponent is not an element of H");
        }
        if (out.terms().count(e)) {
            throw ParseError(where + ".e", "duplicate exponent");
        }
        out.add_term(e, c);
    }
    return out;
}

} // namespace

BarElement parse_bar_element(const Json& j)
{
    return parse_element<BarFlavor>(j);
}

HElement parse_h_element(const Json& j)
{
    return parse_element<HFlavor>(j);
}

TensorElement parse_tensor(const Json& j)
{
    require_keys(j, "", {"n", "m", "terms"}, {"n", "m", "terms"});
    const std::size_t n = parse_n(j);
    const Json& mj = j.at("m");
    if (!mj.is_number_unsigned() || mj.get<std::size_t>() == 0) {
        throw ParseError("m", "expected a positive integer");
    }
    const std::size_t m = mj.get<std::size_t>();
    TensorElement out(n, m);
    const Json& terms = terms_array(j);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = "terms[" + std::to_string(i) + "]";
        require_keys(terms[i], where, {"c", "e"}, {"c", "e"});
        const Rational c = parse_coefficient(terms[i], where);
        const Json& slots = terms[i].at("e");
        if (!slots.is_array() || slots.size() != m) {
            throw ParseError(where + ".e", "expected " + std::to_string(m) + " exponent arrays");
        }
        TensorKey key;
        for (std::size_t s = 0; s < m; ++s) {
            const std::string at = where + ".e[" + std::to_string(s) + "]";
            key.push_back(parse_exponent(slots[s], n, at));
            if (key.back().is_zero()) {
                throw ParseError(at, "zero exponent is not an element of H");
            }
        }
        if (out.terms().count(key)) {
            throw ParseError(where + ".e", "duplicate exponent tuple");
        }
        out.add_term(key, c);
    }
    return out;
}

Document parse_document(std::string_view text)
{
    const Json j = parse_json(text);
    try {
        if (j.is_object() && j.contains("m")) {
            return parse_tensor(j);
        }
        return parse_bar_element(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("", std::string("schema error: ") + e.what());
    }
}

std::size_t ambient_n(const Document& d)
{
    return std::visit([](const auto& x) { return x.n(); }, d);
}

} // namespace hamlie
