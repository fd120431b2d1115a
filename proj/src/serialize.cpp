#include "jm/serialize.hpp"

#include <stdexcept>

namespace jm {

Json to_json(const Rational& x) { return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

Json to_json(const IntPolynomial& p)
{
    Json a = Json::array();
    for (const auto& c : p.coefficients()) {
        a.push_back(c.get_str());
    }
    return a;
}

Json to_json(const MomentFunction& m)
{
    return Json{{"r", m.r},
                {"X", to_json(m.X)},
                {"Y", to_json(m.Y)},
                {"Y_factored", factored_denominator(m.r)},
                {"degree", m.X.degree()}};
}

Json to_json(const DerivedMomentFunction& m)
{
    return Json{{"h", m.h},
                {"kind", to_string(m.kind)},
                {"numerator", to_json(m.numerator)},
                {"denominator", to_json(m.denominator)},
                {"denominator_factored", factored_denominator(2 * m.h)},
                {"constant", to_json(m.constant)},
                {"expected_constant", to_json(m.expected_constant)},
                {"constant_matches", m.constant_matches},
                {"degree", m.numerator.degree()}};
}

Json to_json(const RealRoot& r)
{
    return Json{{"value", r.value},
                {"error_bound", r.error_bound},
                {"exact", r.exact},
                {"interval", Json{{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}}}};
}

Json to_json(const ComplexRoot& r) { return Json{{"re", r.re}, {"im", r.im}, {"radius", r.radius}}; }

Json to_json(const RootReport& r)
{
    Json roots = Json::array();
    for (const auto& x : r.roots) {
        roots.push_back(to_json(x));
    }
    Json complex = Json::array();
    for (const auto& x : r.complex_roots) {
        complex.push_back(to_json(x));
    }
    Json j{{"h", r.h},
           {"degree", r.degree},
           {"square_free_degree", r.square_free_degree},
           {"repeated_roots", r.repeated_roots},
           {"real_root_count", r.real_root_count},
           {"complex_pair_count", r.complex_pair_count},
           {"symmetric", r.symmetric},
           {"largest", r.largest ? to_json(*r.largest) : Json()},
           {"roots", roots},
           {"complex_roots", complex}};
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string()) {
        throw std::invalid_argument("rational must be {\"num\": string, \"den\": string}");
    }
    return make_rational(parse_integer(j["num"].get<std::string>()), parse_integer(j["den"].get<std::string>()));
}

IntPolynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial must be an array of decimal strings");
    }
    std::vector<Integer> c;
    for (const auto& x : j) {
        if (!x.is_string()) {
            throw std::invalid_argument("polynomial coefficients must be strings");
        }
        c.push_back(parse_integer(x.get<std::string>()));
    }
    return IntPolynomial(std::move(c));
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

} // namespace jm
