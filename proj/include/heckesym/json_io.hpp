#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "heckesym/admissible.hpp"
#include "heckesym/errors.hpp"
#include "heckesym/hecke_algebra.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/symfunc.hpp"

// Schemas:
//   Laurent          {"<v-exponent>": coefficient, ...}; integers stay JSON
//                    numbers, non-integral rationals are "p/q" strings.
//   SymmetricFunction {"basis": "h", "degree": 4,
//                      "terms": [{"partition": [2,2], "coeff": Laurent}, ...]}
//   HeckeElement     {"n": 4, "terms": [{"perm": "2341", "coeff": Laurent}, ...]}
//   AdmissibleSequence [{"J": [1,3], "w": "1324"}, {"J": [], "w": "3142"}]

namespace heckesym {

using Json = nlohmann::json;

namespace detail {

inline Json rational_to_json(const Rational& r) {
    if (is_integer(r)) {
        const BigInt& num = boost::multiprecision::numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
            return num.convert_to<std::int64_t>();
    }
    return r.str();
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

inline int exponent_key(const std::string& k) {
    try {
        std::size_t used = 0;
        int e = std::stoi(k, &used);
        if (used != k.size()) throw ParseError("bad exponent key '" + k + "'");
        return e;
    } catch (const std::logic_error&) {
        throw ParseError("bad exponent key '" + k + "'");
    }
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace detail

template <class C>
Json to_json(const Laurent<C>& a) {
    Json j = Json::object();
    for (const auto& [e, c] : a.terms()) j[std::to_string(e)] = detail::rational_to_json(Rational(c));
    return j;
}

inline RationalLaurent rational_laurent_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("Laurent polynomial must be a JSON object");
    std::map<int, Rational> m;
    for (const auto& [k, v] : j.items()) m[detail::exponent_key(k)] += detail::rational_from_json(v);
    return RationalLaurent::from_map(m);
}

inline LaurentScalar laurent_from_json(const Json& j) {
    std::map<int, std::int64_t> m;
    for (const auto& [e, c] : rational_laurent_from_json(j).terms()) {
        if (!is_integer(c)) throw ParseError("expected integer coefficients");
        m[e] = to_int64(c);
    }
    return LaurentScalar::from_map(m);
}

inline Json to_json(const SymmetricFunction& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) terms.push_back({{"partition", lambda.parts()}, {"coeff", to_json(c)}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"degree", f.degree()}, {"terms", terms}};
}

inline SymmetricFunction symfunc_from_json(const Json& j) {
    try {
        SymmetricFunction f(parse_basis(detail::field(j, "basis").get<std::string>()), detail::field(j, "degree").get<int>());
        for (const auto& t : detail::field(j, "terms"))
            f.add_term(Partition(detail::field(t, "partition").get<std::vector<int>>()), rational_laurent_from_json(detail::field(t, "coeff")));
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("symmetric function JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("symmetric function JSON: ") + e.what());
    }
}

inline Json to_json(const HeckeElement& a) {
    Json terms = Json::array();
    for (const auto& [w, c] : a.terms()) terms.push_back({{"perm", w.to_string()}, {"coeff", to_json(c)}});
    return {{"n", a.rank()}, {"terms", terms}};
}

inline HeckeElement hecke_from_json(const Json& j) {
    try {
        const int n = detail::field(j, "n").get<int>();
        HeckeElement a(n);
        for (const auto& t : detail::field(j, "terms")) {
            Permutation w = Permutation::parse(detail::field(t, "perm").get<std::string>());
            if (w.size() != n) throw ParseError("permutation " + w.to_string() + " has the wrong rank");
            a.add(w, laurent_from_json(detail::field(t, "coeff")));
        }
        return a;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("Hecke element JSON: ") + e.what());
    }
}

inline Json to_json(const SimpleSubset& J) { return J.members(); }

inline Json to_json(const AdmissibleSequence& seq) {
    Json out = Json::array();
    for (const auto& [J, w] : seq) out.push_back({{"J", to_json(J)}, {"w", w.to_string()}});
    return out;
}

inline AdmissibleSequence admissible_from_json(const Json& j) {
    try {
        if (!j.is_array() || j.empty()) throw ParseError("admissible sequence must be a non-empty array");
        AdmissibleSequence seq;
        for (const auto& pair : j) {
            Permutation w = Permutation::parse(detail::field(pair, "w").get<std::string>());
            seq.push_back({SimpleSubset(w.size(), detail::field(pair, "J").get<std::vector<int>>()), w});
        }
        return seq;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("admissible sequence JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("admissible sequence JSON: ") + e.what());
    }
}

}  // namespace heckesym
