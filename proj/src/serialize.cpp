#include "bandet/serialize.hpp"

#include <algorithm>
#include <cctype>

namespace bandet {

using nlohmann::json;

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw InvalidArgumentError("not a decimal integer: '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
            throw InvalidArgumentError("not a decimal integer: '" + text + "'");
        }
    }
    // cpp_int reads a leading 0 as an octal prefix
    const std::size_t first_digit = std::min(text.find_first_not_of('0', start), text.size() - 1);
    Integer v(text.substr(first_digit));
    return text[0] == '-' ? Integer(-v) : v;
}

json to_json(const RingElement& x) {
    if (x.is_integer()) {
        return x.as_integer().str();
    }
    json arr = json::array();
    for (const auto& c : x.as_poly().coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

RingElement ring_from_json(const json& j) {
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    if (j.is_array()) {
        std::vector<Integer> coeffs;
        for (const auto& c : j) {
            if (!c.is_string()) {
                throw InvalidArgumentError("polynomial coefficients must be decimal strings");
            }
            coeffs.push_back(parse_integer(c.get<std::string>()));
        }
        Poly p(std::move(coeffs));
        if (p.coeffs().size() != j.size()) {
            throw InvalidArgumentError("polynomial has trailing zero coefficients");
        }
        return p;
    }
    throw InvalidArgumentError("ring element must be a string or an array of strings");
}

json to_json(const BandSpec& spec) {
    return json{{"n", spec.n()}, {"k", spec.k()}, {"l", spec.l()}, {"a", to_json(spec.a())}, {"b", to_json(spec.b())}};
}

BandSpec band_spec_from_json(const json& j) {
    if (!j.is_object()) {
        throw InvalidArgumentError("band spec must be a JSON object");
    }
    for (const char* key : {"n", "k", "l", "a", "b"}) {
        if (!j.contains(key)) {
            throw InvalidArgumentError(std::string("band spec is missing '") + key + "'");
        }
    }
    for (const char* key : {"n", "k", "l"}) {
        if (!j.at(key).is_number_integer()) {
            throw InvalidArgumentError(std::string("band spec field '") + key + "' must be an integer");
        }
    }
    return BandSpec::make(j.at("n").get<std::int64_t>(), j.at("k").get<std::int64_t>(), j.at("l").get<std::int64_t>(),
                          ring_from_json(j.at("a")), ring_from_json(j.at("b")));
}

json to_json(const CensusRow& row) {
    return json{{"n", row.n},
                {"per", row.per.str()},
                {"det", row.det.str()},
                {"even", row.even.str()},
                {"odd", row.odd.str()}};
}

CensusRow census_row_from_json(const json& j) {
    CensusRow row;
    try {
        row.n = j.at("n").get<std::int64_t>();
        row.per = parse_integer(j.at("per").get<std::string>());
        row.det = parse_integer(j.at("det").get<std::string>());
        row.even = parse_integer(j.at("even").get<std::string>());
        row.odd = parse_integer(j.at("odd").get<std::string>());
    } catch (const json::exception& e) {
        throw InvalidArgumentError(std::string("malformed census row: ") + e.what());
    }
    return row;
}

json to_json(const Permutation& perm) { return json(perm); }

}  // namespace bandet
