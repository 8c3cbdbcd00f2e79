#include <algorithm>
#include <limits>

#include "weilalg/cli.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg::cli {

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of_offset(std::string_view text, std::size_t offset) {
    Position pos;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

/// Position of the first occurrence of "key" as a JSON key, else 1:1.
Position position_of_key(std::string_view text, const std::string& key) {
    const std::string quoted = "\"" + key + "\"";
    const auto at = text.find(quoted);
    return at == std::string_view::npos ? Position{} : position_of_offset(text, at);
}

[[noreturn]] void fail_at(std::string_view text, const std::string& key, const std::string& msg) {
    const Position pos = position_of_key(text, key);
    throw ParseError(pos.line, pos.column, msg);
}

bool fits_int64(const Integer& x) {
    return x >= Integer(std::numeric_limits<long>::min()) && x <= Integer(std::numeric_limits<long>::max());
}

std::optional<Integer> json_integer(const nlohmann::json& v) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    return std::nullopt;
}

std::optional<Rational> json_coeff(const nlohmann::json& v) {
    if (auto i = json_integer(v)) return Rational(*i);
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) return std::nullopt;
    Integer num, den;
    if (num.set_str(v[0].get<std::string>(), 10) != 0 || den.set_str(v[1].get<std::string>(), 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

std::string rational_text(const Rational& r) { return weilalg::to_string(r); }

Json coeff_to_json(const Rational& c) {
    if (c.get_den() == 1 && fits_int64(c.get_num())) return Json(c.get_num().get_si());
    return Json::array({c.get_num().get_str(), c.get_den().get_str()});
}

Json poly_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(coeff_to_json(c));
    return out;
}

InputDocument parse_document(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        const Position pos = position_of_offset(text, offset);
        throw ParseError(pos.line, pos.column, "malformed JSON");
    }
    if (!j.is_object()) throw ParseError(1, 1, "expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "q" && key != "p" && key != "n" && key != "l_polynomials" && key != "labels")
            fail_at(text, key, "unknown key \"" + key + "\"");
    }
    for (const char* key : {"q", "p", "n", "l_polynomials"})
        if (!j.contains(key)) throw ParseError(1, 1, std::string("missing key \"") + key + "\"");

    InputDocument doc;
    auto q = json_integer(j["q"]);
    auto p = json_integer(j["p"]);
    auto n = json_integer(j["n"]);
    if (!q || *q < 2) fail_at(text, "q", "q must be an integer >= 2");
    if (!p || *p < 2) fail_at(text, "p", "p must be an integer >= 2");
    if (!n || *n < 0 || *n > 64) fail_at(text, "n", "n must be an integer in [0, 64]");
    doc.q = *q;
    doc.p = *p;
    doc.n = static_cast<unsigned>(n->get_ui());
    try {
        const PrimePower b = PrimePower::from_q(doc.q);
        if (b.p != doc.p) fail_at(text, "p", "q = " + doc.q.get_str() + " is not a power of p = " + doc.p.get_str());
    } catch (const ParseError&) {
        throw;
    } catch (const Error&) {
        fail_at(text, "q", "q = " + doc.q.get_str() + " is not a prime power");
    }

    const auto& polys = j["l_polynomials"];
    if (!polys.is_array()) fail_at(text, "l_polynomials", "l_polynomials must be an array");
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& pj = polys[i];
        if (!pj.is_array() || pj.empty())
            fail_at(text, "l_polynomials", "l_polynomials[" + std::to_string(i) + "] must be a non-empty array");
        std::vector<Rational> c;
        for (std::size_t k = 0; k < pj.size(); ++k) {
            auto x = json_coeff(pj[k]);
            if (!x)
                fail_at(text, "l_polynomials", "l_polynomials[" + std::to_string(i) + "][" + std::to_string(k) +
                                                   "] is not an integer or [\"num\", \"den\"] pair");
            c.push_back(*x);
        }
        doc.l_polynomials.emplace_back(c);
    }
    if (j.contains("labels")) {
        const auto& lj = j["labels"];
        if (!lj.is_array()) fail_at(text, "labels", "labels must be an array of strings");
        for (const auto& l : lj) {
            if (!l.is_string()) fail_at(text, "labels", "labels must be an array of strings");
            doc.labels.push_back(l.get<std::string>());
        }
    }
    return doc;
}

Json document_to_json(const InputDocument& doc) {
    Json j;
    j["q"] = coeff_to_json(Rational(doc.q));
    j["p"] = coeff_to_json(Rational(doc.p));
    j["n"] = doc.n;
    Json polys = Json::array();
    for (const auto& l : doc.l_polynomials) polys.push_back(poly_to_json(l));
    j["l_polynomials"] = polys;
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j;
}

std::string serialize_document(const InputDocument& doc) { return document_to_json(doc).dump() + "\n"; }

ZetaData to_zeta(const InputDocument& doc) {
    PrimePower b;
    try {
        b = PrimePower::from_q(doc.q);
    } catch (const Error&) {
        throw ParseError(1, 1, "q = " + doc.q.get_str() + " is not a prime power");
    }
    if (b.p != doc.p) throw ParseError(1, 1, "q is not a power of p");
    return ZetaData{b, doc.n, doc.l_polynomials};
}

InputDocument from_zeta(const ZetaData& z, std::vector<std::string> labels) {
    return InputDocument{z.base.q, z.base.p, z.dim_n, z.l_polys, std::move(labels)};
}

Polynomial parse_coeff_list(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '[' || ch == ']'; }), s.end());
    std::vector<Rational> c;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        const std::string tok = s.substr(start, end - start);
        Rational r;
        if (tok.empty() || r.set_str(tok, 10) != 0 || r.get_den() == 0)
            throw ParseError(1, start + 1, "bad coefficient \"" + tok + "\"");
        r.canonicalize();
        c.push_back(r);
        start = end + 1;
    }
    return Polynomial(c);
}

}  // namespace weilalg::cli
