#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

#include "weilalg/cli.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg::cli {

namespace {

constexpr unsigned kMaxGenus = 6;

[[noreturn]] void bad_record(const std::string& msg) { throw Error(Errc::ParseError, msg); }

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

}  // namespace

InputDocument document_from_record(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line.begin(), line.end());
    } catch (const nlohmann::json::parse_error& e) {
        bad_record("malformed JSON at column " + std::to_string(e.byte));
    }
    if (!j.is_object()) bad_record("record is not a JSON object");
    for (const char* key : {"label", "q", "g", "coeffs"})
        if (!j.contains(key)) bad_record(std::string("missing key \"") + key + "\"");
    if (!j["label"].is_string()) bad_record("label must be a string");
    if (!j["q"].is_number_integer() || j["q"].get<long long>() < 2) bad_record("q must be an integer >= 2");
    if (!j["g"].is_number_integer() || j["g"].get<long long>() < 1) bad_record("g must be a positive integer");
    const long long g = j["g"].get<long long>();
    if (g > kMaxGenus) bad_record("g = " + std::to_string(g) + " exceeds " + std::to_string(kMaxGenus));
    PrimePower base;
    try {
        base = PrimePower::from_q(Integer(std::to_string(j["q"].get<long long>())));
    } catch (const Error&) {
        bad_record("q is not a prime power");
    }
    const auto& cj = j["coeffs"];
    if (!cj.is_array()) bad_record("coeffs must be an array");
    std::vector<Rational> c;
    for (const auto& x : cj) {
        if (!x.is_number_integer()) bad_record("coeffs must be integers");
        c.emplace_back(Integer(std::to_string(x.get<long long>())));
    }
    const auto expected = static_cast<std::size_t>(2 * g + 1);
    if (c.size() != expected || c.back() == 0)
        bad_record("coeffs must have degree 2g = " + std::to_string(2 * g) + ", got " + std::to_string(c.size()) +
                   " entries");
    if (c.front() != 1) bad_record("constant coefficient must be 1");

    const Polynomial l1(c);
    const Polynomial c1 = reciprocal_transform(l1, l1.degree());
    InputDocument doc{base.q, base.p, static_cast<unsigned>(g), {Polynomial{1, -1}}, {j["label"].get<std::string>()}};
    for (unsigned i = 1; i <= 2 * g; ++i) doc.l_polynomials.push_back(to_l_polynomial(exterior_charpoly(c1, i)));
    return doc;
}

IngestResult ingest_isogeny_text(std::string_view text, unsigned threads) {
    const auto lines = split_lines(text);
    using Outcome = std::variant<std::monostate, InputDocument, std::string>;
    std::vector<Outcome> outcomes(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            if (blank(lines[i])) continue;
            try {
                outcomes[i] = document_from_record(lines[i]);
            } catch (const std::exception& e) {
                outcomes[i] = std::string(e.what());
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, lines.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    IngestResult out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (auto* doc = std::get_if<InputDocument>(&outcomes[i])) out.documents.push_back(std::move(*doc));
        else if (auto* msg = std::get_if<std::string>(&outcomes[i])) out.diagnostics.push_back({i + 1, *msg});
    }
    return out;
}

IngestResult ingest_isogeny_file(const std::string& path, unsigned threads) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IOError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ingest_isogeny_text(ss.str(), threads);
}

Report cmd_ingest(const IngestResult& result) {
    Report r;
    r.json["schema_version"] = kSchemaVersion;
    r.json["command"] = "ingest";
    Json docs = Json::array();
    std::ostringstream os;
    for (const auto& d : result.documents) {
        docs.push_back(document_to_json(d));
        os << serialize_document(d);
    }
    Json diags = Json::array();
    for (const auto& d : result.diagnostics) diags.push_back({{"line", d.line}, {"message", d.message}});
    r.json["documents"] = docs;
    r.json["diagnostics"] = diags;
    r.text = os.str();
    return r;
}

}  // namespace weilalg::cli
