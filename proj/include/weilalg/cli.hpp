#pragma once

// Command-line surface: the JSON input format, isogeny-record ingestion and
// the subcommands, each producing a human-readable table and a JSON report.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weilalg/motives.hpp"

namespace weilalg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

/// Zeta data as supplied by the user: L-polynomials (constant term 1),
/// ascending coefficients.
struct InputDocument {
    Integer q;
    Integer p;
    unsigned n = 0;
    std::vector<Polynomial> l_polynomials;
    std::vector<std::string> labels;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Integers in the int64 range become JSON numbers, everything else
/// ["num", "den"].
Json coeff_to_json(const Rational& c);
Json poly_to_json(const Polynomial& p);
/// "a/b", or "a" for integers.
std::string rational_text(const Rational& r);

/// Throws ParseError. Syntax errors carry the line and column where the
/// parser stopped; schema errors point at the key of the offending field.
InputDocument parse_document(std::string_view text);
Json document_to_json(const InputDocument& doc);
/// Canonical form: compact JSON on one line followed by a newline.
std::string serialize_document(const InputDocument& doc);

/// Throws ParseError when q is not a power of p.
ZetaData to_zeta(const InputDocument& doc);
InputDocument from_zeta(const ZetaData& z, std::vector<std::string> labels = {});

/// Parses "1,-1,2" or "[1,-1,2]" (ascending; entries may be "a/b").
Polynomial parse_coeff_list(std::string_view text);

struct Report {
    Json json;
    std::string text;
    int exit_code = kExitOk;
};

Report cmd_verify(const InputDocument& doc);
/// Algebra built from degree `weight`; the middle degree n by default.
Report cmd_aqalg(const InputDocument& doc, std::optional<unsigned> weight = std::nullopt);
Report cmd_filtration(const InputDocument& doc, const Rational& r);
/// `poly` is an L-polynomial unless `monic` is set.
Report cmd_honda(const Polynomial& poly, const PrimePower& q, bool monic, std::optional<unsigned> m);
Report cmd_idempotents(const InputDocument& doc);
Report cmd_zeta_product(const InputDocument& a, const InputDocument& b);

struct Diagnostic {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct IngestResult {
    std::vector<InputDocument> documents;
    std::vector<Diagnostic> diagnostics;
};

/// One JSON-lines isogeny record to zeta data of the abelian variety:
/// P_i = Lambda^i of the H^1 data, n = g.
InputDocument document_from_record(std::string_view line);

/// Records are processed concurrently; documents keep the input order.
IngestResult ingest_isogeny_text(std::string_view text, unsigned threads = 0);
/// Throws Error(Errc::IOError) when the file cannot be read.
IngestResult ingest_isogeny_file(const std::string& path, unsigned threads = 0);
Report cmd_ingest(const IngestResult& result);

/// Entry point of the weilalg executable.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace weilalg::cli
