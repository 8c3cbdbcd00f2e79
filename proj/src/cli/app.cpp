#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weilalg/cli.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::IOError, "cannot read " + path);
    ss << f.rdbuf();
    return ss.str();
}

InputDocument load_document(const std::string& path, std::istream& in, bool monic) {
    InputDocument doc = parse_document(read_source(path, in));
    if (monic) {
        for (auto& p : doc.l_polynomials) {
            try {
                p = to_l_polynomial(p);
            } catch (const Error& e) {
                throw ParseError(1, 1, std::string("--monic: ") + e.what());
            }
        }
    }
    return doc;
}

int exit_code_for(const Error& e) {
    return (e.code() == Errc::ParseError || e.code() == Errc::IOError) ? kExitParse : kExitDomain;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of zeta data of varieties over finite fields", "weilalg"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, monic = false;
    std::string input;
    app.add_flag("--json", json, "Emit one JSON report");
    app.add_option("--input", input, "Input document; - or absent reads stdin");
    app.add_flag("--monic", monic, "Polynomials are monic characteristic polynomials");
    app.set_version_flag("--version", "weilalg 1.0");

    auto* verify = app.add_subcommand("verify", "Check every P_i for the Weil property and weight i");
    auto* aqalg = app.add_subcommand("aqalg", "Algebra of correspondences at the generic point");
    unsigned aq_n = 0;
    auto* aq_n_opt = aqalg->add_option("--n", aq_n, "Cohomological degree to use instead of the middle one");
    auto* filtration = app.add_subcommand("filtration", "Coniveau and slope filtrations per degree");
    std::string level_text;
    filtration->add_option("--r", level_text, "Level r (integer or a/b)")->required();
    auto* honda = app.add_subcommand("honda", "Honda-Tate data of one polynomial");
    long honda_q = 0;
    std::string poly_text;
    unsigned honda_m = 0;
    honda->add_option("--q", honda_q, "Base field size")->required();
    honda->add_option("--poly", poly_text, "Coefficients, ascending, comma separated")->required();
    auto* honda_m_opt = honda->add_option("--m", honda_m, "Restriction / m-th root degree")->check(CLI::PositiveNumber);
    auto* idem = app.add_subcommand("idempotents", "Kunneth idempotents modulo prod C_i");
    auto* product = app.add_subcommand("zeta-product", "Zeta data of a product");
    std::string left, right;
    product->add_option("a", left, "First document")->required();
    product->add_option("b", right, "Second document")->required();
    auto* ingest = app.add_subcommand("ingest", "Convert JSON-lines isogeny records to documents");
    std::string ingest_path;
    ingest->add_option("path", ingest_path, "Records file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Report r;
        if (verify->parsed()) {
            r = cmd_verify(load_document(input, in, monic));
        } else if (aqalg->parsed()) {
            std::optional<unsigned> w;
            if (aq_n_opt->count() > 0) w = aq_n;
            r = cmd_aqalg(load_document(input, in, monic), w);
        } else if (filtration->parsed()) {
            Rational level;
            if (level.set_str(level_text, 10) != 0 || level.get_den() == 0)
                throw ParseError(1, 1, "--r: bad rational \"" + level_text + "\"");
            level.canonicalize();
            r = cmd_filtration(load_document(input, in, monic), level);
        } else if (honda->parsed()) {
            PrimePower q;
            try {
                q = PrimePower::from_q(Integer(honda_q));
            } catch (const Error& e) {
                throw ParseError(1, 1, std::string("--q: ") + e.what());
            }
            std::optional<unsigned> m;
            if (honda_m_opt->count() > 0) m = honda_m;
            r = cmd_honda(parse_coeff_list(poly_text), q, monic, m);
        } else if (idem->parsed()) {
            r = cmd_idempotents(load_document(input, in, monic));
        } else if (product->parsed()) {
            r = cmd_zeta_product(load_document(left, in, monic), load_document(right, in, monic));
        } else if (ingest->parsed()) {
            const IngestResult res = ingest_isogeny_file(ingest_path);
            r = cmd_ingest(res);
            for (const auto& d : res.diagnostics) err << "line " << d.line << ": " << d.message << "\n";
            if (!res.diagnostics.empty())
                err << "warning: " << res.diagnostics.size() << " malformed record(s) skipped\n";
        }
        r.json["exit_code"] = r.exit_code;
        if (json) out << r.json.dump(2) << "\n";
        else out << r.text;
        return r.exit_code;
    } catch (const Error& e) {
        const int code = exit_code_for(e);
        if (json) {
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["command"] = command;
            j["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
            if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
                j["error"]["line"] = pe->line();
                j["error"]["column"] = pe->column();
            }
            j["exit_code"] = code;
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return code;
    }
}

}  // namespace weilalg::cli
