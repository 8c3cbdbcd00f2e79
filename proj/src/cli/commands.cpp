#include <sstream>

#include "weilalg/cli.hpp"
#include "weilalg/endalg.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/padic.hpp"
#include "weilalg/weil.hpp"

namespace weilalg::cli {

namespace {

Json header(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json polygon_to_json(const NewtonPolygon& np) {
    Json out = Json::array();
    for (const auto& s : np.segments) out.push_back({{"slope", rational_text(s.slope)}, {"multiplicity", s.multiplicity}});
    return out;
}

std::string polygon_text(const NewtonPolygon& np) {
    if (np.segments.empty()) return "-";
    std::string out;
    for (const auto& s : np.segments) {
        if (!out.empty()) out += " ";
        out += rational_text(s.slope) + "^" + std::to_string(s.multiplicity);
    }
    return out;
}

Json block_to_json(const CSAData& b) {
    Json j;
    j["center"] = poly_to_json(b.center_poly);
    j["center_degree"] = b.orbit_size;
    j["r"] = b.matrix_size_r;
    j["e"] = b.index_e;
    j["real_places"] = b.real_places;
    j["real_invariant"] = rational_text(b.real_invariant);
    Json fin = Json::array();
    for (const auto& f : b.finite_invariants)
        fin.push_back({{"slope", rational_text(f.place.slope)},
                       {"local_degree", f.place.local_degree},
                       {"invariant", rational_text(f.invariant)}});
    j["finite_invariants"] = fin;
    j["invariant_sum"] = rational_text(b.invariant_sum());
    return j;
}

}  // namespace

Report cmd_verify(const InputDocument& doc) {
    const ZetaData z = to_zeta(doc);
    const ZetaReport rep = validate_zeta(z);
    Report r;
    r.json = header("verify");
    r.json["input"] = document_to_json(doc);
    std::ostringstream os;
    os << "q = " << doc.q << ", n = " << doc.n << "\n";
    os << "  i  deg  weight  status\n";
    Json degrees = Json::array();
    for (const auto& d : rep.degrees) {
        const int deg = z.l_polys[d.degree].degree();
        Json dj{{"i", d.degree}, {"degree", deg}, {"ok", d.ok}};
        dj["weight"] = d.ok ? Json(d.degree) : Json(nullptr);
        dj["failures"] = d.failures;
        degrees.push_back(dj);
        os << "  " << d.degree << "  " << deg << "    " << (d.ok ? std::to_string(d.degree) : "-") << "       "
           << (d.ok ? "ok" : "FAIL " + d.failures.front()) << "\n";
    }
    r.json["degrees"] = degrees;
    r.json["shape_ok"] = rep.shape_ok;
    r.json["endpoints_ok"] = rep.endpoints_ok;
    r.json["coprime_ok"] = rep.coprime_ok;
    r.json["failures"] = rep.failures;
    r.json["ok"] = rep.ok;
    for (const auto& f : rep.failures)
        if (f.rfind("degree ", 0) != 0) os << "FAIL " << f << "\n";
    os << (rep.ok ? "all degrees verified" : "verification failed") << "\n";
    r.text = os.str();
    r.exit_code = rep.ok ? kExitOk : kExitDomain;
    return r;
}

Report cmd_aqalg(const InputDocument& doc, std::optional<unsigned> weight) {
    const ZetaData z = to_zeta(doc);
    const unsigned w = weight.value_or(z.dim_n);
    const AlgebraDescription a = compute_A(z, w);
    Report r;
    r.json = header("aqalg");
    r.json["input"] = document_to_json(doc);
    r.json["weight"] = w;
    Json blocks = Json::array();
    for (const auto& b : a.blocks) blocks.push_back(block_to_json(b));
    r.json["blocks"] = blocks;
    const Integer dim = dimension(a);
    const unsigned rank = rank_from_algebra(a);
    r.json["zero"] = a.is_zero();
    r.json["dimension"] = coeff_to_json(Rational(dim));
    r.json["rank"] = rank;

    std::ostringstream os;
    os << "q = " << doc.q << ", weight " << w << "\n";
    if (a.is_zero()) {
        os << "A(X) = 0\n";
    } else if (dim == 1) {
        os << "A = Q\n";
    }
    for (std::size_t j = 0; j < a.blocks.size(); ++j) {
        const auto& b = a.blocks[j];
        os << "block " << j << ": M_" << b.matrix_size_r << "(D), center Q[T]/(" << b.center_poly.to_string()
           << "), degree " << b.orbit_size << ", e = " << b.index_e << "\n";
        for (const auto& f : b.finite_invariants)
            os << "  place slope " << rational_text(f.place.slope) << ", local degree " << f.place.local_degree
               << ": inv " << rational_text(f.invariant) << "\n";
        if (b.real_places > 0)
            os << "  " << b.real_places << " real place(s): inv " << rational_text(b.real_invariant) << "\n";
        os << "  invariant sum " << rational_text(b.invariant_sum()) << "\n";
    }
    os << "dim_Q A = " << dim << "\nrank = " << rank << "\n";
    r.text = os.str();
    return r;
}

Report cmd_filtration(const InputDocument& doc, const Rational& level) {
    const ZetaData z = to_zeta(doc);
    const Motive m = motive_of(z);
    const bool integral = level.get_den() == 1;
    Report r;
    r.json = header("filtration");
    r.json["input"] = document_to_json(doc);
    r.json["r"] = rational_text(level);
    std::ostringstream os;
    os << "q = " << doc.q << ", r = " << rational_text(level) << "\n";
    os << "  i  dim  F^r  slope>=r  newton polygon\n";
    Json rows = Json::array();
    for (unsigned i = 0; i <= 2 * z.dim_n; ++i) {
        const TateStructure* part = m.part(static_cast<int>(i));
        unsigned dim = 0, coniveau = 0, sloped = 0;
        NewtonPolygon np;
        if (part) {
            dim = part->dimension();
            sloped = slope_filtration_dim(*part, level);
            if (integral && level >= 0) {
                coniveau = coniveau_sub(*part, level.get_num().get_si()).dimension();
            } else {
                // Orbits all of whose slopes are at least r.
                for (const auto& op : part->parts)
                    if (newton_polygon(op.orbit.min_poly, z.base).min_slope() >= level)
                        coniveau += op.multiplicity * op.orbit.degree();
            }
            np = newton_polygon(part->charpoly(), z.base);
        }
        rows.push_back({{"i", i},
                        {"dimension", dim},
                        {"coniveau_dim", coniveau},
                        {"slope_dim", sloped},
                        {"newton_polygon", polygon_to_json(np)}});
        os << "  " << i << "  " << dim << "    " << coniveau << "    " << sloped << "         " << polygon_text(np)
           << "\n";
    }
    r.json["degrees"] = rows;
    r.text = os.str();
    return r;
}

Report cmd_honda(const Polynomial& poly, const PrimePower& q, bool monic, std::optional<unsigned> m) {
    const Polynomial c = monic ? poly : reciprocal_transform(poly, poly.degree());
    const int weight = verify_weil(c, q);
    Report r;
    r.json = header("honda");
    r.json["q"] = coeff_to_json(Rational(q.q));
    r.json["polynomial"] = poly_to_json(c);
    r.json["weight"] = weight;
    std::ostringstream os;
    os << "P = " << c.to_string() << " over q = " << q.q << "\nweight " << weight << "\n";

    Json orbits = Json::array();
    for (const auto& f : factor_rational_poly(c).factors) {
        const WeilOrbit o = WeilOrbit::make(f.poly, q);
        Json oj{{"min_poly", poly_to_json(f.poly)}, {"multiplicity", f.multiplicity}};
        os << "orbit " << f.poly.to_string();
        if (f.multiplicity > 1) os << " (multiplicity " << f.multiplicity << ")";
        if (o.weight == 1 && is_effective(o)) {
            const unsigned g = honda_tate_dimension(o);
            oj["g"] = g;
            os << ": g = " << g;
        } else {
            oj["g"] = nullptr;
        }
        os << "\n";
        orbits.push_back(oj);
    }
    r.json["orbits"] = orbits;

    if (m) {
        r.json["m"] = *m;
        const Polynomial restricted = c.compose_power(*m);
        r.json["restricted"] = poly_to_json(restricted);
        os << "P(T^" << *m << ") = " << restricted.to_string() << "\n";
        bool used = false;
        if (*m > 0 && q.a % *m == 0) {
            weil_restriction_charpoly(c, q, *m);
            const PrimePower lower = PrimePower::from_pa(q.p, q.a / *m);
            r.json["restricted_base"] = coeff_to_json(Rational(lower.q));
            os << "restriction of scalars to q = " << lower.q << "\n";
            used = true;
        } else {
            r.json["restricted_base"] = nullptr;
        }
        if (weight == static_cast<int>(*m)) {
            Json factors = Json::array();
            os << "weight-1 factors:";
            for (const auto& o : mth_root_factors(c, q, *m)) {
                factors.push_back(poly_to_json(o.min_poly));
                os << " (" << o.min_poly.to_string() << ")";
            }
            os << "\n";
            r.json["weight1_factors"] = factors;
            used = true;
        } else {
            r.json["weight1_factors"] = nullptr;
        }
        if (!used)
            throw Error(Errc::WeightMismatch, "m = " + std::to_string(*m) + " neither divides the exponent of q nor equals the weight");
    }
    r.text = os.str();
    return r;
}

Report cmd_idempotents(const InputDocument& doc) {
    const ZetaData z = to_zeta(doc);
    const auto ps = kunneth_idempotents(z);
    Polynomial modulus{1};
    for (unsigned i = 0; i < z.l_polys.size(); ++i) modulus = modulus * z.charpoly(i);
    Report r;
    r.json = header("idempotents");
    r.json["input"] = document_to_json(doc);
    r.json["modulus"] = poly_to_json(modulus);
    Json arr = Json::array();
    std::ostringstream os;
    os << "modulo " << modulus.to_string() << "\n";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        arr.push_back(poly_to_json(ps[i]));
        os << "P^" << i << " = " << ps[i].to_string() << "\n";
    }
    r.json["idempotents"] = arr;
    r.text = os.str();
    return r;
}

Report cmd_zeta_product(const InputDocument& a, const InputDocument& b) {
    const ZetaData z = zeta_product(to_zeta(a), to_zeta(b));
    std::vector<std::string> labels = a.labels;
    labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    const InputDocument prod = from_zeta(z, labels);
    Report r;
    r.json = header("zeta-product");
    r.json["inputs"] = Json::array({document_to_json(a), document_to_json(b)});
    r.json["product"] = document_to_json(prod);
    std::ostringstream os;
    os << "q = " << prod.q << ", n = " << prod.n << "\n";
    for (std::size_t i = 0; i < prod.l_polynomials.size(); ++i)
        os << "P_" << i << " = " << prod.l_polynomials[i].to_string() << "\n";
    r.text = os.str();
    return r;
}

}  // namespace weilalg::cli
