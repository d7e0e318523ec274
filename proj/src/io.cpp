#include "darboux/io.hpp"

#include "darboux/parse.hpp"

namespace darboux {

namespace {

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Json integer_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json string_array(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

Json level_to_json(const LevelReport& lvl, bool with_basis) {
    Json j;
    j["degree"] = lvl.degree;
    j["columns"] = lvl.columns;
    j["rows"] = lvl.rows;
    j["rank"] = lvl.rank;
    j["nullity"] = lvl.nullity();
    if (with_basis) {
        Json b = Json::array();
        for (const auto& p : lvl.basis) b.push_back(format(p));
        j["basis"] = std::move(b);
    }
    return j;
}

Json elimination_to_json(const EliminationReport& rep) {
    Json vars = Json::array();
    for (const auto& v : rep.variables) {
        Json e;
        e["variable"] = v.variable;
        e["exponent"] = v.exponent;
        e["eliminated"] = v.eliminated;
        vars.push_back(std::move(e));
    }
    return vars;
}

}  // namespace

QDerivation derivation_from_json(const Json& j) {
    try {
        const Json& vars = require_field(j, "vars");
        if (!vars.is_array()) throw ParseError("'vars' must be an array of names");
        std::vector<std::string> names;
        for (const auto& v : vars) {
            if (!v.is_string()) throw ParseError("'vars' must be an array of names");
            names.push_back(v.get<std::string>());
        }
        ContextPtr ctx;
        try {
            ctx = VarContext::make(names);
        } catch (const ContextError& e) {
            throw ParseError(e.what());
        }
        const bool has_images = j.contains("images");
        const bool has_beta = j.contains("beta");
        if (has_images == has_beta) throw ParseError("derivation document needs exactly one of 'images' or 'beta'");
        if (has_images) {
            const Json& imgs = j["images"];
            if (!imgs.is_array() || imgs.size() != names.size())
                throw ParseError("'images' must list one polynomial per variable");
            std::vector<QPoly> polys;
            for (std::size_t i = 0; i < imgs.size(); ++i) {
                if (!imgs[i].is_string()) throw ParseError("'images' entries must be strings");
                try {
                    polys.push_back(parse<Rational>(imgs[i].get<std::string>(), ctx));
                } catch (const ParseError& e) {
                    throw ParseError("image of " + names[i] + ": " + e.what());
                }
            }
            return QDerivation(ctx, std::move(polys));
        }
        const Json& b = j["beta"];
        if (!b.is_array() || b.size() != names.size()) throw ParseError("'beta' must be a square matrix matching 'vars'");
        std::vector<std::vector<long>> rows;
        for (const auto& r : b) {
            if (!r.is_array() || r.size() != names.size()) throw ParseError("'beta' must be a square matrix matching 'vars'");
            std::vector<long> row;
            for (const auto& e : r) {
                if (!e.is_number_integer()) throw ParseError("'beta' entries must be integers");
                row.push_back(e.get<long>());
            }
            rows.push_back(std::move(row));
        }
        try {
            return from_exponent_matrix(ExponentMatrix(std::move(rows)), ctx);
        } catch (const Error& e) {
            throw ParseError(std::string("'beta': ") + e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed derivation document: ") + e.what());
    }
}

QDerivation derivation_from_json_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return derivation_from_json(j);
}

Json derivation_to_json(const QDerivation& d) {
    Json j;
    j["vars"] = string_array(d.context()->names());
    std::vector<std::string> imgs;
    for (const auto& p : d.images()) imgs.push_back(format(p));
    j["images"] = string_array(imgs);
    return j;
}

DiagonalAutomorphism automorphism_from_json(const Json& j, std::size_t arity) {
    try {
        const Json& sc = require_field(j, "scalars");
        if (!sc.is_array() || sc.size() != arity) throw ParseError("'scalars' must list one element of Q(z8) per variable");
        std::vector<Cyc8> s;
        for (const auto& e : sc) {
            if (e.is_number_integer()) {
                s.emplace_back(e.get<long>());
            } else if (e.is_string()) {
                s.push_back(Cyc8::parse(e.get<std::string>()));
            } else {
                throw ParseError("'scalars' entries must be strings");
            }
        }
        try {
            return DiagonalAutomorphism(std::move(s));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed automorphism document: ") + e.what());
    }
}

Json automorphism_to_json(const DiagonalAutomorphism& s) {
    Json a = Json::array();
    for (const auto& c : s.scalars()) a.push_back(c.to_string());
    Json j;
    j["scalars"] = std::move(a);
    return j;
}

Json symmetry_to_json(const SymmetrySolution& sol) {
    Json j;
    j["weights"] = sol.weights.weights();
    j["shift"] = sol.shift;
    j["modulus"] = sol.modulus();
    return j;
}

SymmetrySolution symmetry_from_json(const Json& j) {
    try {
        const long m = require_field(j, "modulus").get<long>();
        auto w = require_field(j, "weights").get<std::vector<long>>();
        const long c = require_field(j, "shift").get<long>();
        if (m < 1) throw ParseError("symmetry modulus must be at least 1");
        WeightVector wv(std::move(w), m);
        return {wv, wv.reduce(c)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed symmetry: ") + e.what());
    }
}

Json wd_report(const QDerivation& d) {
    const auto beta = exponent_matrix(d);
    if (!beta) throw PreconditionError("w_d is defined for monomial derivations only");
    Json j;
    j["derivation"] = derivation_to_json(d);
    j["beta"] = beta->rows();
    j["w_d"] = integer_json(wd(*beta));
    j["normal"] = is_normal(*beta);
    return j;
}

Json symmetry_report(const QDerivation& d, long m) {
    const auto beta = exponent_matrix(d);
    if (!beta) throw PreconditionError("symmetry discovery needs a monomial derivation");
    const auto s = derivation_homogeneity(d, WeightVector::standard(d.arity()));
    const auto sols = find_symmetry_weights(*beta, m);
    Json list = Json::array();
    for (const auto& sol : sols) {
        Json e = symmetry_to_json(sol);
        std::string label;
        if (sol.is_trivial()) {
            label = "trivial";
        } else if (s != 1) {
            label = "not applicable (standard degree is not 1)";
        } else {
            const EliminationReport rep = eliminate_cofactors(d, sol);
            e["elimination"] = elimination_to_json(rep);
            e["realizable"] = rep.realizable;
            e["conjugation_verified"] = rep.conjugation_verified;
            if (rep.usable())
                label = "eliminates cofactor";
            else if (rep.forced_zero && !rep.realizable)
                label = "eliminates cofactor (not realizable over Q(z8))";
            else
                label = "does not eliminate cofactor";
        }
        e["verdict"] = label;
        list.push_back(std::move(e));
    }
    Json j;
    j["derivation"] = derivation_to_json(d);
    j["modulus"] = m;
    if (s)
        j["standard_degree"] = *s;
    else
        j["standard_degree"] = nullptr;
    j["count"] = sols.size();
    j["solutions"] = std::move(list);
    return j;
}

Json conjugate_report(const QDerivation& d, const DiagonalAutomorphism& s) {
    const CDerivation dc = lift<Cyc8>(d);
    const CDerivation conj = conjugate(s, dc);
    Json imgs = Json::array();
    for (const auto& p : conj.images()) imgs.push_back(format(p));
    Json j;
    j["derivation"] = derivation_to_json(d);
    j["automorphism"] = automorphism_to_json(s)["scalars"];
    j["inverse"] = automorphism_to_json(s.inverse())["scalars"];
    j["images"] = std::move(imgs);
    Json multiple = nullptr;
    for (long c = 0; c < 8; ++c) {
        if (conj == dc.scaled(zeta_pow(c))) {
            multiple = c;
            break;
        }
    }
    j["zeta_power"] = multiple;
    return j;
}

Json constants_report(const QDerivation& d, long max_degree, unsigned threads, const SolveOptions& opts) {
    if (max_degree < 0) throw PreconditionError("max degree must be nonnegative");
    Json j;
    j["derivation"] = derivation_to_json(d);
    j["max_degree"] = max_degree;
    const auto s = derivation_homogeneity(d, WeightVector::standard(d.arity()));
    if (!s) {
        j["standard_degree"] = nullptr;
        Json b = Json::array();
        for (const auto& p : constants_basis_inhomogeneous(d, max_degree, opts)) b.push_back(format(p));
        j["basis"] = std::move(b);
        return j;
    }
    j["standard_degree"] = *s;
    Json levels = Json::array();
    for (const auto& lvl : constants_levels(d, 1, max_degree, threads, opts)) {
        Json e = level_to_json(lvl, true);
        e["oracle_checked"] = lvl.oracle_checked;
        levels.push_back(std::move(e));
    }
    j["levels"] = std::move(levels);
    return j;
}

Json certificate_to_json(const Certificate& cert, bool include_timings) {
    Json j;
    j["derivation"] = derivation_to_json(cert.derivation);
    if (cert.standard_degree)
        j["standard_degree"] = *cert.standard_degree;
    else
        j["standard_degree"] = nullptr;
    j["modulus"] = cert.modulus;
    j["requested_degree_bound"] = cert.requested_bound;
    if (cert.elimination) {
        j["symmetry"] = symmetry_to_json(cert.elimination->symmetry);
        j["elimination"] = elimination_to_json(*cert.elimination);
        j["cofactor_forced_zero"] = cert.elimination->forced_zero;
    } else {
        j["symmetry"] = nullptr;
        j["elimination"] = Json::array();
        j["cofactor_forced_zero"] = false;
    }
    j["symmetries_found"] = cert.symmetries_found;
    Json elim = Json::array();
    for (const auto& s : cert.eliminating_symmetries) elim.push_back(symmetry_to_json(s));
    j["eliminating_symmetries"] = std::move(elim);
    j["constants_checked_through"] = cert.constants_checked_through;
    Json levels = Json::array();
    for (const auto& lvl : cert.levels) levels.push_back(level_to_json(lvl, false));
    j["nullities"] = std::move(levels);
    if (cert.darboux_free_bound)
        j["darboux_free_degree_bound"] = *cert.darboux_free_bound;
    else
        j["darboux_free_degree_bound"] = nullptr;
    j["verdict"] = to_string(cert.verdict);
    if (cert.witness) {
        Json w;
        w["f"] = format(cert.witness->f);
        w["lambda"] = format(cert.witness->lambda);
        w["verified"] = is_darboux_pair(cert.derivation, *cert.witness);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["reason"] = cert.reason;
    if (cert.recheck) {
        Json r;
        r["conjugation"] = cert.recheck->conjugation;
        r["generic_cofactor_vanishes"] = cert.recheck->generic_vanishes;
        r["oracle_degree"] = cert.recheck->oracle_degree;
        r["oracle_agrees"] = cert.recheck->oracle_agrees;
        j["soundness_recheck"] = std::move(r);
    } else {
        j["soundness_recheck"] = nullptr;
    }
    if (include_timings) {
        Json t = Json::array();
        for (const auto& lvl : cert.levels) {
            Json e;
            e["degree"] = lvl.degree;
            e["millis"] = lvl.millis;
            t.push_back(std::move(e));
        }
        j["timings_ms"] = std::move(t);
    }
    return j;
}

std::string validate_certificate_json(const Json& j) {
    struct Field {
        const char* name;
        bool (*check)(const Json&);
    };
    static const Field fields[] = {
        {"derivation", [](const Json& v) { return v.is_object(); }},
        {"standard_degree", [](const Json& v) { return v.is_number_integer() || v.is_null(); }},
        {"modulus", [](const Json& v) { return v.is_number_integer(); }},
        {"requested_degree_bound", [](const Json& v) { return v.is_number_integer(); }},
        {"symmetry", [](const Json& v) { return v.is_object() || v.is_null(); }},
        {"elimination", [](const Json& v) { return v.is_array(); }},
        {"cofactor_forced_zero", [](const Json& v) { return v.is_boolean(); }},
        {"symmetries_found", [](const Json& v) { return v.is_number_integer(); }},
        {"eliminating_symmetries", [](const Json& v) { return v.is_array(); }},
        {"constants_checked_through", [](const Json& v) { return v.is_number_integer(); }},
        {"nullities", [](const Json& v) { return v.is_array(); }},
        {"darboux_free_degree_bound", [](const Json& v) { return v.is_number_integer() || v.is_null(); }},
        {"verdict", [](const Json& v) { return v.is_string(); }},
        {"witness", [](const Json& v) { return v.is_object() || v.is_null(); }},
        {"reason", [](const Json& v) { return v.is_string(); }},
        {"soundness_recheck", [](const Json& v) { return v.is_object() || v.is_null(); }},
    };
    if (!j.is_object()) return "certificate is not an object";
    auto it = j.begin();
    for (const auto& f : fields) {
        if (it == j.end() || it.key() != f.name) return std::string("expected field '") + f.name + "' in canonical position";
        if (!f.check(it.value())) return std::string("field '") + f.name + "' has the wrong type";
        ++it;
    }
    if (it != j.end() && it.key() == "timings_ms") ++it;
    if (it != j.end()) return "unexpected field '" + it.key() + "'";

    const std::string verdict = j["verdict"];
    if (verdict != "CERTIFIED" && verdict != "INCONCLUSIVE" && verdict != "COUNTEREXAMPLE") return "unknown verdict";
    if (verdict == "COUNTEREXAMPLE" && j["witness"].is_null()) return "counterexample without witness";
    if (verdict == "CERTIFIED") {
        if (!j["cofactor_forced_zero"].get<bool>()) return "certified without cofactor elimination";
        for (const auto& lvl : j["nullities"])
            if (lvl.at("nullity").get<long>() != 0) return "certified with a nonempty constants level";
        if (j["nullities"].size() != j["constants_checked_through"].get<std::size_t>()) return "missing constants levels";
        if (j["darboux_free_degree_bound"].get<long>() != j["constants_checked_through"].get<long>() / j["modulus"].get<long>())
            return "degree bound is not floor(N / m)";
    }
    try {
        derivation_from_json(j["derivation"]);
    } catch (const Error& e) {
        return std::string("derivation does not parse: ") + e.what();
    }
    return {};
}

}  // namespace darboux
