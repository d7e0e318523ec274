// darboux: command-line front end over the C API.
//
//   darboux wd        --input derivation.json
//   darboux symmetry  --input derivation.json --modulus 8
//   darboux conjugate --input derivation.json --automorphism sigma.json
//   darboux constants --input derivation.json --max-degree 8
//   darboux certify   --input derivation.json --max-degree 2 --modulus 8
//
// Exit codes: 0 success (any verdict), 2 input or parse error, 3 internal
// invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "darboux/darboux.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(dbx_status st) {
    return (st == DBX_ERR_INVARIANT || st == DBX_ERR_INTERNAL) ? kExitInvariant : kExitInput;
}

void check(dbx_status st, const char* what) {
    if (st != DBX_OK)
        throw CliError{exit_code_for(st), std::string(what) + ": " + dbx_status_name(st) + ": " + dbx_last_error()};
}

struct DerivationDeleter {
    void operator()(dbx_derivation* d) const { dbx_derivation_free(d); }
};
struct AutomorphismDeleter {
    void operator()(dbx_automorphism* a) const { dbx_automorphism_free(a); }
};
using DerivationHandle = std::unique_ptr<dbx_derivation, DerivationDeleter>;
using AutomorphismHandle = std::unique_ptr<dbx_automorphism, AutomorphismDeleter>;

// Takes ownership of a string returned by the library.
Json take_json(char* raw) {
    std::unique_ptr<char, decltype(&dbx_string_free)> guard(raw, &dbx_string_free);
    return Json::parse(raw);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitInput, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Config {
    std::string input;
    std::string format = "text";
    std::optional<long> max_degree;
    std::optional<long> modulus;
    std::optional<unsigned> threads;
    bool oracle_check = false;
    std::string automorphism;
    std::string output;
    std::string symmetry;
    bool timings = false;
};

unsigned effective_threads(const Config& cfg) {
    if (cfg.threads) return *cfg.threads;
    if (const char* env = std::getenv("DARBOUX_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw CliError{kExitInput, "DARBOUX_THREADS must be a positive integer"};
    }
    return 1;
}

DerivationHandle load_derivation(const std::string& text) {
    dbx_derivation* d = nullptr;
    check(dbx_derivation_parse(text.c_str(), &d), "derivation file");
    return DerivationHandle(d);
}

std::string join(const Json& arr, const char* sep = ", ") {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

std::string symmetry_label(const Json& sol) {
    return "(" + join(sol["weights"], ",") + "; c=" + sol["shift"].dump() + ")";
}

void print_derivation(std::ostream& os, const Json& d) {
    const auto& vars = d["vars"];
    const auto& imgs = d["images"];
    for (std::size_t i = 0; i < vars.size(); ++i)
        os << "  d(" << vars[i].get<std::string>() << ") = " << imgs[i].get<std::string>() << "\n";
}

void render_wd(std::ostream& os, const Json& r) {
    os << "w_d = " << (r["w_d"].is_string() ? r["w_d"].get<std::string>() : r["w_d"].dump())
       << ", normal = " << (r["normal"].get<bool>() ? "true" : "false") << "\n";
}

void render_symmetry(std::ostream& os, const Json& r) {
    os << "modulus " << r["modulus"] << ": " << r["count"] << " symmetry solutions";
    if (!r["standard_degree"].is_null()) os << " (standard degree " << r["standard_degree"] << ")";
    os << "\n";
    for (const auto& sol : r["solutions"]) {
        os << "  " << symmetry_label(sol) << "  " << sol["verdict"].get<std::string>();
        if (sol.contains("elimination")) {
            os << "  [";
            bool first = true;
            for (const auto& e : sol["elimination"]) {
                os << (first ? "" : " ") << e["variable"].get<std::string>() << ":"
                   << (e["eliminated"].get<bool>() ? "0" : "k");
                first = false;
            }
            os << "]";
        }
        os << "\n";
    }
}

void render_conjugate(std::ostream& os, const Json& r) {
    os << "sigma      = (" << join(r["automorphism"]) << ")\n";
    os << "sigma^-1   = (" << join(r["inverse"]) << ")\n";
    const auto& vars = r["derivation"]["vars"];
    for (std::size_t i = 0; i < vars.size(); ++i)
        os << "  sigma^-1 d sigma(" << vars[i].get<std::string>() << ") = " << r["images"][i].get<std::string>() << "\n";
    if (r["zeta_power"].is_null())
        os << "conjugate is not a root-of-unity multiple of d\n";
    else
        os << "sigma^-1 d sigma = z8^" << r["zeta_power"] << " * d\n";
}

void render_constants(std::ostream& os, const Json& r) {
    if (r["standard_degree"].is_null()) {
        os << "inhomogeneous derivation; constants of degree <= " << r["max_degree"] << " modulo k:\n";
        for (const auto& b : r["basis"]) os << "  " << b.get<std::string>() << "\n";
        if (r["basis"].empty()) os << "  (none)\n";
        return;
    }
    if (r["levels"].empty()) {
        os << "no degrees requested\n";
        return;
    }
    for (const auto& lvl : r["levels"]) {
        os << "degree " << lvl["degree"] << ": nullity " << lvl["nullity"] << " (rank " << lvl["rank"] << ", "
           << lvl["rows"] << "x" << lvl["columns"] << (lvl["oracle_checked"].get<bool>() ? ", oracle ok" : "")
           << ")\n";
        for (const auto& b : lvl["basis"]) os << "  " << b.get<std::string>() << "\n";
    }
}

void render_certificate(std::ostream& os, const Json& c) {
    os << "verdict: " << c["verdict"].get<std::string>() << "\n";
    os << "derivation:\n";
    print_derivation(os, c["derivation"]);
    os << "standard degree: " << c["standard_degree"].dump() << "\n";
    os << "modulus: " << c["modulus"] << ", symmetries found: " << c["symmetries_found"]
       << ", eliminating: " << c["eliminating_symmetries"].size() << "\n";
    if (!c["symmetry"].is_null()) {
        os << "symmetry used: " << symmetry_label(c["symmetry"]) << "\n";
        for (const auto& e : c["elimination"])
            os << "  k_" << e["variable"].get<std::string>() << ": exponent " << e["exponent"] << " -> "
               << (e["eliminated"].get<bool>() ? "forced to 0" : "survives") << "\n";
    }
    if (!c["nullities"].empty()) {
        os << "constants nullities through degree " << c["constants_checked_through"] << ":";
        for (const auto& lvl : c["nullities"]) os << " " << lvl["nullity"];
        os << "\n";
    }
    if (!c["darboux_free_degree_bound"].is_null())
        os << "no Darboux polynomial of degree <= " << c["darboux_free_degree_bound"] << "\n";
    if (!c["witness"].is_null())
        os << "witness: f = " << c["witness"]["f"].get<std::string>()
           << ", lambda = " << c["witness"]["lambda"].get<std::string>()
           << (c["witness"]["verified"].get<bool>() ? " (verified)" : " (NOT verified)") << "\n";
    os << "reason: " << c["reason"].get<std::string>() << "\n";
    if (c.contains("timings_ms"))
        for (const auto& t : c["timings_ms"]) os << "  degree " << t["degree"] << ": " << t["millis"] << " ms\n";
}

dbx_options make_options(const Config& cfg, const std::string& symmetry_json) {
    dbx_options o;
    dbx_options_init(&o);
    o.threads = effective_threads(cfg);
    o.oracle_check = cfg.oracle_check ? 1 : 0;
    o.include_timings = cfg.timings ? 1 : 0;
    o.preferred_symmetry = symmetry_json.empty() ? nullptr : symmetry_json.c_str();
    return o;
}

// "3,5,3,1:1" with the modulus taken from --modulus.
std::string symmetry_to_json_text(const std::string& text, long modulus) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw CliError{kExitInput, "--symmetry expects w1,...,wn:c"};
    Json j;
    Json w = Json::array();
    std::stringstream ws(text.substr(0, colon));
    try {
        for (std::string item; std::getline(ws, item, ',');) w.push_back(std::stol(item));
        j["weights"] = w;
        j["shift"] = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CliError{kExitInput, "--symmetry expects integers: w1,...,wn:c"};
    }
    j["modulus"] = modulus;
    return j.dump();
}

void emit(const Config& cfg, const Json& report, void (*render)(std::ostream&, const Json&)) {
    if (cfg.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        render(std::cout, report);
}

int run(const std::string& command, const Config& cfg) {
    const std::string text = read_file(cfg.input);
    const DerivationHandle d = load_derivation(text);
    char* raw = nullptr;

    if (command == "wd") {
        check(dbx_report_wd(d.get(), &raw), "wd");
        emit(cfg, take_json(raw), render_wd);
    } else if (command == "symmetry") {
        check(dbx_report_symmetry(d.get(), cfg.modulus.value_or(8), &raw), "symmetry");
        emit(cfg, take_json(raw), render_symmetry);
    } else if (command == "conjugate") {
        const std::string auto_text = cfg.automorphism.empty() ? text : read_file(cfg.automorphism);
        dbx_automorphism* a = nullptr;
        check(dbx_automorphism_parse(auto_text.c_str(), dbx_derivation_arity(d.get()), &a), "automorphism file");
        const AutomorphismHandle ah(a);
        check(dbx_report_conjugate(d.get(), ah.get(), &raw), "conjugate");
        emit(cfg, take_json(raw), render_conjugate);
    } else if (command == "constants") {
        const dbx_options o = make_options(cfg, "");
        check(dbx_report_constants(d.get(), cfg.max_degree.value_or(8), &o, &raw), "constants");
        emit(cfg, take_json(raw), render_constants);
    } else if (command == "certify") {
        const long m = cfg.modulus.value_or(8);
        const std::string sym = cfg.symmetry.empty() ? "" : symmetry_to_json_text(cfg.symmetry, m);
        const dbx_options o = make_options(cfg, sym);
        check(dbx_certify(d.get(), cfg.max_degree.value_or(2), m, &o, &raw), "certify");
        const Json cert = take_json(raw);
        if (!cfg.output.empty()) {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) throw CliError{kExitInput, "cannot write '" + cfg.output + "'"};
            out << cert.dump(2) << "\n";
        }
        emit(cfg, cert, render_certificate);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Darboux polynomial machinery for monomial derivations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dbx_version());

    Config cfg;
    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "JSON derivation file")->required();
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", cfg.threads, "Worker threads (overrides DARBOUX_THREADS)")->check(CLI::PositiveNumber);
        sub->add_flag("--oracle-check", cfg.oracle_check, "Cross-check small systems with the dense oracle");
    };

    auto* wd = app.add_subcommand("wd", "Print w_d = det(beta - I) and normality");
    add_common(wd);

    auto* sym = app.add_subcommand("symmetry", "Enumerate diagonal symmetries modulo m");
    add_common(sym);
    sym->add_option("--modulus,-m", cfg.modulus, "Modulus m (default 8)")->check(CLI::Range(1L, 1L << 20));

    auto* conj = app.add_subcommand("conjugate", "Conjugate the derivation by a diagonal automorphism");
    add_common(conj);
    conj->add_option("--automorphism,-a", cfg.automorphism, "JSON automorphism file (default: scalars in --input)");

    auto* cons = app.add_subcommand("constants", "Polynomial constants degree by degree");
    add_common(cons);
    cons->add_option("--max-degree,-N", cfg.max_degree, "Largest degree N (default 8)")->check(CLI::NonNegativeNumber);

    auto* cert = app.add_subcommand("certify", "Bounded-degree Darboux-freeness certificate");
    add_common(cert);
    cert->add_option("--max-degree,-D", cfg.max_degree, "Darboux degree bound D (default 2)")->check(CLI::PositiveNumber);
    cert->add_option("--modulus,-m", cfg.modulus, "Symmetry order m (default 8)")->check(CLI::Range(2L, 1L << 20));
    cert->add_option("--output,-o", cfg.output, "Also write the JSON certificate to this file");
    cert->add_option("--symmetry", cfg.symmetry, "Preferred symmetry w1,...,wn:c");
    cert->add_flag("--timings", cfg.timings, "Include per-degree wall clock (not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    try {
        return run(chosen->get_name(), cfg);
    } catch (const CliError& e) {
        std::cerr << "darboux: " << e.message << "\n";
        return e.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "darboux: malformed report: " << e.what() << "\n";
        return kExitInvariant;
    }
}
