#include "darboux/darboux.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "darboux/io.hpp"

struct dbx_derivation {
    darboux::QDerivation value;
};

struct dbx_automorphism {
    darboux::DiagonalAutomorphism value;
};

namespace {

thread_local std::string g_last_error;

dbx_status fail(dbx_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

// Runs fn, translating library exceptions to status codes.
template <class Fn>
dbx_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return DBX_OK;
    } catch (const darboux::ParseError& e) {
        return fail(DBX_ERR_PARSE, e.what());
    } catch (const darboux::ContextError& e) {
        return fail(DBX_ERR_CONTEXT, e.what());
    } catch (const darboux::ArithmeticError& e) {
        return fail(DBX_ERR_ARITHMETIC, e.what());
    } catch (const darboux::PreconditionError& e) {
        return fail(DBX_ERR_PRECONDITION, e.what());
    } catch (const darboux::InvariantViolation& e) {
        return fail(DBX_ERR_INVARIANT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DBX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DBX_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

darboux::CertifyOptions certify_options(const dbx_options* o) {
    darboux::CertifyOptions c;
    if (!o) return c;
    c.threads = o->threads == 0 ? 1 : o->threads;
    c.solve.oracle_check = o->oracle_check != 0;
    c.solve.oracle_column_limit = o->oracle_column_limit;
    if (o->preferred_symmetry) {
        darboux::Json j;
        try {
            j = darboux::Json::parse(o->preferred_symmetry);
        } catch (const nlohmann::json::parse_error& e) {
            throw darboux::ParseError(std::string("invalid symmetry JSON: ") + e.what());
        }
        c.preferred_symmetry = darboux::symmetry_from_json(j);
    }
    return c;
}

}  // namespace

extern "C" {

const char* dbx_version(void) { return "1.0.0"; }

const char* dbx_status_name(dbx_status status) {
    switch (status) {
        case DBX_OK: return "ok";
        case DBX_ERR_NULL_ARGUMENT: return "null argument";
        case DBX_ERR_IO: return "i/o error";
        case DBX_ERR_PARSE: return "parse error";
        case DBX_ERR_CONTEXT: return "context error";
        case DBX_ERR_ARITHMETIC: return "arithmetic error";
        case DBX_ERR_PRECONDITION: return "precondition violated";
        case DBX_ERR_INVARIANT: return "invariant violation";
        case DBX_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* dbx_last_error(void) { return g_last_error.c_str(); }

void dbx_options_init(dbx_options* options) {
    if (!options) return;
    options->threads = 1;
    options->oracle_check = 0;
    options->oracle_column_limit = 200;
    options->include_timings = 0;
    options->preferred_symmetry = nullptr;
}

dbx_status dbx_derivation_parse(const char* json, dbx_derivation** out) {
    if (!json || !out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *out = new dbx_derivation{darboux::derivation_from_json_text(json)}; });
}

dbx_status dbx_derivation_load(const char* path, dbx_derivation** out) {
    if (!path || !out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(DBX_ERR_IO, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return dbx_derivation_parse(buf.str().c_str(), out);
}

dbx_status dbx_derivation_reference(dbx_derivation** out) {
    if (!out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *out = new dbx_derivation{darboux::reference_derivation()}; });
}

void dbx_derivation_free(dbx_derivation* d) { delete d; }

size_t dbx_derivation_arity(const dbx_derivation* d) { return d ? d->value.arity() : 0; }

dbx_status dbx_derivation_to_json(const dbx_derivation* d, char** json_out) {
    if (!d || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *json_out = dup_string(darboux::derivation_to_json(d->value).dump()); });
}

dbx_status dbx_automorphism_parse(const char* json, size_t arity, dbx_automorphism** out) {
    if (!json || !out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        darboux::Json j;
        try {
            j = darboux::Json::parse(json);
        } catch (const nlohmann::json::parse_error& e) {
            throw darboux::ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        *out = new dbx_automorphism{darboux::automorphism_from_json(j, arity)};
    });
}

void dbx_automorphism_free(dbx_automorphism* a) { delete a; }

dbx_status dbx_wd(const dbx_derivation* d, long* wd_out, int* normal_out) {
    if (!d || !wd_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        const auto beta = darboux::exponent_matrix(d->value);
        if (!beta) throw darboux::PreconditionError("w_d is defined for monomial derivations only");
        const mpz_class v = darboux::wd(*beta);
        if (!v.fits_slong_p()) throw darboux::ArithmeticError("w_d does not fit a long");
        *wd_out = v.get_si();
        if (normal_out) *normal_out = darboux::is_normal(*beta) ? 1 : 0;
    });
}

dbx_status dbx_report_wd(const dbx_derivation* d, char** json_out) {
    if (!d || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *json_out = dup_string(darboux::wd_report(d->value).dump()); });
}

dbx_status dbx_report_symmetry(const dbx_derivation* d, long modulus, char** json_out) {
    if (!d || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *json_out = dup_string(darboux::symmetry_report(d->value, modulus).dump()); });
}

dbx_status dbx_report_conjugate(const dbx_derivation* d, const dbx_automorphism* a, char** json_out) {
    if (!d || !a || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] { *json_out = dup_string(darboux::conjugate_report(d->value, a->value).dump()); });
}

dbx_status dbx_report_constants(const dbx_derivation* d, long max_degree, const dbx_options* options,
                                char** json_out) {
    if (!d || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        const darboux::CertifyOptions o = certify_options(options);
        *json_out = dup_string(darboux::constants_report(d->value, max_degree, o.threads, o.solve).dump());
    });
}

dbx_status dbx_certify(const dbx_derivation* d, long degree_bound, long modulus, const dbx_options* options,
                       char** json_out) {
    if (!d || !json_out) return fail(DBX_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        const darboux::CertifyOptions o = certify_options(options);
        const darboux::Certificate cert = darboux::certify_darboux_free(d->value, degree_bound, modulus, o);
        const bool timings = options && options->include_timings != 0;
        *json_out = dup_string(darboux::certificate_to_json(cert, timings).dump());
    });
}

void dbx_string_free(char* s) { std::free(s); }

}  // extern "C"
