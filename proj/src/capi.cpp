#include "crystalrr.h"

#include <cstring>
#include <string>

#include "catalog.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "json_io.hpp"

using namespace crr;

struct crr_case {
    IdentityCase impl;
};

struct crr_report {
    Report impl;
};

namespace {

thread_local std::string g_lastError;

char* dupString(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

crr_status fail(crr_status code, const char* what) {
    g_lastError = what;
    return code;
}

// Run f, translating exceptions into status codes.
template <typename F>
crr_status guarded(F&& f) {
    try {
        f();
        return CRR_OK;
    } catch (const UnknownCaseError& ex) {
        return fail(CRR_ERR_UNKNOWN_CASE, ex.what());
    } catch (const ParseError& ex) {
        return fail(CRR_ERR_PARSE, ex.what());
    } catch (const DivergentError& ex) {
        return fail(CRR_ERR_DIVERGENT, ex.what());
    } catch (const std::exception& ex) {
        return fail(CRR_ERR_INTERNAL, ex.what());
    } catch (...) {
        return fail(CRR_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* crr_version(void) { return "1.0.0"; }

const char* crr_last_error(void) { return g_lastError.c_str(); }

void crr_string_free(char* s) { delete[] s; }

crr_status crr_case_list_json(char** out_json) {
    if (!out_json) return fail(CRR_ERR_BAD_ARG, "out_json is null");
    return guarded([&] { *out_json = dupString(catalogToJson()); });
}

crr_status crr_case_open(const char* name, crr_case** out) {
    if (!name || !out) return fail(CRR_ERR_BAD_ARG, "name or out is null");
    return guarded([&] { *out = new crr_case{makeCase(name)}; });
}

crr_status crr_case_from_json(const char* json_text, crr_case** out) {
    if (!json_text || !out) return fail(CRR_ERR_BAD_ARG, "json_text or out is null");
    return guarded([&] { *out = new crr_case{caseFromJson(json_text)}; });
}

void crr_case_free(crr_case* c) { delete c; }

const char* crr_case_name(const crr_case* c) { return c ? c->impl.name.c_str() : ""; }

int crr_case_default_order(const crr_case* c) { return c ? c->impl.defaultOrder : 0; }

int crr_case_is_assert_mode(const crr_case* c) { return c && c->impl.assertMode() ? 1 : 0; }

int crr_case_has_crystal(const crr_case* c) { return c && c->impl.graph ? 1 : 0; }

crr_status crr_verify(const crr_case* c, int order, int with_oracle, crr_report** out) {
    if (!c || !out) return fail(CRR_ERR_BAD_ARG, "case or out is null");
    if (order < 0) return fail(CRR_ERR_BAD_ARG, "order must be >= 0");
    return guarded([&] { *out = new crr_report{verify(c->impl, order, with_oracle != 0)}; });
}

crr_status crr_audit(const crr_case* c, int box_budget, crr_report** out) {
    if (!c || !out) return fail(CRR_ERR_BAD_ARG, "case or out is null");
    if (box_budget < 0) return fail(CRR_ERR_BAD_ARG, "box budget must be >= 0");
    if (!c->impl.graph)
        return fail(CRR_ERR_BAD_ARG, "bijection audit requires a case with a crystal graph");
    return guarded([&] { *out = new crr_report{bijectionAudit(c->impl, box_budget)}; });
}

crr_status crr_sum_series_json(const crr_case* c, int order, char** out_json) {
    if (!c || !out_json) return fail(CRR_ERR_BAD_ARG, "case or out_json is null");
    if (order < 0) return fail(CRR_ERR_BAD_ARG, "order must be >= 0");
    return guarded([&] {
        const QSeries s = c->impl.rules.windowSafe()
                              ? genFunction(c->impl.rules, c->impl.spec, order)
                              : bruteForceGenFunction(c->impl.rules, c->impl.spec, order);
        *out_json = dupString(seriesToJson(s));
    });
}

crr_status crr_sum_series_text(const crr_case* c, int order, char** out_text) {
    if (!c || !out_text) return fail(CRR_ERR_BAD_ARG, "case or out_text is null");
    if (order < 0) return fail(CRR_ERR_BAD_ARG, "order must be >= 0");
    return guarded([&] {
        const QSeries s = c->impl.rules.windowSafe()
                              ? genFunction(c->impl.rules, c->impl.spec, order)
                              : bruteForceGenFunction(c->impl.rules, c->impl.spec, order);
        *out_text = dupString(s.str());
    });
}

crr_status crr_product_series_json(const crr_case* c, int order, char** out_json) {
    if (!c || !out_json) return fail(CRR_ERR_BAD_ARG, "case or out_json is null");
    if (order < 0) return fail(CRR_ERR_BAD_ARG, "order must be >= 0");
    if (!c->impl.product) return fail(CRR_ERR_BAD_ARG, "case has no product side");
    return guarded(
        [&] { *out_json = dupString(seriesToJson(expandProduct(*c->impl.product, 2 * order))); });
}

crr_status crr_run_all(int order_override, int with_oracle, char** out_json_array,
                       int* out_all_passed) {
    if (!out_json_array || !out_all_passed)
        return fail(CRR_ERR_BAD_ARG, "out_json_array or out_all_passed is null");
    return guarded([&] {
        std::optional<int> over;
        if (order_override >= 0) over = order_override;
        const std::vector<Report> reports = runAll(over, with_oracle != 0);
        std::string arr = "[";
        bool allPassed = true;
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) arr += ",";
            arr += reportToJson(reports[i]);
            if (!reports[i].passed()) allPassed = false;
        }
        arr += "]";
        *out_json_array = dupString(arr);
        *out_all_passed = allPassed ? 1 : 0;
    });
}

int crr_report_passed(const crr_report* r) { return r && r->impl.passed() ? 1 : 0; }

const char* crr_report_verdict(const crr_report* r) {
    return r ? r->impl.verdict.c_str() : "";
}

crr_status crr_report_json(const crr_report* r, char** out_json) {
    if (!r || !out_json) return fail(CRR_ERR_BAD_ARG, "report or out_json is null");
    return guarded([&] { *out_json = dupString(reportToJson(r->impl)); });
}

crr_status crr_report_text(const crr_report* r, char** out_text) {
    if (!r || !out_text) return fail(CRR_ERR_BAD_ARG, "report or out_text is null");
    return guarded([&] { *out_text = dupString(renderReportText(r->impl)); });
}

void crr_report_free(crr_report* r) { delete r; }

}  // extern "C"
