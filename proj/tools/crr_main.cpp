// Command-line front end for the crystalrr shared library; talks to the
// library exclusively through the C interface in crystalrr.h.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>

#include "crystalrr.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitConfigError = 2;

struct StringDeleter {
    void operator()(char* s) const { crr_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct CaseDeleter {
    void operator()(crr_case* c) const { crr_case_free(c); }
};
using CasePtr = std::unique_ptr<crr_case, CaseDeleter>;

struct ReportDeleter {
    void operator()(crr_report* r) const { crr_report_free(r); }
};
using ReportPtr = std::unique_ptr<crr_report, ReportDeleter>;

int configError(const char* what) {
    std::cerr << "error: " << what << "\n";
    return kExitConfigError;
}

CasePtr openCase(const std::string& name, int& rc) {
    crr_case* c = nullptr;
    if (crr_case_open(name.c_str(), &c) != CRR_OK) {
        rc = configError(crr_last_error());
        return nullptr;
    }
    rc = kExitPass;
    return CasePtr(c);
}

int emitReport(const crr_report* report, bool asJson) {
    CStr text;
    char* raw = nullptr;
    const crr_status st = asJson ? crr_report_json(report, &raw) : crr_report_text(report, &raw);
    if (st != CRR_OK) return configError(crr_last_error());
    text.reset(raw);
    std::cout << text.get();
    if (asJson) std::cout << "\n";
    return crr_report_passed(report) ? kExitPass : kExitAssertionFailure;
}

int runVerify(const crr_case* c, int order, bool oracle, bool asJson) {
    if (order < 0) order = crr_case_default_order(c);
    crr_report* r = nullptr;
    if (crr_verify(c, order, oracle ? 1 : 0, &r) != CRR_OK) return configError(crr_last_error());
    ReportPtr report(r);
    return emitReport(report.get(), asJson);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of colored-partition identities driven by "
                 "crystal energy matrices"};
    app.require_subcommand(1);

    std::string caseName, fileName;
    int order = -1;
    int boxes = -1;
    bool oracle = false, asJson = false;

    auto* verify = app.add_subcommand("verify", "compare one case against its product side");
    verify->add_option("case", caseName, "catalog case name")->required();
    verify->add_option("--order", order, "truncation order N");
    verify->add_flag("--oracle", oracle, "cross-check with the brute-force enumeration");
    verify->add_flag("--json", asJson, "emit the JSON report");

    auto* runAllCmd = app.add_subcommand("run-all", "verify every cataloged case");
    runAllCmd->add_option("--order", order, "order override for every case");
    runAllCmd->add_flag("--oracle", oracle, "cross-check with the brute-force enumeration");
    runAllCmd->add_flag("--json", asJson, "emit the JSON report array");

    auto* audit = app.add_subcommand("audit", "run the path-space bijection audit");
    audit->add_option("case", caseName, "catalog case name (needs a crystal)")->required();
    audit->add_option("--boxes", boxes, "box-count budget");
    audit->add_flag("--json", asJson, "emit the JSON report");

    auto* series = app.add_subcommand("series", "print the sum-side series of a case");
    series->add_option("case", caseName, "catalog case name")->required();
    series->add_option("--order", order, "truncation order N")->required();
    series->add_flag("--json", asJson, "emit the series as JSON");

    auto* list = app.add_subcommand("list", "list the cataloged cases");
    list->add_flag("--json", asJson, "emit the catalog as JSON");

    auto* load = app.add_subcommand("load", "verify a case defined in a JSON file");
    load->add_option("file", fileName, "path to the case definition")->required();
    load->add_option("--order", order, "truncation order N");
    load->add_flag("--oracle", oracle, "cross-check with the brute-force enumeration");
    load->add_flag("--json", asJson, "emit the JSON report");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        int rc = kExitPass;
        CasePtr c = openCase(caseName, rc);
        if (!c) return rc;
        return runVerify(c.get(), order, oracle, asJson);
    }

    if (runAllCmd->parsed()) {
        char* raw = nullptr;
        int allPassed = 0;
        if (crr_run_all(order, oracle ? 1 : 0, &raw, &allPassed) != CRR_OK)
            return configError(crr_last_error());
        CStr json(raw);
        if (asJson) {
            std::cout << json.get() << "\n";
        } else {
            const auto reports = nlohmann::json::parse(json.get());
            for (const auto& r : reports) {
                std::cout << r.at("case").get<std::string>() << " [order " << r.at("order")
                          << "]: " << r.at("verdict").get<std::string>() << " ("
                          << r.at("ms") << " ms)\n";
            }
            std::cout << (allPassed ? "all cases passed" : "FAILURES present") << " ("
                      << reports.size() << " cases)\n";
        }
        return allPassed ? kExitPass : kExitAssertionFailure;
    }

    if (audit->parsed()) {
        int rc = kExitPass;
        CasePtr c = openCase(caseName, rc);
        if (!c) return rc;
        if (boxes < 0) boxes = 10;
        crr_report* r = nullptr;
        if (crr_audit(c.get(), boxes, &r) != CRR_OK) return configError(crr_last_error());
        ReportPtr report(r);
        return emitReport(report.get(), asJson);
    }

    if (series->parsed()) {
        int rc = kExitPass;
        CasePtr c = openCase(caseName, rc);
        if (!c) return rc;
        char* raw = nullptr;
        const crr_status st = asJson ? crr_sum_series_json(c.get(), order, &raw)
                                     : crr_sum_series_text(c.get(), order, &raw);
        if (st != CRR_OK) return configError(crr_last_error());
        CStr out(raw);
        std::cout << out.get() << "\n";
        return kExitPass;
    }

    if (list->parsed()) {
        char* raw = nullptr;
        if (crr_case_list_json(&raw) != CRR_OK) return configError(crr_last_error());
        CStr json(raw);
        if (asJson) {
            std::cout << json.get() << "\n";
        } else {
            for (const auto& entry : nlohmann::json::parse(json.get())) {
                std::cout << entry.at("name").get<std::string>() << "  ["
                          << entry.at("mode").get<std::string>() << ", "
                          << entry.at("colors") << " colors, default order "
                          << entry.at("default_order") << "]\n";
            }
        }
        return kExitPass;
    }

    if (load->parsed()) {
        std::ifstream in(fileName);
        if (!in) return configError(("cannot open file " + fileName).c_str());
        std::stringstream buf;
        buf << in.rdbuf();
        crr_case* c = nullptr;
        if (crr_case_from_json(buf.str().c_str(), &c) != CRR_OK)
            return configError(crr_last_error());
        CasePtr holder(c);
        return runVerify(holder.get(), order, oracle, asJson);
    }

    return kExitConfigError;
}
