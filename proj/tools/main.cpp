// Command-line front end. Parses arguments, drives the shared-library C API,
// and writes outputs atomically (temp file + rename).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oscbasis.h"

namespace {

struct Options {
    std::string input;
    std::string outDir;
    std::string format = "json";
    unsigned long seed = 0;
    int samples = 64;
    bool verbose = false;
    bool jsonErrors = false;
};

void atomicWrite(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// either print to stdout or write into --out
void deliver(const Options& opt, const std::string& filename, const std::string& content) {
    if (opt.outDir.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::filesystem::create_directories(opt.outDir);
    std::filesystem::path p = std::filesystem::path(opt.outDir) / filename;
    atomicWrite(p, content);
    if (opt.verbose) std::cerr << "wrote " << p.string() << "\n";
}

int fail(const Options& opt, int code, const std::string& message) {
    if (opt.jsonErrors) {
        std::cout << "{\"error\":\"" << message << "\",\"code\":" << code << "}\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return code;
}

struct Handle {
    osc_manifold* m = nullptr;
    ~Handle() {
        if (m) osc_manifold_free(m);
    }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() {
        if (s) osc_string_free(s);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic bases of oscillating curves on ideal triangulations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--input", opt.input, "triangulation file (.tri text or .json)")->required();
    app.add_option("--out", opt.outDir, "output directory (default: stdout)");
    app.add_option("--format", opt.format, "matrix output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", opt.seed, "seed for the check sweep (default 0)");
    app.add_option("--samples", opt.samples, "sample count for the check sweep (default 64)");
    app.add_flag("--verbose", opt.verbose, "report written files");
    app.add_flag("--json-errors", opt.jsonErrors, "emit errors as machine-readable JSON on stdout");

    auto* cInfo = app.add_subcommand("info", "counts, genera, Euler identity");
    auto* cTrack = app.add_subcommand("track", "branch/vertex catalogue as JSON");
    auto* cBasis = app.add_subcommand("basis", "basis curves (walks and weight vectors) as JSON");
    auto* cNz = app.add_subcommand("nz", "incidence/NZ matrices of edge and cusp rows");
    auto* cSy = app.add_subcommand("sy", "full 2n x 2n SY matrix of the basis");
    auto* cSolve = app.add_subcommand("solve", "exact solution of the logarithmic system + residual report");
    auto* cCheck = app.add_subcommand("check", "property-test sweep (main theorem, Gram, solver)");
    auto* cSvg = app.add_subcommand("svg", "one SVG per boundary component with basis curves");

    CLI11_PARSE(app, argc, argv);

    char errbuf[1024] = {0};
    Handle h;
    h.m = osc_manifold_from_file(opt.input.c_str(), errbuf, sizeof errbuf);
    if (!h.m) return fail(opt, 1, errbuf);

    auto run = [&](int rc, const char* what) -> int {
        if (rc == OSC_OK) return 0;
        return fail(opt, rc == OSC_ERR_INPUT ? 1 : 2, std::string(what) + ": " + osc_last_error(h.m));
    };

    try {
        if (cInfo->parsed()) {
            OwnedString s;
            if (int rc = run(osc_info_json(h.m, &s.s), "info")) return rc;
            deliver(opt, "info.json", s.s);
        } else if (cTrack->parsed()) {
            OwnedString s;
            if (int rc = run(osc_track_json(h.m, &s.s), "track")) return rc;
            deliver(opt, "track.json", s.s);
        } else if (cBasis->parsed()) {
            OwnedString s;
            if (int rc = run(osc_basis_json(h.m, &s.s), "basis")) return rc;
            deliver(opt, "basis.json", s.s);
        } else if (cNz->parsed()) {
            OwnedString s;
            if (opt.format == "csv") {
                if (int rc = run(osc_nz_csv(h.m, &s.s), "nz")) return rc;
                deliver(opt, "nz.csv", s.s);
            } else {
                if (int rc = run(osc_nz_json(h.m, &s.s), "nz")) return rc;
                deliver(opt, "nz.json", s.s);
            }
        } else if (cSy->parsed()) {
            OwnedString s;
            if (opt.format == "csv") {
                if (int rc = run(osc_sy_csv(h.m, &s.s), "sy")) return rc;
                deliver(opt, "sy.csv", s.s);
            } else {
                if (int rc = run(osc_sy_json(h.m, &s.s), "sy")) return rc;
                deliver(opt, "sy.json", s.s);
            }
        } else if (cSolve->parsed()) {
            OwnedString s;
            if (int rc = run(osc_solve_json(h.m, &s.s), "solve")) return rc;
            deliver(opt, "solution.json", s.s);
        } else if (cCheck->parsed()) {
            OwnedString s;
            int allPassed = 0;
            if (int rc = run(osc_check_json(h.m, opt.seed, opt.samples, &s.s, &allPassed), "check"))
                return rc;
            deliver(opt, "checks.json", s.s);
            if (!allPassed) return fail(opt, 2, "property sweep failed");
        } else if (cSvg->parsed()) {
            int ends = 0;
            if (int rc = run(osc_end_count(h.m, &ends), "svg")) return rc;
            for (int e = 0; e < ends; ++e) {
                OwnedString s;
                if (int rc = run(osc_svg(h.m, e, &s.s), "svg")) return rc;
                deliver(opt, "end" + std::to_string(e) + ".svg", s.s);
            }
        }
    } catch (const std::exception& e) {
        return fail(opt, 2, e.what());
    }
    return 0;
}
