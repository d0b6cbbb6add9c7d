#include "oscbasis.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "checks.hpp"
#include "jsonio.hpp"
#include "svg.hpp"

using namespace osc;

struct osc_manifold {
    Triangulation tri;
    std::string lastError;
    std::optional<TrainTrack> track;
    std::optional<SymplecticBasis> basis;
    std::optional<SymplecticSystem> system;

    TrainTrack& getTrack() {
        if (!track) track.emplace(tri);
        return *track;
    }
    SymplecticBasis& getBasis() {
        if (!basis) basis = buildBasis(getTrack());
        return *basis;
    }
    SymplecticSystem& getSystem() {
        if (!system) system = assemble(getTrack(), getBasis());
        return *system;
    }
};

namespace {

char* dupString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fillErr(char* errbuf, size_t errlen, const std::string& msg) {
    if (!errbuf || errlen == 0) return;
    std::strncpy(errbuf, msg.c_str(), errlen - 1);
    errbuf[errlen - 1] = '\0';
}

template <typename Fn>
int guarded(osc_manifold* m, Fn&& fn) {
    try {
        fn();
        m->lastError.clear();
        return OSC_OK;
    } catch (const InputError& e) {
        m->lastError = e.what();
        return OSC_ERR_INPUT;
    } catch (const std::exception& e) {
        m->lastError = e.what();
        return OSC_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

osc_manifold* osc_manifold_from_text(const char* text, int is_json, char* errbuf, size_t errlen) {
    try {
        Triangulation tri = is_json ? Triangulation::parseJson(text) : Triangulation::parseText(text);
        auto* m = new osc_manifold{std::move(tri), {}, std::nullopt, std::nullopt, std::nullopt};
        return m;
    } catch (const std::exception& e) {
        fillErr(errbuf, errlen, e.what());
        return nullptr;
    }
}

osc_manifold* osc_manifold_from_file(const char* path, char* errbuf, size_t errlen) {
    std::ifstream in(path);
    if (!in) {
        fillErr(errbuf, errlen, std::string("cannot open ") + path);
        return nullptr;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string p(path);
    bool isJson = p.size() > 5 && p.compare(p.size() - 5, 5, ".json") == 0;
    return osc_manifold_from_text(ss.str().c_str(), isJson ? 1 : 0, errbuf, errlen);
}

void osc_manifold_free(osc_manifold* m) { delete m; }

const char* osc_last_error(const osc_manifold* m) { return m ? m->lastError.c_str() : ""; }

int osc_info_json(osc_manifold* m, char** out) {
    return guarded(m, [&] { *out = dupString(infoJson(m->tri).dump(2)); });
}

int osc_track_json(osc_manifold* m, char** out) {
    return guarded(m, [&] { *out = dupString(trackJson(m->getTrack()).dump(2)); });
}

int osc_basis_json(osc_manifold* m, char** out) {
    return guarded(m, [&] { *out = dupString(basisJson(m->getTrack(), m->getBasis()).dump(2)); });
}

int osc_nz_json(osc_manifold* m, char** out) {
    return guarded(m, [&] { *out = dupString(nzJson(m->getTrack(), m->getBasis()).dump(2)); });
}

int osc_nz_csv(osc_manifold* m, char** out) {
    return guarded(m, [&] {
        TrainTrack& tt = m->getTrack();
        SymplecticBasis& basis = m->getBasis();
        std::vector<std::string> names;
        ZMat nz;
        for (int e = 0; e < tt.tri().edgeClassCount(); ++e) {
            names.push_back("C_E" + std::to_string(e));
            nz.push_back(holonomy(tt, edgeCurve(tt, e)).nz());
        }
        for (const BasisRow& r : basis.rows) {
            if (r.kind != BasisRow::M && r.kind != BasisRow::L) continue;
            names.push_back(r.name());
            nz.push_back(holonomy(tt, r.weights).nz());
        }
        *out = dupString(matrixCsv(names, nz));
    });
}

int osc_sy_json(osc_manifold* m, char** out) {
    return guarded(m, [&] { *out = dupString(matrixJson(m->getSystem(), false).dump(2)); });
}

int osc_sy_csv(osc_manifold* m, char** out) {
    return guarded(m, [&] {
        const SymplecticSystem& sys = m->getSystem();
        *out = dupString(matrixCsv(sys.rowNames, sys.sy));
    });
}

int osc_solve_json(osc_manifold* m, char** out) {
    return guarded(m, [&] {
        const SymplecticSystem& sys = m->getSystem();
        ExactSolution sol = solve(sys);
        ResidualReport rep = verifySolution(m->getTrack(), m->getBasis(), sys, sol);
        *out = dupString(solutionJson(sys, sol, rep).dump(2));
    });
}

int osc_check_json(osc_manifold* m, unsigned long seed, int samples, char** out, int* all_passed) {
    return guarded(m, [&] {
        auto results = runChecks(m->tri, seed, samples);
        if (all_passed) *all_passed = allPassed(results) ? 1 : 0;
        *out = dupString(checksJson(results, seed, samples).dump(2));
    });
}

int osc_end_count(osc_manifold* m, int* out) {
    return guarded(m, [&] { *out = m->tri.endCount(); });
}

int osc_svg(osc_manifold* m, int end_id, char** out) {
    return guarded(m, [&] {
        if (end_id < 0 || end_id >= m->tri.endCount()) throw InputError("end id out of range");
        *out = dupString(renderEndSvg(m->getTrack(), m->getBasis(), end_id));
    });
}

void osc_string_free(char* s) { std::free(s); }

} // extern "C"
