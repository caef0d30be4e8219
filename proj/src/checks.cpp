#include "stokescluster/checks.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>

#include "stokescluster/error.hpp"
#include "stokescluster/slncore.hpp"
#include "stokescluster/stokes2.hpp"
#include "stokescluster/ugaglia.hpp"

namespace sc {

namespace {

using nlohmann::ordered_json;

long get_long(const ordered_json& p, const char* key, std::optional<long> def, long lo, long hi) {
    if (!p.contains(key)) {
        if (def) return *def;
        throw UsageError(std::string("missing parameter ") + key);
    }
    const auto& v = p.at(key);
    if (!v.is_number_integer())
        throw UsageError(std::string("parameter ") + key + " must be an integer");
    long x = v.get<long>();
    if (x < lo || x > hi)
        throw UsageError(std::string("parameter ") + key + "=" + std::to_string(x) +
                         " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

unsigned long long get_seed(const ordered_json& p) {
    if (!p.contains("seed")) return 0;
    const auto& v = p.at("seed");
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw UsageError("parameter seed must be an integer");
    return v.get<unsigned long long>();
}

int env_cap(int fallback) {
    const char* s = std::getenv("STOKES_MAX_K");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end || v < 1) throw UsageError("STOKES_MAX_K must be a positive integer");
    return static_cast<int>(v);
}

bool timing_enabled() {
    const char* s = std::getenv("STOKES_TIMING");
    return s && std::string(s) == "1";
}

// Triangulation argument: an inline serialized triangulation overrides the
// fan; an explicit K must then agree with the file's K.
Triangulation load_triangulation(const ordered_json& p, bool& is_fan) {
    if (p.contains("triangulation_text")) {
        const auto& v = p.at("triangulation_text");
        if (!v.is_string()) throw UsageError("parameter triangulation_text must be a string");
        Triangulation t;
        try {
            t = triangulation_from_json(v.get<std::string>());
        } catch (const Error& e) {
            throw UsageError(std::string("bad triangulation: ") + e.what());
        }
        if (p.contains("K") && get_long(p, "K", std::nullopt, 1, 64) != t.K)
            throw UsageError("K disagrees with the triangulation file");
        is_fan = false;
        return t;
    }
    int K = static_cast<int>(get_long(p, "K", std::nullopt, 1, 64));
    is_fan = true;
    return fan_triangulation(K);
}

void run_mutation_walk(int K, long steps, unsigned long long seed,
                       std::vector<CheckItem>& items) {
    Triangulation t = fan_triangulation(K);
    std::mt19937_64 rng(seed);
    bool noncrossing = true, commutes = true, involutive = true;
    std::string bad_nc, bad_cm, bad_inv;
    for (long step = 1; step <= steps; ++step) {
        int slot = 2 + static_cast<int>(rng() % static_cast<unsigned long long>(2 * K - 1));
        Quiver before = quiver_of(t);
        Triangulation ft = flip(t, slot);
        try {
            ft.validate();
        } catch (const Error&) {
            if (noncrossing) bad_nc = "step " + std::to_string(step);
            noncrossing = false;
            break;
        }
        if (!(quiver_of(ft) == before.mutate(static_cast<std::size_t>(slot - 1)))) {
            if (commutes) bad_cm = "step " + std::to_string(step);
            commutes = false;
        }
        Triangulation back = flip(ft, slot);
        const auto& d0 = t.diagonal(slot);
        const auto& d2 = back.diagonal(slot);
        if (!(quiver_of(back) == before && d0.a == d2.a && d0.b == d2.b)) {
            if (involutive) bad_inv = "step " + std::to_string(step);
            involutive = false;
        }
        t = ft;
    }
    items.push_back({"noncrossing", noncrossing, bad_nc});
    items.push_back({"quiver_commutes", commutes, bad_cm});
    items.push_back({"flip_involution", involutive, bad_inv});
}

void run_sln_triple(int n, std::vector<CheckItem>& items, ordered_json& conventions) {
    auto x = triple_vars(n);
    MatrixRF a1 = a_matrix(n, 1, x);
    MatrixRF a2 = a_matrix(n, 2, x);
    MatrixRF a3 = a_matrix(n, 3, x);
    items.push_back({"triple_product_identity", (a1 * a2 * a3).is_identity(), ""});
    bool dets = true;
    for (const MatrixRF* a : {&a1, &a2, &a3}) {
        RationalFunction d = a->det();
        if (!d.is_monomial()) {
            dets = false;
            continue;
        }
        mpq_class c = d.num().terms().begin()->second;
        dets = dets && (c == 1 || c == -1);
    }
    items.push_back({"determinant_unit_monomial", dets, ""});
    items.push_back({"star_involution", star_matrix(star_matrix(a1, n), n).equals(a1), ""});
    conventions["antidiagonal_signs"] = "all +1";
}

void run_triangulation(const ordered_json& p, Report& rep) {
    if (!p.contains("action") || !p.at("action").is_string())
        throw UsageError("missing parameter action (export or import)");
    std::string action = p.at("action").get<std::string>();
    rep.parameters["action"] = action;
    if (action == "export") {
        int K = static_cast<int>(get_long(p, "K", std::nullopt, 1, 64));
        rep.parameters["K"] = K;
        rep.triangulation = triangulation_to_json(fan_triangulation(K));
        rep.items.push_back({"export", true, ""});
        return;
    }
    if (action == "import") {
        if (!p.contains("text") || !p.at("text").is_string())
            throw UsageError("import requires the serialized triangulation text");
        Triangulation t;
        try {
            t = triangulation_from_json(p.at("text").get<std::string>());
            t.validate();
        } catch (const Error& e) {
            throw UsageError(std::string("bad triangulation: ") + e.what());
        }
        rep.parameters["K"] = t.K;
        std::string canon = triangulation_to_json(t);
        rep.triangulation = canon;
        bool round = triangulation_to_json(triangulation_from_json(canon)) == canon;
        rep.items.push_back({"round_trip", round, ""});
        return;
    }
    throw UsageError("action must be export or import");
}

} // namespace

Report run_check(const std::string& check, const ordered_json& params) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.check = check;
    unsigned long long seed = get_seed(params);

    try {
        if (check == "monodromy") {
            int K = static_cast<int>(get_long(params, "K", std::nullopt, 1, 64));
            rep.parameters["K"] = K;
            check_monodromy(K, rep.items);
        } else if (check == "form") {
            bool is_fan = false;
            Triangulation t = load_triangulation(params, is_fan);
            rep.parameters["K"] = t.K;
            rep.triangulation = triangulation_to_json(t);
            check_form(t, is_fan, rep.items);
        } else if (check == "flip") {
            bool is_fan = false;
            Triangulation t = load_triangulation(params, is_fan);
            int slot = static_cast<int>(get_long(params, "diagonal", std::nullopt, 2, 2 * t.K));
            rep.parameters["K"] = t.K;
            rep.parameters["diagonal"] = slot;
            rep.parameters["seed"] = seed;
            rep.triangulation = triangulation_to_json(t);
            bool symbolic = t.K <= env_cap(3);
            Comparer cmp(symbolic ? CompareMode::Symbolic : CompareMode::Pointwise, 50, seed);
            rep.conventions["mode"] = symbolic ? "symbolic" : "pointwise";
            check_flip_mutation(t, slot, cmp, rep.items);
        } else if (check == "fn-check") {
            int K = static_cast<int>(get_long(params, "K", std::nullopt, 1, 64));
            rep.parameters["K"] = K;
            rep.parameters["seed"] = seed;
            bool symbolic = K <= env_cap(3);
            Comparer cmp(symbolic ? CompareMode::Symbolic : CompareMode::Pointwise, 50, seed);
            rep.conventions["mode"] = symbolic ? "symbolic" : "pointwise";
            check_fn_pushforward(K, cmp, rep.items);
        } else if (check == "ideal-check") {
            int K = static_cast<int>(get_long(params, "K", std::nullopt, 1, 64));
            rep.parameters["K"] = K;
            rep.parameters["seed"] = seed;
            bool symbolic = K <= env_cap(2);
            rep.conventions["jacobi_mode"] = symbolic ? "symbolic" : "pointwise";
            check_fn_ideal(K, symbolic, 10, seed, rep.items);
        } else if (check == "mutation-walk") {
            int K = static_cast<int>(get_long(params, "K", std::nullopt, 1, 64));
            long steps = get_long(params, "steps", 10, 0, 100000);
            rep.parameters["K"] = K;
            rep.parameters["steps"] = steps;
            rep.parameters["seed"] = seed;
            run_mutation_walk(K, steps, seed, rep.items);
        } else if (check == "sln-triple") {
            int n = static_cast<int>(get_long(params, "n", std::nullopt, 2, 16));
            rep.parameters["n"] = n;
            run_sln_triple(n, rep.items, rep.conventions);
        } else if (check == "ugaglia") {
            int n = static_cast<int>(get_long(params, "n", std::nullopt, 2, 16));
            long points = get_long(params, "points", 20, 1, 100000);
            rep.parameters["n"] = n;
            rep.parameters["points"] = points;
            rep.parameters["seed"] = seed;
            bool symbolic = n <= 3;
            Comparer cmp(symbolic ? CompareMode::Symbolic : CompareMode::Pointwise,
                         static_cast<int>(points), seed);
            std::map<std::string, std::string> conv;
            check_ugaglia(n, cmp, rep.items, conv, seed);
            conv["compare_mode"] = symbolic ? "symbolic" : "pointwise";
            for (const auto& [k, v] : conv) rep.conventions[k] = v;
        } else if (check == "triangulation") {
            run_triangulation(params, rep);
        } else {
            throw UsageError("unknown check " + check);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        rep.items.push_back({"exception", false, e.what()});
    }

    if (timing_enabled()) {
        auto end = std::chrono::steady_clock::now();
        rep.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    }
    return rep;
}

} // namespace sc
