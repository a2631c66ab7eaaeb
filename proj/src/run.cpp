#include "repcoh/run.hpp"

#include <chrono>
#include <sstream>
#include <thread>

namespace repcoh {

namespace {

nlohmann::json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return (long long)v.get_si();
    return v.get_str();  // torsion past 64 bits stays exact as a string
}

nlohmann::json base_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
    return {{"elements", p.names()}, {"covers", covers}};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();

    int max_dim = cfg.max_dim;
    if (max_dim < 0) {
        bool truncated = is_simplicial(cfg.variant) && cfg.mode != BasisMode::Nerve;
        if (truncated)
            throw BadParamsError(
                "simplicial variants are truncated: pass an explicit max_dim");
        max_dim = composition_length(cfg.base);
    }
    int threads = cfg.threads > 0 ? cfg.threads
                                  : int(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    CochainComplex c =
        build_complex(cfg.base, cfg.variant, max_dim, cfg.mode, cfg.cap, threads);
    std::vector<CohomologyGroup> groups = cohomology_all(c);

    nlohmann::json result;
    result["variant"] = variant_name(cfg.variant);
    result["base"] = base_json(cfg.base);
    result["max_dim"] = max_dim;
    result["basis"] = basis_mode_name(cfg.mode);
    nlohmann::json jg = nlohmann::json::array();
    for (const auto& g : groups) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& t : g.torsion) torsion.push_back(json_int(t));
        jg.push_back({{"dim", g.dim}, {"rank", g.free_rank}, {"torsion", torsion}});
    }
    result["groups"] = jg;
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& b : c.bases) sizes.push_back(b.size());
    result["basis_sizes"] = sizes;

    if (cfg.generators) {
        nlohmann::json gens = nlohmann::json::array();
        for (int n = 0; n <= max_dim; ++n) {
            nlohmann::json reps = nlohmann::json::array();
            for (const auto& v : cocycle_representatives(c, n)) {
                nlohmann::json terms = nlohmann::json::array();
                for (size_t j = 0; j < v.size(); ++j) {
                    if (v[j] == 0) continue;
                    terms.push_back({{"coeff", json_int(v[j])},
                                     {"support", c.bases[n][j].support}});
                }
                reps.push_back(terms);
            }
            gens.push_back({{"dim", n}, {"representatives", reps}});
        }
        result["generators"] = gens;
    }

    auto t1 = std::chrono::steady_clock::now();
    RunResult out;
    out.result = std::move(result);
    out.meta = {{"wall_ms",
                 std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count()},
                {"threads", threads}};
    return out;
}

std::string emit_report(const RunConfig& cfg, const RunResult& r) {
    std::ostringstream os;
    switch (cfg.emit) {
        case EmitFormat::Json: {
            nlohmann::json whole = {{"meta", r.meta}, {"result", r.result}};
            os << whole.dump(2) << "\n";
            break;
        }
        case EmitFormat::Csv: {
            os << "dim,rank,torsion\n";
            for (const auto& g : r.result["groups"]) {
                os << g["dim"] << "," << g["rank"] << ",";
                bool first = true;
                for (const auto& t : g["torsion"]) {
                    if (!first) os << ";";
                    first = false;
                    if (t.is_string()) os << t.get<std::string>();
                    else os << t;
                }
                os << "\n";
            }
            break;
        }
        case EmitFormat::Table: {
            os << "variant " << r.result["variant"].get<std::string>()
               << ", basis " << r.result["basis"].get<std::string>()
               << ", base elements "
               << r.result["base"]["elements"].size() << ", max_dim "
               << r.result["max_dim"] << "\n";
            os << "basis sizes per level:";
            for (const auto& s : r.result["basis_sizes"]) os << " " << s;
            os << "\n";
            for (const auto& g : r.result["groups"]) {
                os << "H^" << g["dim"] << " = Z^" << g["rank"];
                for (const auto& t : g["torsion"]) {
                    os << " + Z/";
                    if (t.is_string()) os << t.get<std::string>();
                    else os << t;
                }
                os << "\n";
            }
            os << "wall " << r.meta["wall_ms"] << " ms\n";
            break;
        }
    }
    return os.str();
}

}  // namespace repcoh
