#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "repcoh/families.hpp"
#include "repcoh/run.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw repcoh::InputError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

uint64_t default_cap() {
    if (const char* env = std::getenv("REPCOH_INTERVAL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw repcoh::BadParamsError("REPCOH_INTERVAL_CAP must be a positive integer");
    }
    return repcoh::kDefaultIntervalCap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation cohomology of finite posets"};
    app.require_subcommand(1);

    auto* fam = app.add_subcommand(
        "family", "emit a named poset in the poset file format");
    std::string fam_name;
    std::vector<long long> fam_params;
    fam->add_option("name", fam_name,
                    "chain | dandelion | corolla | pseudo_circle | antichain | tree")
        ->required();
    fam->add_option("params", fam_params, "integer parameters");

    auto* comp = app.add_subcommand("compute", "compute cohomology groups");
    std::string variant_tok = "G", basis_tok = "intervals", emit_tok = "table";
    std::string input_path = "-";
    int max_dim = -1, threads = 0;
    uint64_t cap = 0;
    bool generators = false;
    comp->add_option("--variant", variant_tok, "tildeE | tildeG | E | G")
        ->capture_default_str();
    comp->add_option("--max-dim", max_dim,
                     "highest degree to report (default: composition length; "
                     "required for tilde variants)");
    comp->add_option("--basis", basis_tok, "intervals | singletons | nerve")
        ->capture_default_str();
    comp->add_option("--emit", emit_tok, "table | json | csv")
        ->capture_default_str();
    comp->add_option("--input", input_path, "poset file, or - for stdin")
        ->capture_default_str();
    comp->add_flag("--generators", generators, "emit cocycle representatives");
    comp->add_option("--cap", cap, "interval enumeration cap");
    comp->add_option("--threads", threads, "worker threads (0: auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fam) {
            std::cout << repcoh::serialize_poset(repcoh::family(fam_name, fam_params));
            return 0;
        }

        repcoh::RunConfig cfg;
        if (!repcoh::parse_variant(variant_tok, cfg.variant))
            throw repcoh::BadParamsError("unknown variant: " + variant_tok);
        repcoh::BasisMode mode;
        if (!repcoh::parse_basis_mode(basis_tok, mode) ||
            mode == repcoh::BasisMode::SingletonsReduced)
            throw repcoh::BadParamsError("unknown basis: " + basis_tok);
        cfg.mode = mode;
        if (emit_tok == "table") cfg.emit = repcoh::EmitFormat::Table;
        else if (emit_tok == "json") cfg.emit = repcoh::EmitFormat::Json;
        else if (emit_tok == "csv") cfg.emit = repcoh::EmitFormat::Csv;
        else throw repcoh::BadParamsError("unknown emit format: " + emit_tok);
        cfg.base = repcoh::parse_poset(read_input(input_path));
        cfg.max_dim = max_dim;
        cfg.generators = generators;
        cfg.cap = cap > 0 ? cap : default_cap();
        cfg.threads = threads;

        repcoh::RunResult r = repcoh::run(cfg);
        std::cout << repcoh::emit_report(cfg, r);
        return 0;
    } catch (const repcoh::IntervalExplosionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const repcoh::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
