#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibrantkit/fibrant.hpp"
#include "fibrantkit/harness.hpp"
#include "fibrantkit/homotopy.hpp"

using namespace fibrantkit;

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

std::string env_str(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

int need_object(const CatPtr& c, const std::string& id) {
    int o = c->object_index(id);
    if (o < 0) throw Error("UnknownId", "unknown object '" + id + "'");
    return o;
}

std::string cocycle_string(const CatPtr& base, const Zigzag& z) {
    return base->object_id(z.objects[0]) + " <-" + base->mor_id(z.arrows[0]) + "- " +
           base->object_id(z.objects[1]) + " -" + base->mor_id(z.arrows[1]) + "-> " +
           base->object_id(z.objects[2]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fibrantkit: exact finite checks for categories of fibrant objects"};
    app.require_subcommand(1);

    int dim = env_int("FIBRANTKIT_DIM", kDefaultDim);
    int kmax = env_int("FIBRANTKIT_KMAX", 1);
    int lmax = env_int("FIBRANTKIT_LMAX", 1);
    std::size_t cap = (std::size_t)env_int("FIBRANTKIT_CAP", (int)kDefaultSizeCap);
    std::string report = env_str("FIBRANTKIT_REPORT", "json");

    std::string fixture_path, obj_x, obj_y, out_path, kind;
    std::vector<int> params;

    auto* validate = app.add_subcommand("validate", "check axioms against expectations");
    validate->add_option("fixture", fixture_path)->required();

    auto* nerve_cmd = app.add_subcommand("nerve", "print truncated nerve sizes");
    nerve_cmd->add_option("fixture", fixture_path)->required();
    nerve_cmd->add_option("--dim", dim, "truncation dimension");

    auto* hml = app.add_subcommand("homology", "print truncated integral homology");
    hml->add_option("fixture", fixture_path)->required();
    hml->add_option("--dim", dim, "truncation dimension");

    auto* coc = app.add_subcommand("cocycles", "list the special cocycles X <- Z -> Y");
    coc->add_option("fixture", fixture_path)->required();
    coc->add_option("X", obj_x)->required();
    coc->add_option("Y", obj_y)->required();
    coc->add_option("--cap", cap, "size cap");

    auto* hom = app.add_subcommand("hom", "count homotopy classes of cocycles");
    hom->add_option("fixture", fixture_path)->required();
    hom->add_option("X", obj_x)->required();
    hom->add_option("Y", obj_y)->required();
    hom->add_option("--cap", cap, "size cap");

    auto* suite = app.add_subcommand("suite", "run every check and emit a report");
    suite->add_option("fixture", fixture_path)->required();
    suite->add_option("--dim", dim, "truncation dimension");
    suite->add_option("--kmax", kmax, "max backward run length");
    suite->add_option("--lmax", lmax, "max forward run length");
    suite->add_option("--cap", cap, "size cap");
    suite->add_option("--report", report, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* gen = app.add_subcommand("generate", "write a generated fixture");
    gen->add_option("kind", kind, "semilattice | lattice_isos | bounded_groupoids")
        ->required();
    gen->add_option("params", params, "generator parameters")->required();
    gen->add_option("-o,--output", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Fixture f;
            if (kind == "semilattice" && params.size() == 1)
                f = generate_semilattice(params[0]);
            else if (kind == "lattice_isos" && params.size() == 1)
                f = generate_lattice_isos(params[0]);
            else if (kind == "bounded_groupoids" && params.size() == 2)
                f = generate_bounded_groupoids(params[0], params[1]);
            else {
                std::cerr << "unknown generator or wrong parameter count\n";
                return 2;
            }
            save_fixture(f, out_path);
            std::cout << "wrote " << f.name << " to " << out_path << "\n";
            return 0;
        }

        Fixture f = load_fixture(fixture_path);
        const CfoStructure& s = f.structure;
        const CatPtr& c = s.base();

        if (validate->parsed()) {
            bool ok = true;
            for (const auto& a : check_cfo_axioms(s)) {
                bool expected = f.expects_pass(a.id);
                bool match = a.pass == expected;
                ok = ok && match;
                std::cout << a.id << ": " << (a.pass ? "pass" : "fail")
                          << (match ? "" : " (contradicts the fixture's expectation)");
                if (!a.witness.empty()) std::cout << "  [" << a.witness << "]";
                std::cout << "\n";
            }
            std::cout << (ok ? "OK" : "FAILED") << "\n";
            return ok ? 0 : 1;
        }
        if (nerve_cmd->parsed()) {
            NerveResult n = nerve(c, dim, cap);
            for (int d = 0; d <= n.ss->dim; ++d)
                std::cout << "N_" << d << ": " << n.ss->count[d] << "\n";
            return 0;
        }
        if (hml->parsed()) {
            NerveResult n = nerve(c, dim, cap);
            std::cout << to_string(homology(*n.ss)) << "\n";
            return 0;
        }
        if (coc->parsed()) {
            CocycResult cc = cocycle_category(s.rel, s.trivial_fibrations(),
                                              need_object(c, obj_x),
                                              need_object(c, obj_y), cap);
            std::cout << cc.objects.size() << " special cocycle(s)\n";
            for (int o : cc.objects)
                std::cout << "  " << cocycle_string(c, cc.ambient.zigzags[o]) << "\n";
            return 0;
        }
        if (hom->parsed()) {
            HomotopyHom h = homotopy_hom(s, need_object(c, obj_x),
                                         need_object(c, obj_y), cap);
            std::cout << h.count << " homotopy class(es)\n";
            for (int r : h.representative)
                std::cout << "  "
                          << cocycle_string(c, h.cocyc.ambient.zigzags[h.cocyc.objects[r]])
                          << "\n";
            return 0;
        }
        if (suite->parsed()) {
            SuiteConfig cfg;
            cfg.T = dim;
            cfg.kmax = kmax;
            cfg.lmax = lmax;
            cfg.cap = cap;
            Report rep = run_suite(f, cfg);
            std::cout << (report == "json" ? rep.to_json() : rep.to_text());
            return rep.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
        if (e.kind() == "ParseError" || e.kind() == "UnknownId" ||
            e.kind() == "ValidationError")
            return 2;
        return 1;
    }
    return 2;
}
