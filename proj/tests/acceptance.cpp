// Acceptance checks: one pass/fail line per criterion. Takes the repository
// root as argv[1] to locate the shipped fixtures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fibrantkit/fibrant.hpp"
#include "fibrantkit/harness.hpp"
#include "fibrantkit/homotopy.hpp"

using namespace fibrantkit;

namespace {

int g_failures = 0;

void report(int n, const std::string& title, bool pass, double seconds,
            double budget, const std::string& detail = "") {
    bool ok = pass && seconds <= budget;
    if (!ok) ++g_failures;
    std::cout << "criterion " << n << " (" << title << "): "
              << (ok ? "pass" : "fail");
    if (pass && seconds > budget) std::cout << " [time budget exceeded]";
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "  (" << seconds << "s)\n";
}

double run_timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::set<std::string> failing_axioms(const CfoStructure& s) {
    std::set<std::string> out;
    for (const auto& a : check_cfo_axioms(s))
        if (!a.pass) out.insert(a.id);
    return out;
}

CatPtr discrete_cat(int n) {
    CategoryBuilder b;
    for (int i = 0; i < n; ++i) {
        b.add_object("e" + std::to_string(i));
        int m = b.add_morphism("i" + std::to_string(i), i, i);
        b.set_identity(i, m);
        b.set_composite(m, m, m);
    }
    return b.build_unchecked();
}

Functor discrete_functor(const CatPtr& src, const CatPtr& tgt,
                         const std::vector<int>& omap) {
    Functor F;
    F.src = src;
    F.tgt = tgt;
    F.omap = omap;
    for (int i = 0; i < src->object_count(); ++i)
        F.mmap.push_back(tgt->identity(omap[i]));
    return F;
}

/// Contravariant diagram of discrete categories over `base` with value sizes
/// and transition functions chosen by `rng`; functorial because the bases
/// used have freely composing generators.
CatDiagram random_discrete_diagram(const CatPtr& base, std::mt19937& rng) {
    CatDiagram X;
    X.base = base;
    std::uniform_int_distribution<int> size_dist(1, 3);
    std::vector<int> sizes(base->object_count());
    for (int o = 0; o < base->object_count(); ++o) {
        sizes[o] = size_dist(rng);
        X.value.push_back(discrete_cat(sizes[o]));
    }
    // choose maps on non-identity generators; fill composites transitively
    X.arrow.assign(base->morphism_count(), Functor{});
    std::vector<char> done(base->morphism_count(), 0);
    for (int o = 0; o < base->object_count(); ++o) {
        int m = base->identity(o);
        std::vector<int> omap(sizes[o]);
        for (int i = 0; i < sizes[o]; ++i) omap[i] = i;
        X.arrow[m] = discrete_functor(X.value[o], X.value[o], omap);
        done[m] = 1;
    }
    // generators: morphisms not expressible as a composite of two non-identities
    auto is_generator = [&](int m) {
        for (int g = 0; g < base->morphism_count(); ++g)
            for (int f = 0; f < base->morphism_count(); ++f) {
                if (g == base->identity(base->cod(g))) continue;
                if (f == base->identity(base->dom(f))) continue;
                if (base->compose(g, f) == m) return false;
            }
        return true;
    };
    for (int m = 0; m < base->morphism_count(); ++m) {
        if (done[m] || !is_generator(m)) continue;
        int src = base->cod(m), tgt = base->dom(m);  // contravariant
        std::vector<int> omap(sizes[src]);
        std::uniform_int_distribution<int> pick(0, sizes[tgt] - 1);
        for (int i = 0; i < sizes[src]; ++i) omap[i] = pick(rng);
        X.arrow[m] = discrete_functor(X.value[src], X.value[tgt], omap);
        done[m] = 1;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (int g = 0; g < base->morphism_count(); ++g)
            for (int f = 0; f < base->morphism_count(); ++f) {
                int gf = base->compose(g, f);
                if (gf >= 0 && !done[gf] && done[g] && done[f]) {
                    // contravariant: X(gf) = X(f) . X(g)
                    X.arrow[gf] = X.arrow[f].after(X.arrow[g]);
                    done[gf] = 1;
                    progress = true;
                }
            }
    }
    return X;
}

CatPtr chain_cat(int n) {
    CategoryBuilder b;
    std::map<std::pair<int, int>, int> mor;
    for (int i = 0; i < n; ++i) b.add_object("c" + std::to_string(i));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            mor[{x, y}] = b.add_morphism("c" + std::to_string(x) + "-" +
                                         std::to_string(y), x, y);
    for (int x = 0; x < n; ++x) b.set_identity(x, mor.at({x, x}));
    for (auto [xy, m] : mor)
        for (auto [yz, m2] : mor)
            if (xy.second == yz.first)
                b.set_composite(m2, m, mor.at({xy.first, yz.second}));
    return b.build();
}

CatPtr fan_cat(int leaves) {
    CategoryBuilder b;
    b.add_object("r");
    for (int i = 0; i < leaves; ++i) b.add_object("l" + std::to_string(i));
    std::vector<int> ids;
    for (int o = 0; o <= leaves; ++o) {
        int m = b.add_morphism("id" + std::to_string(o), o, o);
        b.set_identity(o, m);
        ids.push_back(m);
    }
    std::vector<int> spokes;
    for (int i = 0; i < leaves; ++i)
        spokes.push_back(b.add_morphism("s" + std::to_string(i), 0, i + 1));
    for (int o = 0; o <= leaves; ++o) b.set_composite(ids[o], ids[o], ids[o]);
    for (int i = 0; i < leaves; ++i) {
        b.set_composite(spokes[i], ids[0], spokes[i]);
        b.set_composite(ids[i + 1], spokes[i], spokes[i]);
    }
    return b.build();
}

CatPtr parallel_pair_cat() {
    CategoryBuilder b;
    b.add_object("a");
    b.add_object("b");
    int ia = b.add_morphism("ia", 0, 0), ib = b.add_morphism("ib", 1, 1);
    int f = b.add_morphism("f", 0, 1), g = b.add_morphism("g", 0, 1);
    b.set_identity(0, ia);
    b.set_identity(1, ib);
    b.set_composite(ia, ia, ia);
    b.set_composite(ib, ib, ib);
    b.set_composite(f, ia, f);
    b.set_composite(ib, f, f);
    b.set_composite(g, ia, g);
    b.set_composite(ib, g, g);
    return b.build();
}

CatPtr bz2_cat() {
    CategoryBuilder b;
    b.add_object("x");
    int e = b.add_morphism("e", 0, 0), s = b.add_morphism("s", 0, 0);
    b.set_identity(0, e);
    b.set_composite(e, e, e);
    b.set_composite(e, s, s);
    b.set_composite(s, e, s);
    b.set_composite(s, s, e);
    return b.build();
}

/// Contravariant diagram of discrete hom-sets Hom(-, d).
CatDiagram hom_diagram(const CatPtr& c, int d) {
    CatDiagram X;
    X.base = c;
    std::vector<std::vector<int>> elems(c->object_count());
    for (int o = 0; o < c->object_count(); ++o) {
        elems[o] = c->hom(o, d);
        X.value.push_back(discrete_cat((int)elems[o].size()));
    }
    for (int m = 0; m < c->morphism_count(); ++m) {
        int src = c->cod(m), tgt = c->dom(m);
        std::vector<int> omap;
        for (int u : elems[src]) {
            int v = c->compose(u, m);
            for (std::size_t i = 0; i < elems[tgt].size(); ++i)
                if (elems[tgt][i] == v) omap.push_back((int)i);
        }
        X.arrow.push_back(discrete_functor(X.value[src], X.value[tgt], omap));
    }
    return X;
}

CatDiagram constant_diagram(const CatPtr& base, const CatPtr& value) {
    CatDiagram X;
    X.base = base;
    for (int o = 0; o < base->object_count(); ++o) X.value.push_back(value);
    for (int m = 0; m < base->morphism_count(); ++m)
        X.arrow.push_back(Functor::identity_of(value));
    return X;
}

}  // namespace

int main(int argc, char** argv) {
    std::string root = argc > 1 ? argv[1] : ".";
    std::string fixdir = root + "/fixtures";

    // ----- criterion 1: axiom checker on generated fixtures and controls
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            for (int n = 1; n <= 6 && ok; ++n) {
                if (!failing_axioms(generate_semilattice(n).structure).empty()) {
                    ok = false;
                    detail = "semilattice(" + std::to_string(n) + ")";
                }
                if (!failing_axioms(generate_lattice_isos(n).structure).empty()) {
                    ok = false;
                    detail = "lattice_isos(" + std::to_string(n) + ")";
                }
            }
            for (const std::string base :
                 {"control_axiom_a", "control_axiom_b", "control_axiom_c",
                  "control_axiom_e"}) {
                Fixture f = load_fixture(fixdir + "/" + base + ".fix");
                std::set<std::string> declared;
                for (const auto& [id, pass] : f.expect_axioms)
                    if (!pass) declared.insert(id);
                if (failing_axioms(f.structure) != declared || declared.size() != 1) {
                    ok = false;
                    detail = base + " does not fail exactly its declared axiom";
                }
            }
        });
        report(1, "axioms on fixtures and negative controls", ok, secs, 5.0 * 16,
               detail);
    }

    // ----- criterion 2: truncated homology oracles
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            auto profile_of = [&](const CatPtr& c) {
                return homology(*nerve(c, 3).ss);
            };
            HomologyProfile pt = profile_of(discrete_cat(1));
            if (!(pt.size() >= 3 && pt[0] == HomologyGroup{1, {}} &&
                  pt[1].trivial() && pt[2].trivial())) {
                ok = false;
                detail = "point: " + to_string(pt);
            }
            HomologyProfile circ = profile_of(parallel_pair_cat());
            if (!(circ[0] == HomologyGroup{1, {}} && circ[1] == HomologyGroup{1, {}} &&
                  circ[2].trivial())) {
                ok = false;
                detail = "circle: " + to_string(circ);
            }
            HomologyProfile bz2 = profile_of(bz2_cat());
            if (!(bz2[0] == HomologyGroup{1, {}} &&
                  bz2[1] == HomologyGroup{0, {Int(2)}} && bz2[2].trivial())) {
                ok = false;
                detail = "classifying space of Z/2: " + to_string(bz2);
            }
        });
        report(2, "homology oracles", ok, secs, 10.0, detail);
    }

    // ----- criterion 3: hocolim of random discrete diagrams vs category of elements
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            std::mt19937 rng(12345);
            std::vector<CatPtr> bases{chain_cat(2),    chain_cat(3), chain_cat(4),
                                      fan_cat(2),      fan_cat(3),   parallel_pair_cat(),
                                      discrete_cat(3)};
            int count = 0;
            for (int round = 0; round < 3; ++round)
                for (const CatPtr& base : bases) {
                    CatDiagram X = random_discrete_diagram(base, rng);
                    std::string why;
                    if (!X.check(&why)) {
                        ok = false;
                        detail = "diagram not functorial: " + why;
                        return;
                    }
                    ThomasonResult tr = thomason_comparison(X, 3);
                    if (!tr.comparison.check() || !tr.comparison.is_isomorphism()) {
                        ok = false;
                        detail = "comparison not an isomorphism (diagram " +
                                 std::to_string(count) + ")";
                        return;
                    }
                    ++count;
                }
            if (count < 20) {
                ok = false;
                detail = "only " + std::to_string(count) + " diagrams";
            }
        });
        report(3, "hocolim vs category of elements on random discrete diagrams", ok,
               secs, 30.0, detail);
    }

    // ----- criterion 4: Thomason comparison sweep
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            int count = 0;
            for (int n : {4, 5}) {
                CatPtr c = generate_semilattice(n).structure.base();
                for (int d = 0; d < c->object_count(); ++d) {
                    ThomasonResult tr = thomason_comparison(hom_diagram(c, d), 3);
                    Verdict v = weak_equivalence_evidence(tr.comparison);
                    if (v.refuted() || !tr.comparison.is_isomorphism()) {
                        ok = false;
                        detail = "hom diagram at object " + c->object_id(d);
                        return;
                    }
                    ++count;
                }
            }
            for (const CatPtr& val : {parallel_pair_cat(), bz2_cat()}) {
                CatDiagram X = constant_diagram(generate_semilattice(4).structure.base(),
                                                val);
                ThomasonResult tr = thomason_comparison(X, 3);
                if (weak_equivalence_evidence(tr.comparison).refuted()) {
                    ok = false;
                    detail = "constant diagram comparison refuted";
                    return;
                }
                ++count;
            }
            if (count < 10) {
                ok = false;
                detail = "only " + std::to_string(count) + " diagrams";
            }
        });
        report(4, "Thomason comparison sweep", ok, secs, 60.0, detail);
    }

    // ----- criterion 5: cofinality sweeps
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            std::vector<CatPtr> cats{generate_semilattice(4).structure.base(),
                                     generate_semilattice(5).structure.base(),
                                     chain_cat(3)};
            // Quillen A and the fibration-fibre comparison over all pairs
            for (const CatPtr& src : cats)
                for (const CatPtr& tgt : cats) {
                    for (const Functor& F : all_functors(src, tgt)) {
                        Verdict cof = is_homotopy_cofinal(F, 3).overall;
                        if (cof.certified() &&
                            weak_equivalence_evidence(F, 3).refuted()) {
                            ok = false;
                            detail = "cofinal functor refuted as a weak equivalence";
                            return;
                        }
                        FibrationCheck fc = is_grothendieck_fibration(F);
                        if (!fc.is_fibration) continue;
                        bool all_cert = true, any_ref = false;
                        for (int o = 0; o < tgt->object_count(); ++o) {
                            Verdict v = is_weakly_contractible(
                                strict_fibre(F, o).cat, 3);
                            all_cert = all_cert && v.certified();
                            any_ref = any_ref || v.refuted();
                        }
                        if ((all_cert && cof.refuted()) ||
                            (any_ref && cof.certified())) {
                            ok = false;
                            detail = "fibre contractibility contradicts cofinality";
                            return;
                        }
                    }
                }
            // composition law on endofunctors of the diamond
            CatPtr c = cats[0];
            std::vector<Functor> endos = all_functors(c, c);
            for (const Functor& G : endos) {
                if (!G.fully_faithful()) continue;
                for (const Functor& F : endos) {
                    if (!is_homotopy_cofinal(G.after(F), 3).overall.certified())
                        continue;
                    if (is_homotopy_cofinal(F, 3).overall.refuted()) {
                        ok = false;
                        detail = "certified composite with refuted factor";
                        return;
                    }
                }
            }
        });
        report(5, "cofinality sweeps", ok, secs, 120.0, detail);
    }

    // ----- criterion 6: right fractions
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            std::vector<RelCategory> rels;
            for (int n = 1; n <= 5; ++n) {
                rels.push_back(generate_semilattice(n).structure.rel);
                rels.push_back(generate_lattice_isos(n).structure.rel);
            }
            rels.push_back(load_fixture(fixdir + "/groupoids_2_8.fix").structure.rel);
            for (const RelCategory& rel : rels) {
                FractionsReport fr = check_right_fractions(rel, 1, 1, 3);
                for (const auto& inst : fr.instances)
                    if (inst.status == "Refuted") {
                        ok = false;
                        detail = "refuted instance found";
                        return;
                    }
            }
        });
        report(6, "calculus of right fractions", ok, secs, 300.0, detail);
    }

    // valid fixtures for the cocycle-level criteria
    std::vector<Fixture> valid;
    for (int n = 2; n <= 5; ++n) {
        valid.push_back(generate_semilattice(n));
        valid.push_back(generate_lattice_isos(n));
    }

    // ----- criterion 7: the cocycle calculus
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            for (const Fixture& f : valid) {
                CalculusResult r = certify_cocycle_calculus(f.structure, 3);
                if (r.overall != "pass") {
                    ok = false;
                    detail = f.name;
                    return;
                }
                if (f.hom_oracle == "ones")  // semilattices: Certified per pair
                    for (const auto& [x, y, v] : r.c5)
                        if (!v.certified()) {
                            ok = false;
                            detail = f.name + ": cofinality not certified";
                            return;
                        }
            }
        });
        report(7, "homotopical calculus of cocycles", ok, secs, 120.0, detail);
    }

    // ----- criterion 8: the fibration R over pairs of weak equivalences
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            for (const Fixture& f : valid) {
                TotalCocyclesResult t = total_cocycles(f.structure);
                RResult r = build_R(f.structure, t);
                if (!is_grothendieck_fibration(r.projection).is_fibration) {
                    ok = false;
                    detail = f.name + ": projection not a fibration";
                    return;
                }
                for (int i = 0; i < (int)r.wz_objects.size(); ++i) {
                    if (is_weakly_contractible(strict_fibre(r.projection, i).cat, 3)
                            .refuted()) {
                        ok = false;
                        detail = f.name + ": fibre refuted";
                        return;
                    }
                    if (!r_fibre_comma_iso(f.structure, t, r, r.wz_objects[i])) {
                        ok = false;
                        detail = f.name + ": fibre not isomorphic to the comma category";
                        return;
                    }
                }
            }
        });
        report(8, "fibres of R", ok, secs, 120.0, detail);
    }

    // ----- criterion 9: homotopy hom-set oracles
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            for (const Fixture& f : valid) {
                const CatPtr& c = f.structure.base();
                for (int x = 0; x < c->object_count() && ok; ++x)
                    for (int y = 0; y < c->object_count(); ++y) {
                        int expected = f.hom_oracle == "ones"
                                           ? 1
                                           : (int)c->hom(x, y).size();
                        int got = homotopy_hom(f.structure, x, y).count;
                        if (got != expected) {
                            ok = false;
                            detail = f.name + " at (" + c->object_id(x) + "," +
                                     c->object_id(y) + "): " + std::to_string(got) +
                                     " != " + std::to_string(expected);
                            break;
                        }
                    }
            }
            Fixture g = load_fixture(fixdir + "/groupoids_2_8.fix");
            int bz2 = g.structure.base()->object_index("k1g2");
            int got = homotopy_hom(g.structure, bz2, bz2).count;
            if (got != 2) {
                ok = false;
                detail = "B(Z/2) self-maps: " + std::to_string(got) + " != 2";
            }
        });
        report(9, "homotopy hom-set oracles", ok, secs, 60.0, detail);
    }

    // ----- criterion 10: reduction round trips
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            for (int n = 2; n <= 4 && ok; ++n) {
                Fixture f = generate_semilattice(n);
                const CfoStructure& s = f.structure;
                const CatPtr& c = s.base();
                ZigzagType ty{{-1, 1, 1}};
                std::vector<int> dirs = ty.directions();
                for (int x = 0; x < c->object_count() && ok; ++x)
                    for (int y = 0; y < c->object_count() && ok; ++y) {
                        auto zz = zigzag_category(s.rel, ty, x, y);
                        for (const Zigzag& z0 : zz.zigzags) {
                            RoundTrip rt = reduction_round_trip(s, z0, 1, 1);
                            if (!rt.ok ||
                                !is_hammock(s.rel, dirs, z0, rt.reduced, rt.ladder)) {
                                ok = false;
                                detail = f.name + ": " + rt.witness;
                                break;
                            }
                        }
                    }
            }
        });
        report(10, "reduction round trips", ok, secs, 60.0, detail);
    }

    // ----- criterion 11: byte-identical suite reports
    {
        bool ok = true;
        std::string detail;
        double secs = run_timed([&] {
            Fixture f = load_fixture(fixdir + "/semilattice_m3.fix");
            Report r1 = run_suite(f);
            Report r2 = run_suite(f);
            if (r1.to_json() != r2.to_json() || r1.to_text() != r2.to_text()) {
                ok = false;
                detail = "reports differ between runs";
            }
            if (!r1.ok()) {
                ok = false;
                detail = "suite reported failures";
            }
        });
        report(11, "deterministic suite reports", ok, secs, 600.0, detail);
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
