#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fibrantkit/homotopy.hpp"

using namespace fibrantkit;

namespace {

CatPtr poset_category(const std::vector<std::string>& elems,
                      const std::vector<std::pair<int, int>>& le_pairs) {
    std::set<std::pair<int, int>> le(le_pairs.begin(), le_pairs.end());
    for (std::size_t i = 0; i < elems.size(); ++i) le.insert({(int)i, (int)i});
    CategoryBuilder b;
    for (const auto& e : elems) b.add_object(e);
    std::map<std::pair<int, int>, int> m;
    for (auto [x, y] : le)
        m[{x, y}] = b.add_morphism(elems[x] + "<=" + elems[y], x, y);
    for (std::size_t i = 0; i < elems.size(); ++i)
        b.set_identity((int)i, m.at({(int)i, (int)i}));
    for (auto [x, y] : le)
        for (auto [y2, z] : le)
            if (y == y2) b.set_composite(m.at({y, z}), m.at({x, y}), m.at({x, z}));
    return b.build();
}

CatPtr chain_category(int n) {
    std::vector<std::string> elems;
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) le.push_back({i, j});
    return poset_category(elems, le);
}

/// One-object groupoid on Z/2.
CatPtr bz2() {
    CategoryBuilder b;
    b.add_object("*");
    int e = b.add_morphism("e", 0, 0);
    int s = b.add_morphism("s", 0, 0);
    b.set_identity(0, e);
    b.set_composite(e, e, e);
    b.set_composite(e, s, s);
    b.set_composite(s, e, s);
    b.set_composite(s, s, e);
    return b.build();
}

/// Parallel pair a => b; the nerve is a circle (two vertices, two edges).
CatPtr parallel_pair() {
    CategoryBuilder b;
    b.add_object("a");
    b.add_object("b");
    int ia = b.add_morphism("ia", 0, 0);
    int ib = b.add_morphism("ib", 1, 1);
    int f = b.add_morphism("f", 0, 1);
    int g = b.add_morphism("g", 0, 1);
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

CatPtr point_category() { return chain_category(1); }

HomologyGroup Z(long r) {
    HomologyGroup g;
    g.rank = r;
    return g;
}

}  // namespace

TEST_CASE("smith normal form: divisibility chain and torsion") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto s = smith_normal_form(m);
    REQUIRE(s.rank == 2);
    CHECK(s.divisors == std::vector<Int>{1, 6});
    CHECK(s.torsion() == std::vector<Int>{6});

    IntMatrix m2(2, 3);
    m2.at(0, 0) = 4;
    m2.at(1, 1) = 6;
    auto s2 = smith_normal_form(m2);
    REQUIRE(s2.rank == 2);
    CHECK(s2.divisors == std::vector<Int>{2, 12});
}

TEST_CASE("nerve of B(Z/2): counts, identities, homology") {
    auto n = nerve(bz2(), 3);
    CHECK(n.ss->validate().empty());
    CHECK(n.ss->count == std::vector<int>{1, 2, 4, 8});
    auto h = homology(*n.ss);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == Z(1));
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion == std::vector<Int>{2});
    CHECK(h[2].trivial());
}

TEST_CASE("nerve of the parallel pair is a circle") {
    auto n = nerve(parallel_pair(), 3);
    CHECK(n.ss->validate().empty());
    auto mask = n.ss->degenerate_mask();
    int nondeg1 = 0;
    for (char d : mask[1]) nondeg1 += !d;
    CHECK(nondeg1 == 2);
    auto h = homology(*n.ss);
    CHECK(h[0] == Z(1));
    CHECK(h[1] == Z(1));
    CHECK(h[2].trivial());
    CHECK(n.ss->pi0() == 1);
}

TEST_CASE("discrete simplicial sets and pi0") {
    auto p = discrete_sset(1, 3);
    CHECK(p->validate().empty());
    CHECK(p->is_point());
    auto h = homology(*p);
    CHECK(h[0] == Z(1));
    CHECK(h[1].trivial());
    CHECK(h[2].trivial());
    auto d3 = discrete_sset(3, 3);
    CHECK(d3->validate().empty());
    CHECK(d3->pi0() == 3);
}

TEST_CASE("nerve map functoriality and evidence on simplicial maps") {
    auto two = chain_category(2);
    auto pt = point_category();
    Functor to_pt{two, pt, {0, 0}, {0, 0, 0}};
    REQUIRE(to_pt.check());
    auto ns = nerve(two, 3);
    auto nt = nerve(pt, 3);
    auto m = nerve_map(ns, nt, to_pt);
    std::string why;
    REQUIRE(m.check(&why));
    auto v = weak_equivalence_evidence(m);
    // a homotopy equivalence that is not an isomorphism stays Consistent
    CHECK(v.status == Status::Consistent);

    // point into the circle: H1 obstruction
    auto nc = nerve(parallel_pair(), 3);
    Functor pick_a{pt, parallel_pair(), {}, {}};
    pick_a.tgt = nc.cat;
    pick_a.omap = {0};
    pick_a.mmap = {0};
    REQUIRE(pick_a.check());
    auto npt = nerve(pt, 3);
    auto pm = nerve_map(npt, nc, pick_a);
    REQUIRE(pm.check());
    auto pv = weak_equivalence_evidence(pm);
    CHECK(pv.status == Status::Refuted);

    // identity is certified
    CHECK(weak_equivalence_evidence(SimplicialMap::identity_of(nc.ss)).status ==
          Status::Certified);
}

TEST_CASE("functor-level evidence uses structural certificates") {
    auto two = chain_category(2);
    auto pt = point_category();
    // object 0 of [1]: the inclusion has a right adjoint, hence certified
    Functor pick0{pt, two, {0}, {two->identity(0)}};
    REQUIRE(pick0.check());
    CHECK(weak_equivalence_evidence(pick0).status == Status::Certified);

    // point into the circle is refuted through homology
    auto pp = parallel_pair();
    Functor pick_a{pt, pp, {0}, {0}};
    REQUIRE(pick_a.check());
    CHECK(weak_equivalence_evidence(pick_a).status == Status::Refuted);
}

TEST_CASE("weak contractibility of categories") {
    CHECK(is_weakly_contractible(chain_category(3)).status == Status::Certified);
    CHECK(is_weakly_contractible(parallel_pair()).status == Status::Refuted);
    CHECK(is_weakly_contractible(bz2()).status == Status::Refuted);
    CHECK(is_weakly_contractible(point_category()).status == Status::Certified);
}

TEST_CASE("homotopy cofinality via comma categories") {
    auto two = chain_category(2);
    auto pt = point_category();
    Functor pick1{pt, two, {1}, {two->identity(1)}};
    REQUIRE(pick1.check());
    auto r = is_homotopy_cofinal(pick1);
    CHECK(r.overall.status == Status::Certified);

    Functor pick0{pt, two, {0}, {two->identity(0)}};
    auto r0 = is_homotopy_cofinal(pick0);
    CHECK(r0.overall.status == Status::Refuted);  // empty comma over 1
}

namespace {

/// Constant-point contravariant Cat diagram on a base.
CatDiagram constant_diagram(const CatPtr& base, const CatPtr& fibre) {
    CatDiagram X;
    X.base = base;
    for (int o = 0; o < base->object_count(); ++o) X.value.push_back(fibre);
    for (int m = 0; m < base->morphism_count(); ++m)
        X.arrow.push_back(Functor::identity_of(fibre));
    return X;
}

}  // namespace

TEST_CASE("homotopy colimit of the constant point diagram is the base nerve") {
    auto base = bz2();
    auto X = constant_diagram(base, point_category());
    std::string why;
    REQUIRE(X.check(&why));
    auto nd = nerve_diagram(X, 3);
    REQUIRE(nd.diag.check(&why));
    auto hc = homotopy_colimit(nd.diag, 3);
    CHECK(hc.ss->validate().empty());
    auto nb = nerve(base, 3);
    CHECK(hc.ss->count == nb.ss->count);
    auto h = homology(*hc.ss);
    CHECK(h[1].torsion == std::vector<Int>{2});
}

TEST_CASE("comparison to the nerve of the oplax colimit") {
    // base [1]; fibre B(Z/2) over 1, point over 0, transported along the arrow
    auto base = chain_category(2);
    auto pt = point_category();
    auto g = bz2();
    CatDiagram X;
    X.base = base;
    X.value.resize(2);
    X.arrow.resize(base->morphism_count());
    X.value[0] = pt;
    X.value[1] = g;
    for (int m = 0; m < base->morphism_count(); ++m) {
        int d = base->dom(m), c = base->cod(m);
        if (d == c) {
            X.arrow[m] = Functor::identity_of(X.value[d]);
        } else {
            // f: 0 -> 1 gives X(f): B(Z/2) -> point
            X.arrow[m] = Functor{g, pt, {0}, {0, 0}};
        }
    }
    std::string why;
    REQUIRE(X.check(&why));

    auto t = thomason_comparison(X, 3);
    REQUIRE(t.comparison.check(&why));
    CHECK(t.oplax.cat->object_count() == 2);
    CHECK(t.hocolim.ss->validate().empty());
    CHECK(t.oplax_nerve.ss->validate().empty());
    // both sides are the mapping cylinder of B(Z/2) -> point, hence contractible
    auto v = weak_equivalence_evidence(t.comparison);
    CHECK(v.status != Status::Refuted);
    CHECK(is_weakly_contractible(t.oplax.cat).status == Status::Certified);
    CHECK(is_weakly_contractible(*t.hocolim.ss).status != Status::Refuted);

    // the reversed diagram glues a point onto B(Z/2): homotopy type B(Z/2)
    CatDiagram Y;
    Y.base = base;
    Y.value = {g, pt};
    Y.arrow.resize(base->morphism_count());
    for (int m = 0; m < base->morphism_count(); ++m) {
        int d = base->dom(m), c = base->cod(m);
        if (d == c)
            Y.arrow[m] = Functor::identity_of(Y.value[d]);
        else
            Y.arrow[m] = Functor{pt, g, {0}, {g->identity(0)}};
    }
    REQUIRE(Y.check(&why));
    auto ty = thomason_comparison(Y, 3);
    REQUIRE(ty.comparison.check(&why));
    CHECK(weak_equivalence_evidence(ty.comparison).status != Status::Refuted);
    auto hy = homology(*ty.hocolim.ss);
    CHECK(hy[0] == Z(1));
    CHECK(hy[1].torsion == std::vector<Int>{2});
    auto ho = homology(*ty.oplax_nerve.ss);
    CHECK(ho[1].torsion == std::vector<Int>{2});
}

TEST_CASE("homotopy colimit over a discrete base is a disjoint union") {
    // two-object discrete base, fibres a point and a circle
    CategoryBuilder b;
    b.add_object("u");
    b.add_object("v");
    int iu = b.add_morphism("iu", 0, 0);
    int iv = b.add_morphism("iv", 1, 1);
    b.set_identity(0, iu);
    b.set_identity(1, iv);
    b.set_composite(iu, iu, iu);
    b.set_composite(iv, iv, iv);
    auto base = b.build();

    SSetDiagram X;
    X.base = base;
    auto circle = nerve(parallel_pair(), 3).ss;
    X.value = {discrete_sset(1, 3), circle};
    X.arrow = {SimplicialMap::identity_of(X.value[0]),
               SimplicialMap::identity_of(X.value[1])};
    std::string why;
    REQUIRE(X.check(&why));
    auto hc = homotopy_colimit(X, 3);
    CHECK(hc.ss->validate().empty());
    CHECK(hc.ss->pi0() == 2);
    auto h = homology(*hc.ss);
    CHECK(h[0] == Z(2));
    CHECK(h[1] == Z(1));
}
