#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fibrantkit/fincat.hpp"

using namespace fibrantkit;

namespace {

/// Poset category on a reflexive-transitive relation; morphism x->y named
/// "x<=y", identity "x<=x".
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

/// One-object groupoid on Z/2: morphisms e (identity) and s with s.s = e.
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

}  // namespace

TEST_CASE("builder validates identity, closure, associativity") {
    CategoryBuilder b;
    b.add_object("x");
    int f = b.add_morphism("f", 0, 0);
    b.set_identity(0, f);
    // missing composite f.f
    auto v = b.validate();
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == "DanglingComposite");
    b.set_composite(f, f, f);
    CHECK(b.validate().empty());
}

TEST_CASE("non-associative table is rejected") {
    CategoryBuilder b;
    b.add_object("x");
    int e = b.add_morphism("e", 0, 0);
    int s = b.add_morphism("s", 0, 0);
    b.set_identity(0, e);
    b.set_composite(e, e, e);
    b.set_composite(e, s, s);
    b.set_composite(s, e, s);
    b.set_composite(s, s, s);  // s.s = s breaks associativity? (s.s).s = s.s
    // actually s.s=s is associative (idempotent); break unit law instead:
    auto v = b.validate();
    CHECK(v.empty());  // monoid {e,s | ss=s} is a category
    CategoryBuilder b2;
    b2.add_object("x");
    int e2 = b2.add_morphism("e", 0, 0);
    int s2 = b2.add_morphism("s", 0, 0);
    b2.set_identity(0, s2);  // wrong identity
    b2.set_composite(e2, e2, e2);
    b2.set_composite(e2, s2, s2);
    b2.set_composite(s2, e2, s2);
    b2.set_composite(s2, s2, e2);
    auto v2 = b2.validate();
    CHECK(!v2.empty());
}

TEST_CASE("chain category basics") {
    auto c = chain_category(4);
    CHECK(c->object_count() == 4);
    CHECK(c->morphism_count() == 10);
    CHECK(c->terminal_object().has_value());
    CHECK(c->object_id(*c->terminal_object()) == "3");
    CHECK(c->object_id(*c->initial_object()) == "0");
    int m01 = c->morphism_index("0<=1");
    int m13 = c->morphism_index("1<=3");
    CHECK(c->compose(m13, m01) == c->morphism_index("0<=3"));
    CHECK(c->is_iso(c->identity(0)));
    CHECK(!c->is_iso(m01));
}

TEST_CASE("comma category of BZ2 identity is codiscrete on 2 objects") {
    // Oracle: for F = id on B(Z/2) and d = *, the comma d/F has one object per
    // morphism (2 objects) and hom(u,u') = {g : g.u = u'} which is a single
    // element, giving the codiscrete groupoid: 2 objects, 4 morphisms.
    auto c = bz2();
    auto F = Functor::identity_of(c);
    auto comma = comma_category(F, 0);
    CHECK(comma.cat->object_count() == 2);
    CHECK(comma.cat->morphism_count() == 4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(comma.cat->hom(x, y).size() == 1);
    std::string why;
    CHECK(comma.projection.check(&why));
}

TEST_CASE("opposite involution and composition") {
    auto c = chain_category(3);
    auto op = opposite(c);
    CHECK(op->initial_object().has_value());
    CHECK(op->object_id(*op->initial_object()) == "2");
    int m01 = op->morphism_index("0<=1");
    int m12 = op->morphism_index("1<=2");
    // in op: "0<=1" : 1 -> 0, "1<=2": 2 -> 1, composite "0<=2": 2 -> 0
    CHECK(op->compose(m01, m12) == op->morphism_index("0<=2"));
}

TEST_CASE("product category and projections") {
    auto c = chain_category(2);
    auto p = product_category(c, c);
    CHECK(p.cat->object_count() == 4);
    CHECK(p.cat->morphism_count() == 9);
    std::string why;
    CHECK(p.proj1.check(&why));
    CHECK(p.proj2.check(&why));
    auto diag = pair_into_product(p, Functor::identity_of(c), Functor::identity_of(c));
    CHECK(diag.check(&why));
}

TEST_CASE("functor enumeration count oracle") {
    // Functors [1] -> [1] between 2-chains = monotone maps on {0,1}: 3.
    auto c = chain_category(2);
    auto fs = all_functors(c, c);
    CHECK(fs.size() == 3);
    // Functors B(Z/2) -> B(Z/2) = group homs Z/2 -> Z/2: 2.
    auto g = bz2();
    CHECK(all_functors(g, g).size() == 2);
    // Functors [1] -> B(Z/2): both objects to *, the arrow to either element
    // (no composition constraint relates distinct chain objects): 2.
    CHECK(all_functors(c, g).size() == 2);
}

TEST_CASE("right adjoint exists for initial-object pick into a chain") {
    // F: 1 -> [1] picking 0 (the initial object) has the unique functor
    // [1] -> 1 as right adjoint: Hom(0, d) and Hom(*, G d) are both singletons.
    auto one = chain_category(1);
    auto two = chain_category(2);
    Functor F;
    F.src = one;
    F.tgt = two;
    F.omap = {0};
    F.mmap = {two->identity(0)};
    REQUIRE(F.check());
    auto adj = find_right_adjoint(F);
    REQUIRE(adj.has_value());
    std::string why;
    CHECK(adj->check(&why));
    // Picking 1 (terminal, not initial) has no right adjoint: F/0 is empty.
    Functor F1;
    F1.src = one;
    F1.tgt = two;
    F1.omap = {1};
    F1.mmap = {two->identity(1)};
    REQUIRE(F1.check());
    CHECK(!find_right_adjoint(F1).has_value());
    // ...but it has a left adjoint (terminal picks are right adjoints).
    CHECK(find_left_adjoint(F1).has_value());
    CHECK(!find_left_adjoint(F).has_value());
}

TEST_CASE("meet functor is right adjoint to diagonal on a chain") {
    // On a meet-semilattice the diagonal X -> X x X has right adjoint the meet.
    auto c = chain_category(3);
    auto p = product_category(c, c);
    auto diag = pair_into_product(p, Functor::identity_of(c), Functor::identity_of(c));
    auto adj = find_right_adjoint(diag);
    REQUIRE(adj.has_value());
    // G(x,y) = min(x,y)
    for (auto& [xy, o] : p.obj_index)
        CHECK(adj->right.omap[o] == std::min(xy.first, xy.second));
}

TEST_CASE("projection of a product is a Grothendieck fibration") {
    auto c = chain_category(2);
    auto g = bz2();
    auto p = product_category(c, g);
    auto chk = is_grothendieck_fibration(p.proj1);
    CHECK(chk.is_fibration);
    // lifts exist for every (object, base morphism into it)
    CHECK(!chk.lift.empty());
    // fibres are isomorphic to B(Z/2)
    auto fib = strict_fibre(p.proj1, 0);
    CHECK(fib.cat->object_count() == 1);
    CHECK(fib.cat->morphism_count() == 2);
    std::string why;
    CHECK(fib.inclusion.check(&why));
}

TEST_CASE("non-fibration detected") {
    // The inclusion of 1 as the object 0 of [1] is not a fibration over [1]
    // pulled the other way; use instead the functor [1] -> [1] collapsing to 1:
    // cartesian lift of 0<=1 with codomain 0 must not exist for the identity
    // functor precomposed trick; simplest true negative: P: 1 -> [1] at 1 is
    // vacuously a fibration (no morphisms into the missing fibre are hit)...
    // Genuine negative: the "codomain" functor from the arrow category of [1]
    // restricted... keep it concrete: P: [1] -> [1] identity IS a fibration;
    // the span-leg functor below is not.
    // E = {a -> b}, B = {x -> y}, P(a)=y?? P must be a functor; use:
    // E = discrete {a,b}, B = [1], P(a)=0, P(b)=1: the lift of 0<=1 at b fails.
    CategoryBuilder eb;
    eb.add_object("a");
    eb.add_object("b");
    int ia = eb.add_morphism("ida", 0, 0);
    int ib = eb.add_morphism("idb", 1, 1);
    eb.set_identity(0, ia);
    eb.set_identity(1, ib);
    eb.set_composite(ia, ia, ia);
    eb.set_composite(ib, ib, ib);
    auto E = eb.build();
    auto B = chain_category(2);
    Functor P;
    P.src = E;
    P.tgt = B;
    P.omap = {0, 1};
    P.mmap = {B->identity(0), B->identity(1)};
    REQUIRE(P.check());
    auto chk = is_grothendieck_fibration(P);
    CHECK(!chk.is_fibration);
    CHECK(!chk.counterexample.empty());
}

TEST_CASE("cartesian lifts are lexicographically least") {
    // Codiscrete groupoid J (2 objects) over the terminal category: every
    // morphism is cartesian; the chosen lift must be the id-least candidate.
    CategoryBuilder b;
    b.add_object("a");
    b.add_object("b");
    int ia = b.add_morphism("ia", 0, 0);
    int ib = b.add_morphism("ib", 1, 1);
    int u = b.add_morphism("u", 0, 1);
    int v = b.add_morphism("v", 1, 0);
    b.set_identity(0, ia);
    b.set_identity(1, ib);
    b.set_composite(ia, ia, ia);
    b.set_composite(ib, ib, ib);
    b.set_composite(u, ia, u);
    b.set_composite(ib, u, u);
    b.set_composite(v, ib, v);
    b.set_composite(ia, v, v);
    b.set_composite(v, u, ia);
    b.set_composite(u, v, ib);
    auto J = b.build();
    auto one = chain_category(1);
    Functor P;
    P.src = J;
    P.tgt = one;
    P.omap = {0, 0};
    P.mmap = {one->identity(0), one->identity(0), one->identity(0), one->identity(0)};
    REQUIRE(P.check());
    auto chk = is_grothendieck_fibration(P);
    REQUIRE(chk.is_fibration);
    // lift at object a of id: candidates into a are {ia, v}: "ia" < "v"
    CHECK(chk.lift.at({0, one->identity(0)}) == ia);
    CHECK(chk.lift.at({1, one->identity(0)}) == ib);
    (void)u;
    (void)v;
}

TEST_CASE("pullback category of two functors over a chain") {
    auto c2 = chain_category(2);
    auto p = product_category(c2, c2);
    auto pb = pullback_category(p.proj1, p.proj1);
    std::string why;
    CHECK(pb.proj1.check(&why));
    CHECK(pb.proj2.check(&why));
    // objects: pairs ((x,y),(x,z)): 2*2*2 = 8
    CHECK(pb.cat->object_count() == 8);
}

TEST_CASE("full subcategory inclusion") {
    auto c = chain_category(3);
    auto sub = full_subcategory(c, {0, 2});
    CHECK(sub.cat->object_count() == 2);
    CHECK(sub.cat->morphism_count() == 3);
    std::string why;
    CHECK(sub.inclusion.check(&why));
}
