#include "fibrantkit/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fibrantkit {

namespace {
long long comp_key(int g, int f) { return static_cast<long long>(g) * 1000003LL + f; }
}  // namespace

// --------------------------------------------------------------------------
// FinCategory

int FinCategory::object_index(const std::string& id) const {
    auto it = obj_index_.find(id);
    return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& id) const {
    auto it = mor_index_.find(id);
    return it == mor_index_.end() ? -1 : it->second;
}

bool FinCategory::is_identity(int m) const {
    return identity_[morphisms_[m].dom] == m;
}

int FinCategory::compose(int g, int f) const {
    if (morphisms_[f].cod != morphisms_[g].dom) return -1;
    auto it = comp_.find(comp_key(g, f));
    return it == comp_.end() ? -1 : it->second;
}

const std::vector<int>& FinCategory::hom(int x, int y) const {
    static const std::vector<int> empty;
    auto it = hom_.find({x, y});
    return it == hom_.end() ? empty : it->second;
}

int FinCategory::inverse(int m) const {
    if (inverse_cache_.empty()) {
        inverse_cache_.assign(morphisms_.size(), -2);
    }
    if (inverse_cache_[m] != -2) return inverse_cache_[m];
    int result = -1;
    int d = morphisms_[m].dom, c = morphisms_[m].cod;
    for (int n : hom(c, d)) {
        if (compose(n, m) == identity_[d] && compose(m, n) == identity_[c]) {
            result = n;
            break;
        }
    }
    inverse_cache_[m] = result;
    return result;
}

std::optional<int> FinCategory::terminal_object() const {
    for (int t : sorted_objects_by_id()) {
        bool ok = true;
        for (int x = 0; x < object_count() && ok; ++x)
            ok = hom(x, t).size() == 1;
        if (ok) return t;
    }
    return std::nullopt;
}

std::optional<int> FinCategory::initial_object() const {
    for (int i : sorted_objects_by_id()) {
        bool ok = true;
        for (int x = 0; x < object_count() && ok; ++x)
            ok = hom(i, x).size() == 1;
        if (ok) return i;
    }
    return std::nullopt;
}

std::vector<int> FinCategory::sorted_objects_by_id() const {
    std::vector<int> v(objects_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    std::sort(v.begin(), v.end(),
              [&](int a, int b) { return objects_[a] < objects_[b]; });
    return v;
}

// --------------------------------------------------------------------------
// CategoryBuilder

int CategoryBuilder::add_object(const std::string& id) {
    if (obj_index_.count(id))
        throw Error("ValidationError", "duplicate object id " + id);
    int idx = static_cast<int>(objects_.size());
    objects_.push_back(id);
    identity_.push_back(-1);
    obj_index_[id] = idx;
    return idx;
}

int CategoryBuilder::add_morphism(const std::string& id, int dom, int cod) {
    if (mor_index_.count(id))
        throw Error("ValidationError", "duplicate morphism id " + id);
    if (morphisms_.size() >= cap_) throw size_cap_exceeded("category", cap_);
    int idx = static_cast<int>(morphisms_.size());
    morphisms_.push_back({id, dom, cod});
    mor_index_[id] = idx;
    return idx;
}

void CategoryBuilder::set_identity(int obj, int mor) { identity_[obj] = mor; }

void CategoryBuilder::set_composite(int g, int f, int gf) { comp_[{g, f}] = gf; }

int CategoryBuilder::object_index(const std::string& id) const {
    auto it = obj_index_.find(id);
    return it == obj_index_.end() ? -1 : it->second;
}

int CategoryBuilder::morphism_index(const std::string& id) const {
    auto it = mor_index_.find(id);
    return it == mor_index_.end() ? -1 : it->second;
}

std::vector<Violation> CategoryBuilder::validate() const {
    std::vector<Violation> out;
    const int M = static_cast<int>(morphisms_.size());
    auto comp = [&](int g, int f) -> int {
        auto it = comp_.find({g, f});
        return it == comp_.end() ? -1 : it->second;
    };

    for (std::size_t o = 0; o < objects_.size(); ++o) {
        int e = identity_[o];
        if (e < 0) {
            out.push_back({"MissingIdentity", objects_[o]});
            continue;
        }
        if (morphisms_[e].dom != static_cast<int>(o) ||
            morphisms_[e].cod != static_cast<int>(o))
            out.push_back({"MissingIdentity",
                           objects_[o] + ": identity " + morphisms_[e].id +
                               " is not an endomorphism"});
    }

    // composition table entries must be well-typed; composable pairs must
    // all be present
    for (const auto& [gf, h] : comp_) {
        auto [g, f] = gf;
        if (morphisms_[f].cod != morphisms_[g].dom)
            out.push_back({"DanglingComposite",
                           morphisms_[g].id + " . " + morphisms_[f].id +
                               ": not composable"});
        else if (morphisms_[h].dom != morphisms_[f].dom ||
                 morphisms_[h].cod != morphisms_[g].cod)
            out.push_back({"DanglingComposite",
                           morphisms_[g].id + " . " + morphisms_[f].id + " = " +
                               morphisms_[h].id + ": dom/cod mismatch"});
    }
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g)
            if (morphisms_[f].cod == morphisms_[g].dom && comp(g, f) < 0)
                out.push_back({"DanglingComposite",
                               morphisms_[g].id + " . " + morphisms_[f].id +
                                   ": missing entry"});
    if (!out.empty()) return out;

    // identity laws
    for (int f = 0; f < M; ++f) {
        int ed = identity_[morphisms_[f].dom], ec = identity_[morphisms_[f].cod];
        if (comp(f, ed) != f)
            out.push_back({"NonUnital", morphisms_[f].id + " . id != " + morphisms_[f].id});
        if (comp(ec, f) != f)
            out.push_back({"NonUnital", "id . " + morphisms_[f].id + " != " + morphisms_[f].id});
    }

    // associativity
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            if (morphisms_[f].cod != morphisms_[g].dom) continue;
            int gf = comp(g, f);
            for (int h = 0; h < M; ++h) {
                if (morphisms_[g].cod != morphisms_[h].dom) continue;
                int hg = comp(h, g);
                if (comp(h, gf) != comp(hg, f)) {
                    out.push_back({"NonAssociative", morphisms_[h].id + " . " +
                                                         morphisms_[g].id + " . " +
                                                         morphisms_[f].id});
                }
            }
        }
    return out;
}

CatPtr CategoryBuilder::materialize() const {
    auto cat = std::make_shared<FinCategory>();
    cat->objects_ = objects_;
    cat->morphisms_ = morphisms_;
    cat->identity_ = identity_;
    cat->obj_index_ = obj_index_;
    cat->mor_index_ = mor_index_;
    cat->from_.assign(objects_.size(), {});
    cat->to_.assign(objects_.size(), {});
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
        cat->from_[morphisms_[m].dom].push_back(m);
        cat->to_[morphisms_[m].cod].push_back(m);
        cat->hom_[{morphisms_[m].dom, morphisms_[m].cod}].push_back(m);
    }
    for (const auto& [gf, h] : comp_) cat->comp_[comp_key(gf.first, gf.second)] = h;
    return cat;
}

CatPtr CategoryBuilder::build() const {
    auto violations = validate();
    if (!violations.empty()) {
        std::ostringstream os;
        for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
            os << (i ? "; " : "") << violations[i].kind << " (" << violations[i].witness << ")";
        if (violations.size() > 5) os << "; ... " << violations.size() << " total";
        throw Error("ValidationError", os.str());
    }
    return materialize();
}

CatPtr CategoryBuilder::build_unchecked() const { return materialize(); }

// --------------------------------------------------------------------------
// Functor

bool Functor::check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(omap.size()) != src->object_count() ||
        static_cast<int>(mmap.size()) != src->morphism_count())
        return fail("map sizes do not match the source category");
    for (int m = 0; m < src->morphism_count(); ++m) {
        int fm = mmap[m];
        if (fm < 0 || fm >= tgt->morphism_count()) return fail("morphism image out of range");
        if (tgt->dom(fm) != omap[src->dom(m)] || tgt->cod(fm) != omap[src->cod(m)])
            return fail("dom/cod not preserved at " + src->mor_id(m));
    }
    for (int o = 0; o < src->object_count(); ++o)
        if (mmap[src->identity(o)] != tgt->identity(omap[o]))
            return fail("identity not preserved at " + src->object_id(o));
    for (int f = 0; f < src->morphism_count(); ++f)
        for (int g : src->from(src->cod(f))) {
            int gf = src->compose(g, f);
            if (mmap[gf] != tgt->compose(mmap[g], mmap[f]))
                return fail("composition not preserved at " + src->mor_id(g) + " . " +
                            src->mor_id(f));
        }
    return true;
}

bool Functor::is_isomorphism() const {
    if (src->object_count() != tgt->object_count() ||
        src->morphism_count() != tgt->morphism_count())
        return false;
    std::vector<char> oseen(tgt->object_count(), 0), mseen(tgt->morphism_count(), 0);
    for (int o : omap) {
        if (oseen[o]) return false;
        oseen[o] = 1;
    }
    for (int m : mmap) {
        if (mseen[m]) return false;
        mseen[m] = 1;
    }
    return true;
}

bool Functor::fully_faithful() const {
    for (int x = 0; x < src->object_count(); ++x)
        for (int y = 0; y < src->object_count(); ++y) {
            const auto& h = src->hom(x, y);
            const auto& th = tgt->hom(omap[x], omap[y]);
            if (h.size() != th.size()) return false;
            std::set<int> images;
            for (int m : h) images.insert(mmap[m]);
            if (images.size() != h.size()) return false;
        }
    return true;
}

Functor Functor::identity_of(CatPtr c) {
    Functor f;
    f.src = f.tgt = c;
    f.omap.resize(c->object_count());
    f.mmap.resize(c->morphism_count());
    for (int o = 0; o < c->object_count(); ++o) f.omap[o] = o;
    for (int m = 0; m < c->morphism_count(); ++m) f.mmap[m] = m;
    return f;
}

Functor Functor::after(const Functor& g) const {
    Functor h;
    h.src = g.src;
    h.tgt = tgt;
    h.omap.resize(g.omap.size());
    h.mmap.resize(g.mmap.size());
    for (std::size_t o = 0; o < g.omap.size(); ++o) h.omap[o] = omap[g.omap[o]];
    for (std::size_t m = 0; m < g.mmap.size(); ++m) h.mmap[m] = mmap[g.mmap[m]];
    return h;
}

// --------------------------------------------------------------------------
// opposite

CatPtr opposite(const CatPtr& c) {
    CategoryBuilder b(static_cast<std::size_t>(c->morphism_count()) + 1);
    for (int o = 0; o < c->object_count(); ++o) b.add_object(c->object_id(o));
    for (int m = 0; m < c->morphism_count(); ++m)
        b.add_morphism(c->mor_id(m), c->cod(m), c->dom(m));
    for (int o = 0; o < c->object_count(); ++o) b.set_identity(o, c->identity(o));
    for (int f = 0; f < c->morphism_count(); ++f)
        for (int g : c->from(c->cod(f)))
            b.set_composite(f, g, c->compose(g, f));  // op: f .op g = g . f
    return b.build_unchecked();
}

Functor opposite(const Functor& f) {
    Functor g = f;
    g.src = opposite(f.src);
    g.tgt = opposite(f.tgt);
    return g;
}

// --------------------------------------------------------------------------
// product category

ProductCategoryResult product_category(const CatPtr& c, const CatPtr& d, std::size_t cap) {
    ProductCategoryResult r;
    if (static_cast<std::size_t>(c->morphism_count()) *
            static_cast<std::size_t>(d->morphism_count()) > cap)
        throw size_cap_exceeded("product category", cap);
    CategoryBuilder b(cap);
    for (int x = 0; x < c->object_count(); ++x)
        for (int y = 0; y < d->object_count(); ++y)
            r.obj_index[{x, y}] =
                b.add_object("(" + c->object_id(x) + "," + d->object_id(y) + ")");
    for (int f = 0; f < c->morphism_count(); ++f)
        for (int g = 0; g < d->morphism_count(); ++g)
            r.mor_index[{f, g}] = b.add_morphism(
                "(" + c->mor_id(f) + "," + d->mor_id(g) + ")",
                r.obj_index[{c->dom(f), d->dom(g)}], r.obj_index[{c->cod(f), d->cod(g)}]);
    for (auto& [xy, o] : r.obj_index)
        b.set_identity(o, r.mor_index[{c->identity(xy.first), d->identity(xy.second)}]);
    for (auto& [fg, m] : r.mor_index) {
        auto [f, g] = fg;
        for (int f2 : c->from(c->cod(f)))
            for (int g2 : d->from(d->cod(g)))
                b.set_composite(r.mor_index[{f2, g2}], m,
                                r.mor_index[{c->compose(f2, f), d->compose(g2, g)}]);
    }
    r.cat = b.build_unchecked();
    r.proj1.src = r.cat;
    r.proj1.tgt = c;
    r.proj2.src = r.cat;
    r.proj2.tgt = d;
    r.proj1.omap.resize(r.cat->object_count());
    r.proj2.omap.resize(r.cat->object_count());
    r.proj1.mmap.resize(r.cat->morphism_count());
    r.proj2.mmap.resize(r.cat->morphism_count());
    for (auto& [xy, o] : r.obj_index) {
        r.proj1.omap[o] = xy.first;
        r.proj2.omap[o] = xy.second;
    }
    for (auto& [fg, m] : r.mor_index) {
        r.proj1.mmap[m] = fg.first;
        r.proj2.mmap[m] = fg.second;
    }
    return r;
}

Functor pair_into_product(const ProductCategoryResult& prod, const Functor& F,
                          const Functor& G) {
    Functor h;
    h.src = F.src;
    h.tgt = prod.cat;
    h.omap.resize(F.omap.size());
    h.mmap.resize(F.mmap.size());
    for (std::size_t o = 0; o < F.omap.size(); ++o)
        h.omap[o] = prod.obj_index.at({F.omap[o], G.omap[o]});
    for (std::size_t m = 0; m < F.mmap.size(); ++m)
        h.mmap[m] = prod.mor_index.at({F.mmap[m], G.mmap[m]});
    return h;
}

// --------------------------------------------------------------------------
// comma categories


static CommaResult comma_build(const Functor& F, int d, bool to_d, std::size_t cap) {
    const auto& C = F.src;
    const auto& D = F.tgt;
    CommaResult r;
    CategoryBuilder b(cap);
    for (int c = 0; c < C->object_count(); ++c) {
        const auto& h = to_d ? D->hom(F.omap[c], d) : D->hom(d, F.omap[c]);
        for (int u : h) {
            int idx = b.add_object("(" + C->object_id(c) + "|" + D->mor_id(u) + ")");
            r.objects.push_back({c, u});
            r.index[{c, u}] = idx;
        }
    }
    const int N = static_cast<int>(r.objects.size());
    struct MD { int g; int dom; int cod; };
    std::vector<MD> mors;
    std::map<std::pair<int, int>, int> midx;  // (dom comma obj, g) -> morphism idx
    for (int a = 0; a < N; ++a) {
        auto [c, u] = r.objects[a];
        for (int g : C->from(c)) {
            int c2 = C->cod(g);
            int u2;
            if (to_d) {
                // u': F c2 -> d with u' . F g = u; may be non-unique, enumerate
                u2 = -1;
                for (int ucand : D->hom(F.omap[c2], d))
                    if (D->compose(ucand, F.mmap[g]) == u) {
                        int bobj = r.index.at({c2, ucand});
                        int m = b.add_morphism(
                            "[" + C->mor_id(g) + "@" + std::to_string(a) + ">" +
                                std::to_string(bobj) + "]",
                            a, bobj);
                        mors.push_back({g, a, bobj});
                        midx[{a, g}] = m;  // see note below
                    }
                continue;
            } else {
                u2 = D->compose(F.mmap[g], u);
                auto it = r.index.find({c2, u2});
                if (it == r.index.end()) continue;
                int m = b.add_morphism("[" + C->mor_id(g) + "@" + std::to_string(a) + ">" +
                                           std::to_string(it->second) + "]",
                                       a, it->second);
                mors.push_back({g, a, it->second});
                midx[{a, g}] = m;
            }
        }
    }
    // In the to_d case a morphism is determined by (dom object, g, cod object);
    // with a fixed dom object and g, the codomain determines u'.  Re-key:
    std::map<std::tuple<int, int, int>, int> midx3;
    for (int m = 0; m < static_cast<int>(mors.size()); ++m)
        midx3[{mors[m].dom, mors[m].g, mors[m].cod}] = m;

    for (int a = 0; a < N; ++a) {
        int e = midx3.at({a, C->identity(r.objects[a].first), a});
        b.set_identity(a, e);
    }
    for (int m1 = 0; m1 < static_cast<int>(mors.size()); ++m1)
        for (int m2 = 0; m2 < static_cast<int>(mors.size()); ++m2) {
            if (mors[m1].cod != mors[m2].dom) continue;
            int g = C->compose(mors[m2].g, mors[m1].g);
            b.set_composite(m2, m1, midx3.at({mors[m1].dom, g, mors[m2].cod}));
        }
    r.cat = b.build_unchecked();
    r.projection.src = r.cat;
    r.projection.tgt = C;
    r.projection.omap.resize(N);
    for (int a = 0; a < N; ++a) r.projection.omap[a] = r.objects[a].first;
    r.projection.mmap.resize(mors.size());
    for (int m = 0; m < static_cast<int>(mors.size()); ++m)
        r.projection.mmap[m] = mors[m].g;
    return r;
}

CommaResult comma_category(const Functor& F, int d, std::size_t cap) {
    return comma_build(F, d, false, cap);
}

CommaResult comma_category_to(const Functor& F, int d, std::size_t cap) {
    return comma_build(F, d, true, cap);
}

// --------------------------------------------------------------------------
// CatDiagram / oplax colimit

bool CatDiagram::check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(value.size()) != base->object_count() ||
        static_cast<int>(arrow.size()) != base->morphism_count())
        return fail("diagram sizes do not match the base");
    for (int m = 0; m < base->morphism_count(); ++m) {
        const Functor& a = arrow[m];
        if (a.src != value[base->cod(m)] || a.tgt != value[base->dom(m)])
            return fail("arrow " + base->mor_id(m) + " has wrong endpoints");
        std::string w;
        if (!a.check(&w)) return fail("arrow " + base->mor_id(m) + ": " + w);
    }
    for (int o = 0; o < base->object_count(); ++o) {
        const Functor& a = arrow[base->identity(o)];
        for (std::size_t i = 0; i < a.omap.size(); ++i)
            if (a.omap[i] != static_cast<int>(i)) return fail("identity arrow not identity");
        for (std::size_t i = 0; i < a.mmap.size(); ++i)
            if (a.mmap[i] != static_cast<int>(i)) return fail("identity arrow not identity");
    }
    for (int f = 0; f < base->morphism_count(); ++f)
        for (int g : base->from(base->cod(f))) {
            int gf = base->compose(g, f);
            Functor comp = arrow[f].after(arrow[g]);  // X(gf) = X(f) . X(g)
            if (comp.omap != arrow[gf].omap || comp.mmap != arrow[gf].mmap)
                return fail("contravariant functoriality fails at " + base->mor_id(g) +
                            " . " + base->mor_id(f));
        }
    return true;
}

OplaxColimitResult oplax_colimit(const CatDiagram& X, std::size_t cap) {
    const auto& C = X.base;
    OplaxColimitResult r;
    CategoryBuilder b(cap);
    for (int c = 0; c < C->object_count(); ++c)
        for (int x = 0; x < X.value[c]->object_count(); ++x) {
            int idx = b.add_object("<" + C->object_id(c) + "," +
                                   X.value[c]->object_id(x) + ">");
            r.objects.push_back({c, x});
            r.obj_index[{c, x}] = idx;
        }
    // morphisms <c',x'> -> <c,x>: (f: c' -> c, g: x' -> X(f)(x))
    for (int a = 0; a < static_cast<int>(r.objects.size()); ++a) {
        auto [c2, x2] = r.objects[a];  // source <c', x'>
        for (int f : C->from(c2)) {
            int c = C->cod(f);
            const Functor& Xf = X.arrow[f];  // X(c) -> X(c')
            for (int x = 0; x < X.value[c]->object_count(); ++x) {
                for (int g : X.value[c2]->hom(x2, Xf.omap[x])) {
                    int m = b.add_morphism(
                        "<" + C->mor_id(f) + "|" + X.value[c2]->mor_id(g) + "|" +
                            X.value[c]->object_id(x) + ">",
                        a, r.obj_index.at({c, x}));
                    r.mors.push_back({f, g});
                    r.mor_index[{f, g, r.obj_index.at({c, x})}] = m;
                }
            }
        }
    }
    for (int a = 0; a < static_cast<int>(r.objects.size()); ++a) {
        auto [c, x] = r.objects[a];
        b.set_identity(a,
                       r.mor_index.at({C->identity(c), X.value[c]->identity(x), a}));
    }
    // composition: (f, g): <c'',x''> -> <c',x'> then (f', g'): <c',x'> -> <c,x>
    // (here named m1 then m2) is (f' . f, X(f)(g') . g).
    struct Ends { int dom; int cod; };
    std::vector<Ends> ends(r.mors.size());
    for (auto& [key, m] : r.mor_index) {
        ends[m].cod = std::get<2>(key);
    }
    {
        // recover domains from builder data: recompute by re-walk
        int m = 0;
        for (int a = 0; a < static_cast<int>(r.objects.size()); ++a) {
            auto [c2, x2] = r.objects[a];
            for (int f : C->from(c2)) {
                int c = C->cod(f);
                const Functor& Xf = X.arrow[f];
                for (int x = 0; x < X.value[c]->object_count(); ++x)
                    for (int g : X.value[c2]->hom(x2, Xf.omap[x])) {
                        (void)g;
                        ends[m].dom = a;
                        ++m;
                    }
            }
        }
    }
    for (int m1 = 0; m1 < static_cast<int>(r.mors.size()); ++m1)
        for (int m2 = 0; m2 < static_cast<int>(r.mors.size()); ++m2) {
            if (ends[m1].cod != ends[m2].dom) continue;
            int f1 = r.mors[m1].f, g1 = r.mors[m1].g;
            int f2 = r.mors[m2].f, g2 = r.mors[m2].g;
            auto [cdom, xdom] = r.objects[ends[m1].dom];
            (void)xdom;
            int f = C->compose(f2, f1);
            int g = X.value[cdom]->compose(X.arrow[f1].mmap[g2], g1);
            b.set_composite(m2, m1, r.mor_index.at({f, g, ends[m2].cod}));
        }
    r.cat = b.build_unchecked();
    r.projection.src = r.cat;
    r.projection.tgt = C;
    r.projection.omap.resize(r.objects.size());
    for (int a = 0; a < static_cast<int>(r.objects.size()); ++a)
        r.projection.omap[a] = r.objects[a].first;
    r.projection.mmap.resize(r.mors.size());
    for (int m = 0; m < static_cast<int>(r.mors.size()); ++m)
        r.projection.mmap[m] = r.mors[m].f;
    return r;
}

// --------------------------------------------------------------------------
// Grothendieck fibrations

bool is_cartesian(const Functor& P, int phi) {
    const auto& E = P.src;
    const auto& B = P.tgt;
    int e2 = E->dom(phi), e = E->cod(phi);
    int g = P.mmap[phi];
    (void)e2;
    // phi: e' -> e over g: b' -> b.  For every psi: e'' -> e and h: P e'' -> b'
    // with g . h = P psi there must be a unique chi: e'' -> e' over h with
    // phi . chi = psi.
    for (int epp = 0; epp < E->object_count(); ++epp) {
        for (int psi : E->hom(epp, e)) {
            for (int h : B->hom(P.omap[epp], B->dom(g))) {
                if (B->compose(g, h) != P.mmap[psi]) continue;
                int count = 0;
                for (int chi : E->hom(epp, E->dom(phi))) {
                    if (P.mmap[chi] == h && E->compose(phi, chi) == psi) ++count;
                }
                if (count != 1) return false;
            }
        }
    }
    return true;
}

FibrationCheck is_grothendieck_fibration(const Functor& P) {
    const auto& E = P.src;
    const auto& B = P.tgt;
    FibrationCheck r;
    r.is_fibration = true;
    for (int e = 0; e < E->object_count() && r.is_fibration; ++e) {
        int b = P.omap[e];
        for (int bp = 0; bp < B->object_count() && r.is_fibration; ++bp) {
            for (int g : B->hom(bp, b)) {
                // candidates phi with cod e over g, lexicographically least id
                int best = -1;
                for (int phi : E->to(e)) {
                    if (P.mmap[phi] != g) continue;
                    if (!is_cartesian(P, phi)) continue;
                    if (best < 0 || E->mor_id(phi) < E->mor_id(best)) best = phi;
                }
                if (best < 0) {
                    r.is_fibration = false;
                    r.counterexample = "no cartesian lift of " + B->mor_id(g) +
                                       " with codomain " + E->object_id(e);
                    break;
                }
                r.lift[{e, g}] = best;
            }
        }
    }
    if (!r.is_fibration) r.lift.clear();
    return r;
}

FibreResult strict_fibre(const Functor& P, int b) {
    const auto& E = P.src;
    std::vector<int> objs;
    for (int e = 0; e < E->object_count(); ++e)
        if (P.omap[e] == b) objs.push_back(e);
    // subcategory of morphisms over id_b
    CategoryBuilder bu(static_cast<std::size_t>(E->morphism_count()) + 1);
    std::map<int, int> omap_back, mmap_back;
    FibreResult r;
    std::vector<int> mors;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        bu.add_object(E->object_id(objs[i]));
        omap_back[objs[i]] = static_cast<int>(i);
    }
    int idb = P.tgt->identity(b);
    for (int m = 0; m < E->morphism_count(); ++m)
        if (P.mmap[m] == idb && omap_back.count(E->dom(m))) {
            int idx = bu.add_morphism(E->mor_id(m), omap_back[E->dom(m)],
                                      omap_back[E->cod(m)]);
            mmap_back[m] = idx;
            mors.push_back(m);
        }
    for (int e : objs) bu.set_identity(omap_back[e], mmap_back.at(E->identity(e)));
    for (int m1 : mors)
        for (int m2 : mors) {
            if (E->cod(m1) != E->dom(m2)) continue;
            bu.set_composite(mmap_back[m2], mmap_back[m1],
                             mmap_back.at(E->compose(m2, m1)));
        }
    r.cat = bu.build_unchecked();
    r.inclusion.src = r.cat;
    r.inclusion.tgt = E;
    r.inclusion.omap = objs;
    r.inclusion.mmap = mors;
    return r;
}

FibreResult full_subcategory(const CatPtr& c, const std::vector<int>& objs) {
    CategoryBuilder bu(static_cast<std::size_t>(c->morphism_count()) + 1);
    std::map<int, int> oback, mback;
    std::vector<int> mors;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        bu.add_object(c->object_id(objs[i]));
        oback[objs[i]] = static_cast<int>(i);
    }
    for (int m = 0; m < c->morphism_count(); ++m)
        if (oback.count(c->dom(m)) && oback.count(c->cod(m))) {
            mback[m] = bu.add_morphism(c->mor_id(m), oback[c->dom(m)], oback[c->cod(m)]);
            mors.push_back(m);
        }
    for (int o : objs) bu.set_identity(oback[o], mback.at(c->identity(o)));
    for (int m1 : mors)
        for (int m2 : mors)
            if (c->cod(m1) == c->dom(m2))
                bu.set_composite(mback[m2], mback[m1], mback.at(c->compose(m2, m1)));
    FibreResult r;
    r.cat = bu.build_unchecked();
    r.inclusion.src = r.cat;
    r.inclusion.tgt = c;
    r.inclusion.omap = objs;
    r.inclusion.mmap = mors;
    return r;
}

// --------------------------------------------------------------------------
// adjoints

bool Adjunction::check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const auto& C = left.src;
    const auto& D = left.tgt;
    std::string w;
    if (!right.check(&w)) return fail("right adjoint not a functor: " + w);
    // naturality of unit: for f: c -> c', G F f . eta_c = eta_c' . f
    for (int f = 0; f < C->morphism_count(); ++f) {
        int lhs = C->compose(right.mmap[left.mmap[f]], unit[C->dom(f)]);
        int rhs = C->compose(unit[C->cod(f)], f);
        if (lhs != rhs || lhs < 0) return fail("unit not natural at " + C->mor_id(f));
    }
    for (int k = 0; k < D->morphism_count(); ++k) {
        int lhs = D->compose(k, counit[D->dom(k)]);
        int rhs = D->compose(counit[D->cod(k)], left.mmap[right.mmap[k]]);
        if (lhs != rhs || lhs < 0) return fail("counit not natural at " + D->mor_id(k));
    }
    // triangles: eps_{Fc} . F eta_c = id_{Fc};  G eps_d . eta_{Gd} = id_{Gd}
    for (int c = 0; c < C->object_count(); ++c) {
        int lhs = D->compose(counit[left.omap[c]], left.mmap[unit[c]]);
        if (lhs != D->identity(left.omap[c]))
            return fail("triangle identity fails at " + C->object_id(c));
    }
    for (int d = 0; d < D->object_count(); ++d) {
        int lhs = C->compose(right.mmap[counit[d]], unit[right.omap[d]]);
        if (lhs != C->identity(right.omap[d]))
            return fail("triangle identity fails at " + D->object_id(d));
    }
    return true;
}

std::optional<Adjunction> find_right_adjoint(const Functor& F) {
    const auto& C = F.src;
    const auto& D = F.tgt;
    Adjunction adj;
    adj.left = F;
    adj.right.src = D;
    adj.right.tgt = C;
    adj.right.omap.assign(D->object_count(), -1);
    adj.right.mmap.assign(D->morphism_count(), -1);
    adj.counit.assign(D->object_count(), -1);
    adj.unit.assign(C->object_count(), -1);
    // terminal object of F/d per object d
    std::vector<CommaResult> commas;
    commas.reserve(D->object_count());
    for (int d = 0; d < D->object_count(); ++d) {
        commas.push_back(comma_category_to(F, d));
        auto t = commas[d].cat->terminal_object();
        if (!t) return std::nullopt;
        adj.right.omap[d] = commas[d].objects[*t].first;
        adj.counit[d] = commas[d].objects[*t].second;  // F G d -> d
    }
    // G on morphisms: for k: d -> d', G k is the unique t: G d -> G d' with
    // eps_d' . F t = k . eps_d
    for (int k = 0; k < D->morphism_count(); ++k) {
        int d = D->dom(k), d2 = D->cod(k);
        int target = D->compose(k, adj.counit[d]);
        int found = -1;
        for (int t : C->hom(adj.right.omap[d], adj.right.omap[d2])) {
            if (D->compose(adj.counit[d2], F.mmap[t]) == target) {
                if (found >= 0) return std::nullopt;  // non-unique: not terminal
                found = t;
            }
        }
        if (found < 0) return std::nullopt;
        adj.right.mmap[k] = found;
    }
    // unit: unique eta_c: c -> G F c with eps_{Fc} . F eta_c = id
    for (int c = 0; c < C->object_count(); ++c) {
        int found = -1;
        for (int t : C->hom(c, adj.right.omap[F.omap[c]])) {
            if (D->compose(adj.counit[F.omap[c]], F.mmap[t]) == D->identity(F.omap[c])) {
                if (found >= 0) return std::nullopt;
                found = t;
            }
        }
        if (found < 0) return std::nullopt;
        adj.unit[c] = found;
    }
    if (!adj.check()) return std::nullopt;
    return adj;
}

std::optional<Adjunction> find_left_adjoint(const Functor& F) {
    // F: C -> D has left adjoint L iff F^op: C^op -> D^op has right adjoint L^op.
    Functor fop = opposite(F);
    auto a = find_right_adjoint(fop);
    if (!a) return std::nullopt;
    // Translate back: index maps carry over because opposite() preserves
    // object/morphism indices.
    Adjunction res;
    res.left.src = F.tgt;  // L: D -> C
    res.left.tgt = F.src;
    res.left.omap = a->right.omap;
    res.left.mmap = a->right.mmap;
    res.right = F;  // F is the right adjoint
    // For L -| F: unit: d -> F L d  lives in D; in the op picture the
    // counit of F^op -| L^op is F^op L^op d -> d in D^op, i.e. d -> F L d in D.
    res.unit = a->counit;
    res.counit = a->unit;
    std::string w;
    if (!res.check(&w)) return std::nullopt;
    return res;
}

// --------------------------------------------------------------------------
// pullback category

PullbackCategoryResult pullback_category(const Functor& F, const Functor& P,
                                         std::size_t cap) {
    if (F.tgt != P.tgt) throw Error("UnknownObject", "pullback over different bases");
    const auto& B1 = F.src;
    const auto& B2 = P.src;
    PullbackCategoryResult r;
    CategoryBuilder b(cap);
    for (int x = 0; x < B1->object_count(); ++x)
        for (int y = 0; y < B2->object_count(); ++y)
            if (F.omap[x] == P.omap[y])
                r.obj_index[{x, y}] =
                    b.add_object("(" + B1->object_id(x) + "," + B2->object_id(y) + ")");
    for (int f = 0; f < B1->morphism_count(); ++f)
        for (int g = 0; g < B2->morphism_count(); ++g)
            if (F.mmap[f] == P.mmap[g])
                r.mor_index[{f, g}] =
                    b.add_morphism("(" + B1->mor_id(f) + "," + B2->mor_id(g) + ")",
                                   r.obj_index.at({B1->dom(f), B2->dom(g)}),
                                   r.obj_index.at({B1->cod(f), B2->cod(g)}));
    for (auto& [xy, o] : r.obj_index)
        b.set_identity(o, r.mor_index.at({B1->identity(xy.first), B2->identity(xy.second)}));
    for (auto& [fg1, m1] : r.mor_index)
        for (auto& [fg2, m2] : r.mor_index) {
            if (B1->cod(fg1.first) != B1->dom(fg2.first) ||
                B2->cod(fg1.second) != B2->dom(fg2.second))
                continue;
            b.set_composite(m2, m1,
                            r.mor_index.at({B1->compose(fg2.first, fg1.first),
                                            B2->compose(fg2.second, fg1.second)}));
        }
    r.cat = b.build_unchecked();
    r.proj1.src = r.cat;
    r.proj1.tgt = B1;
    r.proj2.src = r.cat;
    r.proj2.tgt = B2;
    r.proj1.omap.resize(r.cat->object_count());
    r.proj2.omap.resize(r.cat->object_count());
    r.proj1.mmap.resize(r.cat->morphism_count());
    r.proj2.mmap.resize(r.cat->morphism_count());
    for (auto& [xy, o] : r.obj_index) {
        r.proj1.omap[o] = xy.first;
        r.proj2.omap[o] = xy.second;
    }
    for (auto& [fg, m] : r.mor_index) {
        r.proj1.mmap[m] = fg.first;
        r.proj2.mmap[m] = fg.second;
    }
    return r;
}

// --------------------------------------------------------------------------
// functor enumeration

std::vector<Functor> all_functors(const CatPtr& src, const CatPtr& tgt,
                                  std::size_t limit) {
    std::vector<Functor> out;
    const int NO = src->object_count();
    const int NM = src->morphism_count();
    if (NO == 0) {
        Functor f;
        f.src = src;
        f.tgt = tgt;
        out.push_back(f);
        return out;
    }
    if (tgt->object_count() == 0) return out;
    std::vector<int> omap(NO, 0);
    // non-identity morphisms to assign; identities are forced
    std::vector<int> free_mors;
    for (int m = 0; m < NM; ++m)
        if (!src->is_identity(m)) free_mors.push_back(m);
    std::vector<int> mmap(NM, -1);

    // backtracking over morphism assignments with composition consistency
    std::function<void(std::size_t)> assign_mors = [&](std::size_t i) {
        if (out.size() >= limit) throw size_cap_exceeded("functor enumeration", limit);
        if (i == free_mors.size()) {
            Functor f;
            f.src = src;
            f.tgt = tgt;
            f.omap = omap;
            f.mmap = mmap;
            // full composition check (partial checks below are necessary only)
            if (f.check()) out.push_back(std::move(f));
            return;
        }
        int m = free_mors[i];
        for (int im : tgt->hom(omap[src->dom(m)], omap[src->cod(m)])) {
            mmap[m] = im;
            // prune: any composite fully assigned must match
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j) {
                int m2 = free_mors[j];
                if (src->cod(m) == src->dom(m2)) {
                    int c = src->compose(m2, m);
                    if (mmap[c] >= 0 && tgt->compose(mmap[m2], mmap[m]) != mmap[c]) ok = false;
                }
                if (src->cod(m2) == src->dom(m)) {
                    int c = src->compose(m, m2);
                    if (mmap[c] >= 0 && tgt->compose(mmap[m], mmap[m2]) != mmap[c]) ok = false;
                }
            }
            if (ok) assign_mors(i + 1);
            mmap[m] = -1;
        }
    };

    std::function<void(int)> assign_objs = [&](int o) {
        if (o == NO) {
            for (int m = 0; m < NM; ++m) mmap[m] = -1;
            for (int x = 0; x < NO; ++x) mmap[src->identity(x)] = tgt->identity(omap[x]);
            assign_mors(0);
            return;
        }
        for (int y = 0; y < tgt->object_count(); ++y) {
            omap[o] = y;
            assign_objs(o + 1);
        }
    };
    assign_objs(0);
    return out;
}

}  // namespace fibrantkit
