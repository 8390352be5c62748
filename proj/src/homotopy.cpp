#include "fibrantkit/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fibrantkit {

// --------------------------------------------------------------------------
// SimplicialSet

std::vector<std::string> SimplicialSet::validate() const {
    std::vector<std::string> out;
    auto bad = [&](const std::string& m) { out.push_back(m); };
    if (static_cast<int>(count.size()) != dim + 1) {
        bad("level count mismatch");
        return out;
    }
    auto d = [&](int n, int i, int s) { return face[n][i][s]; };
    auto sg = [&](int n, int i, int s) { return degen[n][i][s]; };
    // range checks
    for (int n = 1; n <= dim; ++n)
        for (int i = 0; i <= n; ++i) {
            if (static_cast<int>(face[n][i].size()) != count[n]) bad("face table size");
            for (int s = 0; s < count[n]; ++s)
                if (d(n, i, s) < 0 || d(n, i, s) >= count[n - 1]) bad("face out of range");
        }
    for (int n = 0; n < dim; ++n)
        for (int i = 0; i <= n; ++i) {
            if (static_cast<int>(degen[n][i].size()) != count[n]) bad("degeneracy table size");
            for (int s = 0; s < count[n]; ++s)
                if (sg(n, i, s) < 0 || sg(n, i, s) >= count[n + 1])
                    bad("degeneracy out of range");
        }
    if (!out.empty()) return out;

    std::ostringstream os;
    // d_i d_j = d_{j-1} d_i (i < j), on level n >= 2
    for (int n = 2; n <= dim; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int s = 0; s < count[n]; ++s)
                    if (d(n - 1, i, d(n, j, s)) != d(n - 1, j - 1, d(n, i, s))) {
                        os << "d" << i << " d" << j << " != d" << j - 1 << " d" << i
                           << " at level " << n << " simplex " << s;
                        bad(os.str());
                        os.str("");
                    }
    // s_i s_j = s_{j+1} s_i (i <= j), from level n with n+2 <= dim
    for (int n = 0; n + 2 <= dim; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int s = 0; s < count[n]; ++s)
                    if (sg(n + 1, i, sg(n, j, s)) != sg(n + 1, j + 1, sg(n, i, s))) {
                        os << "s" << i << " s" << j << " identity fails at level " << n;
                        bad(os.str());
                        os.str("");
                    }
    // mixed identities on level n, 0 <= n < dim (s_j: n -> n+1 then d_i)
    for (int n = 0; n < dim; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int s = 0; s < count[n]; ++s) {
                    int v = d(n + 1, i, sg(n, j, s));
                    int expect;
                    if (i == j || i == j + 1)
                        expect = s;
                    else if (i < j)
                        expect = sg(n - 1, j - 1, d(n, i, s));
                    else
                        expect = sg(n - 1, j, d(n, i - 1, s));
                    if (v != expect) {
                        os << "d" << i << " s" << j << " identity fails at level " << n
                           << " simplex " << s;
                        bad(os.str());
                        os.str("");
                    }
                }
    return out;
}

std::vector<std::vector<char>> SimplicialSet::degenerate_mask() const {
    std::vector<std::vector<char>> mask(dim + 1);
    for (int n = 0; n <= dim; ++n) mask[n].assign(count[n], 0);
    for (int n = 0; n < dim; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < count[n]; ++s) mask[n + 1][degen[n][i][s]] = 1;
    return mask;
}

int SimplicialSet::pi0(std::vector<int>* component) const {
    std::vector<int> parent(count[0]);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    if (dim >= 1)
        for (int e = 0; e < count[1]; ++e)
            parent[find(face[1][0][e])] = find(face[1][1][e]);
    int n = 0;
    std::map<int, int> rename;
    std::vector<int> comp(count[0]);
    for (int x = 0; x < count[0]; ++x) {
        int r = find(x);
        if (!rename.count(r)) rename[r] = n++;
        comp[x] = rename[r];
    }
    if (component) *component = comp;
    return n;
}

bool SimplicialSet::is_point() const {
    for (int n = 0; n <= dim; ++n)
        if (count[n] != 1) return false;
    return true;
}

// --------------------------------------------------------------------------
// SimplicialMap

bool SimplicialMap::check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (src->dim != tgt->dim) return fail("dimension mismatch");
    for (int n = 0; n <= src->dim; ++n) {
        if (static_cast<int>(level[n].size()) != src->count[n]) return fail("level size");
        for (int s = 0; s < src->count[n]; ++s)
            if (level[n][s] < 0 || level[n][s] >= tgt->count[n])
                return fail("image out of range");
    }
    for (int n = 1; n <= src->dim; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < src->count[n]; ++s)
                if (level[n - 1][src->face[n][i][s]] != tgt->face[n][i][level[n][s]])
                    return fail("does not commute with a face map");
    for (int n = 0; n < src->dim; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < src->count[n]; ++s)
                if (level[n + 1][src->degen[n][i][s]] != tgt->degen[n][i][level[n][s]])
                    return fail("does not commute with a degeneracy map");
    return true;
}

bool SimplicialMap::is_isomorphism() const {
    for (int n = 0; n <= src->dim; ++n) {
        if (src->count[n] != tgt->count[n]) return false;
        std::vector<char> seen(tgt->count[n], 0);
        for (int s = 0; s < src->count[n]; ++s) {
            if (seen[level[n][s]]) return false;
            seen[level[n][s]] = 1;
        }
    }
    return true;
}

SimplicialMap SimplicialMap::identity_of(SSetPtr s) {
    SimplicialMap f;
    f.src = f.tgt = s;
    f.level.resize(s->dim + 1);
    for (int n = 0; n <= s->dim; ++n) {
        f.level[n].resize(s->count[n]);
        std::iota(f.level[n].begin(), f.level[n].end(), 0);
    }
    return f;
}

SimplicialMap SimplicialMap::after(const SimplicialMap& g) const {
    SimplicialMap h;
    h.src = g.src;
    h.tgt = tgt;
    h.level.resize(level.size());
    for (std::size_t n = 0; n < level.size(); ++n) {
        h.level[n].resize(g.level[n].size());
        for (std::size_t s = 0; s < g.level[n].size(); ++s)
            h.level[n][s] = level[n][g.level[n][s]];
    }
    return h;
}

// --------------------------------------------------------------------------
// nerve

NerveResult nerve(const CatPtr& c, int T, std::size_t cap) {
    NerveResult r;
    r.cat = c;
    auto ss = std::make_shared<SimplicialSet>();
    ss->dim = T;
    ss->count.assign(T + 1, 0);
    ss->face.resize(T + 1);
    ss->degen.resize(T + 1);
    r.chains.resize(T + 1);
    r.index.resize(T + 1);

    std::size_t total = 0;
    auto add_chain = [&](int n, std::vector<int> ch) {
        if (++total > cap) throw size_cap_exceeded("nerve", cap);
        int idx = static_cast<int>(r.chains[n].size());
        r.index[n][ch] = idx;
        r.chains[n].push_back(std::move(ch));
        return idx;
    };
    for (int x : c->sorted_objects_by_id()) add_chain(0, {x});
    for (int n = 1; n <= T; ++n) {
        for (const auto& ch : r.chains[n - 1]) {
            int last = (n == 1) ? ch[0] : c->cod(ch.back());
            for (int f : c->from(last)) {
                std::vector<int> ext = (n == 1) ? std::vector<int>{f} : ch;
                if (n > 1) ext.push_back(f);
                add_chain(n, std::move(ext));
            }
        }
    }
    for (int n = 0; n <= T; ++n) ss->count[n] = static_cast<int>(r.chains[n].size());
    // faces
    for (int n = 1; n <= T; ++n) {
        ss->face[n].assign(n + 1, std::vector<int>(ss->count[n]));
        for (int s = 0; s < ss->count[n]; ++s) {
            const auto& ch = r.chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (n == 1) {
                    f = {i == 0 ? c->cod(ch[0]) : c->dom(ch[0])};
                } else if (i == 0) {
                    f.assign(ch.begin() + 1, ch.end());
                } else if (i == n) {
                    f.assign(ch.begin(), ch.end() - 1);
                } else {
                    f.assign(ch.begin(), ch.end());
                    f[i - 1] = c->compose(ch[i], ch[i - 1]);
                    f.erase(f.begin() + i);
                }
                ss->face[n][i][s] = r.index[n - 1].at(f);
            }
        }
    }
    // degeneracies
    for (int n = 0; n < T; ++n) {
        ss->degen[n].assign(n + 1, std::vector<int>(ss->count[n]));
        for (int s = 0; s < ss->count[n]; ++s) {
            const auto& ch = r.chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> g;
                if (n == 0) {
                    g = {c->identity(ch[0])};
                } else {
                    // objects x_0..x_n; duplicate x_i
                    int xi = (i == 0) ? c->dom(ch[0]) : c->cod(ch[i - 1]);
                    g = ch;
                    g.insert(g.begin() + i, c->identity(xi));
                }
                ss->degen[n][i][s] = r.index[n + 1].at(g);
            }
        }
    }
    r.ss = ss;
    return r;
}

SimplicialMap nerve_map(const NerveResult& src, const NerveResult& tgt, const Functor& F) {
    SimplicialMap m;
    m.src = src.ss;
    m.tgt = tgt.ss;
    int T = src.ss->dim;
    m.level.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
        m.level[n].resize(src.ss->count[n]);
        for (int s = 0; s < src.ss->count[n]; ++s) {
            std::vector<int> img;
            if (n == 0) {
                img = {F.omap[src.chains[0][s][0]]};
            } else {
                for (int f : src.chains[n][s]) img.push_back(F.mmap[f]);
            }
            m.level[n][s] = tgt.index[n].at(img);
        }
    }
    return m;
}

// --------------------------------------------------------------------------
// homology

namespace {

/// Normalized chain complex data.
struct Complex {
    int dim;
    std::vector<std::vector<int>> basis;  ///< nondegenerate simplices per level
    std::vector<std::map<int, int>> pos;  ///< simplex -> basis position
    std::vector<IntMatrix> boundary;      ///< boundary[n]: C_n -> C_{n-1}, n >= 1
};

Complex build_complex(const SimplicialSet& s) {
    Complex c;
    c.dim = s.dim;
    auto mask = s.degenerate_mask();
    c.basis.resize(s.dim + 1);
    c.pos.resize(s.dim + 1);
    for (int n = 0; n <= s.dim; ++n)
        for (int x = 0; x < s.count[n]; ++x)
            if (!mask[n][x]) {
                c.pos[n][x] = static_cast<int>(c.basis[n].size());
                c.basis[n].push_back(x);
            }
    c.boundary.resize(s.dim + 1);
    for (int n = 1; n <= s.dim; ++n) {
        IntMatrix m(static_cast<int>(c.basis[n - 1].size()),
                    static_cast<int>(c.basis[n].size()));
        for (int j = 0; j < m.cols; ++j) {
            int x = c.basis[n][j];
            for (int i = 0; i <= n; ++i) {
                int y = s.face[n][i][x];
                auto it = c.pos[n - 1].find(y);
                if (it == c.pos[n - 1].end()) continue;  // degenerate face: zero
                if (i % 2 == 0)
                    m.at(it->second, j) += 1;
                else
                    m.at(it->second, j) -= 1;
            }
        }
        c.boundary[n] = std::move(m);
    }
    return c;
}

/// Homology of a chain complex given by boundary matrices; degrees 0..top-1
/// where boundary[top] is the last available differential.
HomologyProfile complex_homology(const std::vector<IntMatrix>& boundary,
                                 const std::vector<int>& dims, int top) {
    std::vector<SmithResult> snf(top + 1);
    for (int n = 1; n <= top; ++n) snf[n] = smith_normal_form(boundary[n]);
    HomologyProfile p(top);
    for (int n = 0; n < top; ++n) {
        int rn = (n == 0) ? 0 : snf[n].rank;
        int rn1 = snf[n + 1].rank;
        HomologyGroup g;
        g.rank = dims[n] - rn - rn1;
        g.torsion = snf[n + 1].torsion();
        p[n] = std::move(g);
    }
    return p;
}

}  // namespace

HomologyProfile homology(const SimplicialSet& s) {
    auto c = build_complex(s);
    std::vector<int> dims(s.dim + 1);
    for (int n = 0; n <= s.dim; ++n) dims[n] = static_cast<int>(c.basis[n].size());
    return complex_homology(c.boundary, dims, s.dim);
}

std::string to_string(const HomologyGroup& g) {
    std::ostringstream os;
    bool first = true;
    if (g.rank > 0) {
        os << "Z";
        if (g.rank > 1) os << "^" << g.rank;
        first = false;
    }
    for (const auto& t : g.torsion) {
        if (!first) os << "+";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string to_string(const HomologyProfile& p) {
    std::ostringstream os;
    for (std::size_t n = 0; n < p.size(); ++n)
        os << (n ? " " : "") << "H" << n << "=" << to_string(p[n]);
    return os.str();
}

// --------------------------------------------------------------------------
// evidence

Verdict weak_equivalence_evidence(const SimplicialMap& f) {
    if (f.is_isomorphism())
        return {Status::Certified, "levelwise isomorphism of simplicial sets"};
    int p0s = f.src->pi0(), p0t = f.tgt->pi0();
    if (p0s != p0t)
        return {Status::Refuted,
                "pi0 mismatch: " + std::to_string(p0s) + " vs " + std::to_string(p0t)};
    auto hs = homology(*f.src), ht = homology(*f.tgt);
    for (std::size_t n = 0; n < hs.size(); ++n)
        if (!(hs[n] == ht[n]))
            return {Status::Refuted, "H" + std::to_string(n) + " mismatch: " +
                                         to_string(hs[n]) + " vs " + to_string(ht[n])};
    // mapping cone of the normalized chain map: acyclic in degrees <= dim-1
    // whenever f is a weak homotopy equivalence
    auto ca = build_complex(*f.src);
    auto cb = build_complex(*f.tgt);
    int T = f.src->dim;
    auto maskb = f.tgt->degenerate_mask();
    std::vector<IntMatrix> cone(T + 1);
    std::vector<int> dims(T + 1);
    for (int n = 0; n <= T; ++n)
        dims[n] = (n > 0 ? static_cast<int>(ca.basis[n - 1].size()) : 0) +
                  static_cast<int>(cb.basis[n].size());
    for (int n = 1; n <= T; ++n) {
        int ra = n >= 2 ? static_cast<int>(ca.basis[n - 2].size()) : 0;
        int rb = static_cast<int>(cb.basis[n - 1].size());
        int cc_a = static_cast<int>(ca.basis[n - 1].size());
        int cc_b = static_cast<int>(cb.basis[n].size());
        IntMatrix m(ra + rb, cc_a + cc_b);
        // d(a, b) = (-da, f(a) + db)
        if (n >= 2)
            for (int i = 0; i < ra; ++i)
                for (int j = 0; j < cc_a; ++j) m.at(i, j) = -ca.boundary[n - 1].at(i, j);
        for (int j = 0; j < cc_a; ++j) {
            int x = ca.basis[n - 1][j];
            int y = f.level[n - 1][x];
            if (!maskb[n - 1][y]) m.at(ra + cb.pos[n - 1].at(y), j) += 1;
        }
        for (int i = 0; i < rb; ++i)
            for (int j = 0; j < cc_b; ++j) m.at(ra + i, cc_a + j) = cb.boundary[n].at(i, j);
        cone[n] = std::move(m);
    }
    auto hp = complex_homology(cone, dims, T);
    for (int n = 0; n < T; ++n)
        if (!hp[n].trivial())
            return {Status::Refuted, "induced map not a homology isomorphism: cone H" +
                                         std::to_string(n) + " = " + to_string(hp[n])};
    return {Status::Consistent,
            "pi0 and truncated integral homology comparisons all pass"};
}

Verdict weak_equivalence_evidence(const Functor& F, int T, std::size_t cap) {
    if (F.is_isomorphism()) return {Status::Certified, "isomorphism of categories"};
    if (auto a = find_right_adjoint(F))
        return {Status::Certified, "right adjoint found (adjunctions induce homotopy "
                                   "equivalences of nerves)"};
    if (auto a = find_left_adjoint(F))
        return {Status::Certified, "left adjoint found (adjunctions induce homotopy "
                                   "equivalences of nerves)"};
    auto ns = nerve(F.src, T, cap);
    auto nt = nerve(F.tgt, T, cap);
    auto m = nerve_map(ns, nt, F);
    auto v = weak_equivalence_evidence(m);
    if (v.status == Status::Certified)
        return {Status::Certified, "nerve map is an isomorphism of simplicial sets"};
    return v;
}

Verdict is_weakly_contractible(const SimplicialSet& s) {
    if (s.count[0] == 0) return {Status::Refuted, "empty simplicial set"};
    if (s.is_point()) return {Status::Certified, "isomorphic to the point"};
    int p0 = s.pi0();
    if (p0 != 1) return {Status::Refuted, "pi0 = " + std::to_string(p0)};
    auto h = homology(s);
    for (std::size_t n = 0; n < h.size(); ++n) {
        HomologyGroup expect;
        expect.rank = (n == 0) ? 1 : 0;
        if (!(h[n] == expect))
            return {Status::Refuted,
                    "H" + std::to_string(n) + " = " + to_string(h[n])};
    }
    return {Status::Consistent, "trivial reduced homology through degree " +
                                    std::to_string(s.dim - 1)};
}

Verdict is_weakly_contractible(const CatPtr& c, int T, std::size_t cap) {
    if (c->object_count() == 0) return {Status::Refuted, "empty category"};
    if (auto t = c->terminal_object())
        return {Status::Certified, "terminal object " + c->object_id(*t)};
    if (auto i = c->initial_object())
        return {Status::Certified, "initial object " + c->object_id(*i)};
    // depth-2 adjoint chain: a one-object full subcategory with trivial
    // endomorphisms whose inclusion is reflective or coreflective
    for (int o = 0; o < c->object_count(); ++o) {
        if (c->hom(o, o).size() != 1) continue;
        auto sub = full_subcategory(c, {o});
        if (find_right_adjoint(sub.inclusion) || find_left_adjoint(sub.inclusion))
            return {Status::Certified,
                    "reflective one-object subcategory at " + c->object_id(o) +
                        " linked to the terminal category"};
    }
    auto n = nerve(c, T, cap);
    return is_weakly_contractible(*n.ss);
}

CofinalityResult is_homotopy_cofinal(const Functor& F, int T, std::size_t cap) {
    CofinalityResult r;
    const auto& D = F.tgt;
    bool refuted = false, all_certified = true;
    std::string w;
    for (int d = 0; d < D->object_count(); ++d) {
        auto comma = comma_category(F, d, cap);
        auto v = is_weakly_contractible(comma.cat, T, cap);
        if (v.status == Status::Refuted && !refuted) {
            refuted = true;
            w = "comma category under " + D->object_id(d) + ": " + v.witness;
        }
        if (v.status != Status::Certified) all_certified = false;
        r.per_object.push_back(std::move(v));
    }
    if (refuted)
        r.overall = {Status::Refuted, w};
    else if (all_certified)
        r.overall = {Status::Certified, "every comma category certified contractible"};
    else
        r.overall = {Status::Consistent,
                     "no comma category refuted; not all certified"};
    return r;
}

// --------------------------------------------------------------------------
// diagrams, hocolim, comparison

bool SSetDiagram::check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (static_cast<int>(value.size()) != base->object_count() ||
        static_cast<int>(arrow.size()) != base->morphism_count())
        return fail("diagram sizes do not match the base");
    for (int m = 0; m < base->morphism_count(); ++m) {
        if (arrow[m].src != value[base->cod(m)] || arrow[m].tgt != value[base->dom(m)])
            return fail("arrow endpoints at " + base->mor_id(m));
        std::string w;
        if (!arrow[m].check(&w)) return fail("arrow " + base->mor_id(m) + ": " + w);
    }
    for (int o = 0; o < base->object_count(); ++o) {
        const auto& a = arrow[base->identity(o)];
        for (std::size_t n = 0; n < a.level.size(); ++n)
            for (std::size_t s = 0; s < a.level[n].size(); ++s)
                if (a.level[n][s] != static_cast<int>(s))
                    return fail("identity arrow is not the identity");
    }
    for (int f = 0; f < base->morphism_count(); ++f)
        for (int g : base->from(base->cod(f))) {
            int gf = base->compose(g, f);
            auto comp = arrow[f].after(arrow[g]);
            if (comp.level != arrow[gf].level)
                return fail("contravariant functoriality fails at " + base->mor_id(g) +
                            " . " + base->mor_id(f));
        }
    return true;
}

HocolimResult homotopy_colimit(const SSetDiagram& X, int T, std::size_t cap) {
    const auto& C = X.base;
    auto nb = nerve(C, T, cap);
    HocolimResult r;
    auto ss = std::make_shared<SimplicialSet>();
    ss->dim = T;
    ss->count.assign(T + 1, 0);
    ss->face.resize(T + 1);
    ss->degen.resize(T + 1);
    r.simplices.resize(T + 1);
    r.index.resize(T + 1);

    auto chain_last = [&](int n, const std::vector<int>& ch) {
        return n == 0 ? ch[0] : C->cod(ch.back());
    };
    std::size_t total = 0;
    for (int n = 0; n <= T; ++n)
        for (const auto& ch : nb.chains[n]) {
            int c = chain_last(n, ch);
            for (int x = 0; x < X.value[c]->count[n]; ++x) {
                if (++total > cap) throw size_cap_exceeded("homotopy colimit", cap);
                int idx = static_cast<int>(r.simplices[n].size());
                r.index[n][{ch, x}] = idx;
                r.simplices[n].push_back({ch, x});
            }
        }
    for (int n = 0; n <= T; ++n) ss->count[n] = static_cast<int>(r.simplices[n].size());

    auto nerve_face = [&](int n, const std::vector<int>& ch, int i) {
        int s = nb.index[n].at(ch);
        return nb.chains[n - 1][nb.ss->face[n][i][s]];
    };
    auto nerve_degen = [&](int n, const std::vector<int>& ch, int i) {
        int s = nb.index[n].at(ch);
        return nb.chains[n + 1][nb.ss->degen[n][i][s]];
    };
    for (int n = 1; n <= T; ++n) {
        ss->face[n].assign(n + 1, std::vector<int>(ss->count[n]));
        for (int s = 0; s < ss->count[n]; ++s) {
            const auto& [ch, x] = r.simplices[n][s];
            int c = chain_last(n, ch);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> ch2 = nerve_face(n, ch, i);
                int x2;
                if (i < n) {
                    x2 = X.value[c]->face[n][i][x];
                } else {
                    int fn = ch.back();  // n >= 1 so the chain is nonempty
                    x2 = X.arrow[fn].level[n - 1][X.value[c]->face[n][n][x]];
                }
                ss->face[n][i][s] = r.index[n - 1].at({ch2, x2});
            }
        }
    }
    for (int n = 0; n < T; ++n) {
        ss->degen[n].assign(n + 1, std::vector<int>(ss->count[n]));
        for (int s = 0; s < ss->count[n]; ++s) {
            const auto& [ch, x] = r.simplices[n][s];
            int c = chain_last(n, ch);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> ch2 = nerve_degen(n, ch, i);
                int x2 = X.value[c]->degen[n][i][x];
                ss->degen[n][i][s] = r.index[n + 1].at({ch2, x2});
            }
        }
    }
    r.ss = ss;
    return r;
}

NerveDiagramResult nerve_diagram(const CatDiagram& X, int T, std::size_t cap) {
    NerveDiagramResult r;
    r.diag.base = X.base;
    for (int c = 0; c < X.base->object_count(); ++c) {
        r.nerves.push_back(nerve(X.value[c], T, cap));
        r.diag.value.push_back(r.nerves.back().ss);
    }
    for (int m = 0; m < X.base->morphism_count(); ++m)
        r.diag.arrow.push_back(
            nerve_map(r.nerves[X.base->cod(m)], r.nerves[X.base->dom(m)], X.arrow[m]));
    return r;
}

ThomasonResult thomason_comparison(const CatDiagram& X, int T, std::size_t cap) {
    ThomasonResult r;
    r.nerve_diag = nerve_diagram(X, T, cap);
    r.hocolim = homotopy_colimit(r.nerve_diag.diag, T, cap);
    r.oplax = oplax_colimit(X, cap);
    r.oplax_nerve = nerve(r.oplax.cat, T, cap);
    const auto& C = X.base;

    SimplicialMap m;
    m.src = r.hocolim.ss;
    m.tgt = r.oplax_nerve.ss;
    m.level.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
        m.level[n].resize(r.hocolim.ss->count[n]);
        for (int s = 0; s < r.hocolim.ss->count[n]; ++s) {
            const auto& [ch, x] = r.hocolim.simplices[n][s];
            int cn = (n == 0) ? ch[0] : C->cod(ch.back());
            const auto& xchain = r.nerve_diag.nerves[cn].chains[n][x];
            // objects of the base chain and of the value chain
            std::vector<int> cobj(n + 1), xobj(n + 1);
            if (n == 0) {
                cobj[0] = ch[0];
                xobj[0] = xchain[0];
            } else {
                cobj[0] = C->dom(ch[0]);
                for (int i = 1; i <= n; ++i) cobj[i] = C->cod(ch[i - 1]);
                xobj[0] = X.value[cn]->dom(xchain[0]);
                for (int i = 1; i <= n; ++i) xobj[i] = X.value[cn]->cod(xchain[i - 1]);
            }
            // sigma_i: c_i -> c_n (composite of the tail), sigma_n = id
            std::vector<int> sigma(n + 1);
            sigma[n] = C->identity(cn);
            for (int i = n - 1; i >= 0; --i) sigma[i] = C->compose(sigma[i + 1], ch[i]);
            std::vector<int> y(n + 1);
            for (int i = 0; i <= n; ++i) y[i] = X.arrow[sigma[i]].omap[xobj[i]];
            if (n == 0) {
                m.level[0][s] =
                    r.oplax_nerve.index[0].at({r.oplax.obj_index.at({cobj[0], y[0]})});
                continue;
            }
            std::vector<int> target;
            for (int i = 1; i <= n; ++i) {
                int g = X.arrow[sigma[i - 1]].mmap[xchain[i - 1]];
                int codobj = r.oplax.obj_index.at({cobj[i], y[i]});
                target.push_back(r.oplax.mor_index.at({ch[i - 1], g, codobj}));
            }
            m.level[n][s] = r.oplax_nerve.index[n].at(target);
        }
    }
    r.comparison = std::move(m);
    return r;
}

SSetPtr discrete_sset(int n, int T) {
    auto ss = std::make_shared<SimplicialSet>();
    ss->dim = T;
    ss->count.assign(T + 1, n);
    ss->face.resize(T + 1);
    ss->degen.resize(T + 1);
    std::vector<int> idv(n);
    std::iota(idv.begin(), idv.end(), 0);
    for (int k = 1; k <= T; ++k) ss->face[k].assign(k + 1, idv);
    for (int k = 0; k < T; ++k) ss->degen[k].assign(k + 1, idv);
    return ss;
}

}  // namespace fibrantkit
