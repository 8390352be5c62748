#include "fibrantkit/relcat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fibrantkit/homotopy.hpp"

namespace fibrantkit {

// --------------------------------------------------------------------------
// RelCategory

std::vector<std::string> RelCategory::validate() const {
    std::vector<std::string> out;
    if (static_cast<int>(weq.size()) != base->morphism_count()) {
        out.push_back("weq flag list does not match the morphism count");
        return out;
    }
    for (int o = 0; o < base->object_count(); ++o)
        if (!weq[base->identity(o)])
            out.push_back("identity of " + base->object_id(o) +
                          " is not a weak equivalence");
    for (int f = 0; f < base->morphism_count(); ++f) {
        if (!weq[f]) continue;
        for (int g : base->from(base->cod(f)))
            if (weq[g] && !weq[base->compose(g, f)])
                out.push_back("weq not closed under composition: " + base->mor_id(g) +
                              " . " + base->mor_id(f));
    }
    return out;
}

bool RelCategory::two_out_of_three(std::string* why) const {
    for (int f = 0; f < base->morphism_count(); ++f)
        for (int g : base->from(base->cod(f))) {
            int h = base->compose(g, f);
            bool wf = is_weq(f), wg = is_weq(g), wh = is_weq(h);
            if ((wf && wg && !wh) || (wg && wh && !wf) || (wf && wh && !wg)) {
                if (why)
                    *why = "2-out-of-3 fails at " + base->mor_id(g) + " . " +
                           base->mor_id(f);
                return false;
            }
        }
    return true;
}

bool RelCategory::contains_all_isos(std::string* why) const {
    for (int m = 0; m < base->morphism_count(); ++m)
        if (base->is_iso(m) && !is_weq(m)) {
            if (why) *why = "isomorphism " + base->mor_id(m) + " is not a weq";
            return false;
        }
    return true;
}

bool preserves_weq(const Functor& F, const RelCategory& src, const RelCategory& tgt) {
    for (int m = 0; m < F.src->morphism_count(); ++m)
        if (src.is_weq(m) && !tgt.is_weq(F.mmap[m])) return false;
    return true;
}

// --------------------------------------------------------------------------
// zigzag types

ZigzagType ZigzagType::normalized() const {
    ZigzagType out;
    for (int e : entries) {
        if (e == 0) continue;
        if (!out.entries.empty() && (out.entries.back() > 0) == (e > 0))
            out.entries.back() += e;
        else
            out.entries.push_back(e);
    }
    return out;
}

std::vector<int> ZigzagType::directions() const {
    std::vector<int> d;
    for (int e : entries)
        for (int i = 0; i < std::abs(e); ++i) d.push_back(e > 0 ? 1 : -1);
    return d;
}

RelCategory zigzag_index_category(const ZigzagType& t) {
    auto dirs = t.directions();
    int m = static_cast<int>(dirs.size());
    CategoryBuilder b;
    for (int i = 0; i <= m; ++i) b.add_object(std::to_string(i));
    // morphism (lo, hi): identity when lo == hi, otherwise the composite of
    // the arrows lo..hi-1, all of one direction
    std::map<std::pair<int, int>, int> idx;
    std::vector<char> is_back;
    for (int i = 0; i <= m; ++i) {
        idx[{i, i}] = b.add_morphism("id" + std::to_string(i), i, i);
        is_back.push_back(1);  // identities count as weak equivalences
    }
    for (int lo = 0; lo < m; ++lo)
        for (int hi = lo + 1; hi <= m; ++hi) {
            bool same = true;
            for (int j = lo; j < hi; ++j) same = same && dirs[j] == dirs[lo];
            if (!same) continue;
            bool back = dirs[lo] < 0;
            int d = back ? hi : lo, c = back ? lo : hi;
            idx[{lo, hi}] = b.add_morphism(
                "a" + std::to_string(lo) + "_" + std::to_string(hi), d, c);
            is_back.push_back(back ? 1 : 0);
        }
    for (int i = 0; i <= m; ++i) b.set_identity(i, idx.at({i, i}));
    for (const auto& [pf, f] : idx)
        for (const auto& [pg, g] : idx) {
            auto [flo, fhi] = pf;
            auto [glo, ghi] = pg;
            if (flo == fhi) {  // f identity
                int gdom = (glo != ghi && is_back[g]) ? ghi : glo;
                if (flo == gdom) b.set_composite(g, f, g);
                continue;
            }
            if (glo == ghi) {
                if (glo == (is_back[f] ? flo : fhi)) b.set_composite(g, f, f);
                continue;
            }
            bool fb = is_back[f], gb = is_back[g];
            if (fb != gb) continue;
            // forward: f: flo->fhi then g: glo->ghi needs glo == fhi
            // backward: f: fhi->flo then g: ghi->glo needs ghi == flo
            if (!fb && glo == fhi) b.set_composite(g, f, idx.at({flo, ghi}));
            if (fb && ghi == flo) b.set_composite(g, f, idx.at({glo, fhi}));
        }
    RelCategory r;
    r.base = b.build();
    r.weq.assign(r.base->morphism_count(), 0);
    for (const auto& [p, mi] : idx) r.weq[mi] = is_back[mi];
    return r;
}

// --------------------------------------------------------------------------
// zigzag categories

ZigzagCategoryResult zigzag_category(const RelCategory& C, const ZigzagType& t, int X,
                                     int Y, std::size_t cap) {
    const auto& B = C.base;
    ZigzagCategoryResult r;
    r.dirs = t.directions();
    int m = static_cast<int>(r.dirs.size());

    // enumerate zigzags by walking positions left to right
    Zigzag z;
    z.objects.push_back(X);
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            if (z.objects.back() != Y) return;
            if (r.zigzags.size() + 1 > cap) throw size_cap_exceeded("zigzag category", cap);
            r.obj_index[z] = static_cast<int>(r.zigzags.size());
            r.zigzags.push_back(z);
            return;
        }
        int cur = z.objects[i];
        if (r.dirs[i] > 0) {
            for (int f : B->from(cur)) {
                z.arrows.push_back(f);
                z.objects.push_back(B->cod(f));
                rec(i + 1);
                z.arrows.pop_back();
                z.objects.pop_back();
            }
        } else {
            for (int f : B->to(cur)) {
                if (!C.is_weq(f)) continue;
                z.arrows.push_back(f);
                z.objects.push_back(B->dom(f));
                rec(i + 1);
                z.arrows.pop_back();
                z.objects.pop_back();
            }
        }
    };
    rec(0);

    CategoryBuilder b(cap);
    for (std::size_t i = 0; i < r.zigzags.size(); ++i)
        b.add_object("z" + std::to_string(i));

    // enumerate hammocks between every ordered pair
    std::size_t total = 0;
    for (int zi = 0; zi < static_cast<int>(r.zigzags.size()); ++zi)
        for (int zj = 0; zj < static_cast<int>(r.zigzags.size()); ++zj) {
            const auto& a = r.zigzags[zi];
            const auto& c = r.zigzags[zj];
            std::vector<int> phi(m + 1, -1);
            phi[0] = B->identity(X);
            auto square_ok = [&](int j) {
                if (r.dirs[j] > 0)
                    return B->compose(phi[j + 1], a.arrows[j]) ==
                           B->compose(c.arrows[j], phi[j]);
                return B->compose(phi[j], a.arrows[j]) ==
                       B->compose(c.arrows[j], phi[j + 1]);
            };
            std::function<void(int)> mrec = [&](int j) {
                // phi[0..j] fixed and squares 0..j-1 checked
                if (j == m) {
                    if (++total > cap) throw size_cap_exceeded("zigzag category", cap);
                    int mi = b.add_morphism("h" + std::to_string(r.hammocks.size()),
                                            zi, zj);
                    r.mor_index[{zi, zj, phi}] = mi;
                    r.hammocks.push_back(phi);
                    return;
                }
                if (j + 1 == m) {
                    phi[m] = B->identity(Y);
                    if (square_ok(j)) mrec(j + 1);
                    phi[m] = -1;
                    return;
                }
                for (int v : B->hom(a.objects[j + 1], c.objects[j + 1])) {
                    if (!C.is_weq(v)) continue;
                    phi[j + 1] = v;
                    if (square_ok(j)) mrec(j + 1);
                    phi[j + 1] = -1;
                }
            };
            if (m == 0) {
                if (++total > cap) throw size_cap_exceeded("zigzag category", cap);
                int mi = b.add_morphism("h" + std::to_string(r.hammocks.size()), zi, zj);
                r.mor_index[{zi, zj, phi}] = mi;
                r.hammocks.push_back(phi);
            } else {
                mrec(0);
            }
        }

    // identities and composition
    for (int zi = 0; zi < static_cast<int>(r.zigzags.size()); ++zi) {
        std::vector<int> idphi;
        for (int o : r.zigzags[zi].objects) idphi.push_back(B->identity(o));
        b.set_identity(zi, r.mor_index.at({zi, zi, idphi}));
    }
    for (const auto& [k1, m1] : r.mor_index)
        for (const auto& [k2, m2] : r.mor_index) {
            if (std::get<1>(k1) != std::get<0>(k2)) continue;
            std::vector<int> comp(m + 1);
            for (int j = 0; j <= m; ++j)
                comp[j] = B->compose(std::get<2>(k2)[j], std::get<2>(k1)[j]);
            auto it = r.mor_index.find({std::get<0>(k1), std::get<1>(k2), comp});
            if (it == r.mor_index.end())
                throw Error("Internal", "hammock composition not closed");
            b.set_composite(m2, m1, it->second);
        }
    r.cat = b.build_unchecked();
    return r;
}

bool is_hammock(const RelCategory& C, const std::vector<int>& dirs, const Zigzag& za,
                const Zigzag& zb, const std::vector<int>& phi) {
    const auto& B = C.base;
    int m = static_cast<int>(dirs.size());
    if (static_cast<int>(za.objects.size()) != m + 1 ||
        static_cast<int>(zb.objects.size()) != m + 1 ||
        static_cast<int>(za.arrows.size()) != m ||
        static_cast<int>(zb.arrows.size()) != m ||
        static_cast<int>(phi.size()) != m + 1)
        return false;
    for (int j = 0; j <= m; ++j) {
        int v = phi[j];
        if (v < 0 || !C.is_weq(v)) return false;
        if (B->dom(v) != za.objects[j] || B->cod(v) != zb.objects[j]) return false;
    }
    for (int j = 0; j < m; ++j) {
        if (dirs[j] > 0) {
            if (B->compose(phi[j + 1], za.arrows[j]) !=
                B->compose(zb.arrows[j], phi[j]))
                return false;
        } else {
            if (B->compose(phi[j], za.arrows[j]) !=
                B->compose(zb.arrows[j], phi[j + 1]))
                return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// insertion functor

InsertionResult insertion_functor(const RelCategory& C, int k, int l, int X, int Y,
                                  std::size_t cap) {
    InsertionResult r;
    r.source = zigzag_category(C, ZigzagType{{-1, k, l}}, X, Y, cap);
    r.target = zigzag_category(C, ZigzagType{{-1, k, -1, l}}, X, Y, cap);
    const auto& B = C.base;
    int pos = 1 + k;  // object position duplicated; arrow inserted at index pos

    Functor F;
    F.src = r.source.cat;
    F.tgt = r.target.cat;
    for (const auto& z : r.source.zigzags) {
        Zigzag z2 = z;
        z2.objects.insert(z2.objects.begin() + pos + 1, z.objects[pos]);
        z2.arrows.insert(z2.arrows.begin() + pos, B->identity(z.objects[pos]));
        F.omap.push_back(r.target.obj_index.at(z2));
    }
    for (int mi = 0; mi < r.source.cat->morphism_count(); ++mi) {
        const auto& phi = r.source.hammocks[mi];
        std::vector<int> phi2 = phi;
        phi2.insert(phi2.begin() + pos + 1, phi[pos]);
        int d = F.omap[r.source.cat->dom(mi)];
        int c = F.omap[r.source.cat->cod(mi)];
        F.mmap.push_back(r.target.mor_index.at({d, c, phi2}));
    }
    r.functor = std::move(F);
    return r;
}

Functor induced_cocycle_functor(const RelCategory& C, const ZigzagCategoryResult& src,
                                const ZigzagCategoryResult& tgt, int wX, int wY) {
    const auto& B = C.base;
    Functor F;
    F.src = src.cat;
    F.tgt = tgt.cat;
    for (const auto& z : src.zigzags) {
        Zigzag z2 = z;
        z2.objects[0] = B->cod(wX);
        z2.objects[2] = B->cod(wY);
        z2.arrows = {B->compose(wX, z.arrows[0]), B->compose(wY, z.arrows[1])};
        F.omap.push_back(tgt.obj_index.at(z2));
    }
    for (int mi = 0; mi < src.cat->morphism_count(); ++mi) {
        std::vector<int> phi = src.hammocks[mi];
        phi[0] = B->identity(B->cod(wX));
        phi[2] = B->identity(B->cod(wY));
        int d = F.omap[src.cat->dom(mi)];
        int c = F.omap[src.cat->cod(mi)];
        F.mmap.push_back(tgt.mor_index.at({d, c, phi}));
    }
    return F;
}

// --------------------------------------------------------------------------
// right fractions sweep

FractionsReport check_right_fractions(const RelCategory& C, int kmax, int lmax, int T,
                                      std::size_t cap) {
    FractionsReport rep;
    bool any_refuted = false, all_certified = true;
    auto order = C.base->sorted_objects_by_id();
    for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l)
            for (int X : order)
                for (int Y : order) {
                    FractionInstance inst{k, l, X, Y, "", ""};
                    try {
                        auto ins = insertion_functor(C, k, l, X, Y, cap);
                        auto v = weak_equivalence_evidence(ins.functor, T, cap);
                        inst.status = to_string(v.status);
                        inst.witness = v.witness;
                        if (v.status == Status::Refuted) any_refuted = true;
                        if (v.status != Status::Certified) all_certified = false;
                    } catch (const Error& e) {
                        if (e.kind() != "SizeCapExceeded") throw;
                        inst.status = "cap-exceeded";
                        inst.witness = e.what();
                        all_certified = false;
                    }
                    rep.instances.push_back(std::move(inst));
                }
    rep.overall = any_refuted ? "Refuted" : (all_certified ? "Certified" : "Consistent");
    return rep;
}

}  // namespace fibrantkit
