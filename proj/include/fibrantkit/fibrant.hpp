#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibrantkit/common.hpp"
#include "fibrantkit/fincat.hpp"
#include "fibrantkit/relcat.hpp"

namespace fibrantkit {

/// A chosen binary product A x B with its projections.
struct ProductEntry {
    int object = -1;
    int proj1 = -1;  ///< -> A
    int proj2 = -1;  ///< -> B
};

/// A chosen path object for X: i: X -> P (weq), p0, p1: P -> X with
/// <p0, p1> a fibration and p0 . i = p1 . i = id.
struct PathEntry {
    int object = -1;
    int i = -1, p0 = -1, p1 = -1;
};

/// A category-of-fibrant-objects structure: weak equivalences, fibrations,
/// terminal object, chosen products, optional chosen path objects.
struct CfoStructure {
    RelCategory rel;
    std::vector<char> fib;  ///< per morphism of the base
    int terminal = -1;
    std::map<std::pair<int, int>, ProductEntry> products;  ///< (A, B) -> A x B
    std::map<int, PathEntry> path_objects;                 ///< per object

    const CatPtr& base() const { return rel.base; }
    bool is_fib(int m) const { return fib[m] != 0; }
    bool is_trivfib(int m) const { return fib[m] && rel.weq[m]; }
    std::vector<char> trivial_fibrations() const;

    const ProductEntry* product(int a, int b) const;
    /// Unique u with proj1 . u = f and proj2 . u = g into the chosen product
    /// of (cod f, cod g); -1 when the product is missing or u is not unique.
    int pairing(int f, int g) const;
};

struct AxiomResult {
    std::string id;
    bool pass = true;
    std::string witness;
};

/// Axioms A-E plus the chosen-product universal properties.
std::vector<AxiomResult> check_cfo_axioms(const CfoStructure& s);

struct CisinskiStructure {
    RelCategory rel;
    std::vector<char> fib;
    int terminal = -1;

    bool is_fibrant(int x) const;  ///< the morphism to the terminal object is a fibration
};
std::vector<AxiomResult> check_cisinski_axioms(const CisinskiStructure& s);
CisinskiStructure as_cisinski(const CfoStructure& s);

/// Canonical pullback of the cospan f: X -> Z <- Y :g — the lexicographically
/// least cone satisfying the universal property (checked exhaustively).
struct PullbackSquare {
    int object = -1;
    int to_x = -1;  ///< P -> X (the leg over f)
    int to_y = -1;  ///< P -> Y (the leg over g)
};
std::optional<PullbackSquare> find_pullback(const CatPtr& c, int f, int g);

/// Wide subcategory of weak equivalences with its inclusion.
FibreResult weq_subcategory(const RelCategory& rel);

/// V-cocycle category Cocyc_V(X, Y): the full subcategory of the cocycle
/// category C^{[-1;1]}(X, Y) spanned by zigzags whose backward leg is in V.
struct CocycResult {
    ZigzagCategoryResult ambient;  ///< all cocycles X <- Z -> Y
    CatPtr cat;
    Functor inclusion;         ///< into ambient.cat
    std::vector<int> objects;  ///< ambient object index per object of cat
};
CocycResult cocycle_category(const RelCategory& rel, const std::vector<char>& V, int X,
                             int Y, std::size_t cap = kDefaultSizeCap);

/// FCorr(X, Y): functional correspondences X <-v Z -p> Y, i.e. cocycles with
/// <p, v>: Z -> Y x X a fibration; a full subcategory of Cocyc_V(X, Y) for
/// V the trivial fibrations.
struct FCorrResult {
    CocycResult cocyc;  ///< ambient V-cocycle category
    CatPtr cat;
    Functor inclusion;         ///< into cocyc.cat
    Functor into_ambient;      ///< U_{X,Y}: into cocyc.ambient.cat
    std::vector<int> objects;  ///< cocyc.cat object index per object of cat
    std::vector<int> pairing;  ///< base pairing morphism per object of cat
};
FCorrResult functional_correspondences(const CfoStructure& s, int X, int Y,
                                       std::size_t cap = kDefaultSizeCap);

/// The total category of cocycles with all endpoints, its projection to
/// W x W, and the full subcategory of functional correspondences.
struct TotalCocyclesResult {
    CatPtr cat;                   ///< objects: cocycles A <-v Z -f> B
    std::vector<Zigzag> objects;  ///< zigzag (objects {A, Z, B}, arrows {v, f})
    std::map<Zigzag, int> obj_index;
    /// per morphism: (xi: A -> A', zeta: Z -> Z', upsilon: B -> B'), all weqs
    std::vector<std::array<int, 3>> triples;
    std::map<std::tuple<int, int, std::array<int, 3>>, int> mor_index;

    FibreResult w;                ///< weq subcategory of the base
    std::vector<int> w_of_base;   ///< base morphism -> w morphism (-1 if not weq)
    ProductCategoryResult ww;     ///< W x W
    Functor projection;           ///< cat -> ww.cat, (dom, codom)

    std::vector<char> fcorr_mask;  ///< per object: functional correspondence?
    CatPtr fcat;                   ///< full subcategory FCorr
    Functor finclusion;            ///< fcat -> cat
    Functor fprojection;           ///< fcat -> ww.cat
};
TotalCocyclesResult total_cocycles(const CfoStructure& s,
                                   std::size_t cap = kDefaultSizeCap);

/// The pulled-back correspondence: the chosen cartesian lift of the base
/// morphism (f: A' -> A, g: B' -> B) in W x W with codomain e in FCorr.
struct CorrPullback {
    int object;    ///< fcat object (the pulled-back correspondence)
    int morphism;  ///< cartesian fcat morphism object -> e
};
CorrPullback pullback_correspondence(const TotalCocyclesResult& t,
                                     const FibrationCheck& fc, int e, int f, int g);

/// Mapping-path-space factorization of f: X -> Y through X x_Y Path(Y):
/// u: X -> E (weq, v . u = id, p . u = f), v: E -> X (trivial fibration),
/// p: E -> Y (fibration), with <p, v>: E -> Y x X a fibration.
struct MappingPath {
    int E = -1;
    int u = -1, v = -1, p = -1;
    int pairing = -1;  ///< <p, v>
};
MappingPath mapping_path_factorization(const CfoStructure& s, int f);

/// The auxiliary category R: objects (w: X -> Y weq, E in FCorr with
/// U E = (Y <-v Z -q> X), u: X -> Z weq with v . u = w and q . u = id);
/// morphisms are FCorr morphisms compatible with the u's.  The projection
/// to the total zigzag category of type [-1] sends (w, E, u) to w.
struct RResult {
    CatPtr cat;
    struct Obj {
        int w;  ///< base weq
        int E;  ///< fcat object of the total FCorr category
        int u;  ///< base morphism
    };
    std::vector<Obj> objects;
    std::vector<int> mors;  ///< per R morphism: the underlying fcat morphism

    CatPtr wz;                    ///< total zigzag category of type [-1]
    std::vector<int> wz_objects;  ///< per wz object: the base weq
    std::map<int, int> wz_index;  ///< base weq -> wz object
    /// per wz morphism: (phi at codomain side: Y0 -> Y1, phi at domain side:
    /// X0 -> X1)
    std::vector<std::pair<int, int>> wz_mors;
    std::map<std::tuple<int, int, std::pair<int, int>>, int> wz_mor_index;

    Functor projection;  ///< cat -> wz
};
RResult build_R(const CfoStructure& s, const TotalCocyclesResult& t,
                std::size_t cap = kDefaultSizeCap);

/// Explicit isomorphism between the strict fibre of the R projection over the
/// weq w and the comma category <id_X, w> / U_{Y,X}.
std::optional<Functor> r_fibre_comma_iso(const CfoStructure& s,
                                         const TotalCocyclesResult& t, const RResult& r,
                                         int w, std::size_t cap = kDefaultSizeCap);

/// The reduction of a zigzag of type [-1; k; -1; l] to one of type [-1; k; l]
/// via iterated pullbacks of a correspondence replacement (v: Z' -> Xk in
/// V, q: Z' -> Y0, u: Y0 -> Z' with v . u = w and q . u = id) of the inner
/// backward arrow w: Y0 -> Xk.  The two ladders connect the middle zigzag
/// (of type [-1; k; -1; l]) to the inserted reduced zigzag and to the input.
struct ReduceResult {
    Zigzag output;  ///< type [-1; k; l]
    Zigzag middle;  ///< type [-1; k; -1; l]
    std::vector<int> ladder_to_reduced;  ///< verticals middle -> S(output)
    std::vector<int> ladder_to_input;    ///< verticals middle -> input
    // internals of the pullback chain (i = 0..k)
    std::vector<int> apexes;   ///< pulled-back apexes, apexes[k] = dom(repl_v)
    std::vector<int> vlegs;    ///< v_i: apexes[i] -> X_i, vlegs[k] = repl_v
    std::vector<int> fprimes;  ///< f'_1..f'_k between consecutive apexes
};
ReduceResult reduce_zigzag(const CfoStructure& s, const Zigzag& z, int k, int l,
                           int repl_v, int repl_q, int repl_u);

/// Inserts an identity backward arrow into a zigzag of type [-1; k; l] after
/// the k forward arrows, producing a zigzag of type [-1; k; -1; l].
Zigzag insert_identity(const CatPtr& c, const Zigzag& z, int k);

/// Round trip of the reduction over an inserted identity: z0 of type
/// [-1; k; l] is connected to reduce(insert(z0)) by a levelwise-weq ladder.
struct RoundTrip {
    Zigzag reduced;
    std::vector<int> ladder;  ///< verticals z0 -> reduced
    bool ok = false;
    std::string witness;
};
RoundTrip reduction_round_trip(const CfoStructure& s, const Zigzag& z0, int k, int l);

/// The five conditions of a homotopical calculus of cocycles for V = the
/// trivial fibrations and U the inclusion of functional correspondences.
struct CalculusResult {
    AxiomResult c1;  ///< V closed under pullback
    AxiomResult c2;  ///< isomorphisms in V
    AxiomResult c3;  ///< FCorr -> W x W Grothendieck fibration, U cartesian
    AxiomResult c4;  ///< U E is a V-cocycle for every E
    std::vector<std::tuple<int, int, Verdict>> c5;  ///< cofinality per (X, Y)
    std::string overall;  ///< pass | fail
};
CalculusResult certify_cocycle_calculus(const CfoStructure& s, int T = kDefaultDim,
                                        std::size_t cap = kDefaultSizeCap);

/// pi0 of the V-cocycle category with a least representative per component.
struct HomotopyHom {
    int count = 0;
    std::vector<int> representative;  ///< object of cocyc.cat per component
    CocycResult cocyc;
};
HomotopyHom homotopy_hom(const CfoStructure& s, int X, int Y,
                         std::size_t cap = kDefaultSizeCap);

}  // namespace fibrantkit
