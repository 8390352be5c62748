#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fibrantkit/common.hpp"
#include "fibrantkit/fincat.hpp"
#include "fibrantkit/snf.hpp"

namespace fibrantkit {

/// A simplicial set truncated at dimension `dim`; degenerate simplices are
/// stored explicitly and all simplicial identities are checkable.
struct SimplicialSet {
    int dim = kDefaultDim;
    std::vector<int> count;  ///< count[n], n = 0..dim
    /// face[n][i][s] for n = 1..dim (entry n-1 unused at n=0), i = 0..n
    std::vector<std::vector<std::vector<int>>> face;
    /// degen[n][i][s] for n = 0..dim-1, i = 0..n
    std::vector<std::vector<std::vector<int>>> degen;

    /// All simplicial identities; empty result means valid.
    std::vector<std::string> validate() const;

    /// mask[n][s] = 1 iff simplex s of level n is degenerate.
    std::vector<std::vector<char>> degenerate_mask() const;

    /// Connected components of 0-simplices through 1-simplices.
    int pi0(std::vector<int>* component = nullptr) const;

    bool is_point() const;  ///< every level a single simplex
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

struct SimplicialMap {
    SSetPtr src, tgt;
    std::vector<std::vector<int>> level;  ///< level[n][s]

    bool check(std::string* why = nullptr) const;  ///< commutes with faces/degeneracies
    bool is_isomorphism() const;                    ///< levelwise bijection
    static SimplicialMap identity_of(SSetPtr s);
    SimplicialMap after(const SimplicialMap& g) const;
};

/// Nerve of a finite category: n-simplices are composable n-chains
/// (f_1, ..., f_n); 0-simplices are objects.
struct NerveResult {
    CatPtr cat;
    SSetPtr ss;
    /// chains[n][s]: level-0 entries are {object}, level-n entries are the n
    /// morphisms of the chain.
    std::vector<std::vector<std::vector<int>>> chains;
    std::vector<std::map<std::vector<int>, int>> index;
};
NerveResult nerve(const CatPtr& c, int T = kDefaultDim, std::size_t cap = kDefaultSizeCap);

/// Simplicial map N(F) between computed nerves.
SimplicialMap nerve_map(const NerveResult& src, const NerveResult& tgt, const Functor& F);

/// Integral homology of the normalized (degenerate-killed) chain complex,
/// degrees 0..dim-1, computed exactly over the integers.
struct HomologyGroup {
    long rank = 0;
    std::vector<Int> torsion;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};
using HomologyProfile = std::vector<HomologyGroup>;
HomologyProfile homology(const SimplicialSet& s);
std::string to_string(const HomologyGroup& g);
std::string to_string(const HomologyProfile& p);

/// Homotopy-level evidence for a simplicial map: Certified only for a
/// levelwise isomorphism; Refuted when pi0 or any truncated homology
/// obstruction (including the mapping-cone test for the induced map) fails;
/// Consistent otherwise.
Verdict weak_equivalence_evidence(const SimplicialMap& f);

/// Evidence for a functor: structural certificates first (isomorphism of
/// categories, left or right adjoint, nerve isomorphism), then the homology
/// comparison of the nerve map.
Verdict weak_equivalence_evidence(const Functor& F, int T = kDefaultDim,
                                  std::size_t cap = kDefaultSizeCap);

Verdict is_weakly_contractible(const SimplicialSet& s);
Verdict is_weakly_contractible(const CatPtr& c, int T = kDefaultDim,
                               std::size_t cap = kDefaultSizeCap);

/// Homotopy cofinality of F: every comma category d / F weakly contractible.
struct CofinalityResult {
    Verdict overall;
    std::vector<Verdict> per_object;  ///< per object of the target
};
CofinalityResult is_homotopy_cofinal(const Functor& F, int T = kDefaultDim,
                                     std::size_t cap = kDefaultSizeCap);

/// Contravariant diagram of simplicial sets: for f: c' -> c,
/// arrow[f]: value[c] -> value[c'].
struct SSetDiagram {
    CatPtr base;
    std::vector<SSetPtr> value;
    std::vector<SimplicialMap> arrow;
    bool check(std::string* why = nullptr) const;
};

/// Bousfield-Kan homotopy colimit: the diagonal of the simplicial bar
/// construction; n-simplices are pairs (chain c_0 -> ... -> c_n, x in
/// X(c_n)_n).
struct HocolimResult {
    SSetPtr ss;
    /// simplices[n][s] = (base chain, simplex of X at the chain's last object)
    std::vector<std::vector<std::pair<std::vector<int>, int>>> simplices;
    std::vector<std::map<std::pair<std::vector<int>, int>, int>> index;
};
HocolimResult homotopy_colimit(const SSetDiagram& X, int T = kDefaultDim,
                               std::size_t cap = kDefaultSizeCap);

/// N o X for a Cat-valued diagram, keeping the per-object nerve data.
struct NerveDiagramResult {
    SSetDiagram diag;
    std::vector<NerveResult> nerves;
};
NerveDiagramResult nerve_diagram(const CatDiagram& X, int T = kDefaultDim,
                                 std::size_t cap = kDefaultSizeCap);

/// Comparison map hocolim N(X(-)) -> N(oplax colimit of X).
struct ThomasonResult {
    NerveDiagramResult nerve_diag;
    HocolimResult hocolim;
    OplaxColimitResult oplax;
    NerveResult oplax_nerve;
    SimplicialMap comparison;
};
ThomasonResult thomason_comparison(const CatDiagram& X, int T = kDefaultDim,
                                   std::size_t cap = kDefaultSizeCap);

/// Discrete simplicial set on n points (all levels the same set).
SSetPtr discrete_sset(int n, int T = kDefaultDim);

}  // namespace fibrantkit
