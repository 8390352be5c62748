#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fibrantkit/common.hpp"
#include "fibrantkit/fincat.hpp"

namespace fibrantkit {

/// A finite category with a wide subcategory of weak equivalences.
struct RelCategory {
    CatPtr base;
    std::vector<char> weq;  ///< per morphism of base

    bool is_weq(int m) const { return weq[m] != 0; }

    /// Checks that weq contains all identities and is closed under
    /// composition; empty result means valid.
    std::vector<std::string> validate() const;

    /// Optional stronger properties, checked exhaustively.
    bool two_out_of_three(std::string* why = nullptr) const;
    bool contains_all_isos(std::string* why = nullptr) const;
};

/// Does the functor F map weq(src) into weq(tgt)?
bool preserves_weq(const Functor& F, const RelCategory& src, const RelCategory& tgt);

/// A zigzag type: a sequence of integers, positive entries counting forward
/// arrows and negative entries backward (weak-equivalence) arrows.
/// Unnormalized sequences (zeros, repeated signs) are allowed.
struct ZigzagType {
    std::vector<int> entries;

    /// Drops zeros and merges adjacent same-sign entries; idempotent.
    ZigzagType normalized() const;

    /// Expanded per-arrow directions: +1 forward, -1 backward.
    std::vector<int> directions() const;
};

/// The free category on the linear graph of a zigzag type, with weak
/// equivalences generated by the backward arrows.  Objects are positions
/// "0".."m"; non-identity morphisms are the intervals inside maximal
/// same-direction runs.
RelCategory zigzag_index_category(const ZigzagType& t);

/// One zigzag: objects o_0..o_m and the m connecting arrows of the base
/// (arrow i points o_i -> o_{i+1} when the direction is +1, o_{i+1} -> o_i
/// when it is -1, in which case it must be a weak equivalence).
struct Zigzag {
    std::vector<int> objects;
    std::vector<int> arrows;
    bool operator<(const Zigzag& o) const {
        return std::tie(objects, arrows) < std::tie(o.objects, o.arrows);
    }
    bool operator==(const Zigzag& o) const = default;
};

/// The category of zigzags of a fixed type from X to Y: objects are zigzags,
/// morphisms are levelwise weak equivalences fixing the endpoints and
/// commuting with all connecting arrows (width-1 hammocks).
struct ZigzagCategoryResult {
    CatPtr cat;
    std::vector<int> dirs;                       ///< expanded directions
    std::vector<Zigzag> zigzags;                 ///< per object of cat
    std::map<Zigzag, int> obj_index;
    /// Per morphism of cat: the full vertical tuple phi_0..phi_m
    /// (phi_0 = id_X, phi_m = id_Y).
    std::vector<std::vector<int>> hammocks;
    std::map<std::tuple<int, int, std::vector<int>>, int> mor_index;
};
ZigzagCategoryResult zigzag_category(const RelCategory& C, const ZigzagType& t, int X,
                                     int Y, std::size_t cap = kDefaultSizeCap);

/// Does phi = (phi_0..phi_m) define a width-1 hammock za -> zb of the given
/// expanded directions: levelwise weak equivalences making every square
/// commute?  Endpoint verticals are not required to be identities.
bool is_hammock(const RelCategory& C, const std::vector<int>& dirs, const Zigzag& za,
                const Zigzag& zb, const std::vector<int>& phi);

/// The insertion functor C^{[-1;k;l]}(X,Y) -> C^{[-1;k;-1;l]}(X,Y) that
/// inserts an identity backward arrow after the k forward arrows.
struct InsertionResult {
    ZigzagCategoryResult source;  ///< type [-1; k; l]
    ZigzagCategoryResult target;  ///< type [-1; k; -1; l]
    Functor functor;
};
InsertionResult insertion_functor(const RelCategory& C, int k, int l, int X, int Y,
                                  std::size_t cap = kDefaultSizeCap);

/// The functor C^{[-1;1]}(X,Y) -> C^{[-1;1]}(X',Y') induced by weak
/// equivalences wX: X -> X' and wY: Y -> Y' (postcomposition of both legs).
Functor induced_cocycle_functor(const RelCategory& C, const ZigzagCategoryResult& src,
                                const ZigzagCategoryResult& tgt, int wX, int wY);

/// One (k, l, X, Y) instance of the right-fractions sweep.
struct FractionInstance {
    int k, l, X, Y;
    std::string status;  ///< Certified | Consistent | Refuted | cap-exceeded
    std::string witness;
};
struct FractionsReport {
    std::string overall;  ///< Refuted if any instance is; Certified only if all are
    std::vector<FractionInstance> instances;
};

/// Runs weak-equivalence evidence on every insertion functor with
/// 0 <= k <= kmax, 0 <= l <= lmax and all ordered object pairs, in
/// lexicographic order over (k, l, X-id, Y-id).
FractionsReport check_right_fractions(const RelCategory& C, int kmax = 1, int lmax = 1,
                                      int T = kDefaultDim,
                                      std::size_t cap = kDefaultSizeCap);

}  // namespace fibrantkit
