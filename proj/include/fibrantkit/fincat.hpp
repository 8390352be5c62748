#pragma once

#include <map>
#include <tuple>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fibrantkit/common.hpp"

namespace fibrantkit {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

/// A finite category presented by explicit object/morphism lists, an identity
/// assignment and a total composition table.  Objects and morphisms carry
/// string ids (equality of morphisms is equality of ids); all internal
/// bookkeeping uses dense indices.
class FinCategory {
public:
    struct Mor {
        std::string id;
        int dom = -1;
        int cod = -1;
    };

    // --- objects/morphisms ------------------------------------------------
    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }
    const std::string& object_id(int o) const { return objects_[o]; }
    const Mor& mor(int m) const { return morphisms_[m]; }
    const std::string& mor_id(int m) const { return morphisms_[m].id; }
    int dom(int m) const { return morphisms_[m].dom; }
    int cod(int m) const { return morphisms_[m].cod; }

    int object_index(const std::string& id) const;    ///< -1 if absent
    int morphism_index(const std::string& id) const;  ///< -1 if absent

    // --- structure --------------------------------------------------------
    int identity(int o) const { return identity_[o]; }
    bool is_identity(int m) const;
    /// g after f; -1 when cod(f) != dom(g).
    int compose(int g, int f) const;
    const std::vector<int>& from(int o) const { return from_[o]; }
    const std::vector<int>& to(int o) const { return to_[o]; }
    const std::vector<int>& hom(int x, int y) const;

    bool is_iso(int m) const { return inverse(m) >= 0; }
    int inverse(int m) const;  ///< -1 when m is not invertible

    /// Object with exactly one morphism from every object, if any.
    std::optional<int> terminal_object() const;
    std::optional<int> initial_object() const;

    std::vector<int> sorted_objects_by_id() const;

private:
    friend class CategoryBuilder;
    std::vector<std::string> objects_;
    std::vector<Mor> morphisms_;
    std::vector<int> identity_;
    std::vector<std::vector<int>> from_, to_;
    std::map<std::pair<int, int>, std::vector<int>> hom_;
    std::unordered_map<long long, int> comp_;  // key dom-mor*M + cod-mor
    std::unordered_map<std::string, int> obj_index_, mor_index_;
    mutable std::vector<int> inverse_cache_;
};

/// One structural violation found while validating raw category data.
struct Violation {
    std::string kind;     ///< MissingIdentity | NonAssociative | DanglingComposite | ...
    std::string witness;  ///< ids involved
};

/// Incremental construction + validation of a FinCategory.
class CategoryBuilder {
public:
    explicit CategoryBuilder(std::size_t size_cap = kDefaultSizeCap) : cap_(size_cap) {}

    int add_object(const std::string& id);
    int add_morphism(const std::string& id, int dom, int cod);
    void set_identity(int obj, int mor);
    void set_composite(int g, int f, int gf);

    int object_index(const std::string& id) const;
    int morphism_index(const std::string& id) const;
    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }

    /// Checks identity laws, totality/closure of composition, associativity.
    std::vector<Violation> validate() const;

    /// Validates and materializes; throws Error("ValidationError") on failure.
    CatPtr build() const;

    /// Materializes assuming correctness by construction (derived categories);
    /// identities must be set, composites may be completed automatically is NOT
    /// done here - all composites must be present.
    CatPtr build_unchecked() const;

private:
    std::size_t cap_;
    std::vector<std::string> objects_;
    std::vector<FinCategory::Mor> morphisms_;
    std::vector<int> identity_;
    std::map<std::pair<int, int>, int> comp_;
    std::unordered_map<std::string, int> obj_index_, mor_index_;
    CatPtr materialize() const;
};

/// A functor between finite categories, stored as index maps.
struct Functor {
    CatPtr src, tgt;
    std::vector<int> omap;  ///< per src object
    std::vector<int> mmap;  ///< per src morphism

    int on_obj(int o) const { return omap[o]; }
    int on_mor(int m) const { return mmap[m]; }

    /// Verifies dom/cod compatibility, identities and composition.
    bool check(std::string* why = nullptr) const;

    bool is_isomorphism() const;  ///< bijective on objects and morphisms
    bool fully_faithful() const;

    static Functor identity_of(CatPtr c);
    /// this after g (g first)
    Functor after(const Functor& g) const;
};

/// Opposite category; ids are preserved, dom/cod swapped.
CatPtr opposite(const CatPtr& c);
Functor opposite(const Functor& f);

/// Product category C x D.  Object ids "(c,d)", morphism ids "(f,g)".
struct ProductCategoryResult {
    CatPtr cat;
    Functor proj1, proj2;
    std::map<std::pair<int, int>, int> obj_index;  ///< (c,d) -> product object
    std::map<std::pair<int, int>, int> mor_index;
    /// Pairing of F: B -> C, G: B -> D into C x D.
};
ProductCategoryResult product_category(const CatPtr& c, const CatPtr& d,
                                       std::size_t cap = kDefaultSizeCap);
Functor pair_into_product(const ProductCategoryResult& prod, const Functor& F,
                          const Functor& G);

/// Comma category d / F for F: C -> D and d in D: objects are pairs
/// (c, u: d -> F c), morphisms g: c -> c' with F g . u = u'.
struct CommaResult {
    CatPtr cat;
    Functor projection;                         ///< to the source of F
    std::vector<std::pair<int, int>> objects;   ///< (c, u)
    std::map<std::pair<int, int>, int> index;   ///< (c, u) -> comma object
};
CommaResult comma_category(const Functor& F, int d, std::size_t cap = kDefaultSizeCap);

/// Comma category F / d: objects (c, u: F c -> d).
CommaResult comma_category_to(const Functor& F, int d, std::size_t cap = kDefaultSizeCap);

/// A contravariant Cat-valued diagram on base: for f: c' -> c,
/// arrow[f]: value[c] -> value[c'].
struct CatDiagram {
    CatPtr base;
    std::vector<CatPtr> value;     ///< per object of base
    std::vector<Functor> arrow;    ///< per morphism of base (contravariant)

    bool check(std::string* why = nullptr) const;
};

/// Oplax colimit (Grothendieck construction): objects <c,x>, morphisms
/// <c',x'> -> <c,x> are pairs (f: c' -> c, g: x' -> X(f)(x)).
struct OplaxColimitResult {
    CatPtr cat;
    Functor projection;                              ///< to the base
    std::vector<std::pair<int, int>> objects;        ///< (c, x)
    std::map<std::pair<int, int>, int> obj_index;
    struct MorData { int f; int g; };                ///< base morphism, fibre morphism
    std::vector<MorData> mors;
    std::map<std::tuple<int, int, int>, int> mor_index;  ///< (f, g, x-cod) -> morphism
};
OplaxColimitResult oplax_colimit(const CatDiagram& X, std::size_t cap = kDefaultSizeCap);

/// Grothendieck-fibration check with deterministic cartesian-lift table.
struct FibrationCheck {
    bool is_fibration = false;
    std::string counterexample;
    /// (object e, base morphism g with cod P e) -> lexicographically least
    /// cartesian lift of g with codomain e.
    std::map<std::pair<int, int>, int> lift;
};
bool is_cartesian(const Functor& P, int phi);
FibrationCheck is_grothendieck_fibration(const Functor& P);

/// Strict fibre of P over base object b.
struct FibreResult {
    CatPtr cat;
    Functor inclusion;  ///< into the total category
};
FibreResult strict_fibre(const Functor& P, int b);

/// Full subcategory on the given total-category objects.
FibreResult full_subcategory(const CatPtr& c, const std::vector<int>& objs);

/// Right adjoint found via terminal objects of the comma categories F / d.
struct Adjunction {
    Functor left;                ///< F
    Functor right;               ///< G
    std::vector<int> unit;       ///< per object c of src F: c -> G F c
    std::vector<int> counit;     ///< per object d of tgt F: F G d -> d
    bool check(std::string* why = nullptr) const;  ///< triangle identities + naturality
};
std::optional<Adjunction> find_right_adjoint(const Functor& F);
std::optional<Adjunction> find_left_adjoint(const Functor& F);  ///< returns (G, F)

/// Strict pullback category B' x_B E of F: B' -> B and P: E -> B.
struct PullbackCategoryResult {
    CatPtr cat;
    Functor proj1;  ///< to B'
    Functor proj2;  ///< to E
    std::map<std::pair<int, int>, int> obj_index;
    std::map<std::pair<int, int>, int> mor_index;
};
PullbackCategoryResult pullback_category(const Functor& F, const Functor& P,
                                         std::size_t cap = kDefaultSizeCap);

/// Enumerate all functors from src to tgt (exhaustive backtracking).
std::vector<Functor> all_functors(const CatPtr& src, const CatPtr& tgt,
                                  std::size_t limit = 1000000);

}  // namespace fibrantkit
