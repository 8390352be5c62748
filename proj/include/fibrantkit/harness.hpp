#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibrantkit/fibrant.hpp"

namespace fibrantkit {

/// A serializable category-of-fibrant-objects fixture.
struct Fixture {
    std::string name;
    CfoStructure structure;
    /// expected axiom outcomes by id (A..E, Products); missing key = pass
    std::map<std::string, bool> expect_axioms;
    /// optional oracle for |homotopy_hom(X,Y)|: "" none, "ones", "base-homs"
    std::string hom_oracle;

    bool expects_pass(const std::string& axiom) const {
        auto it = expect_axioms.find(axiom);
        return it == expect_axioms.end() || it->second;
    }
    bool expects_valid() const {
        for (const auto& [k, v] : expect_axioms)
            if (!v) return false;
        return true;
    }
};

/// Loads a fixture from JSON.  Throws Error with kinds ParseError, UnknownId
/// or ValidationError.
Fixture load_fixture(const std::string& path);
std::string fixture_to_json(const Fixture& f);
void save_fixture(const Fixture& f, const std::string& path);

/// Meet-semilattice M_{n-2} (bottom, n-2 atoms, top) with all maps inverted.
Fixture generate_semilattice(int n);
/// The same lattice with weq = isomorphisms only.
Fixture generate_lattice_isos(int n);
/// The full subcategory of groupoids on <= k objects with <= bound morphisms
/// built from vertex groups 1, Z/2, Z/2 x Z/2; weq = equivalences, fib =
/// isofibrations.  Throws Error("ClosureError") when the bounds admit no
/// groupoid.
Fixture generate_bounded_groupoids(int k, int bound);

struct CheckResult {
    std::string id;
    std::string anchor;   ///< the mathematical statement being tested
    std::string status;   ///< pass | fail | Certified | Consistent | Refuted | cap-exceeded
    std::string witness;
    long ms = 0;
};

struct Report {
    std::string suite;
    std::string fixture;
    std::vector<CheckResult> checks;

    bool ok() const;  ///< no fail or Refuted entries
    std::string to_json() const;
    std::string to_text() const;
};

struct SuiteConfig {
    int T = kDefaultDim;
    int kmax = 1;
    int lmax = 1;
    std::size_t cap = kDefaultSizeCap;
};

/// Runs every in-scope statement on the fixture; deterministic output,
/// checks sorted by id, per-check size-cap overruns recorded as cap-exceeded.
Report run_suite(const Fixture& f, const SuiteConfig& cfg = {});

}  // namespace fibrantkit
