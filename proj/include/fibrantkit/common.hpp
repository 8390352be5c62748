#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fibrantkit {

/// Structured error with a machine-readable kind tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Error size_cap_exceeded(const std::string& what, std::size_t cap) {
    return Error("SizeCapExceeded",
                 what + " exceeds the morphism-count cap " + std::to_string(cap));
}

/// Default cap on the morphism count of any constructed category.
inline constexpr std::size_t kDefaultSizeCap = 20000;

/// Default simplicial truncation dimension.
inline constexpr int kDefaultDim = 3;

/// Three-valued outcome of a homotopy-level check.
///
/// Certified is only ever produced from a structural certificate (an
/// isomorphism, an adjoint, or a terminal/initial object); agreement of
/// truncated invariants alone yields Consistent.
enum class Status { Certified, Consistent, Refuted };

struct Verdict {
    Status status = Status::Consistent;
    std::string witness;  ///< certificate description or counterexample

    bool refuted() const { return status == Status::Refuted; }
    bool certified() const { return status == Status::Certified; }
};

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Certified: return "Certified";
        case Status::Consistent: return "Consistent";
        case Status::Refuted: return "Refuted";
    }
    return "?";
}

}  // namespace fibrantkit
