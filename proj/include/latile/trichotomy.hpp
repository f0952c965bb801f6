#pragma once

// Case analysis for clusters of size p^2 in Z^3: two divisible support
// directions give a prism (Case 1); one gives a prism when some line of Z
// leaves the kernel of N g0 (Case 2.1) and an existence certificate
// otherwise (Case 2.2); none gives a certificate (Case 3).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latile/spectral.hpp"
#include "latile/tiler.hpp"

namespace latile {

enum class CaseTag { Case1, Case2_1, Case2_2, Case3 };

std::string to_string(CaseTag tag);

inline constexpr const char* kCase22Note = "1-periodic point exists in the orbit closure; construction out of scope";
inline constexpr const char* kCase3Note =
    "weakly periodic decomposition theorem applies; 1-weakly periodic tiling exists; construction out of scope";

// Prism and tiling are given for the input cluster (not the normalized one).
// The prism slot is empty only in experimental mode with |F| != p^2; the
// tiling slot is empty when the search cap ran out.
struct Case1Witness {
    IntVec g0, g1, normal;
    std::optional<PrismDecomposition> prism;
    std::optional<PeriodicTiling> tiling;
};

struct Case21Witness {
    IntVec g0;
    Integer scaling;  // N
    TorusLine line;
    std::optional<PrismDecomposition> prism;
    std::optional<PeriodicTiling> tiling;
};

struct Case22Witness {
    IntVec g0;
    Integer scaling;  // N
    RationalLineFamily family;
    std::string note;
};

struct DirectionFamily {
    IntVec h;
    RationalLineFamily family;
};

struct Case3Witness {
    std::vector<DirectionFamily> families;
    std::string note;
};

using CaseWitness = std::variant<Case1Witness, Case21Witness, Case22Witness, Case3Witness>;

struct Classification {
    Cluster cluster;     // as given
    IntVec translation;  // spectral data refers to cluster - translation
    Integer p;
    DeltaSet delta;
    std::vector<IntVec> divisible_dirs;
    CaseTag tag;
    CaseWitness witness;
};

struct ClassifyOptions {
    long search_cap = 64;
    // Accept |F| = p^k for any k >= 1.
    bool experimental_prime_power = false;
};

// Requires dim 3 and |F| = p^2 (or a power of p in experimental mode).
Classification classify(const Cluster& f, const Integer& p, const ClassifyOptions& options = {});

// {rho + t v} lies in ker chi_g.
bool check_line_containment_in_kernel(const TorusLine& line, const IntVec& g);

}  // namespace latile
