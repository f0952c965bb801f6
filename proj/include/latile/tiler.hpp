#pragma once

// Periodic tilings of Z^n by translates of a cluster: verification, exact
// cover on torus quotients, lattice search, the 1-D transfer graph, the
// dilation check and the product construction for prisms.

#include <optional>
#include <string>
#include <vector>

#include "latile/cluster.hpp"

namespace latile {

// T = reps + period.
struct PeriodicTiling {
    Sublattice period;  // full rank
    std::vector<IntVec> reps;  // reduced mod period, sorted

    std::size_t dim() const { return period.ambient_dim(); }

    // Reduces and sorts the representatives.
    static PeriodicTiling make(Sublattice period, std::vector<IntVec> reps);
    friend bool operator==(const PeriodicTiling& a, const PeriodicTiling& b) {
        return a.period == b.period && a.reps == b.reps;
    }
};

struct OneDimReport {
    Integer uniform_period = 1;
    // One 0/1 word per tiling up to translation, of length uniform_period;
    // '1' at position x means a translate whose leftmost cell is x.
    std::vector<std::string> tilings;
    bool exact = false;
};

bool verify_tiling(const Cluster& f, const PeriodicTiling& t);

// Exact cover of Z^n / L. Requires index(L) divisible by |F|.
std::optional<PeriodicTiling> tile_torus(const Cluster& f, const Sublattice& l);

// Full-rank lattices in Hermite form with the given index, in search order:
// off-diagonal entries first (so diagonal lattices lead), then diagonal.
std::vector<Sublattice> hermite_lattices(std::size_t dim, long index);

// Tries lattices of index |F|, 2|F|, ... up to max_index. nullopt means
// "unknown", not "no tiling exists".
std::optional<PeriodicTiling> search_fully_periodic(const Cluster& f, long max_index);

// Transfer graph over coverage windows. Requires dim 1 and diam(F) <= 24.
OneDimReport tile_1d(const Cluster& f);

// The 1-D tiling of F described by a tile_1d word.
PeriodicTiling tiling_from_word(const std::string& word, const Cluster& f);

// verify_tiling(alpha F, T). Requires gcd(alpha, |F|) = 1 and T an F-tiling.
bool dilation_check(const Cluster& f, const PeriodicTiling& t, const Integer& alpha);

// Tiling of a prism with prime foundation size: product of a 1-D tiling of
// the offsets and a 2-D tiling of the flattened foundation, falling back to
// a bounded lattice search.
std::optional<PeriodicTiling> tile_prism(const PrismDecomposition& prism, const Cluster& f, long max_index);

}  // namespace latile
