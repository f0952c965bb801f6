#pragma once

// Cluster geometry: fibers along lines and planes, p-divisibility of fibers,
// and prism detection.

#include <optional>
#include <vector>

#include "latile/lattice.hpp"

namespace latile {

// A finite nonempty set of points in Z^n, 1 <= n <= 3, kept sorted.
class Cluster {
public:
    // Throws std::domain_error on empty input, mixed or unsupported
    // dimension, or duplicate points.
    explicit Cluster(std::vector<IntVec> points);
    Cluster(std::initializer_list<IntVec> points) : Cluster(std::vector<IntVec>(points)) {}

    std::size_t dim() const { return points_.front().dim(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<IntVec>& points() const { return points_; }
    const IntVec& min_point() const { return points_.front(); }
    bool contains(const IntVec& v) const;
    bool contains_origin() const { return contains(IntVec(dim())); }

    Cluster translated(const IntVec& w) const;
    Cluster dilated(const Integer& alpha) const;
    Cluster transformed(const UnimodularMatrix& u) const;

    friend bool operator==(const Cluster& a, const Cluster& b) { return a.points_ == b.points_; }

private:
    std::vector<IntVec> points_;
};

struct FiberPartition {
    enum class Kind { Line, Normal };
    Kind kind;
    IntVec direction;
    std::vector<std::vector<IntVec>> fibers;

    std::vector<std::size_t> sizes() const;
};

// Intersections of F with the lines parallel to g, ordered by their
// lexicographically smallest point.
FiberPartition line_fibers(const Cluster& f, const IntVec& g);

// Level sets of x -> <x, v> on F, ordered by increasing level.
FiberPartition normal_fibers(const Cluster& f, const IntVec& v);

bool all_fibers_divisible(const FiberPartition& partition, const Integer& p);

// F = union over i of (offsets[i] * axis + foundation), foundation = (translate + base) & F.
struct PrismDecomposition {
    Sublattice base;
    IntVec axis;
    IntVec translate;
    std::vector<Integer> offsets;  // ascending, contains 0
    std::vector<IntVec> foundation;  // sorted
};

// Checks every invariant of the decomposition against F.
bool is_valid_prism(const PrismDecomposition& prism, const Cluster& f);

// Rebuilds the point set from foundation and offsets.
std::vector<IntVec> prism_points(const PrismDecomposition& prism);

// Witness of F being a prism, if one exists. Requires dim 3. Non-degenerate
// decompositions (at least two layers) are preferred; planar clusters fall
// back to a single layer.
std::optional<PrismDecomposition> prism_decompose(const Cluster& f);

// The prism with foundation of size p built from two divisibility facts:
// every line parallel to g and every plane with normal v meets F in a
// multiple of p points, with <g, v> != 0 and |F| = p^2.
PrismDecomposition prism_from_divisibility(const Cluster& f, const Integer& p, const IntVec& g, const IntVec& v);

}  // namespace latile
