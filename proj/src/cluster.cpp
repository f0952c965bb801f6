#include "latile/cluster.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace latile {

Cluster::Cluster(std::vector<IntVec> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::domain_error("Cluster: empty point set");
    const std::size_t d = points_.front().dim();
    if (d < 1 || d > 3) throw std::domain_error("Cluster: dimension must be 1, 2 or 3");
    for (const auto& p : points_)
        if (p.dim() != d) throw std::domain_error("Cluster: points of mixed dimension");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::domain_error("Cluster: duplicate point");
}

bool Cluster::contains(const IntVec& v) const { return std::binary_search(points_.begin(), points_.end(), v); }

Cluster Cluster::translated(const IntVec& w) const {
    std::vector<IntVec> out;
    out.reserve(size());
    for (const auto& p : points_) out.push_back(p + w);
    return Cluster(std::move(out));
}

Cluster Cluster::dilated(const Integer& alpha) const {
    if (alpha == 0) throw std::domain_error("Cluster::dilated: zero factor");
    std::vector<IntVec> out;
    out.reserve(size());
    for (const auto& p : points_) out.push_back(alpha * p);
    return Cluster(std::move(out));
}

Cluster Cluster::transformed(const UnimodularMatrix& u) const {
    std::vector<IntVec> out;
    out.reserve(size());
    for (const auto& p : points_) out.push_back(u * p);
    return Cluster(std::move(out));
}

std::vector<std::size_t> FiberPartition::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(fibers.size());
    for (const auto& f : fibers) out.push_back(f.size());
    return out;
}

namespace {

// Two points lie on a common line parallel to g iff all 2x2 minors of
// (x, g) agree.
IntVec line_key(const IntVec& x, const IntVec& g) {
    std::vector<Integer> key;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = i + 1; j < x.dim(); ++j) key.push_back(x[i] * g[j] - x[j] * g[i]);
    return IntVec(std::move(key));
}

}  // namespace

FiberPartition line_fibers(const Cluster& f, const IntVec& g) {
    if (g.dim() != f.dim()) throw std::domain_error("line_fibers: dimension mismatch");
    if (g.is_zero()) throw std::domain_error("line_fibers: zero direction");
    FiberPartition out{FiberPartition::Kind::Line, g, {}};
    std::map<IntVec, std::size_t> slot;
    for (const auto& x : f.points()) {
        auto [it, fresh] = slot.try_emplace(line_key(x, g), out.fibers.size());
        if (fresh) out.fibers.emplace_back();
        out.fibers[it->second].push_back(x);
    }
    return out;
}

FiberPartition normal_fibers(const Cluster& f, const IntVec& v) {
    if (v.dim() != f.dim()) throw std::domain_error("normal_fibers: dimension mismatch");
    if (v.is_zero()) throw std::domain_error("normal_fibers: zero normal");
    std::map<Integer, std::vector<IntVec>> levels;
    for (const auto& x : f.points()) levels[dot(x, v)].push_back(x);
    FiberPartition out{FiberPartition::Kind::Normal, v, {}};
    for (auto& [level, pts] : levels) out.fibers.push_back(std::move(pts));
    return out;
}

bool all_fibers_divisible(const FiberPartition& partition, const Integer& p) {
    if (p <= 0) throw std::domain_error("all_fibers_divisible: modulus must be positive");
    return std::all_of(partition.fibers.begin(), partition.fibers.end(),
                       [&](const auto& fiber) { return divides(p, Integer(static_cast<unsigned long>(fiber.size()))); });
}

std::vector<IntVec> prism_points(const PrismDecomposition& prism) {
    std::vector<IntVec> out;
    for (const auto& k : prism.offsets)
        for (const auto& a : prism.foundation) out.push_back(a + k * prism.axis);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_prism(const PrismDecomposition& prism, const Cluster& f) {
    if (f.dim() != 3 || prism.base.ambient_dim() != 3 || prism.base.rank() != 2) return false;
    if (prism.axis.dim() != 3 || prism.axis.is_zero() || prism.translate.dim() != 3) return false;
    const IntVec normal = cross(prism.base.generator(0), prism.base.generator(1));
    if (dot(normal, prism.axis) == 0) return false;
    if (prism.offsets.empty() || !std::is_sorted(prism.offsets.begin(), prism.offsets.end())) return false;
    if (std::adjacent_find(prism.offsets.begin(), prism.offsets.end()) != prism.offsets.end()) return false;
    if (!std::binary_search(prism.offsets.begin(), prism.offsets.end(), Integer(0))) return false;
    if (prism.foundation.empty()) return false;

    std::vector<IntVec> slice;
    for (const auto& x : f.points())
        if (prism.base.contains(x - prism.translate)) slice.push_back(x);
    if (slice != prism.foundation) return false;
    return prism_points(prism) == f.points();
}

namespace {

struct PlaneCandidate {
    IntVec normal;
    Sublattice base;
};

// Attempts a decomposition whose layers are the planes with the given
// normal. Returns nullopt when the layers are not axis-translates of the
// lowest one, and a single-layer decomposition marker via `single`.
std::optional<PrismDecomposition> try_layers(const Cluster& f, const PlaneCandidate& c, bool& single) {
    std::map<Integer, std::vector<IntVec>> levels;
    for (const auto& x : f.points()) levels[dot(x, c.normal)].push_back(x);
    single = levels.size() == 1;
    if (single) return std::nullopt;

    const std::vector<IntVec>& bottom = levels.begin()->second;
    std::vector<IntVec> shifts;
    for (auto it = std::next(levels.begin()); it != levels.end(); ++it) {
        const auto& layer = it->second;
        if (layer.size() != bottom.size()) return std::nullopt;
        IntVec d = layer.front() - bottom.front();
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (layer[i] != bottom[i] + d) return std::nullopt;
        shifts.push_back(std::move(d));
    }
    IntVec g = primitive_part(shifts.front());
    std::vector<Integer> offsets{Integer(0)};
    for (const auto& d : shifts) {
        if (!parallel(d, g)) return std::nullopt;
        offsets.push_back(content(d));
    }
    return PrismDecomposition{c.base, g, bottom.front(), offsets, bottom};
}

}  // namespace

std::optional<PrismDecomposition> prism_decompose(const Cluster& f) {
    if (f.dim() != 3) throw std::domain_error("prism_decompose: cluster must be three-dimensional");

    std::vector<IntVec> dirs;
    const auto& pts = f.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.push_back(canonical_direction(pts[j] - pts[i]));
    for (std::size_t i = 0; i < 3; ++i) dirs.push_back(unit_vector(3, i));
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    std::vector<IntVec> normals;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            IntVec n = cross(dirs[i], dirs[j]);
            if (!n.is_zero()) normals.push_back(canonical_direction(n));
        }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    // Planes are tried in lexicographic order of their canonical normals.
    std::vector<PlaneCandidate> planes;
    planes.reserve(normals.size());
    for (auto& n : normals) planes.push_back({n, orthogonal_lattice(n)});

    const PlaneCandidate* flat = nullptr;
    for (const auto& c : planes) {
        bool single = false;
        if (auto prism = try_layers(f, c, single)) return prism;
        if (single && !flat) flat = &c;
    }
    if (!flat) return std::nullopt;

    std::size_t axis = 0;
    while (flat->normal[axis] == 0) ++axis;
    IntVec g = unit_vector(3, axis);
    if (flat->normal[axis] < 0) g = -g;
    return PrismDecomposition{flat->base, g, f.min_point(), {Integer(0)}, f.points()};
}

PrismDecomposition prism_from_divisibility(const Cluster& f, const Integer& p, const IntVec& g, const IntVec& v) {
    if (f.dim() != 3) throw std::domain_error("prism_from_divisibility: cluster must be three-dimensional");
    if (!is_prime(p)) throw std::domain_error("prism_from_divisibility: p is not prime");
    if (Integer(static_cast<unsigned long>(f.size())) != p * p)
        throw std::domain_error("prism_from_divisibility: |F| != p^2");
    if (g.is_zero() || v.is_zero()) throw std::domain_error("prism_from_divisibility: zero direction");
    if (!all_fibers_divisible(line_fibers(f, g), p))
        throw std::domain_error("prism_from_divisibility: some line parallel to g meets F in a non-multiple of p");
    if (!all_fibers_divisible(normal_fibers(f, v), p))
        throw std::domain_error("prism_from_divisibility: some plane with normal v meets F in a non-multiple of p");
    if (dot(g, v) == 0) throw std::domain_error("prism_from_divisibility: plane with normal v is parallel to g");

    const Sublattice base = orthogonal_lattice(v);
    const UnimodularMatrix flatten = flatten_subgroup(base);
    IntVec axis = primitive_part(g);
    Integer step = (flatten * axis)[2];
    if (step < 0) {
        axis = -axis;
        step = -step;
    }

    std::map<Integer, std::vector<IntVec>> layers;
    for (const auto& x : f.points()) layers[(flatten * x)[2]].push_back(x);
    if (Integer(static_cast<unsigned long>(layers.size())) != p)
        throw std::logic_error("prism_from_divisibility: layer count differs from p despite divisibility");

    const Integer bottom_height = layers.begin()->first;
    const std::vector<IntVec>& foundation = layers.begin()->second;
    const IntVec& anchor = foundation.front();
    std::vector<Integer> offsets;
    for (const auto& [height, layer] : layers) {
        Integer rise = height - bottom_height;
        if (!divides(step, rise)) throw std::logic_error("prism_from_divisibility: axis does not connect layers");
        Integer k = rise / step;
        if (!f.contains(anchor + k * axis)) throw std::logic_error("prism_from_divisibility: axis line misses a layer");
        offsets.push_back(k);
    }
    PrismDecomposition prism{base, axis, anchor, offsets, foundation};
    if (!is_valid_prism(prism, f)) throw std::logic_error("prism_from_divisibility: layers are not axis translates");
    return prism;
}

}  // namespace latile
