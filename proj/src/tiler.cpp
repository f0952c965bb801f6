#include "latile/tiler.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "latile/parallel.hpp"

namespace latile {

PeriodicTiling PeriodicTiling::make(Sublattice period, std::vector<IntVec> reps) {
    if (!period.is_full_rank()) throw std::domain_error("PeriodicTiling: period must have full rank");
    for (auto& r : reps) {
        if (r.dim() != period.ambient_dim()) throw std::domain_error("PeriodicTiling: representative dimension mismatch");
        r = reduce_mod_lattice(r, period);
    }
    std::sort(reps.begin(), reps.end());
    return PeriodicTiling{std::move(period), std::move(reps)};
}

bool verify_tiling(const Cluster& f, const PeriodicTiling& t) {
    if (f.dim() != t.dim()) throw std::domain_error("verify_tiling: dimension mismatch");
    if (!t.period.is_full_rank()) return false;
    const Integer index = t.period.index();
    if (Integer(static_cast<unsigned long>(t.reps.size() * f.size())) != index) return false;
    std::set<IntVec> hit;
    for (const auto& r : t.reps)
        for (const auto& a : f.points())
            if (!hit.insert(reduce_mod_lattice(r + a, t.period)).second) return false;
    return true;
}

namespace {

// Z^n / L with L in column Hermite form, cells numbered in lexicographic
// order of their box representatives.
class TorusQuotient {
public:
    explicit TorusQuotient(const Sublattice& l) : n_(l.ambient_dim()), h_(n_ * n_), diag_(n_) {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) h_[r * n_ + c] = to_long(l.basis()(r, c));
        cells_ = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            diag_[i] = h_[i * n_ + i];
            cells_ *= diag_[i];
        }
    }

    long cells() const { return cells_; }

    long cell_of(std::vector<long> v) const {
        for (std::size_t j = 0; j < n_; ++j) {
            long q = v[j] / diag_[j];
            if (v[j] % diag_[j] < 0) --q;
            if (q == 0) continue;
            for (std::size_t r = j; r < n_; ++r) v[r] -= q * h_[r * n_ + j];
        }
        long idx = 0;
        for (std::size_t j = 0; j < n_; ++j) idx = idx * diag_[j] + v[j];
        return idx;
    }

    std::vector<long> rep(long idx) const {
        std::vector<long> v(n_);
        for (std::size_t j = n_; j-- > 0;) {
            v[j] = idx % diag_[j];
            idx /= diag_[j];
        }
        return v;
    }

private:
    std::size_t n_;
    std::vector<long> h_;
    std::vector<long> diag_;
    long cells_ = 1;
};

std::vector<long> to_longs(const IntVec& v) {
    std::vector<long> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = to_long(v[i]);
    return out;
}

IntVec from_longs(const std::vector<long>& v) {
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return IntVec(std::move(out));
}

class ExactCover {
public:
    ExactCover(const TorusQuotient& q, const Cluster& f) : k_(f.size()), cells_(q.cells()) {
        const std::size_t c = static_cast<std::size_t>(cells_);
        cover_.resize(c * k_);
        anchors_.resize(c * k_);
        std::vector<std::vector<long>> shape;
        for (const auto& a : f.points()) shape.push_back(to_longs(a));
        for (long t = 0; t < cells_; ++t) {
            const auto base = q.rep(t);
            for (std::size_t i = 0; i < k_; ++i) {
                auto plus = base, minus = base;
                for (std::size_t j = 0; j < base.size(); ++j) {
                    plus[j] += shape[i][j];
                    minus[j] -= shape[i][j];
                }
                cover_[static_cast<std::size_t>(t) * k_ + i] = q.cell_of(plus);
                anchors_[static_cast<std::size_t>(t) * k_ + i] = q.cell_of(minus);
            }
        }
        covered_.assign(c, 0);
    }

    // Translates of F that overlap themselves mod L; the condition does not
    // depend on the translate.
    bool self_overlapping() const {
        std::vector<long> cells(cover_.begin(), cover_.begin() + static_cast<std::ptrdiff_t>(k_));
        std::sort(cells.begin(), cells.end());
        return std::adjacent_find(cells.begin(), cells.end()) != cells.end();
    }

    std::optional<std::vector<long>> solve() {
        chosen_.clear();
        if (search()) return chosen_;
        return std::nullopt;
    }

private:
    bool fits(long t) const {
        for (std::size_t i = 0; i < k_; ++i)
            if (covered_[static_cast<std::size_t>(cover_[static_cast<std::size_t>(t) * k_ + i])]) return false;
        return true;
    }

    void mark(long t, std::uint8_t v) {
        for (std::size_t i = 0; i < k_; ++i) covered_[static_cast<std::size_t>(cover_[static_cast<std::size_t>(t) * k_ + i])] = v;
    }

    bool search() {
        long best = -1;
        std::size_t best_count = k_ + 1;
        for (long x = 0; x < cells_ && best_count > 1; ++x) {
            if (covered_[static_cast<std::size_t>(x)]) continue;
            std::size_t count = 0;
            for (std::size_t i = 0; i < k_; ++i)
                if (fits(anchors_[static_cast<std::size_t>(x) * k_ + i])) ++count;
            if (count == 0) return false;
            if (count < best_count) {
                best_count = count;
                best = x;
            }
        }
        if (best < 0) return true;
        for (std::size_t i = 0; i < k_; ++i) {
            const long t = anchors_[static_cast<std::size_t>(best) * k_ + i];
            if (!fits(t)) continue;
            mark(t, 1);
            chosen_.push_back(t);
            if (search()) return true;
            chosen_.pop_back();
            mark(t, 0);
        }
        return false;
    }

    std::size_t k_;
    long cells_;
    std::vector<long> cover_;    // cells covered by the translate anchored at t
    std::vector<long> anchors_;  // anchors of the translates covering x
    std::vector<std::uint8_t> covered_;
    std::vector<long> chosen_;
};

}  // namespace

std::optional<PeriodicTiling> tile_torus(const Cluster& f, const Sublattice& l) {
    if (l.ambient_dim() != f.dim() || !l.is_full_rank()) throw std::domain_error("tile_torus: lattice must be full rank in the cluster's dimension");
    const Integer index = l.index();
    if (!divides(Integer(static_cast<unsigned long>(f.size())), index))
        throw std::domain_error("tile_torus: index not divisible by |F|");
    const TorusQuotient q(l);
    ExactCover cover(q, f);
    if (cover.self_overlapping()) return std::nullopt;
    auto sol = cover.solve();
    if (!sol) return std::nullopt;
    std::vector<IntVec> reps;
    for (long t : *sol) reps.push_back(from_longs(q.rep(t)));
    PeriodicTiling out = PeriodicTiling::make(l, std::move(reps));
    if (!verify_tiling(f, out)) throw std::logic_error("tile_torus: exact cover produced an invalid tiling");
    return out;
}

std::vector<Sublattice> hermite_lattices(std::size_t dim, long index) {
    if (dim == 0 || index < 1) throw std::domain_error("hermite_lattices: need dim >= 1 and index >= 1");
    std::vector<std::vector<long>> diagonals;
    std::vector<long> cur;
    auto factor = [&](auto&& self, long rest) -> void {
        if (cur.size() + 1 == dim) {
            cur.push_back(rest);
            diagonals.push_back(cur);
            cur.pop_back();
            return;
        }
        for (long d = 1; d <= rest; ++d)
            if (rest % d == 0) {
                cur.push_back(d);
                self(self, rest / d);
                cur.pop_back();
            }
    };
    factor(factor, index);

    // (off-diagonal entries row by row, diagonal) -> lattice
    std::vector<std::pair<std::vector<long>, std::vector<long>>> keyed;
    for (const auto& diag : diagonals) {
        std::vector<long> radix;
        for (std::size_t r = 1; r < dim; ++r)
            for (std::size_t c = 0; c < r; ++c) radix.push_back(diag[r]);
        long total = 1;
        for (long r : radix) total *= r;
        for (long code = 0; code < total; ++code) {
            std::vector<long> off(radix.size());
            long rest = code;
            for (std::size_t i = radix.size(); i-- > 0;) {
                off[i] = rest % radix[i];
                rest /= radix[i];
            }
            keyed.emplace_back(std::move(off), diag);
        }
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<Sublattice> out;
    out.reserve(keyed.size());
    for (const auto& [off, diag] : keyed) {
        IntMatrix h(dim, dim);
        std::size_t k = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            h(r, r) = diag[r];
            for (std::size_t c = 0; c < r; ++c) h(r, c) = off[k++];
        }
        out.push_back(Sublattice::from_matrix(h));
    }
    return out;
}

std::optional<PeriodicTiling> search_fully_periodic(const Cluster& f, long max_index) {
    const long k = static_cast<long>(f.size());
    for (long index = k; index <= max_index; index += k) {
        const auto lattices = hermite_lattices(f.dim(), index);
        const std::size_t batch = std::max<std::size_t>(1, worker_count() * 4);
        for (std::size_t start = 0; start < lattices.size(); start += batch) {
            const std::size_t n = std::min(batch, lattices.size() - start);
            std::vector<std::optional<PeriodicTiling>> found(n);
            parallel_for(n, [&](std::size_t i) { found[i] = tile_torus(f, lattices[start + i]); });
            for (auto& r : found)
                if (r) return r;
        }
    }
    return std::nullopt;
}

namespace {

constexpr long kMaxDiameter = 24;

}  // namespace

OneDimReport tile_1d(const Cluster& f) {
    if (f.dim() != 1) throw std::domain_error("tile_1d: cluster must be one-dimensional");
    const Integer lo = f.points().front()[0];
    const Integer diam = f.points().back()[0] - lo;
    if (diam > kMaxDiameter) throw std::domain_error("tile_1d: diameter exceeds 24");
    const unsigned d = static_cast<unsigned>(diam.get_ui());
    std::uint32_t shape = 0;
    for (const auto& p : f.points()) shape |= std::uint32_t{1} << Integer(p[0] - lo).get_ui();

    // State: coverage of cells x .. x+d-1 seen from cell x. The move at x is
    // forced: skip if x is covered, else place the translate starting at x.
    const std::uint32_t states = std::uint32_t{1} << d;
    constexpr std::uint32_t dead = ~std::uint32_t{0};
    std::vector<std::uint32_t> next(states);
    for (std::uint32_t s = 0; s < states; ++s) {
        if (s & 1u)
            next[s] = s >> 1;
        else
            next[s] = (s & shape) ? dead : (s | shape) >> 1;
    }

    // Cycles of the functional graph are exactly the recurrent states.
    std::vector<std::uint8_t> color(states, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<std::uint32_t> path;
    for (std::uint32_t s0 = 0; s0 < states; ++s0) {
        if (color[s0]) continue;
        path.clear();
        std::uint32_t s = s0;
        while (s != dead && color[s] == 0) {
            color[s] = 1;
            path.push_back(s);
            s = next[s];
        }
        if (s != dead && color[s] == 1) {
            auto it = std::find(path.begin(), path.end(), s);
            cycles.emplace_back(it, path.end());
        }
        for (auto p : path) color[p] = 2;
    }

    std::vector<std::uint32_t> in_degree(states, 0);
    std::vector<std::uint8_t> recurrent(states, 0);
    for (const auto& c : cycles)
        for (auto s : c) recurrent[s] = 1;
    for (std::uint32_t s = 0; s < states; ++s)
        if (recurrent[s] && next[s] != dead && recurrent[next[s]]) ++in_degree[next[s]];
    for (std::uint32_t s = 0; s < states; ++s)
        if (recurrent[s] && (in_degree[s] != 1 || next[s] == dead || !recurrent[next[s]]))
            throw std::logic_error("tile_1d: recurrent transfer subgraph is not a union of disjoint cycles");

    OneDimReport out;
    for (const auto& c : cycles) out.uniform_period = lcm_of(out.uniform_period, Integer(static_cast<unsigned long>(c.size())));
    const std::size_t period = out.uniform_period.get_ui();
    for (const auto& c : cycles) {
        std::string word;
        for (auto s : c) word += (s & 1u) ? '0' : '1';
        std::string best = word;
        for (std::size_t r = 1; r < word.size(); ++r) best = std::max(best, word.substr(r) + word.substr(0, r));
        std::string full;
        while (full.size() < period) full += best;
        out.tilings.push_back(full);
    }
    std::sort(out.tilings.begin(), out.tilings.end());
    out.exact = !out.tilings.empty();
    return out;
}

PeriodicTiling tiling_from_word(const std::string& word, const Cluster& f) {
    if (f.dim() != 1) throw std::domain_error("tiling_from_word: cluster must be one-dimensional");
    if (word.empty()) throw std::domain_error("tiling_from_word: empty word");
    const Integer lo = f.points().front()[0];
    std::vector<IntVec> reps;
    for (std::size_t x = 0; x < word.size(); ++x)
        if (word[x] == '1') reps.push_back(IntVec(std::vector<Integer>{Integer(static_cast<unsigned long>(x)) - lo}));
    return PeriodicTiling::make(Sublattice::diagonal({static_cast<long>(word.size())}), std::move(reps));
}

bool dilation_check(const Cluster& f, const PeriodicTiling& t, const Integer& alpha) {
    if (alpha <= 0 || gcd_of(alpha, Integer(static_cast<unsigned long>(f.size()))) != 1)
        throw std::domain_error("dilation_check: alpha must be positive and coprime to |F|");
    if (!verify_tiling(f, t)) throw std::domain_error("dilation_check: T is not an F-tiling");
    return verify_tiling(f.dilated(alpha), t);
}

namespace {

std::optional<PeriodicTiling> product_tiling(const PrismDecomposition& prism, const Cluster& f, long max_index) {
    const UnimodularMatrix w = flatten_subgroup(prism.base);
    const UnimodularMatrix w_inv = w.inverse();

    std::vector<IntVec> flat;
    for (const auto& a : prism.foundation) {
        IntVec y = w * (a - prism.translate);
        flat.push_back(IntVec(std::vector<Integer>{y[0], y[1]}));
    }
    const IntVec gw = w * prism.axis;
    const Integer c = gw[2];

    std::vector<IntVec> offsets;
    for (const auto& k : prism.offsets) offsets.push_back(IntVec(std::vector<Integer>{k}));
    const Cluster line(offsets);
    if (to_long(line.points().back()[0] - line.points().front()[0]) > kMaxDiameter) return std::nullopt;
    const OneDimReport one = tile_1d(line);
    if (!one.exact) return std::nullopt;
    const PeriodicTiling t1 = tiling_from_word(one.tilings.front(), line);
    const Integer s = t1.period.generator(0)[0];

    const auto t2 = search_fully_periodic(Cluster(flat), max_index);
    if (!t2) return std::nullopt;

    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < 2; ++j) {
        IntVec l2 = t2->period.generator(j);
        gens.push_back(w_inv * IntVec(std::vector<Integer>{l2[0], l2[1], Integer(0)}));
    }
    gens.push_back(w_inv * (s * gw));
    Sublattice period(3, gens);

    std::vector<IntVec> reps;
    const Integer layers = abs(c);
    for (const auto& r1 : t1.reps)
        for (const auto& r2 : t2->reps)
            for (Integer r = 0; r < layers; ++r) {
                IntVec y = r1[0] * gw;
                y[0] += r2[0];
                y[1] += r2[1];
                y[2] += r;
                reps.push_back(w_inv * y - prism.translate);
            }
    PeriodicTiling out = PeriodicTiling::make(period, std::move(reps));
    if (!verify_tiling(f, out)) throw std::logic_error("tile_prism: product construction failed verification");
    return out;
}

}  // namespace

std::optional<PeriodicTiling> tile_prism(const PrismDecomposition& prism, const Cluster& f, long max_index) {
    if (!is_valid_prism(prism, f)) throw std::domain_error("tile_prism: invalid prism decomposition");
    if (!is_prime(Integer(static_cast<unsigned long>(prism.foundation.size()))))
        throw std::domain_error("tile_prism: foundation size is not prime");
    if (auto t = product_tiling(prism, f, max_index)) return t;
    return search_fully_periodic(f, max_index);
}

}  // namespace latile
