#include "latile/trichotomy.hpp"

#include <stdexcept>

namespace latile {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2_1: return "Case2_1";
        case CaseTag::Case2_2: return "Case2_2";
        case CaseTag::Case3: return "Case3";
    }
    throw std::logic_error("to_string: unknown case tag");
}

bool check_line_containment_in_kernel(const TorusLine& line, const IntVec& g) {
    return dot(line.v, g) == 0 && in_kernel(g, line.rho);
}

namespace {

PrismDecomposition shifted(PrismDecomposition prism, const IntVec& w) {
    prism.translate += w;
    for (auto& a : prism.foundation) a += w;
    return prism;
}

struct Context {
    const Cluster& original;
    const Cluster& normalized;
    const IntVec& w;  // original = normalized + w
    const Integer& p;
    const ClassifyOptions& options;
    bool square;  // |F| = p^2
};

// Prism from the two divisibility facts, moved back to the input cluster,
// and its tiling. A failure here contradicts the prism lemma.
std::pair<std::optional<PrismDecomposition>, std::optional<PeriodicTiling>> build_prism(const Context& ctx,
                                                                                        const IntVec& g,
                                                                                        const IntVec& v) {
    if (!ctx.square) return {std::nullopt, std::nullopt};
    PrismDecomposition local = prism_from_divisibility(ctx.normalized, ctx.p, g, v);
    PrismDecomposition prism = shifted(local, ctx.w);
    std::optional<PeriodicTiling> tiling = tile_prism(prism, ctx.original, ctx.options.search_cap);
    if (tiling && !verify_tiling(ctx.original, *tiling))
        throw std::logic_error("classify: prism tiling failed verification");
    return {prism, tiling};
}

RationalLineFamily family_for(const Cluster& f, const Integer& p, const IntVec& h) {
    DichotomyResult r = support_dichotomy(f, p, h);
    if (auto* fam = std::get_if<RationalLineFamily>(&r)) return *fam;
    throw std::logic_error("classify: non-divisible direction reported as divisible");
}

}  // namespace

Classification classify(const Cluster& f, const Integer& p, const ClassifyOptions& options) {
    if (f.dim() != 3) throw std::domain_error("classify: cluster must be three-dimensional");
    if (!is_prime(p)) throw std::domain_error("classify: p is not prime");
    const Integer size(static_cast<unsigned long>(f.size()));
    const bool square = size == p * p;
    if (!square && !(options.experimental_prime_power && prime_power_exponent(size, p) > 0))
        throw std::domain_error("classify: |F| != p^2");
    if (options.search_cap < 1) throw std::domain_error("classify: search cap must be positive");

    const IntVec w = f.min_point();
    const Cluster normalized = f.translated(-w);
    const Context ctx{f, normalized, w, p, options, square};

    DeltaSet delta = compute_delta(normalized);
    std::vector<IntVec> divisible;
    for (const auto& g : delta.vectors)
        if (all_fibers_divisible(line_fibers(normalized, g), p)) divisible.push_back(g);

    Classification out{f, w, p, delta, divisible, CaseTag::Case3, Case3Witness{}};

    if (divisible.size() >= 2) {
        const IntVec& g0 = divisible[0];
        const IntVec& g1 = divisible[1];
        // Orthogonal to g1 inside span(g0, g1): planes with this normal are
        // parallel to g1, so they meet F in multiples of p.
        IntVec v = primitive_part(cross(g1, cross(g0, g1)));
        auto [prism, tiling] = build_prism(ctx, g0, v);
        out.tag = CaseTag::Case1;
        out.witness = Case1Witness{g0, g1, v, prism, tiling};
        return out;
    }

    if (divisible.size() == 1) {
        const IntVec& g0 = divisible[0];
        std::vector<RationalLineFamily> parts;
        for (const auto& h : delta.vectors)
            if (!(h == g0)) parts.push_back(family_for(normalized, p, h));
        RationalLineFamily family = merge_families(parts);

        Integer n = 1;
        for (const auto& line : family.lines()) n = lcm_of(n, pairing(g0, line.rho).get_den());
        const IntVec ng0 = n * g0;

        for (const auto& line : family.lines()) {
            if (check_line_containment_in_kernel(line, ng0)) continue;
            if (!line_in_Z(normalized, line.rho, line.v)) continue;
            if (!precursor_conclusion_check(normalized, p, line.rho, line.v))
                throw std::logic_error("classify: line inside Z without divisible planes");
            auto [prism, tiling] = build_prism(ctx, g0, line.v);
            out.tag = CaseTag::Case2_1;
            out.witness = Case21Witness{g0, n, line, prism, tiling};
            return out;
        }
        out.tag = CaseTag::Case2_2;
        out.witness = Case22Witness{g0, n, std::move(family), kCase22Note};
        return out;
    }

    Case3Witness c3;
    for (const auto& h : delta.vectors) c3.families.push_back({h, family_for(normalized, p, h)});
    c3.note = kCase3Note;
    out.witness = std::move(c3);
    return out;
}

}  // namespace latile
