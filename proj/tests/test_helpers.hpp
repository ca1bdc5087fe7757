#pragma once

#include <vector>

#include "colorlie/gvs.hpp"
#include "colorlie/rng.hpp"

namespace colorlie::testing {

inline SpacePtr super_space_dim2() {
    GradingGroup z2{{2}};
    return make_space(2, z2,
                      {{"e0", make_degree(z2, {0})}, {"e1", make_degree(z2, {1})}});
}

inline SpacePtr trivial_space(size_t dim) {
    GradingGroup g = GradingGroup::trivial();
    std::vector<std::pair<std::string, Degree>> basis;
    for (size_t i = 0; i < dim; ++i) basis.emplace_back("t" + std::to_string(i), degree_zero(g));
    return make_space(1, g, std::move(basis));
}

inline Scalar random_field_element(SplitMix64& rng, unsigned m) {
    const auto& ctx = cyclo_context(m);
    std::vector<Rat> c(ctx.degree);
    for (auto& x : c) x = rng.small_rational();
    return Scalar::from_coeffs(m, std::move(c));
}

inline Vec random_vec(SplitMix64& rng, const SpacePtr& s) {
    Vec v = zero_vec(s);
    for (auto& c : v.coords) c = random_field_element(rng, s->cyclo_order);
    return v;
}

// Rank oracle independent of the library echelon path: eliminates from the
// last column backwards, never normalizes pivots, never reuses library
// Subspace machinery.
inline size_t oracle_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (size_t cc = 0; cc < ncols; ++cc) {
        const size_t c = ncols - 1 - cc;
        size_t pivot = rows.size();
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!used[r] && !rows[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        ++rank;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot || rows[r][c].is_zero()) continue;
            const Scalar factor = rows[r][c] / rows[pivot][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[r][j] -= factor * rows[pivot][j];
        }
    }
    return rank;
}

// Membership via the rank oracle.
inline bool oracle_member(const std::vector<std::vector<Scalar>>& rows, const Vec& v) {
    auto stacked = rows;
    stacked.push_back(v.coords);
    return oracle_rank(stacked) == oracle_rank(rows);
}

} // namespace colorlie::testing
