#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

// Reduced Betti numbers over Q of the complex generated by the given facets,
// indices shifted so out[d+1] = dim H~^d, d = -1..n-1.
IntVec betti_from_facets(const std::vector<std::vector<std::size_t>>& facets, std::size_t n) {
    // all faces, graded by cardinality (0 = empty face)
    std::vector<std::set<std::vector<std::size_t>>> faces(n + 1);
    faces[0].insert(std::vector<std::size_t>{});
    for (const auto& f : facets) {
        const std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::uint64_t(1) << i)) sub.push_back(f[i]);
            faces[sub.size()].insert(std::move(sub));
        }
    }
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::size_t id = 0;
        for (const auto& f : faces[k]) index[k][f] = id++;
    }
    // rank of boundary map C_k -> C_{k-1} (cardinality k+1 -> k), k >= 1
    std::vector<std::size_t> bd_rank(n + 2, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (faces[k].empty()) continue;
        IntMatrix B(faces[k - 1].size(), faces[k].size());
        for (const auto& [f, j] : index[k]) {
            int sign = 1;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != drop) sub.push_back(f[t]);
                B.at(index[k - 1].at(sub), j) = sign;
                sign = -sign;
            }
        }
        bd_rank[k] = mat_rank(B);
    }
    IntVec out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        // reduced Betti in dimension k-1: faces of cardinality k
        Int b = Int(faces[k].size()) - Int(bd_rank[k]) - Int(k + 1 <= n ? bd_rank[k + 1] : 0);
        out[k] = b;
    }
    return out;
}

}  // namespace

std::vector<Int> reduced_cohomology(const Fan& fan, const SupportPattern& s) {
    for (auto r : s.rays)
        if (r >= fan.ray_count()) throw std::invalid_argument("reduced_cohomology: ray out of range");
    std::set<std::size_t> in(s.rays.begin(), s.rays.end());
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& mc : fan.max_cones) {
        std::vector<std::size_t> f;
        for (auto i : mc)
            if (in.count(i)) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return betti_from_facets(facets, fan.rank);
}

CohomologyEngine::CohomologyEngine(Fan fan) : fan_(std::move(fan)) {
    if (fan_.ray_count() > 64)
        throw std::invalid_argument("CohomologyEngine: more than 64 rays unsupported");
    IntMatrix R = mat_from_rows(fan_.rays);
    normal_ = mat_mul(mat_transpose(R), R);
}

IntVec CohomologyEngine::pattern_dims(std::uint64_t mask) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
    }
    SupportPattern s;
    for (std::size_t i = 0; i < fan_.ray_count(); ++i)
        if (mask & (std::uint64_t(1) << i)) s.rays.push_back(i);
    IntVec dims = reduced_cohomology(fan_, s);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(mask, dims);
    return dims;
}

// Translate D by a principal divisor to roughly center the hyperplane
// arrangement at the origin; keeps enumeration boxes small and leaves the
// class unchanged.
TDivisor CohomologyEngine::center(const TDivisor& d) const {
    IntMatrix R = mat_from_rows(fan_.rays);
    IntVec rhs = mat_apply(mat_transpose(R), d.coeffs);
    auto sol = solve_rational(normal_, rhs);
    if (!sol) return d;
    IntVec m(fan_.rank);
    for (std::size_t k = 0; k < fan_.rank; ++k) {
        // nearest integer to -sol[k]
        Rat x = -(*sol)[k];
        Int f = floor_rat(x);
        m[k] = (x - Rat(f) >= Rat(1, 2)) ? f + 1 : f;
    }
    TDivisor shifted = d;
    for (std::size_t r = 0; r < fan_.ray_count(); ++r) shifted.coeffs[r] += dot(m, fan_.rays[r]);
    return shifted;
}

CohomologyTable CohomologyEngine::line_bundle(const TDivisor& d) const {
    if (d.coeffs.size() != fan_.ray_count())
        throw std::invalid_argument("line_bundle: divisor length does not match ray count");
    TDivisor dd = center(d);
    const std::size_t n = fan_.rank;
    const std::size_t m = fan_.ray_count();
    auto [lo, hi] = arrangement_box(fan_, dd.coeffs, Int(1));

    CohomologyTable table;
    table.dims.assign(n + 1, Int(0));

    IntVec w = lo;
    IntVec dots(m);
    auto full_dots = [&]() {
        for (std::size_t r = 0; r < m; ++r) dots[r] = dot(w, fan_.rays[r]);
    };
    full_dots();
    for (;;) {
        std::uint64_t mask = 0;
        for (std::size_t r = 0; r < m; ++r)
            if (dots[r] < -dd.coeffs[r]) mask |= std::uint64_t(1) << r;
        IntVec pd = pattern_dims(mask);
        bool contributes = false;
        for (std::size_t i = 0; i <= n; ++i) {
            table.dims[i] += pd[i];
            if (pd[i] != 0) contributes = true;
        }
        if (contributes) {
            // Padding ring must stay acyclic or the box was too small.
            for (std::size_t k = 0; k < n; ++k)
                if (w[k] == lo[k] || w[k] == hi[k])
                    throw std::logic_error("line_bundle: non-acyclic weight on enumeration boundary");
        }
        // advance odometer on the last coordinate, incremental dot update
        std::size_t k = n;
        while (k > 0 && w[k - 1] == hi[k - 1]) --k;
        if (k == 0) break;
        ++w[k - 1];
        if (k == n) {
            for (std::size_t r = 0; r < m; ++r) dots[r] += fan_.rays[r][n - 1];
        } else {
            for (std::size_t j = k; j < n; ++j) w[j] = lo[j];
            full_dots();
        }
    }
    return table;
}

CohomologyTable CohomologyEngine::ext(const TDivisor& d1, const TDivisor& d2) const {
    return line_bundle(d2 - d1);
}

Int CohomologyEngine::euler_char(const TDivisor& d) const {
    CohomologyTable t = line_bundle(d);
    Int e = 0;
    int s = 1;
    for (const auto& h : t.dims) {
        e += s * h;
        s = -s;
    }
    return e;
}

CohomologyTable line_bundle_cohomology(const Fan& fan, const TDivisor& d) {
    return CohomologyEngine(fan).line_bundle(d);
}

CohomologyTable ext_table(const Fan& fan, const TDivisor& d1, const TDivisor& d2) {
    return CohomologyEngine(fan).ext(d1, d2);
}

Int euler_char(const Fan& fan, const TDivisor& d) { return CohomologyEngine(fan).euler_char(d); }

}  // namespace toric
