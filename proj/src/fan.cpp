#include "toric/fan.hpp"

#include "toric/feasible.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

IntMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
    std::vector<IntVec> cols;
    cols.reserve(cone.size());
    for (auto i : cone) cols.push_back(fan.rays.at(i));
    return mat_from_columns(cols);
}

// Facet inequalities of a full-dimensional simplicial cone: rows of the
// adjugate of the ray matrix, oriented so the cone's own rays satisfy >= 0.
std::vector<IntVec> cone_inequalities(const Fan& fan, const std::vector<std::size_t>& cone) {
    const std::size_t n = fan.rank;
    IntMatrix m = cone_matrix(fan, cone);
    Int det = determinant(m);
    if (det == 0) throw std::logic_error("cone_inequalities: degenerate cone");
    std::vector<IntVec> rows;
    for (std::size_t k = 0; k < n; ++k) {
        // k-th dual vector: solves <u, v_j> = det * delta_{kj}; Cramer gives
        // integer entries (adjugate row).
        IntVec u(n);
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix t = m;
            for (std::size_t j = 0; j < n; ++j) t.at(i, j) = (j == k) ? 1 : 0;
            // replace row i by e_k^T: determinant expansion gives cofactor
            u[i] = determinant(t);
        }
        if (det < 0) u = neg(u);
        Int g = content(u);
        if (g > 1)
            for (auto& x : u) x /= g;
        rows.push_back(std::move(u));
    }
    return rows;
}

}  // namespace

std::size_t Fan::ray_index(const IntVec& v) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == v) return i;
    throw std::invalid_argument("Fan::ray_index: no such ray " + vec_str(v));
}

bool Fan::has_cone(const std::vector<std::size_t>& c) const {
    for (const auto& mc : max_cones)
        if (std::includes(mc.begin(), mc.end(), c.begin(), c.end())) return true;
    return false;
}

ValidationReport validate(const Fan& fan, bool force_face_check) {
    ValidationReport rep;
    auto fail = [&rep](std::string s) { rep.failures.push_back(std::move(s)); };

    if (fan.rank == 0) fail("rank must be positive");
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& v = fan.rays[i];
        if (v.size() != fan.rank) {
            fail("ray " + std::to_string(i) + " has wrong dimension");
            continue;
        }
        Int g = content(v);
        if (g == 0)
            fail("ray " + std::to_string(i) + " is zero");
        else if (g != 1)
            fail("ray " + std::to_string(i) + " = " + vec_str(v) + " is not primitive");
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
            if (fan.rays[i] == fan.rays[j])
                fail("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    if (!rep.ok()) return rep;

    std::vector<bool> used(fan.rays.size(), false);
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& mc = fan.max_cones[c];
        if (mc.size() != fan.rank) {
            fail("max cone " + std::to_string(c) + " is not full-dimensional");
            continue;
        }
        bool bad = false;
        for (auto i : mc) {
            if (i >= fan.rays.size()) {
                fail("max cone " + std::to_string(c) + " references missing ray");
                bad = true;
            } else {
                used[i] = true;
            }
        }
        if (bad) continue;
        if (!std::is_sorted(mc.begin(), mc.end()) ||
            std::adjacent_find(mc.begin(), mc.end()) != mc.end())
            fail("max cone " + std::to_string(c) + " indices not sorted/distinct");
        else if (determinant(cone_matrix(fan, mc)) == 0)
            fail("max cone " + std::to_string(c) + " rays are linearly dependent");
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) fail("ray " + std::to_string(i) + " lies in no maximal cone");
    if (!rep.ok()) return rep;

    // Face-to-face check via exact feasibility: for max cones A, B the
    // intersection must be the common face spanned by their shared rays,
    // i.e. no point of A^B has a positive barycentric weight on a
    // non-shared ray. Quadratic in cone count, so gated by size.
    if (force_face_check || fan.max_cones.size() <= 40) {
        std::vector<std::vector<IntVec>> ineqs;
        ineqs.reserve(fan.max_cones.size());
        for (const auto& mc : fan.max_cones) ineqs.push_back(cone_inequalities(fan, mc));
        for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
            for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
                const auto& A = fan.max_cones[a];
                const auto& B = fan.max_cones[b];
                std::vector<std::size_t> shared;
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                      std::back_inserter(shared));
                std::vector<LinConstraint> weak;
                for (const auto& u : ineqs[a]) weak.push_back({u, Int(0), false});
                for (const auto& u : ineqs[b]) weak.push_back({u, Int(0), false});
                bool bad = false;
                for (std::size_t side = 0; side < 2 && !bad; ++side) {
                    const auto& C = side == 0 ? A : B;
                    std::size_t ci = side == 0 ? a : b;
                    for (std::size_t k = 0; k < C.size() && !bad; ++k) {
                        if (std::binary_search(shared.begin(), shared.end(), C[k])) continue;
                        std::vector<LinConstraint> strict{{ineqs[ci][k], Int(0), true}};
                        if (rational_feasible(weak, strict)) bad = true;
                    }
                }
                if (bad)
                    fail("max cones " + std::to_string(a) + " and " + std::to_string(b) +
                         " do not meet in a common face");
            }
    }
    return rep;
}

bool is_smooth(const Fan& fan) {
    for (const auto& mc : fan.max_cones) {
        Int d = determinant(cone_matrix(fan, mc));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool is_complete(const Fan& fan) {
    std::map<std::vector<std::size_t>, std::size_t> ridge_count;
    for (const auto& mc : fan.max_cones)
        for (std::size_t drop = 0; drop < mc.size(); ++drop) {
            std::vector<std::size_t> ridge;
            for (std::size_t k = 0; k < mc.size(); ++k)
                if (k != drop) ridge.push_back(mc[k]);
            ++ridge_count[ridge];
        }
    for (const auto& [ridge, cnt] : ridge_count)
        if (cnt != 2) return false;
    return !fan.max_cones.empty();
}

Fan canonicalize(Fan fan) {
    std::vector<std::size_t> order(fan.rays.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fan.rays[a] < fan.rays[b]; });
    std::vector<std::size_t> inv(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = i;
    std::vector<IntVec> rays(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rays[i] = fan.rays[order[i]];
    fan.rays = std::move(rays);
    for (auto& mc : fan.max_cones) {
        for (auto& i : mc) i = inv[i];
        std::sort(mc.begin(), mc.end());
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    return fan;
}

Fan product(const Fan& f1, const Fan& f2) {
    Fan r;
    r.rank = f1.rank + f2.rank;
    for (const auto& v : f1.rays) {
        IntVec w(r.rank);
        for (std::size_t i = 0; i < f1.rank; ++i) w[i] = v[i];
        r.rays.push_back(std::move(w));
    }
    for (const auto& v : f2.rays) {
        IntVec w(r.rank);
        for (std::size_t i = 0; i < f2.rank; ++i) w[f1.rank + i] = v[i];
        r.rays.push_back(std::move(w));
    }
    for (const auto& c1 : f1.max_cones)
        for (const auto& c2 : f2.max_cones) {
            std::vector<std::size_t> c = c1;
            for (auto i : c2) c.push_back(f1.ray_count() + i);
            std::sort(c.begin(), c.end());
            r.max_cones.push_back(std::move(c));
        }
    return canonicalize(std::move(r));
}

Fan star_subdivision(const Fan& fan, const std::vector<std::size_t>& cone) {
    std::vector<std::size_t> c = cone;
    std::sort(c.begin(), c.end());
    if (c.size() < 2) throw std::invalid_argument("star_subdivision: cone dimension < 2");
    if (!fan.has_cone(c)) throw std::invalid_argument("star_subdivision: not a cone of the fan");

    IntVec w(fan.rank);
    for (auto i : c) w = add(w, fan.rays.at(i));
    if (content(w) != 1)
        throw std::invalid_argument("star_subdivision: barycenter ray not primitive (fan not smooth?)");

    Fan r;
    r.rank = fan.rank;
    r.rays = fan.rays;
    r.rays.push_back(w);
    const std::size_t wi = r.rays.size() - 1;
    for (const auto& mc : fan.max_cones) {
        if (!std::includes(mc.begin(), mc.end(), c.begin(), c.end())) {
            r.max_cones.push_back(mc);
            continue;
        }
        for (auto drop : c) {
            std::vector<std::size_t> nc;
            for (auto i : mc)
                if (i != drop) nc.push_back(i);
            nc.push_back(wi);
            std::sort(nc.begin(), nc.end());
            r.max_cones.push_back(std::move(nc));
        }
    }
    return canonicalize(std::move(r));
}

Fan projectivize(const Fan& base, const std::vector<IntVec>& twists, std::size_t fiber_rank) {
    if (twists.size() != fiber_rank)
        throw std::invalid_argument("projectivize: need one twist divisor per fiber summand");
    for (const auto& t : twists)
        if (t.size() != base.ray_count())
            throw std::invalid_argument("projectivize: twist length != base ray count");
    if (!is_smooth(base) || !is_complete(base))
        throw std::invalid_argument("projectivize: base must be smooth and complete");

    const std::size_t n = base.rank, r = fiber_rank;
    Fan res;
    res.rank = n + r;
    // lifted base rays (v_rho, a_{1,rho}, ..., a_{r,rho})
    for (std::size_t i = 0; i < base.ray_count(); ++i) {
        IntVec v(n + r);
        for (std::size_t k = 0; k < n; ++k) v[k] = base.rays[i][k];
        for (std::size_t k = 0; k < r; ++k) v[n + k] = twists[k][i];
        res.rays.push_back(std::move(v));
    }
    // fiber P^r rays f_1..f_r = e_{n+1}.., f_0 = -(f_1+...+f_r)
    std::vector<std::size_t> fiber_idx;
    for (std::size_t k = 0; k < r; ++k) {
        IntVec v(n + r);
        v[n + k] = 1;
        fiber_idx.push_back(res.rays.size());
        res.rays.push_back(std::move(v));
    }
    {
        IntVec v(n + r);
        for (std::size_t k = 0; k < r; ++k) v[n + k] = -1;
        fiber_idx.push_back(res.rays.size());
        res.rays.push_back(std::move(v));
    }
    for (const auto& bc : base.max_cones)
        for (std::size_t omit = 0; omit <= r; ++omit) {
            std::vector<std::size_t> c(bc);
            for (std::size_t k = 0; k <= r; ++k)
                if (k != omit) c.push_back(fiber_idx[k]);
            std::sort(c.begin(), c.end());
            res.max_cones.push_back(std::move(c));
        }
    return canonicalize(std::move(res));
}

std::vector<Wall> walls(const Fan& fan) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> adj;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& mc = fan.max_cones[c];
        for (std::size_t drop = 0; drop < mc.size(); ++drop) {
            std::vector<std::size_t> ridge;
            for (std::size_t k = 0; k < mc.size(); ++k)
                if (k != drop) ridge.push_back(mc[k]);
            adj[ridge].push_back(c);
        }
    }
    std::vector<Wall> ws;
    for (const auto& [ridge, cones] : adj) {
        if (cones.size() != 2)
            throw std::invalid_argument("walls: ridge not shared by exactly two cones (fan not complete)");
        ws.push_back(Wall{ridge, std::min(cones[0], cones[1]), std::max(cones[0], cones[1])});
    }
    return ws;
}

std::vector<std::vector<std::size_t>> cones_of_dimension(const Fan& fan, std::size_t dim) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& mc : fan.max_cones) {
        if (dim > mc.size()) continue;
        std::vector<std::size_t> idx(dim);
        for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::size_t> pick(dim);
            for (std::size_t i = 0; i < dim; ++i) pick[i] = mc[idx[i]];
            out.insert(std::move(pick));
            // next combination
            std::size_t i = dim;
            while (i > 0 && idx[i - 1] == mc.size() - dim + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < dim; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace toric
