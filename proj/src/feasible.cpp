#include "toric/feasible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

// Internal constraint with rational coefficients: <x, c> >= b (or >).
struct RC {
    RatVec c;
    Rat b;
    bool strict;
};

// Scale to coprime integers with positive leading coefficient sign kept, so
// duplicates collapse. Returns a key vector for dedup.
std::vector<Int> canonical_key(const RC& r) {
    // common denominator
    Int den = 1;
    for (const auto& x : r.c) den = den / gcd(den, Int(boost::multiprecision::denominator(x))) *
                                    Int(boost::multiprecision::denominator(x));
    den = den / gcd(den, Int(boost::multiprecision::denominator(r.b))) *
          Int(boost::multiprecision::denominator(r.b));
    std::vector<Int> key;
    key.reserve(r.c.size() + 2);
    Int g = 0;
    for (const auto& x : r.c) {
        Int v = Int(boost::multiprecision::numerator(x)) *
                (den / Int(boost::multiprecision::denominator(x)));
        key.push_back(v);
        g = gcd(g, v);
    }
    Int vb = Int(boost::multiprecision::numerator(r.b)) *
             (den / Int(boost::multiprecision::denominator(r.b)));
    g = gcd(g, vb);
    if (g == 0) g = 1;
    for (auto& v : key) v /= g;
    key.push_back(vb / g);
    key.push_back(Int(r.strict ? 1 : 0));
    return key;
}

struct Interval {
    std::optional<std::pair<Rat, bool>> lo, hi;  // (value, strict)
    bool infeasible = false;

    void add_lower(const Rat& v, bool strict) {
        if (!lo || v > lo->first || (v == lo->first && strict)) lo = {v, strict};
    }
    void add_upper(const Rat& v, bool strict) {
        if (!hi || v < hi->first || (v == hi->first && strict)) hi = {v, strict};
    }
    bool empty() const {
        if (!lo || !hi) return false;
        if (lo->first > hi->first) return true;
        if (lo->first == hi->first && (lo->second || hi->second)) return true;
        return false;
    }
    // Deterministic pick: attainable lower bound first, else midpoint/offset.
    Rat pick() const {
        if (!lo && !hi) return Rat(0);
        if (lo && !lo->second) {
            if (!hi || lo->first < hi->first || (lo->first == hi->first && !hi->second))
                return lo->first;
        }
        if (lo && hi) return (lo->first + hi->first) / 2;
        if (lo) return lo->first + 1;
        if (!hi->second) return hi->first;
        return hi->first - 1;
    }
};

}  // namespace

std::optional<RatVec> rational_feasible(const std::vector<LinConstraint>& weak,
                                        const std::vector<LinConstraint>& strict) {
    std::size_t dim = 0;
    bool have = false;
    auto check_dim = [&](const LinConstraint& c) {
        if (!have) {
            dim = c.normal.size();
            have = true;
        } else if (c.normal.size() != dim) {
            throw std::invalid_argument("rational_feasible: dimension mismatch");
        }
    };
    std::vector<RC> cur;
    for (const auto& c : weak) {
        check_dim(c);
        RC r;
        r.c.assign(c.normal.begin(), c.normal.end());
        r.b = Rat(c.bound);
        r.strict = false;
        cur.push_back(std::move(r));
    }
    for (const auto& c : strict) {
        check_dim(c);
        RC r;
        r.c.assign(c.normal.begin(), c.normal.end());
        r.b = Rat(c.bound);
        r.strict = true;
        cur.push_back(std::move(r));
    }
    if (!have) return RatVec{};

    auto constant_ok = [](const RC& r) {
        // 0 >= b (or >): feasible iff b <= 0 (resp. < 0).
        return r.strict ? r.b < 0 : r.b <= 0;
    };

    // levels[k] holds the system in variables k..dim-1.
    std::vector<std::vector<RC>> levels(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        // split off constants, dedup
        std::vector<RC> sys;
        std::set<std::vector<Int>> seen;
        for (auto& r : cur) {
            bool all_zero = std::all_of(r.c.begin(), r.c.end(), [](const Rat& x) { return x == 0; });
            if (all_zero) {
                if (!constant_ok(r)) return std::nullopt;
                continue;
            }
            auto key = canonical_key(r);
            if (seen.insert(std::move(key)).second) sys.push_back(std::move(r));
        }
        levels[k] = sys;

        // eliminate variable k
        std::vector<RC> next;
        std::vector<const RC*> pos, negs;
        for (const auto& r : sys) {
            if (r.c[k] > 0)
                pos.push_back(&r);
            else if (r.c[k] < 0)
                negs.push_back(&r);
            else
                next.push_back(r);
        }
        for (const RC* p : pos)
            for (const RC* q : negs) {
                // p: c_k x_k >= b_p - rest_p ; q gives upper bound. Combine to
                // eliminate x_k: (-q_k)*p + p_k*q, both multipliers positive.
                Rat mp = -q->c[k], mq = p->c[k];
                RC r;
                r.c.resize(dim);
                for (std::size_t j = 0; j < dim; ++j) r.c[j] = mp * p->c[j] + mq * q->c[j];
                r.b = mp * p->b + mq * q->b;
                r.strict = p->strict || q->strict;
                bool all_zero =
                    std::all_of(r.c.begin(), r.c.end(), [](const Rat& x) { return x == 0; });
                if (all_zero) {
                    if (!constant_ok(r)) return std::nullopt;
                } else {
                    next.push_back(std::move(r));
                }
            }
        cur = std::move(next);
    }
    for (const auto& r : cur)
        if (!constant_ok(r)) return std::nullopt;

    // Back-substitute from the last variable down.
    RatVec x(dim);
    for (std::size_t kk = dim; kk-- > 0;) {
        Interval iv;
        for (const auto& r : levels[kk]) {
            if (r.c[kk] == 0) continue;
            Rat rest = r.b;
            for (std::size_t j = kk + 1; j < dim; ++j) rest -= r.c[j] * x[j];
            Rat v = rest / r.c[kk];
            if (r.c[kk] > 0)
                iv.add_lower(v, r.strict);
            else
                iv.add_upper(v, r.strict);
        }
        if (iv.empty()) throw std::logic_error("rational_feasible: empty interval after FM");
        x[kk] = iv.pick();
    }
    return x;
}

}  // namespace toric
