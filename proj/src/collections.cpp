#include "toric/collections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

void validate_collection(const Collection& coll) {
    std::set<PicClass> seen;
    for (const auto& c : coll.items)
        if (!seen.insert(c).second)
            throw std::invalid_argument("collection: items must be distinct classes");
    if (!coll.block_bounds.empty()) {
        std::size_t prev = 0;
        for (auto b : coll.block_bounds) {
            if (b <= prev || b > coll.items.size())
                throw std::invalid_argument("collection: invalid block bounds");
            prev = b;
        }
        if (coll.block_bounds.back() != coll.items.size())
            throw std::invalid_argument("collection: block bounds must cover all items");
    }
}

CollectionChecker::CollectionChecker(const Fan& fan, const PicardLattice& lat,
                                     const CohomologyEngine& engine)
    : fan_(fan), lat_(lat), engine_(engine) {}

CohomologyTable CollectionChecker::ext_between(const PicClass& a, const PicClass& b) const {
    return engine_.ext(lat_.representative(a), lat_.representative(b));
}

CheckReport CollectionChecker::check_exceptional(const Collection& coll) const {
    validate_collection(coll);
    CheckReport rep;
    rep.length = coll.items.size();
    rep.k0 = fan_.max_cones.size();
    rep.exceptional = true;
    for (std::size_t i = 0; i < coll.items.size(); ++i) {
        CohomologyTable t = ext_between(coll.items[i], coll.items[i]);
        if (!t.is_unit()) {
            rep.exceptional = false;
            for (std::size_t d = 0; d < t.dims.size(); ++d) {
                Int want = (d == 0) ? 1 : 0;
                if (t.dims[d] != want)
                    rep.failures.push_back({i, i, int(d), t.dims[d], "self-ext"});
            }
        }
    }
    for (std::size_t i = 0; i < coll.items.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            CohomologyTable t = ext_between(coll.items[i], coll.items[j]);
            for (std::size_t d = 0; d < t.dims.size(); ++d)
                if (t.dims[d] != 0) {
                    rep.exceptional = false;
                    rep.failures.push_back({i, j, int(d), t.dims[d], "backward-ext"});
                }
        }
    return rep;
}

CheckReport CollectionChecker::check_strong(const Collection& coll) const {
    CheckReport rep = check_exceptional(coll);
    bool strong = rep.exceptional;
    for (std::size_t i = 0; i < coll.items.size(); ++i)
        for (std::size_t j = i + 1; j < coll.items.size(); ++j) {
            CohomologyTable t = ext_between(coll.items[i], coll.items[j]);
            for (std::size_t d = 1; d < t.dims.size(); ++d)
                if (t.dims[d] != 0) {
                    strong = false;
                    rep.failures.push_back({i, j, int(d), t.dims[d], "higher-forward-ext"});
                }
        }
    rep.strong = strong;
    return rep;
}

CheckReport CollectionChecker::check_stable(const FanAutGroup& group,
                                            const Collection& coll) const {
    validate_collection(coll);
    CheckReport rep;
    rep.length = coll.items.size();
    rep.k0 = fan_.max_cones.size();
    if (group.pic_matrices.size() != group.elements.size())
        throw std::invalid_argument("check_stable: pic_action not computed");
    std::set<PicClass> pool(coll.items.begin(), coll.items.end());
    bool stable = true;
    for (std::size_t i = 0; i < coll.items.size() && stable; ++i)
        for (std::size_t e = 0; e < group.pic_matrices.size() && stable; ++e) {
            PicClass img{mat_apply(group.pic_matrices[e], coll.items[i].v)};
            if (!pool.count(img)) {
                stable = false;
                rep.failures.push_back({i, e, 0, Int(0), "stability"});
            }
        }
    rep.stable = stable;
    return rep;
}

CheckReport CollectionChecker::decompose_blocks(const FanAutGroup& group,
                                                const Collection& coll) const {
    CheckReport rep = check_stable(group, coll);
    if (!rep.stable.value_or(false)) {
        rep.block_error = "not stable";
        return rep;
    }
    OrbitPartition part = orbits(group, coll.items);
    if (!part.stable()) {
        rep.block_error = "not stable";
        return rep;
    }
    std::map<PicClass, std::size_t> item_of;
    for (std::size_t i = 0; i < coll.items.size(); ++i) item_of[coll.items[i]] = i;

    // each orbit must be completely orthogonal
    for (const auto& orb : part.orbits)
        for (const auto& a : orb)
            for (const auto& b : orb) {
                if (a == b) continue;
                CohomologyTable t = ext_between(a, b);
                for (std::size_t d = 0; d < t.dims.size(); ++d)
                    if (t.dims[d] != 0) {
                        rep.failures.push_back(
                            {item_of.at(a), item_of.at(b), int(d), t.dims[d], "orbit-not-orthogonal"});
                        rep.block_error = "orbit not orthogonal";
                    }
            }
    if (rep.block_error) return rep;

    // precedence: orbit A before orbit B when some Ext(a in A, b in B) != 0
    const std::size_t no = part.orbits.size();
    std::vector<std::vector<bool>> edge(no, std::vector<bool>(no, false));
    for (std::size_t A = 0; A < no; ++A)
        for (std::size_t B = 0; B < no; ++B) {
            if (A == B) continue;
            bool nonzero = false;
            for (const auto& a : part.orbits[A])
                for (const auto& b : part.orbits[B]) {
                    if (nonzero) break;
                    if (!ext_between(a, b).all_zero()) nonzero = true;
                }
            edge[A][B] = nonzero;
        }
    // deterministic Kahn: pick the source with the smallest leading class
    std::vector<std::size_t> indeg(no, 0);
    for (std::size_t A = 0; A < no; ++A)
        for (std::size_t B = 0; B < no; ++B)
            if (edge[A][B]) ++indeg[B];
    std::vector<bool> done(no, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < no; ++step) {
        std::size_t pick = no;
        for (std::size_t A = 0; A < no; ++A) {
            if (done[A] || indeg[A] != 0) continue;
            if (pick == no || part.orbits[A].front() < part.orbits[pick].front()) pick = A;
        }
        if (pick == no) {
            rep.block_error = "cyclic orbit precedence";
            return rep;
        }
        done[pick] = true;
        order.push_back(pick);
        for (std::size_t B = 0; B < no; ++B)
            if (edge[pick][B]) --indeg[B];
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (auto A : order) {
        std::vector<std::size_t> blk;
        for (const auto& c : part.orbits[A]) blk.push_back(item_of.at(c));
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    }
    rep.blocks = std::move(blocks);
    return rep;
}

std::pair<std::size_t, std::size_t> CollectionChecker::fullness_rank_check(
    const Collection& coll) const {
    return {coll.items.size(), fan_.max_cones.size()};
}

CheckReport CollectionChecker::full_report(const Collection& coll, const FanAutGroup* group,
                                           bool want_strong) const {
    CheckReport rep = want_strong ? check_strong(coll) : check_exceptional(coll);
    if (group) {
        CheckReport st = decompose_blocks(*group, coll);
        rep.stable = st.stable;
        rep.blocks = st.blocks;
        rep.block_error = st.block_error;
        for (auto& w : st.failures) rep.failures.push_back(std::move(w));
    }
    return rep;
}

std::optional<std::vector<PicClass>> CollectionChecker::search_order(
    const std::set<PicClass>& classes) const {
    std::vector<PicClass> cs(classes.begin(), classes.end());
    const std::size_t n = cs.size();
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (!ext_between(cs[a], cs[b]).all_zero()) edge[a][b] = true;
        }
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (edge[a][b]) ++indeg[b];
    std::vector<bool> done(n, false);
    std::vector<PicClass> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t a = 0; a < n; ++a) {
            if (done[a] || indeg[a] != 0) continue;
            if (pick == n || cs[a] < cs[pick]) pick = a;
        }
        if (pick == n) return std::nullopt;  // cycle
        done[pick] = true;
        order.push_back(cs[pick]);
        for (std::size_t b = 0; b < n; ++b)
            if (edge[pick][b]) --indeg[b];
    }
    return order;
}

}  // namespace toric
