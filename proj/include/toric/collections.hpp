#pragma once

#include "toric/cohomology.hpp"
#include "toric/divisor.hpp"
#include "toric/symmetry.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toric {

/// Ordered list of line-bundle classes, optionally split into blocks by
/// end indices (exclusive, strictly increasing, last equals items.size()).
struct Collection {
    std::vector<PicClass> items;
    std::vector<std::size_t> block_bounds;
};

/// One failed vanishing condition: pair (i, j), cohomological degree, and the
/// offending dimension. kind labels which requirement broke.
struct ExtWitness {
    std::size_t i = 0, j = 0;
    int degree = 0;
    Int dim;
    std::string kind;
};

struct CheckReport {
    bool exceptional = false;
    std::optional<bool> strong;
    std::optional<bool> stable;
    std::optional<std::vector<std::vector<std::size_t>>> blocks;  // item indices, block order
    std::optional<std::string> block_error;
    std::size_t length = 0;
    std::size_t k0 = 0;
    std::vector<ExtWitness> failures;

    bool length_matches() const { return length == k0; }
};

/// Pairwise Ext computations for one collection, caching tables.
class CollectionChecker {
public:
    CollectionChecker(const Fan& fan, const PicardLattice& lat, const CohomologyEngine& engine);

    CheckReport check_exceptional(const Collection& coll) const;
    CheckReport check_strong(const Collection& coll) const;
    CheckReport check_stable(const FanAutGroup& group, const Collection& coll) const;
    CheckReport decompose_blocks(const FanAutGroup& group, const Collection& coll) const;
    std::pair<std::size_t, std::size_t> fullness_rank_check(const Collection& coll) const;

    /// Runs all of the above and merges into one report (stability/blocks
    /// only when a group is supplied).
    CheckReport full_report(const Collection& coll, const FanAutGroup* group,
                            bool want_strong) const;

    /// Semiorthogonal order for an unordered class set: a must precede b
    /// whenever some Ext(a, b) != 0. nullopt when the precedence relation has
    /// a cycle. Ties broken by canonical class order.
    std::optional<std::vector<PicClass>> search_order(const std::set<PicClass>& classes) const;

    CohomologyTable ext_between(const PicClass& a, const PicClass& b) const;

private:
    const Fan& fan_;
    const PicardLattice& lat_;
    const CohomologyEngine& engine_;
};

/// Throws unless items are distinct classes and block bounds are valid.
void validate_collection(const Collection& coll);

}  // namespace toric
