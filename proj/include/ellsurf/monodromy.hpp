#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ellsurf/permutation.hpp"

namespace ellsurf {

/// Raised when a search would exceed the configured exhaustive-search budget.
/// Distinct from "no witness exists".
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degrees up to this bound are searched exhaustively by default.
inline constexpr int kDefaultSearchBudget = 13;

/// A tuple (s_1,...,s_m) with prescribed cycle types whose left-to-right product
/// s_1 s_2 ... s_m is the identity and which generates a transitive subgroup.
struct MonodromyWitness {
    std::vector<Permutation> tuple;
};

/// The canonical class representative of a cycle type: parts in descending order
/// laid out on consecutive points, e.g. [9,1,1,1] -> (1 2 ... 9)(10)(11)(12).
Permutation canonical_of_type(const CycleType& t);

/// Enumerates the conjugacy class with cycle type t in lexicographic order of
/// image arrays. Stops early when f returns false.
void for_each_in_class(const CycleType& t, const std::function<bool(const Permutation&)>& f);

/// Finds a monodromy witness for the given profiles, or nullopt if none exists.
///
/// Determinism contract. Whenever a witness exists, one exists whose last entry
/// is canonical_of_type(profiles[m-1]) (conjugate the whole tuple). Among those,
/// the returned witness minimizes (s_1,...,s_{m-2}) lexicographically, comparing
/// image arrays entrywise; s_{m-1} is determined by the product relation. This
/// total order is fixed independently of any evaluation schedule.
///
/// Throws BudgetExceeded when d > budget.
std::optional<MonodromyWitness> monodromy_search(int d, const std::vector<CycleType>& profiles,
                                                 int budget = kDefaultSearchBudget);

/// Number of simultaneous-conjugacy classes of monodromy witnesses: the witness
/// set modulo the diagonal conjugation action of the full symmetric group.
/// Throws BudgetExceeded when d > budget or the search is otherwise infeasible.
std::int64_t count_classes(int d, const std::vector<CycleType>& profiles,
                           int budget = kDefaultSearchBudget);

}  // namespace ellsurf
