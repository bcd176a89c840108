#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellsurf/hurwitz.hpp"
#include "ellsurf/kodaira.hpp"

namespace ellsurf {

/// Thrown when an operation needs a non-constant functional invariant but the
/// configuration has no I(nu) or I(nu)* fiber with nu > 0.
class ConstantJConfig : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ramification the functional invariant must exhibit for a configuration:
/// degree, the residue data over 0 and 1728, the exact pole orders, and the
/// minimal-indices profile over the three marked values.
struct JMapRequirement {
    int d = 0;
    RamificationProfile profile;  // labels "0", "1728", "inf"
    int res1_over_zero = 0;       // points with index 1 mod 3 above 0
    int res2_over_zero = 0;       // points with index 2 mod 3 above 0
    int odd_over_1728 = 0;        // points with odd index above 1728
    std::vector<int> poles;       // exact indices above infinity, descending
};

JMapRequirement jmap_requirement(const Configuration& c);

enum class Realizable { yes, no, unverified };

std::string to_string(Realizable r);

struct LocusReport {
    Configuration config;
    int n = 0;
    int dim = 0;
    int rho = 0;
    Realizable realizable = Realizable::unverified;

    std::string to_json() const;
};

/// Dimension of the locus of surfaces with this configuration of singular
/// fibers, computed as #fibers + #starred - 2n - 2 and cross-checked against
/// 10n - rho_tr - #{II,III,IV}. Realizability is probed by monodromy search
/// within the budget and reported as a tri-state.
LocusReport locus_dim(const Configuration& c, int budget = kDefaultSearchBudget);

enum class JValueClass { zero, tseven28, generic, pole };

/// Fiber type above a point of the base from the local behavior of the
/// functional invariant; nullopt = smooth fiber.
std::optional<FiberType> fiber_from_jdata(JValueClass jclass, int e, bool twisted);

/// A configuration with k = 12n + 2 - r multiplicative fibers realizing
/// rho_tr = r: one I(12n-k+1) plus (k-1) fibers I1. Requires n >= 2 and
/// 2 <= r <= 10n. The reported dim equals 10n - r.
LocusReport nl_lower_bound_witness(int n, int r, int budget = kDefaultSearchBudget);

/// Cyclic base change of degree deg ramified at two multiplicative fibers of c
/// (all fibers of c must be multiplicative): the two ramified I(nu) become
/// I(deg*nu), every other fiber is repeated deg times.
Configuration cyclic_base_change_config(const Configuration& c, int deg, FiberType ramified1,
                                        FiberType ramified2);

struct ConstantJRow {
    int k;       // number of singular fibers
    int dim;     // k - 3
    int rho;     // 2 + 12n - 2k
};

struct UpperBoundRow {
    int r;
    int dim;  // 6n - r - 2
};

/// The special-loci table for degree n: constant-j locus, the j = 0 and
/// j = 1728 families, their induced Picard bounds, and the excess term.
struct SpecialLociReport {
    int n = 0;

    int const_j_dim = 0;      // 2n - 2
    int const_j_rho = 0;      // 8n + 2
    int l1_dim = 0;           // p_g = n - 1
    int l2_dim_upper = 0;     // n - 1  (the two candidate values are both kept)
    int l2_dim_lower = 0;     // n - 2

    int j0_k_min = 0, j0_k_max = 0;        // ceil(6n/5) .. 6n
    std::vector<ConstantJRow> j0_rows;
    int j1728_k_min = 0, j1728_k_max = 0;  // ceil(4n/3) .. 4n
    std::vector<ConstantJRow> j1728_rows;

    int r_max = 0;  // largest integer r with 5r <= 24n + 5
    std::vector<UpperBoundRow> deep_rows;  // dim 6n - r - 2 for 1 <= r <= r_max

    std::optional<int> nl_top_dim;  // n - 2, reported for n <= 5
    int excess = 0;                 // floor(4n/5) - 1

    std::string to_json() const;
    std::string to_table() const;
};

SpecialLociReport special_loci_report(int n);

}  // namespace ellsurf
