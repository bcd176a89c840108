#pragma once

#include <string>
#include <vector>

#include "ellsurf/monodromy.hpp"
#include "ellsurf/permutation.hpp"

namespace ellsurf {

/// One marked point on the target line together with the partition of the
/// cover degree prescribing the ramification indices above it. Parts of size 1
/// are stored explicitly so the total part count is unambiguous.
struct ProfilePoint {
    std::string label;
    CycleType parts;
};

/// Ramification data for degree-d covers of the line: m >= 2 marked points,
/// each carrying a partition of d.
struct RamificationProfile {
    int d = 0;
    std::vector<ProfilePoint> points;

    int m() const { return static_cast<int>(points.size()); }
    int q() const;  // total number of parts over all marked points

    void validate() const;

    std::string to_json() const;
    static RamificationProfile from_json(const std::string& text);
};

/// q - (m-2)d - 2. Negative values mean the genus-0 Hurwitz space is empty.
int predicted_dimension(const RamificationProfile& profile);

/// True iff a genus-0 cover exists with exactly the given indices over the
/// marked points and simple ramification at b = predicted_dimension(profile)
/// further points. Implemented by appending b transposition-type partitions
/// (2,1,...,1) and running the monodromy search; false when b < 0.
bool realizable(const RamificationProfile& profile, int budget = kDefaultSearchBudget);

/// Replaces part e = parts[part_index] at point_index by {k, e-k} and appends a
/// new marked point with a simple partition (2,1,...,1). Requires 1 <= k < e.
/// Leaves predicted_dimension unchanged.
RamificationProfile split_ramification(const RamificationProfile& profile, int point_index,
                                       int part_index, int k);

/// Residue data for one marked point: indices a_{i,j} known modulo N_i.
struct ResidueConstraint {
    std::string label;
    std::vector<int> residues;  // each in [1, modulus)
    int modulus = 1;
};

/// The minimal-indices profile: each point gets its residues as parts, padded
/// with parts equal to the modulus. Requires sum of residues <= d and
/// modulus | (d - sum); otherwise throws (infeasible residues).
RamificationProfile minimal_profile_mod_n(int d, const std::vector<ResidueConstraint>& constraints);

/// Dimension of the locus of genus-g hyperelliptic curves covering a fixed
/// genus-1 curve, computed from the minimal mod-2 profile over 4 points with
/// 2g+2 odd parts at the smallest feasible degree. Equals g-1.
int hyperelliptic_cover_locus_dim(int g);

/// The profile underlying hyperelliptic_cover_locus_dim at an explicit even or
/// odd feasible degree d (exposed so the d-independence can be checked).
RamificationProfile hyperelliptic_cover_profile(int g, int d);

/// Smallest degree accepted by hyperelliptic_cover_profile for this genus.
int hyperelliptic_min_degree(int g);

}  // namespace ellsurf
