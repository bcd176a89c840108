#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ellsurf {

/// A permutation of {1,...,d}. Stored 0-based: images()[i] is the image of i.
/// Immutable after construction and safe to share across threads.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    explicit Permutation(std::vector<int> images);

    /// Build from 1-based cycles, e.g. from_cycles(6, {{1,2},{3,4,5}}).
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;

    /// Left-to-right composition: (a.then(b))(x) = b(a(x)).
    Permutation then(const Permutation& g) const;
    Permutation inverse() const;
    /// g^{-1} * this * g under left-to-right composition.
    Permutation conjugated_by(const Permutation& g) const;

    int num_cycles() const;  // counts fixed points as cycles of length 1

    /// Cycle notation on 1-based points: "(1 2)(3 4 5)". Identity prints "()".
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

/// Multiset of cycle lengths: a partition of d, kept sorted descending.
class CycleType {
public:
    CycleType() = default;
    CycleType(std::vector<int> parts, int d);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return d_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    /// d - #parts: the minimal number of transpositions multiplying to this type.
    int transposition_weight() const { return d_ - num_parts(); }

    std::string to_string() const;  // "[3,2,1]"
    /// Parses "[3,2,1]". With d < 0 the degree is taken to be the sum of the parts.
    static CycleType parse(const std::string& text, int d = -1);

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend std::strong_ordering operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::vector<int> parts_;
    int d_ = 0;
};

CycleType cycle_type(const Permutation& p);

/// Orbit count of the subgroup generated by gens acting on {1..d} (union-find).
int orbit_count(std::span<const Permutation> gens, int d);

bool is_transitive(std::span<const Permutation> gens, int d);

}  // namespace ellsurf
