#include "ellsurf/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace ellsurf {

int RamificationProfile::q() const {
    int total = 0;
    for (const auto& pt : points) total += pt.parts.num_parts();
    return total;
}

void RamificationProfile::validate() const {
    if (d < 1) throw std::invalid_argument("profile degree must be positive");
    if (m() < 2) throw std::invalid_argument("profile needs at least two marked points");
    for (const auto& pt : points) {
        if (pt.parts.degree() != d)
            throw std::invalid_argument("partition at point '" + pt.label +
                                        "' does not sum to the cover degree");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].label == points[j].label)
                throw std::invalid_argument("duplicate marked-point label '" + points[i].label + "'");
}

std::string RamificationProfile::to_json() const {
    nlohmann::json out;
    out["d"] = d;
    out["points"] = nlohmann::json::array();
    for (const auto& pt : points) {
        nlohmann::json p;
        p["label"] = pt.label;
        p["parts"] = pt.parts.parts();
        out["points"].push_back(std::move(p));
    }
    return out.dump();
}

RamificationProfile RamificationProfile::from_json(const std::string& text) {
    nlohmann::json in = nlohmann::json::parse(text);
    RamificationProfile profile;
    profile.d = in.at("d").get<int>();
    for (const auto& p : in.at("points")) {
        std::vector<int> parts = p.at("parts").get<std::vector<int>>();
        profile.points.push_back({p.at("label").get<std::string>(),
                                  CycleType(std::move(parts), profile.d)});
    }
    profile.validate();
    return profile;
}

int predicted_dimension(const RamificationProfile& profile) {
    profile.validate();
    return profile.q() - (profile.m() - 2) * profile.d - 2;
}

namespace {

CycleType simple_partition(int d) {
    std::vector<int> parts(static_cast<std::size_t>(d) - 1, 1);
    parts[0] = 2;
    return CycleType(std::move(parts), d);
}

}  // namespace

bool realizable(const RamificationProfile& profile, int budget) {
    int b = predicted_dimension(profile);
    if (b < 0) return false;
    std::vector<CycleType> types;
    types.reserve(profile.points.size() + b);
    for (const auto& pt : profile.points) types.push_back(pt.parts);
    for (int i = 0; i < b; ++i) types.push_back(simple_partition(profile.d));
    return monodromy_search(profile.d, types, budget).has_value();
}

RamificationProfile split_ramification(const RamificationProfile& profile, int point_index,
                                       int part_index, int k) {
    profile.validate();
    if (point_index < 0 || point_index >= profile.m())
        throw std::invalid_argument("split: point index out of range");
    const auto& parts = profile.points[point_index].parts.parts();
    if (part_index < 0 || part_index >= static_cast<int>(parts.size()))
        throw std::invalid_argument("split: part index out of range");
    int e = parts[part_index];
    if (e == 1) throw std::invalid_argument("invalid split: cannot split a part of size 1");
    if (k < 1 || k >= e) throw std::invalid_argument("invalid split: need 1 <= k < part");

    RamificationProfile out = profile;
    std::vector<int> new_parts = parts;
    new_parts.erase(new_parts.begin() + part_index);
    new_parts.push_back(k);
    new_parts.push_back(e - k);
    out.points[point_index].parts = CycleType(std::move(new_parts), profile.d);

    std::string label = "simple-" + std::to_string(out.m() + 1);
    // keep labels distinct
    bool clash = true;
    int salt = 0;
    while (clash) {
        clash = false;
        for (const auto& pt : out.points)
            if (pt.label == label) {
                clash = true;
                label = "simple-" + std::to_string(out.m() + 1 + ++salt);
                break;
            }
    }
    out.points.push_back({label, simple_partition(profile.d)});
    return out;
}

RamificationProfile minimal_profile_mod_n(int d, const std::vector<ResidueConstraint>& constraints) {
    RamificationProfile out;
    out.d = d;
    for (const auto& c : constraints) {
        if (c.modulus < 1)
            throw std::invalid_argument("infeasible residues: modulus must be positive at point '" +
                                        c.label + "'");
        int sum = 0;
        for (int a : c.residues) {
            if (a < 1 || a >= c.modulus)
                throw std::invalid_argument("infeasible residues: residue out of [1,N) at point '" +
                                            c.label + "'");
            sum += a;
        }
        if (sum > d)
            throw std::invalid_argument("infeasible residues: residues exceed degree at point '" +
                                        c.label + "'");
        if ((d - sum) % c.modulus != 0)
            throw std::invalid_argument("infeasible residues: modulus does not divide d - sum at point '" +
                                        c.label + "'");
        std::vector<int> parts = c.residues;
        int r = (d - sum) / c.modulus;
        for (int i = 0; i < r; ++i) parts.push_back(c.modulus);
        out.points.push_back({c.label, CycleType(std::move(parts), d)});
    }
    return out;
}

namespace {

// Distribution of 2g+2 odd-index points over the 4 marked points at degree d:
// needs s_i == d (mod 2), 0 <= s_i <= d, sum s_i = 2g+2. Returns empty if none.
std::vector<int> odd_part_distribution(int g, int d) {
    int total = 2 * g + 2;
    int parity = d % 2;
    std::vector<int> s(4, parity);  // balanced greedy, parity preserved
    int assigned = 4 * parity;
    if (assigned > total) return {};
    int left = total - assigned;  // even
    if (left % 2 != 0) return {};
    for (int i = 0; left > 0 && i < 4; ++i) {
        int take = std::min(left, d - s[i]);
        take -= take % 2;
        s[i] += take;
        left -= take;
    }
    if (left != 0) return {};
    return s;
}

}  // namespace

int hyperelliptic_min_degree(int g) {
    if (g < 2) throw std::invalid_argument("hyperelliptic locus needs genus >= 2");
    for (int d = 2;; ++d)
        if (!odd_part_distribution(g, d).empty()) return d;
}

RamificationProfile hyperelliptic_cover_profile(int g, int d) {
    if (g < 2) throw std::invalid_argument("hyperelliptic locus needs genus >= 2");
    auto s = odd_part_distribution(g, d);
    if (s.empty())
        throw std::invalid_argument("degree " + std::to_string(d) +
                                    " cannot carry " + std::to_string(2 * g + 2) + " odd indices");
    static const char* labels[4] = {"0", "1", "lambda", "inf"};
    std::vector<ResidueConstraint> constraints;
    for (int i = 0; i < 4; ++i)
        constraints.push_back({labels[i], std::vector<int>(s[i], 1), 2});
    return minimal_profile_mod_n(d, constraints);
}

int hyperelliptic_cover_locus_dim(int g) {
    int d = hyperelliptic_min_degree(g);
    return predicted_dimension(hyperelliptic_cover_profile(g, d));
}

}  // namespace ellsurf
