#include "ellsurf/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ellsurf {

Permutation canonical_of_type(const CycleType& t) {
    std::vector<int> img(t.degree());
    int base = 0;
    for (int len : t.parts()) {
        for (int s = 0; s < len; ++s) img[base + s] = base + (s + 1) % len;
        base += len;
    }
    return Permutation(std::move(img));
}

namespace {

// Exact packing feasibility: can the open-chain sizes be grouped so that each
// group sums to one remaining part? Sizes and parts are sorted descending.
bool can_pack_impl(std::vector<int>& parts, std::vector<int>& chains, std::vector<char>& used,
                   std::size_t part_idx, int remaining, std::size_t start) {
    if (remaining == 0) {
        if (part_idx + 1 == parts.size()) return true;
        return can_pack_impl(parts, chains, used, part_idx + 1, parts[part_idx + 1], 0);
    }
    for (std::size_t i = start; i < chains.size(); ++i) {
        if (used[i] || chains[i] > remaining) continue;
        if (i > start && chains[i] == chains[i - 1] && !used[i - 1]) continue;  // skip duplicates
        used[i] = 1;
        if (can_pack_impl(parts, chains, used, part_idx, remaining - chains[i], i + 1)) {
            used[i] = 0;
            return true;
        }
        used[i] = 0;
    }
    return false;
}

bool can_pack(std::vector<int> parts, std::vector<int> chains) {
    if (parts.empty()) return chains.empty();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    std::sort(chains.begin(), chains.end(), std::greater<int>());
    if (chains.size() < parts.size()) return false;
    if (!chains.empty() && chains.front() > parts.front()) return false;
    // all-singleton chains always pack
    if (chains.front() == 1) return true;
    std::vector<char> used(chains.size(), 0);
    return can_pack_impl(parts, chains, used, 0, parts[0], 0);
}

// Enumerates permutations of a fixed cycle type in lex order of image arrays.
// Backtracks over img[0], img[1], ... keeping the partial functional graph,
// which is a disjoint union of closed cycles and open chains.
class ClassEnumerator {
public:
    ClassEnumerator(const CycleType& t, const std::function<bool(const Permutation&)>& f)
        : d_(t.degree()), img_(d_, -1), pre_(d_, -1), avail_(d_ + 1, 0), f_(f) {
        for (int p : t.parts()) ++avail_[p];
        parts_left_ = t.num_parts();
    }

    void run() { rec(0); }

private:
    int head_of(int x) const {
        while (pre_[x] >= 0) x = pre_[x];
        return x;
    }
    int chain_len(int head) const {
        int len = 0;
        for (int x = head; x >= 0; x = img_[x]) ++len;
        return len;
    }

    bool feasible() const {
        std::vector<int> chains;
        int max_part = 0;
        for (int p = d_; p >= 1; --p)
            if (avail_[p]) { max_part = p; break; }
        for (int h = 0; h < d_; ++h) {
            if (pre_[h] >= 0) continue;
            int len = chain_len(h);
            if (len > max_part) return false;
            chains.push_back(len);
        }
        if (static_cast<int>(chains.size()) < parts_left_) return false;
        std::vector<int> parts;
        for (int p = d_; p >= 1; --p)
            for (int c = 0; c < avail_[p]; ++c) parts.push_back(p);
        return can_pack(std::move(parts), std::move(chains));
    }

    // returns false to stop the whole enumeration
    bool rec(int i) {
        if (i == d_) return f_(Permutation(img_));
        for (int j = 0; j < d_; ++j) {
            if (pre_[j] >= 0) continue;
            bool closes = head_of(i) == j;
            int closed_len = 0;
            if (closes) {
                closed_len = chain_len(j);
                if (avail_[closed_len] == 0) continue;
                --avail_[closed_len];
                --parts_left_;
            }
            img_[i] = j;
            pre_[j] = i;
            bool keep_going = true;
            if (feasible()) keep_going = rec(i + 1);
            img_[i] = -1;
            pre_[j] = -1;
            if (closes) {
                ++avail_[closed_len];
                ++parts_left_;
            }
            if (!keep_going) return false;
        }
        return true;
    }

    int d_;
    std::vector<int> img_, pre_;
    std::vector<int> avail_;
    int parts_left_;
    const std::function<bool(const Permutation&)>& f_;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

// Backtracking over the free positions 0..m-3; position m-2 is forced by the
// product relation and position m-1 is pinned to the canonical representative.
//
// Prune: with running product rho of the chosen prefix, the remaining entries
// must multiply to rho^{-1} z^{-1} =: target and connect the orbits of the
// group generated so far. Completing elements of total transposition weight W
// exist only if W >= (d - #cycles(target)) + 2*(orbits - 1) with matching
// parity. (Each transposition step changes the cycle count by one, and a step
// that merges two orbits of the prefix group always joins two cycles of the
// running product; induction on the word length gives the bound.)
class TupleSearch {
public:
    TupleSearch(int d, const std::vector<CycleType>& profiles)
        : d_(d), m_(static_cast<int>(profiles.size())), profiles_(profiles) {
        z_ = canonical_of_type(profiles_[m_ - 1]);
        z_inv_ = z_.inverse();
        tuple_.assign(m_, Permutation(d_));
        tuple_[m_ - 1] = z_;
        suffix_weight_.assign(m_ + 1, 0);
        for (int i = m_ - 1; i >= 0; --i)
            suffix_weight_[i] = suffix_weight_[i + 1] + profiles_[i].transposition_weight();
    }

    // on_witness returns false to stop the search
    void run(const std::function<bool(const std::vector<Permutation>&)>& on_witness) {
        on_witness_ = &on_witness;
        if (!prune_ok(-1, Permutation(d_))) return;
        rec(0, Permutation(d_));
    }

private:
    // prefix product of entries 0..k (k = -1: empty prefix)
    bool prune_ok(int k, const Permutation& prefix_product) const {
        Permutation target = prefix_product.inverse().then(z_inv_);
        int dist = d_ - target.num_cycles();
        int w_remaining = suffix_weight_[k + 1] - profiles_[m_ - 1].transposition_weight();
        if ((w_remaining - dist) % 2 != 0) return false;
        std::vector<Permutation> gens(tuple_.begin(), tuple_.begin() + (k + 1));
        gens.push_back(z_);
        int orbits = orbit_count(gens, d_);
        return w_remaining >= dist + 2 * (orbits - 1);
    }

    bool rec(int k, const Permutation& prefix_product) {
        if (k == m_ - 2) {
            Permutation forced = prefix_product.inverse().then(z_inv_);
            if (cycle_type(forced) != profiles_[k]) return true;
            tuple_[k] = forced;
            if (!is_transitive(tuple_, d_)) return true;
            return (*on_witness_)(tuple_);
        }
        bool keep_going = true;
        for_each_in_class(profiles_[k], [&](const Permutation& sigma) {
            tuple_[k] = sigma;
            Permutation product = prefix_product.then(sigma);
            if (prune_ok(k, product)) keep_going = rec(k + 1, product);
            return keep_going;
        });
        return keep_going;
    }

    int d_, m_;
    std::vector<CycleType> profiles_;
    Permutation z_, z_inv_;
    std::vector<Permutation> tuple_;
    std::vector<int> suffix_weight_;
    const std::function<bool(const std::vector<Permutation>&)>* on_witness_ = nullptr;
};

void validate_profiles(int d, const std::vector<CycleType>& profiles, int budget) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    if (profiles.size() < 2) throw std::invalid_argument("need at least two ramification profiles");
    for (const auto& p : profiles)
        if (p.degree() != d) throw std::invalid_argument("profile degree mismatch");
    if (d > budget)
        throw BudgetExceeded("monodromy search budget exceeded: degree " + std::to_string(d) +
                             " > budget " + std::to_string(budget));
}

// All elements commuting with the canonical representative z: permute cycles of
// equal length and rotate each cycle.
std::vector<Permutation> centralizer_of_canonical(const CycleType& t, std::int64_t cap) {
    std::int64_t size = 1;
    {
        int prev = -1, run = 0;
        auto flush = [&](int len, int count) {
            for (int i = 1; i <= count; ++i) {
                size *= i;
                if (size > cap) return false;
            }
            for (int i = 0; i < count; ++i) {
                size *= len;
                if (size > cap) return false;
            }
            return true;
        };
        for (int p : t.parts()) {
            if (p == prev) {
                ++run;
            } else {
                if (prev > 0 && !flush(prev, run)) throw BudgetExceeded("centralizer too large for class counting");
                prev = p;
                run = 1;
            }
        }
        if (prev > 0 && !flush(prev, run)) throw BudgetExceeded("centralizer too large for class counting");
    }

    // group cycles by length; canonical layout is consecutive blocks
    struct Group {
        int len;
        std::vector<int> starts;
    };
    std::vector<Group> groups;
    int base = 0;
    for (int p : t.parts()) {
        if (groups.empty() || groups.back().len != p) groups.push_back({p, {}});
        groups.back().starts.push_back(base);
        base += p;
    }

    std::vector<Permutation> result;
    std::vector<int> img(t.degree());
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            result.emplace_back(img);
            return;
        }
        const auto& g = groups[gi];
        int k = static_cast<int>(g.starts.size());
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> rot(k, 0);
        do {
            // odometer over rotations
            std::fill(rot.begin(), rot.end(), 0);
            while (true) {
                for (int c = 0; c < k; ++c)
                    for (int s = 0; s < g.len; ++s)
                        img[g.starts[c] + s] = g.starts[perm[c]] + (s + rot[c]) % g.len;
                rec(gi + 1);
                int pos = 0;
                while (pos < k && ++rot[pos] == g.len) rot[pos++] = 0;
                if (pos == k) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return result;
}

}  // namespace

void for_each_in_class(const CycleType& t, const std::function<bool(const Permutation&)>& f) {
    ClassEnumerator(t, f).run();
}

std::optional<MonodromyWitness> monodromy_search(int d, const std::vector<CycleType>& profiles,
                                                 int budget) {
    validate_profiles(d, profiles, budget);
    std::optional<MonodromyWitness> result;
    TupleSearch search(d, profiles);
    search.run([&](const std::vector<Permutation>& tuple) {
        result = MonodromyWitness{tuple};
        return false;  // lexicographically first hit is the contract minimum
    });
    return result;
}

std::int64_t count_classes(int d, const std::vector<CycleType>& profiles, int budget) {
    validate_profiles(d, profiles, budget);
    const auto centralizer =
        centralizer_of_canonical(profiles.back(), std::int64_t{2} * 1000 * 1000);
    std::set<std::vector<std::vector<int>>> canonical_forms;
    TupleSearch search(d, profiles);
    search.run([&](const std::vector<Permutation>& tuple) {
        std::vector<std::vector<int>> best;
        for (const auto& g : centralizer) {
            std::vector<std::vector<int>> candidate;
            candidate.reserve(tuple.size() - 1);
            for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
                candidate.push_back(tuple[i].conjugated_by(g).images());
            if (best.empty() || candidate < best) best = std::move(candidate);
        }
        canonical_forms.insert(std::move(best));
        return true;
    });
    return static_cast<std::int64_t>(canonical_forms.size());
}

}  // namespace ellsurf
