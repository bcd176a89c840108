#include "ellsurf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ellsurf {

Permutation::Permutation(int degree) : img_(degree) {
    if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("images do not form a bijection on {1..d}");
        seen[v] = 1;
    }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
            if (from < 1 || from > degree || to < 1 || to > degree)
                throw std::invalid_argument("cycle entry out of range");
            img[from - 1] = to - 1;
        }
    }
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& g) const {
    if (degree() != g.degree()) throw std::invalid_argument("degree mismatch in composition");
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[i] = g.img_[img_[i]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
    return Permutation(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.inverse().then(*this).then(g);
}

int Permutation::num_cycles() const {
    int count = 0;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return count;
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(img_.size(), 0);
    bool printed = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j + 1;
            first = false;
        }
        out << ')';
        printed = true;
    }
    if (!printed) return "()";
    return out.str();
}

CycleType::CycleType(std::vector<int> parts, int d) : parts_(std::move(parts)), d_(d) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    int sum = 0;
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
        sum += p;
    }
    if (sum != d_) throw std::invalid_argument("cycle type parts must sum to the degree");
}

std::string CycleType::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

CycleType CycleType::parse(const std::string& text, int d) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("cycle type must start with '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("expected integer in cycle type");
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("expected ',' or ']' in cycle type");
        }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters after cycle type");
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    return CycleType(std::move(parts), d < 0 ? sum : d);
}

CycleType cycle_type(const Permutation& p) {
    std::vector<int> parts;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p.apply(j)) {
            seen[j] = 1;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts), p.degree());
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int orbit_count(std::span<const Permutation> gens, int d) {
    UnionFind uf(d);
    for (const auto& g : gens) {
        if (g.degree() != d) throw std::invalid_argument("generator degree mismatch");
        for (int i = 0; i < d; ++i) uf.unite(i, g.apply(i));
    }
    int orbits = 0;
    for (int i = 0; i < d; ++i)
        if (uf.find(i) == i) ++orbits;
    return orbits;
}

bool is_transitive(std::span<const Permutation> gens, int d) {
    return orbit_count(gens, d) == 1;
}

}  // namespace ellsurf
