#include "ellsurf/kodaira.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ellsurf {

FiberType FiberType::I(int nu) {
    if (nu < 1) throw std::invalid_argument("I(nu) needs nu >= 1; I0 denotes a smooth fiber");
    return FiberType(FiberKind::I, nu);
}

FiberType FiberType::IStar(int nu) {
    if (nu < 0) throw std::invalid_argument("I(nu)* needs nu >= 0");
    return FiberType(FiberKind::IStar, nu);
}

std::pair<int, int> FiberType::sort_key() const {
    switch (kind_) {
        case FiberKind::I: return {0, -nu_};
        case FiberKind::II: return {1, 0};
        case FiberKind::III: return {2, 0};
        case FiberKind::IV: return {3, 0};
        case FiberKind::IStar: return {4, -nu_};
        case FiberKind::IVStar: return {5, 0};
        case FiberKind::IIIStar: return {6, 0};
        case FiberKind::IIStar: return {7, 0};
    }
    return {8, 0};
}

int FiberType::euler() const {
    switch (kind_) {
        case FiberKind::I: return nu_;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::IStar: return nu_ + 6;
        case FiberKind::IVStar: return 8;
        case FiberKind::IIIStar: return 9;
        case FiberKind::IIStar: return 10;
    }
    throw std::logic_error("bad fiber kind");
}

int FiberType::components() const {
    return multiplicative() ? euler() : euler() - 1;
}

std::optional<FiberType> FiberType::twist_dual() const {
    switch (kind_) {
        case FiberKind::I: return IStar(nu_);
        case FiberKind::IStar: return nu_ == 0 ? std::optional<FiberType>{} : I(nu_);
        case FiberKind::II: return IVStar();
        case FiberKind::IVStar: return II();
        case FiberKind::III: return IIIStar();
        case FiberKind::IIIStar: return III();
        case FiberKind::IV: return IIStar();
        case FiberKind::IIStar: return IV();
    }
    throw std::logic_error("bad fiber kind");
}

std::string FiberType::to_string() const {
    switch (kind_) {
        case FiberKind::I: return "I" + std::to_string(nu_);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IStar: return "I" + std::to_string(nu_) + "*";
        case FiberKind::IVStar: return "IV*";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IIStar: return "II*";
    }
    throw std::logic_error("bad fiber kind");
}

FiberData fiber_data(FiberType t) {
    return FiberData{t.euler(), t.components(), t.twist_dual()};
}

void Configuration::add(FiberType t, int count) {
    if (count < 1) throw std::invalid_argument("configuration counts must be positive");
    entries_[t] += count;
}

void Configuration::remove(FiberType t, int count) {
    auto it = entries_.find(t);
    if (it == entries_.end() || it->second < count)
        throw std::invalid_argument("removing more " + t.to_string() + " fibers than present");
    it->second -= count;
    if (it->second == 0) entries_.erase(it);
}

int Configuration::count(FiberType t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? 0 : it->second;
}

int Configuration::total_fibers() const {
    int total = 0;
    for (const auto& [t, c] : entries_) total += c;
    return total;
}

int Configuration::multiplicative_fibers() const {
    int total = 0;
    for (const auto& [t, c] : entries_)
        if (t.multiplicative()) total += c;
    return total;
}

int Configuration::additive_fibers() const { return total_fibers() - multiplicative_fibers(); }

int Configuration::starred_fibers() const {
    int total = 0;
    for (const auto& [t, c] : entries_)
        if (t.starred()) total += c;
    return total;
}

int Configuration::euler_sum() const {
    int total = 0;
    for (const auto& [t, c] : entries_) total += t.euler() * c;
    return total;
}

int Configuration::i_family_count(int nu) const {
    if (nu < 1) throw std::invalid_argument("i_family_count needs nu >= 1");
    return count(FiberType::I(nu)) + count(FiberType::IStar(nu));
}

int Configuration::max_nu() const {
    int best = 0;
    for (const auto& [t, c] : entries_)
        if (t.kind() == FiberKind::I || t.kind() == FiberKind::IStar) best = std::max(best, t.nu());
    return best;
}

std::string Configuration::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : entries_) {
        if (!first) out << " + ";
        if (c > 1) out << c << '*';
        out << t.to_string();
        first = false;
    }
    return out.str();
}

int noether_check(const Configuration& c) {
    int sum = c.euler_sum();
    if (sum <= 0 || sum % 12 != 0)
        throw NoetherViolation("Euler sum " + std::to_string(sum) +
                               " is not a positive multiple of 12");
    return sum / 12;
}

int rho_tr(const Configuration& c) {
    int rho = 2;
    for (const auto& [t, count] : c.entries()) rho += (t.components() - 1) * count;
    // the same rank via the Euler sum, when Noether's condition holds
    int sum = c.euler_sum();
    if (sum > 0 && sum % 12 == 0) {
        int alt = 2 + sum - c.multiplicative_fibers() - 2 * c.additive_fibers();
        if (alt != rho) throw std::logic_error("trivial-rank identity violated");
    }
    return rho;
}

Configuration twist_config(const Configuration& c, const Configuration& flips, int extra_smooth) {
    if (extra_smooth < 0) throw std::invalid_argument("extra_smooth must be non-negative");
    for (const auto& [t, count] : flips.entries())
        if (c.count(t) < count)
            throw std::invalid_argument("flip multiset is not contained in the configuration");
    int places = flips.total_fibers() + extra_smooth;
    if (places % 2 != 0)
        throw std::invalid_argument("twists act at an even number of places; got " +
                                    std::to_string(places));
    Configuration out = c;
    for (const auto& [t, count] : flips.entries()) {
        out.remove(t, count);
        if (auto dual = t.twist_dual()) out.add(*dual, count);
        // I0* flips to a smooth fiber and leaves the configuration
    }
    if (extra_smooth > 0) out.add(smooth_twist_dual(), extra_smooth);
    noether_check(out);  // guaranteed by the parity of the place count
    return out;
}

namespace {

std::vector<FiberType> type_alphabet(int n, const EnumerateOptions& options) {
    std::vector<FiberType> types;
    int budget = 12 * n;
    for (int nu = 1; nu <= budget; ++nu) types.push_back(FiberType::I(nu));
    if (!options.multiplicative_only) {
        types.push_back(FiberType::II());
        types.push_back(FiberType::III());
        types.push_back(FiberType::IV());
        for (int nu = 0; nu + 6 <= budget; ++nu) types.push_back(FiberType::IStar(nu));
        types.push_back(FiberType::IVStar());
        types.push_back(FiberType::IIIStar());
        types.push_back(FiberType::IIStar());
    }
    std::sort(types.begin(), types.end());
    return types;
}

}  // namespace

std::vector<Configuration> enumerate_configs(int n, EnumerateOptions options) {
    if (n < 1) throw std::invalid_argument("enumerate_configs needs n >= 1");
    auto types = type_alphabet(n, options);
    int max_fibers = options.max_fibers > 0 ? options.max_fibers : 12 * n;
    std::vector<Configuration> result;
    Configuration current;

    // types in canonical order; counts ascending, then the skip branch
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t t, int euler_left,
                                                         int fibers_left) {
        if (euler_left == 0) {
            result.push_back(current);
            return;
        }
        if (t == types.size() || fibers_left == 0) return;
        int e = types[t].euler();
        int max_count = std::min(fibers_left, euler_left / e);
        for (int c = 1; c <= max_count; ++c) {
            current.add(types[t], c);
            rec(t + 1, euler_left - c * e, fibers_left - c);
            current.remove(types[t], c);
        }
        rec(t + 1, euler_left, fibers_left);
    };
    rec(0, 12 * n, max_fibers);
    return result;
}

ConfigEnumerator::ConfigEnumerator(int n, EnumerateOptions options)
    : all_(enumerate_configs(n, options)) {}

std::optional<Configuration> ConfigEnumerator::next() {
    if (cursor_ >= all_.size()) return std::nullopt;
    return all_[cursor_++];
}

namespace {

class ConfigParser {
public:
    explicit ConfigParser(const std::string& text) : text_(text) {}

    Configuration parse() {
        Configuration out;
        skip_ws();
        if (at_end()) throw ConfigParseError("empty configuration", pos_);
        parse_term(out);
        skip_ws();
        while (!at_end()) {
            if (text_[pos_] != '+')
                throw ConfigParseError("expected '+' between terms", pos_);
            ++pos_;
            skip_ws();
            parse_term(out);
            skip_ws();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int parse_number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ConfigParseError("expected a number", pos_);
        long v = std::stol(text_.substr(start, pos_ - start));
        if (v <= 0 || v > 1000000) throw ConfigParseError("count out of range", start);
        return static_cast<int>(v);
    }

    void parse_term(Configuration& out) {
        if (at_end()) throw ConfigParseError("expected a fiber type", pos_);
        int count = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            count = parse_number();
            skip_ws();
            if (at_end() || peek() != '*')
                throw ConfigParseError("expected '*' after a fiber count", pos_);
            ++pos_;
            skip_ws();
        }
        out.add(parse_type(), count);
    }

    FiberType parse_type() {
        if (at_end() || peek() != 'I')
            throw ConfigParseError("expected a fiber type", pos_);
        std::size_t start = pos_;
        int ii = 0;
        while (!at_end() && peek() == 'I') {
            ++ii;
            ++pos_;
        }
        if (ii > 3) throw ConfigParseError("unknown fiber type", start);
        if (ii == 1 && !at_end() && peek() == 'V') {
            ++pos_;
            return starred() ? FiberType::IVStar() : FiberType::IV();
        }
        if (ii == 1) {
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ConfigParseError("expected an index after 'I'", pos_);
            std::size_t nu_start = pos_;
            int nu = parse_number_allow_zero();
            if (starred()) return FiberType::IStar(nu);
            if (nu == 0) throw ConfigParseError("I0 denotes a smooth fiber", nu_start);
            return FiberType::I(nu);
        }
        if (ii == 2) return starred() ? FiberType::IIStar() : FiberType::II();
        return starred() ? FiberType::IIIStar() : FiberType::III();
    }

    int parse_number_allow_zero() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ConfigParseError("expected a number", pos_);
        long v = std::stol(text_.substr(start, pos_ - start));
        if (v > 1000000) throw ConfigParseError("index out of range", start);
        return static_cast<int>(v);
    }

    bool starred() {
        if (!at_end() && peek() == '*') {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Configuration parse_config(const std::string& text) { return ConfigParser(text).parse(); }

}  // namespace ellsurf
