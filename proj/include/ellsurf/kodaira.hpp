#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

enum class FiberKind : std::uint8_t { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

/// A Kodaira singular-fiber type. I(nu) needs nu >= 1; IStar(nu) allows nu >= 0.
/// Smooth fibers are not fiber types; they appear only as the twist dual of I0*.
class FiberType {
public:
    static FiberType I(int nu);
    static FiberType II() { return FiberType(FiberKind::II, 0); }
    static FiberType III() { return FiberType(FiberKind::III, 0); }
    static FiberType IV() { return FiberType(FiberKind::IV, 0); }
    static FiberType IStar(int nu);
    static FiberType IVStar() { return FiberType(FiberKind::IVStar, 0); }
    static FiberType IIIStar() { return FiberType(FiberKind::IIIStar, 0); }
    static FiberType IIStar() { return FiberType(FiberKind::IIStar, 0); }

    FiberKind kind() const { return kind_; }
    int nu() const { return nu_; }
    bool multiplicative() const { return kind_ == FiberKind::I; }
    bool additive() const { return !multiplicative(); }
    bool starred() const {
        return kind_ == FiberKind::IStar || kind_ == FiberKind::IVStar ||
               kind_ == FiberKind::IIIStar || kind_ == FiberKind::IIStar;
    }

    int euler() const;
    /// Number of irreducible fiber components: euler for multiplicative types,
    /// euler - 1 for additive ones.
    int components() const;
    /// Quadratic-twist dual; nullopt encodes the smooth fiber (dual of I0*).
    std::optional<FiberType> twist_dual() const;

    std::string to_string() const;  // "I9", "I0*", "II", "IV*", ...

    /// Canonical order: multiplicative types by decreasing nu, then additive
    /// ones as II, III, IV, I_nu* (decreasing nu), IV*, III*, II*.
    friend std::strong_ordering operator<=>(const FiberType& a, const FiberType& b) {
        return a.sort_key() <=> b.sort_key();
    }
    friend bool operator==(const FiberType&, const FiberType&) = default;

private:
    FiberType(FiberKind kind, int nu) : kind_(kind), nu_(nu) {}
    std::pair<int, int> sort_key() const;

    FiberKind kind_;
    int nu_;
};

struct FiberData {
    int euler;
    int components;
    std::optional<FiberType> twist_dual;  // nullopt = smooth fiber
};

FiberData fiber_data(FiberType t);

/// The dual of a smooth place under twisting.
inline FiberType smooth_twist_dual() { return FiberType::IStar(0); }

class NoetherViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A formal multiset of Kodaira types with positive counts, kept in canonical
/// order. Immutable-by-convention value type.
class Configuration {
public:
    Configuration() = default;

    void add(FiberType t, int count = 1);
    void remove(FiberType t, int count = 1);  // throws if not present
    int count(FiberType t) const;

    const std::map<FiberType, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int total_fibers() const;
    int multiplicative_fibers() const;
    int additive_fibers() const;
    int starred_fibers() const;  // II*, III*, IV* and all I_nu* (including nu = 0)
    int euler_sum() const;
    /// Count of I(nu) plus IStar(nu) fibers for this nu > 0.
    int i_family_count(int nu) const;
    int max_nu() const;

    std::string to_string() const;  // "I9 + 3*I1"

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend std::strong_ordering operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::map<FiberType, int> entries_;
};

/// Returns n with euler_sum == 12n; throws NoetherViolation otherwise.
int noether_check(const Configuration& c);

/// Rank of the trivial part of the Neron-Severi group: 2 + sum of (components-1).
int rho_tr(const Configuration& c);

/// Quadratic twist at an even number of places: each flipped fiber is replaced
/// by its dual (I0* flips away to a smooth fiber), and each of extra_smooth
/// smooth places picks up an I0*. Throws on an odd place count or if flips is
/// not a sub-multiset of c.
Configuration twist_config(const Configuration& c, const Configuration& flips, int extra_smooth);

struct EnumerateOptions {
    int max_fibers = 0;  // 0 = no bound beyond the Euler budget
    bool multiplicative_only = false;
};

/// Pure restartable stream of all configurations with noether_check == n
/// satisfying the options, each exactly once, in a fixed canonical order.
class ConfigEnumerator {
public:
    ConfigEnumerator(int n, EnumerateOptions options);
    std::optional<Configuration> next();
    void reset() { cursor_ = 0; }

private:
    std::vector<Configuration> all_;
    std::size_t cursor_ = 0;
};

std::vector<Configuration> enumerate_configs(int n, EnumerateOptions options);

/// Error for the configuration text grammar; offset is the byte position of
/// the first offending character in the original input.
class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the grammar: terms joined by '+', each "k*TYPE" or "TYPE" with TYPE
/// in {I<nu>, I<nu>*, II, III, IV, IV*, III*, II*}. Whitespace-insensitive.
Configuration parse_config(const std::string& text);

}  // namespace ellsurf
