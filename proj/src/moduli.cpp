#include "ellsurf/moduli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ellsurf {

JMapRequirement jmap_requirement(const Configuration& c) {
    noether_check(c);
    JMapRequirement req;
    for (const auto& [t, count] : c.entries()) {
        if ((t.kind() == FiberKind::I || t.kind() == FiberKind::IStar) && t.nu() > 0) {
            req.d += t.nu() * count;
            for (int i = 0; i < count; ++i) req.poles.push_back(t.nu());
        }
    }
    if (req.d == 0)
        throw ConstantJConfig("configuration has no I(nu) or I(nu)* fiber with nu > 0");
    std::sort(req.poles.begin(), req.poles.end(), std::greater<int>());

    req.res1_over_zero = c.count(FiberType::II()) + c.count(FiberType::IVStar());
    req.res2_over_zero = c.count(FiberType::IV()) + c.count(FiberType::IIStar());
    req.odd_over_1728 = c.count(FiberType::III()) + c.count(FiberType::IIIStar());

    std::vector<int> zero_residues(req.res1_over_zero, 1);
    zero_residues.insert(zero_residues.end(), req.res2_over_zero, 2);
    std::vector<int> t_residues(req.odd_over_1728, 1);
    req.profile = minimal_profile_mod_n(req.d, {{"0", zero_residues, 3}, {"1728", t_residues, 2}});
    req.profile.points.push_back({"inf", CycleType(req.poles, req.d)});
    req.profile.validate();
    return req;
}

std::string to_string(Realizable r) {
    switch (r) {
        case Realizable::yes: return "yes";
        case Realizable::no: return "no";
        case Realizable::unverified: return "unverified";
    }
    return "unverified";
}

std::string LocusReport::to_json() const {
    nlohmann::json out;
    out["config"] = config.to_string();
    out["n"] = n;
    out["dim"] = dim;
    out["rho_tr"] = rho;
    out["realizable"] = ellsurf::to_string(realizable);
    return out.dump();
}

LocusReport locus_dim(const Configuration& c, int budget) {
    LocusReport report;
    report.config = c;
    report.n = noether_check(c);
    if (c.max_nu() == 0)
        throw ConstantJConfig("locus dimension needs a fiber of type I(nu) or I(nu)*, nu > 0");
    report.rho = rho_tr(c);
    report.dim = c.total_fibers() + c.starred_fibers() - 2 * report.n - 2;
    int young_additive =
        c.count(FiberType::II()) + c.count(FiberType::III()) + c.count(FiberType::IV());
    int cross = 10 * report.n - report.rho - young_additive;
    if (cross != report.dim) throw std::logic_error("locus dimension identity violated");

    try {
        JMapRequirement req = jmap_requirement(c);
        report.realizable = realizable(req.profile, budget) ? Realizable::yes : Realizable::no;
    } catch (const BudgetExceeded&) {
        report.realizable = Realizable::unverified;
    } catch (const std::invalid_argument&) {
        report.realizable = Realizable::no;  // infeasible residue data
    }
    return report;
}

std::optional<FiberType> fiber_from_jdata(JValueClass jclass, int e, bool twisted) {
    if (e < 1) throw std::invalid_argument("ramification index must be positive");
    auto smooth_or_star = [&]() -> std::optional<FiberType> {
        if (twisted) return FiberType::IStar(0);
        return std::nullopt;
    };
    switch (jclass) {
        case JValueClass::pole:
            return twisted ? FiberType::IStar(e) : FiberType::I(e);
        case JValueClass::zero:
            switch (e % 3) {
                case 0: return smooth_or_star();
                case 1: return twisted ? FiberType::IVStar() : FiberType::II();
                default: return twisted ? FiberType::IIStar() : FiberType::IV();
            }
        case JValueClass::tseven28:
            if (e % 2 == 0) return smooth_or_star();
            return twisted ? FiberType::IIIStar() : FiberType::III();
        case JValueClass::generic:
            return smooth_or_star();
    }
    throw std::logic_error("bad j-value class");
}

LocusReport nl_lower_bound_witness(int n, int r, int budget) {
    if (n < 2) throw std::invalid_argument("lower-bound witness needs n >= 2");
    if (r < 2 || r > 10 * n)
        throw std::invalid_argument("r out of range: need 2 <= r <= 10n");
    int k = 12 * n + 2 - r;  // number of multiplicative fibers
    Configuration c;
    c.add(FiberType::I(12 * n - k + 1));
    if (k > 1) c.add(FiberType::I(1), k - 1);
    LocusReport report = locus_dim(c, budget);
    if (report.rho != r || report.dim != 10 * n - r)
        throw std::logic_error("lower-bound witness arithmetic violated");
    return report;
}

Configuration cyclic_base_change_config(const Configuration& c, int deg, FiberType ramified1,
                                        FiberType ramified2) {
    if (deg < 1) throw std::invalid_argument("base-change degree must be positive");
    for (const auto& [t, count] : c.entries())
        if (!t.multiplicative())
            throw std::invalid_argument(
                "additive fibers are unsupported under cyclic base change (got " + t.to_string() +
                ")");
    if (!ramified1.multiplicative() || !ramified2.multiplicative())
        throw std::invalid_argument("ramified slots must be multiplicative fibers");
    Configuration rest = c;
    rest.remove(ramified1);  // throws if absent; handles ramified1 == ramified2 via counts
    rest.remove(ramified2);
    if (deg == 1) return c;

    Configuration out;
    out.add(FiberType::I(deg * ramified1.nu()));
    out.add(FiberType::I(deg * ramified2.nu()));
    for (const auto& [t, count] : rest.entries()) out.add(t, count * deg);
    noether_check(out);
    return out;
}

SpecialLociReport special_loci_report(int n) {
    if (n < 2) throw std::invalid_argument("special-loci report needs n >= 2");
    SpecialLociReport rep;
    rep.n = n;
    rep.const_j_dim = 2 * n - 2;
    rep.const_j_rho = 8 * n + 2;
    rep.l1_dim = n - 1;
    rep.l2_dim_upper = n - 1;
    rep.l2_dim_lower = n - 2;

    rep.j0_k_min = (6 * n + 4) / 5;  // ceil(6n/5)
    rep.j0_k_max = 6 * n;
    for (int k = rep.j0_k_min; k <= rep.j0_k_max; ++k)
        rep.j0_rows.push_back({k, k - 3, 2 + 12 * n - 2 * k});

    rep.j1728_k_min = (4 * n + 2) / 3;  // ceil(4n/3)
    rep.j1728_k_max = 4 * n;
    for (int k = rep.j1728_k_min; k <= rep.j1728_k_max; ++k)
        rep.j1728_rows.push_back({k, k - 3, 2 + 12 * n - 2 * k});

    rep.r_max = (24 * n + 5) / 5;  // exact rational comparison 5r <= 24n + 5
    for (int r = 1; r <= rep.r_max; ++r) {
        rep.deep_rows.push_back({r, 6 * n - r - 2});
        // consistency: the k = 6n - r + 1 row of the j = 0 family has this dimension
        int k = 6 * n - r + 1;
        if (k < rep.j0_k_min || k > rep.j0_k_max || k - 3 != 6 * n - r - 2)
            throw std::logic_error("special-loci cross-check violated");
    }

    if (n <= 5) rep.nl_top_dim = n - 2;
    rep.excess = (4 * n) / 5 - 1;
    return rep;
}

std::string SpecialLociReport::to_json() const {
    nlohmann::json out;
    out["n"] = n;
    out["constant_j"] = {{"dim", const_j_dim}, {"rho_tr", const_j_rho}};
    out["positive_rank_dim"] = l1_dim;
    out["rank_two_dim"] = {l2_dim_upper, l2_dim_lower};
    auto rows = [](const std::vector<ConstantJRow>& src) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : src)
            arr.push_back({{"k", row.k}, {"dim", row.dim}, {"rho_tr", row.rho}});
        return arr;
    };
    out["j0"] = {{"k_min", j0_k_min}, {"k_max", j0_k_max}, {"rows", rows(j0_rows)}};
    out["j1728"] = {{"k_min", j1728_k_min}, {"k_max", j1728_k_max}, {"rows", rows(j1728_rows)}};
    nlohmann::json deep = nlohmann::json::array();
    for (const auto& row : deep_rows) deep.push_back({{"r", row.r}, {"dim", row.dim}});
    out["high_rank"] = {{"r_max", r_max}, {"rows", deep}};
    if (nl_top_dim) out["nl_top_dim"] = *nl_top_dim;
    out["excess"] = excess;
    return out.dump(2);
}

std::string SpecialLociReport::to_table() const {
    std::ostringstream out;
    out << "special loci for n = " << n << "\n";
    out << "  constant-j locus: dim " << const_j_dim << ", rho_tr " << const_j_rho << "\n";
    out << "  positive Mordell-Weil rank: dim " << l1_dim << "\n";
    out << "  Mordell-Weil rank >= 2: dim " << l2_dim_upper << " or " << l2_dim_lower << "\n";
    out << "  j = 0 (k singular fibers, " << j0_k_min << " <= k <= " << j0_k_max << "):\n";
    for (const auto& row : j0_rows)
        out << "    k = " << std::setw(3) << row.k << "  dim = " << std::setw(3) << row.dim
            << "  rho_tr = " << row.rho << "\n";
    out << "  j = 1728 (k singular fibers, " << j1728_k_min << " <= k <= " << j1728_k_max << "):\n";
    for (const auto& row : j1728_rows)
        out << "    k = " << std::setw(3) << row.k << "  dim = " << std::setw(3) << row.dim
            << "  rho_tr = " << row.rho << "\n";
    out << "  j = 0 loci with rho_tr >= 2r (r <= " << r_max << "):\n";
    for (const auto& row : deep_rows)
        out << "    r = " << std::setw(3) << row.r << "  dim = " << std::setw(3) << row.dim << "\n";
    if (nl_top_dim) out << "  dim NL_" << 10 * n << " = " << *nl_top_dim << "\n";
    out << "  excess term: " << excess << "\n";
    return out.str();
}

}  // namespace ellsurf
