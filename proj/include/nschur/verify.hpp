#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nschur/frame.hpp"
#include "nschur/kp.hpp"
#include "nschur/pipeline.hpp"
#include "nschur/psido.hpp"
#include "nschur/random.hpp"

namespace nschur {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kDefaultSchurSign = +1;

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"schur", "theorem1", "quadric", "lax", "airy-example", "pipeline"};
    return s;
}

inline json convention_flags() {
    return {{"schur_sign", kDefaultSchurSign},
            {"lax_bracket_sign", kDefaultBracketSign},
            {"psi_inverse_transpose", true},
            {"plucker_label_sign", 1},
            {"stabilization", "s_i = i for i >= mN"},
            {"weight", "sum_j (j - s_j)"},
            {"variables", "x=t1, y=t2, t=t3"}};
}

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    std::optional<int> count;        // suite default when unset
    std::optional<double> tolerance;  // suite default when unset
    int jobs = 1;
    int depth = PsiDO::kDefaultDepth;
    int K = 6;
};

/// Runs fn(0..n-1) on up to `jobs` threads; results come back in index order.
template <class T>
std::vector<T> parallel_map(int n, int jobs, const std::function<T(int)>& fn) {
    std::vector<std::optional<T>> slots(static_cast<std::size_t>(std::max(n, 0)));
    std::vector<std::exception_ptr> errors(slots.size());
    const int workers = std::max(1, std::min(jobs, n));
    auto run = [&](int w) {
        for (int i = w; i < n; i += workers) {
            try {
                slots[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

struct Theorem1Instance {
    int N = 1, K = 0, r = 0, d = 0;
    HModel model;
    FiniteFrame frame;
};

/// Instance `index` of the randomized Theorem 1 batch: N in 1..3, K <= 2, r <= 3, d <= 2N.
inline Theorem1Instance theorem1_instance(std::uint64_t root, std::uint64_t index) {
    InstanceRng rng(instance_seed(root, index));
    const int N = rng.integer(1, 3), K = rng.integer(0, 2), r = rng.integer(0, 3), d = rng.integer(0, 2 * N);
    HModel model = rng.assigned_model(N, K);
    FiniteFrame W = rng.frame(N, r, d);
    return {N, K, r, d, std::move(model), std::move(W)};
}

namespace detail {

inline json suite_report(const std::string& suite, bool pass, json residuals, double tolerance, std::uint64_t seed) {
    return {{"schema_version", kSchemaVersion}, {"check", "verify/" + suite}, {"status", pass ? "pass" : "fail"},
            {"residuals", std::move(residuals)}, {"tolerance", tolerance}, {"seed", seed},
            {"convention_flags", convention_flags()}};
}

inline json verify_schur(const VerifyConfig& cfg) {
    json res = json::array();
    bool pass = true, pinned_ok = true;
    for (int sign : {+1, -1})
        for (int n = 0; n <= 4; ++n)
            for (const auto& p : partitions_of(n)) {
                bool zero = hirota_residual(schur_polynomial(p, sign)).is_zero();
                if (sign == kDefaultSchurSign) pinned_ok = pinned_ok && zero;
                res.push_back({{"partition", p.to_string()}, {"sign", sign}, {"hirota_zero", zero}});
            }
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : partitions_of(n)) {
            bool zero = kp_residual(tau_to_u(RationalFunction(schur_polynomial(p, kDefaultSchurSign)))).is_zero();
            pass = pass && zero;
            res.push_back({{"partition", p.to_string()}, {"sign", kDefaultSchurSign}, {"kp_zero", zero}});
        }
    return suite_report("schur", pass && pinned_ok, res, 0, cfg.seed);
}

inline json verify_theorem1(const VerifyConfig& cfg) {
    const int count = cfg.count.value_or(50);
    auto items = parallel_map<json>(count, cfg.jobs, [&](int i) -> json {
        auto inst = theorem1_instance(cfg.seed, static_cast<std::uint64_t>(i));
        auto rep = theorem1_check(GOperator(inst.model), inst.frame);
        return {{"instance", i}, {"N", inst.N}, {"K", inst.K}, {"r", inst.r}, {"d", inst.d},
                {"M_used", rep.M_used}, {"support", rep.support.size()}, {"equal", rep.equal}};
    });
    json res = json::array();
    int ok = 0;
    for (auto& j : items) {
        ok += j.at("equal").get<bool>();
        res.push_back(std::move(j));
    }
    // W_S family: the frame of S expands to f_S^N alone.
    int family_ok = 0, family_total = 0;
    for (int N = 1; N <= 2; ++N) {
        InstanceRng rng(instance_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(N)));
        GOperator g(rng.assigned_model(N, 2));
        for (const auto& s : enumerate_by_weight(4)) {
            ++family_total;
            auto rep = theorem1_check(g, FiniteFrame::of_sequence(s, N));
            family_ok += rep.equal && rf_equal(rep.lhs, nschur(s, g.model()));
        }
    }
    json j = suite_report("theorem1", ok == count && family_ok == family_total, res, 0, cfg.seed);
    j["equalities"] = std::to_string(ok) + "/" + std::to_string(count);
    j["sequence_frames"] = std::to_string(family_ok) + "/" + std::to_string(family_total);
    return j;
}

inline json verify_quadric(const VerifyConfig& cfg) {
    json res = json::array();
    bool pass = true;
    std::string relation;
    for (int sign : {+1, -1}) {
        auto rep = quadric_extraction(2, 4, sign);
        pass = pass && rep.match;
        if (sign == kDefaultSchurSign) relation = rep.relation.to_string();
        res.push_back({{"sign", sign}, {"match", rep.match}, {"relations_found", rep.forms.size()},
                       {"relation", rep.relation.to_string()}});
    }
    json j = suite_report("quadric", pass, res, 0, cfg.seed);
    j["relation"] = relation;
    return j;
}

inline json verify_lax(const VerifyConfig& cfg) {
    const PsiDO L = parse_psido("2:1;0:-2*x/(3*t+1)");
    json res = json::array();
    bool pass = true;
    for (int i = 1; i <= 3; ++i) {
        bool zero = lax_residual(L, i, kDefaultBracketSign, cfg.depth).is_zero();
        pass = pass && zero;
        res.push_back({{"operator", L.to_string()}, {"flow", i}, {"sign", kDefaultBracketSign}, {"zero", zero}});
    }
    bool opposite = lax_residual(L, 3, -kDefaultBracketSign, cfg.depth).is_zero();
    res.push_back({{"operator", L.to_string()}, {"flow", 3}, {"sign", -kDefaultBracketSign}, {"zero", opposite}});
    json j = suite_report("lax", pass && !opposite, res, 0, cfg.seed);
    j["depth"] = cfg.depth;
    return j;
}

inline json verify_airy_example(const VerifyConfig& cfg) {
    const double tol = cfg.tolerance.value_or(1e-4);
    json res = json::array();
    double wronskian = 0;
    for (int q = -20; q <= 20; ++q) {
        auto v = airy(Real(q) / 4);
        wronskian = std::max(wronskian, to_double(rabs(v.ai * v.bip - v.aip * v.bi - 1 / airy_constants::pi)));
    }
    const Point3 p1{0.7L, 0.3L, 0.1L};
    const double u1 = to_double(rabs(example_u(1, p1.x, p1.y, p1.t) + 2 * p1.x / (3 * p1.t + 1)));
    const auto& pts = default_sample_points();
    auto cells = parallel_map<json>(6 * static_cast<int>(pts.size()), cfg.jobs, [&](int c) -> json {
        const int i = 1 + c / static_cast<int>(pts.size());
        const Point3 p = pts[static_cast<std::size_t>(c) % pts.size()];
        auto r = numeric_kp_from_log(example_log_tau(i), p);
        return {{"u", i}, {"point", {to_double(p.x), to_double(p.y), to_double(p.t)}},
                {"residual", to_double(r.value)}, {"stability", to_double(r.stability)}};
    });
    double max_res = 0;
    for (auto& c : cells) {
        max_res = std::max(max_res, std::fabs(c.at("residual").get<double>()));
        res.push_back(std::move(c));
    }
    auto lab = psi_inverse_pipeline().labelling();
    auto sep = quadric_separation(lab, cfg.seed, cfg.count.value_or(10));
    const bool pass = max_res <= tol && wronskian <= 1e-10 && u1 <= 1e-6 && sep.separated(100);
    json j = suite_report("airy-example", pass, res, tol, cfg.seed);
    j["max_residual"] = max_res;
    j["wronskian_error"] = wronskian;
    j["u1_error"] = u1;
    j["separation"] = sep.to_json();
    return j;
}

inline json verify_pipeline(const VerifyConfig& cfg) {
    PipelineOptions opt;
    opt.K = cfg.K;
    if (cfg.tolerance) opt.ratio_tolerance = *cfg.tolerance;
    auto rep = psi_inverse_pipeline(default_sample_points(), opt);
    json res = json::array();
    for (const auto& p : rep.pairs)
        res.push_back({{"sequence", p.s.to_string()}, {"label", p.label}, {"tau", p.tau}, {"spread", p.spread}});
    json j = suite_report("pipeline", rep.ok(), res, opt.ratio_tolerance, cfg.seed);
    j["bijection"] = rep.bijection;
    j["max_truncation_change"] = rep.max_truncation_change;
    j["K"] = opt.K;
    j["quadric"] = "pi1*pi6 + pi2*pi5 - pi3*pi4";
    return j;
}

}  // namespace detail

/// Runs one verification suite and returns its JSON report.
inline json run_verify(const std::string& suite, const VerifyConfig& cfg) {
    if (suite == "schur") return detail::verify_schur(cfg);
    if (suite == "theorem1") return detail::verify_theorem1(cfg);
    if (suite == "quadric") return detail::verify_quadric(cfg);
    if (suite == "lax") return detail::verify_lax(cfg);
    if (suite == "airy-example") return detail::verify_airy_example(cfg);
    if (suite == "pipeline") return detail::verify_pipeline(cfg);
    throw InvalidRange("unknown suite '" + suite + "'");
}

}  // namespace nschur
