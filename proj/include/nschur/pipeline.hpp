#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nschur/determinant.hpp"
#include "nschur/nschur.hpp"
#include "nschur/numeric.hpp"
#include "nschur/plucker.hpp"
#include "nschur/random.hpp"
#include "nschur/serialize.hpp"

namespace nschur {

using Series = std::vector<Real>;  // coefficients of z^0 .. z^K

inline Series series_mul(const Series& a, const Series& b) {
    Series c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Series series_lin(Real p, const Series& a, Real q, const Series& b) {
    Series c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = p * a[i] + q * b[i];
    return c;
}

namespace detail {

/// f(center + scale z) and f'(center + scale z) as z-series, f a solution of f'' = x f.
inline std::pair<Series, Series> airy_series(Real center, Real value, Real deriv, Real scale, int K) {
    auto c = airy_taylor(center, value, deriv, K + 1);
    Series f(static_cast<std::size_t>(K + 1)), d(static_cast<std::size_t>(K + 1));
    Real pw = 1;
    for (int m = 0; m <= K; ++m) {
        f[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)] * pw;
        d[static_cast<std::size_t>(m)] = (m + 1) * c[static_cast<std::size_t>(m + 1)] * pw;
        pw *= scale;
    }
    return {f, d};
}

}  // namespace detail

/// z-series of the 2x2 matrix Psi^{-1}(x, y, t; z) of the Airy example:
/// phi = sqrt3 Gamma(1/3) Gamma(2/3) e^{-yz}, zeta = 4^{-1/3} z,
/// Theta = (3tz + 2x + z) / (2^{2/3} (1+3t)^{1/3}).
inline std::array<std::array<Series, 2>, 2> psi_inverse_series(Point3 p, int K) {
    using namespace airy_constants;
    if (K < 0) throw InvalidRange("K must be nonnegative");
    if (1 + 3 * p.t <= 0) throw DomainExceeded("example requires 1 + 3t > 0");
    const Real c = rcbrt(1 + 3 * p.t), c6 = rsqrt(c);
    const Real r2 = rcbrt(Real(2)), r4 = r2 * r2;
    const Real theta = r2 * p.x / c, beta = c * c / r4;
    const AiryValues at = airy(theta);
    auto [aiT, aipT] = detail::airy_series(theta, at.ai, at.aip, beta, K);
    auto [biT, bipT] = detail::airy_series(theta, at.bi, at.bip, beta, K);
    auto [aiz, aipz] = detail::airy_series(0, ai0, aip0, 1 / r4, K);
    auto [biz, bipz] = detail::airy_series(0, bi0, bip0, 1 / r4, K);

    Series phi(static_cast<std::size_t>(K + 1));
    Real term = sqrt3 * gamma_1_3 * gamma_2_3;
    for (int m = 0; m <= K; ++m) {
        phi[static_cast<std::size_t>(m)] = term;
        term *= -p.y / (m + 1);
    }
    auto mul = [](const Series& a, const Series& b) { return series_mul(a, b); };
    std::array<std::array<Series, 2>, 2> m;
    m[0][0] = series_lin(-1 / (2 * c6), mul(aipT, biz), 1 / (2 * c6), mul(aiz, bipT));
    m[0][1] = series_lin(-c6 / (2 * r2), mul(aiz, biT), c6 / (2 * r2), mul(aiT, biz));
    m[1][0] = series_lin(1 / (r4 * c6), mul(aipz, bipT), -1 / (r4 * c6), mul(aipT, bipz));
    m[1][1] = series_lin(-c6 / 2, mul(aipz, biT), c6 / 2, mul(aiT, bipz));
    for (auto& row : m)
        for (auto& e : row) e = mul(phi, e);
    return m;
}

/// H_0..H_K at a point. With `transpose`, (H_k)_{ij} = [z^k] (Psi^{-1})_{ji},
/// the orientation under which the N = 2 functions reproduce the tau_i.
inline std::vector<Matrix<Real>> psi_inverse_blocks(Point3 p, int K, bool transpose = true) {
    auto m = psi_inverse_series(p, K);
    std::vector<Matrix<Real>> H(static_cast<std::size_t>(K + 1), zero_matrix<Real>(2, 2));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(K); ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) H[k][i][j] = transpose ? m[j][i][k] : m[i][j][k];
    return H;
}

/// f_S^N from numeric blocks; blocks beyond H.size() are treated as zero.
inline Real nschur_numeric(const VirtualSequence& s, const std::vector<Matrix<Real>>& H) {
    if (H.empty()) throw InvalidRange("need at least H_0");
    const int N = static_cast<int>(H[0].size());
    const int m = stabilization_m(s, N);
    auto M = ms_block<Real>(s, N, m, [&](const HRef& r) {
        return static_cast<std::size_t>(r.k) < H.size()
                   ? H[static_cast<std::size_t>(r.k)][static_cast<std::size_t>(r.i - 1)][static_cast<std::size_t>(r.j - 1)]
                   : Real(0);
    });
    const Real d0 = det_numeric(H[0]);
    if (d0 == 0) throw SingularH0("det H_0 vanishes at the sample point");
    return det_numeric(M) / rpow(d0, m);
}

inline const std::vector<Point3>& default_sample_points() {
    static const std::vector<Point3> pts{{-0.3L, 0.5L, 0.5L}, {0.3L, 1.0L, 0.5L}, {-0.4L, 0.5L, 0.2L},
                                         {1.1L, -0.2L, 0.05L}, {-1.0L, -1.0L, 0.2L}};
    return pts;
}

struct PipelineOptions {
    int K = 6;
    bool transpose = true;
    double ratio_tolerance = 1e-5;       // relative spread of f_S / tau_i across points
    double truncation_tolerance = 1e-7;  // change of f_S under K -> K + 1
};

struct PipelinePair {
    VirtualSequence s;
    std::vector<int> label;
    int tau = 0;  // matched tau_i, 0 if none
    double ratio = 0, spread = 0;
    std::vector<double> values;  // f_S at the sample points
};

struct PipelineReport {
    PipelineOptions options;
    std::vector<Point3> points;
    std::vector<PipelinePair> pairs;
    bool bijection = false;
    double max_spread = 0, max_truncation_change = 0;

    bool ok() const { return bijection && max_truncation_change < options.truncation_tolerance; }

    /// label of S -> matched tau index
    std::map<std::vector<int>, int> labelling() const {
        std::map<std::vector<int>, int> out;
        for (const auto& p : pairs) out[p.label] = p.tau;
        return out;
    }

    json to_json() const {
        json pts = json::array(), ps = json::array();
        for (const auto& p : points) pts.push_back({to_double(p.x), to_double(p.y), to_double(p.t)});
        for (const auto& p : pairs)
            ps.push_back({{"sequence", p.s.to_string()}, {"label", p.label}, {"tau", p.tau}, {"ratio", p.ratio},
                          {"spread", p.spread}, {"values", p.values}});
        return {{"K", options.K}, {"transpose", options.transpose}, {"points", pts}, {"pairs", ps},
                {"bijection", bijection}, {"max_spread", max_spread},
                {"max_truncation_change", max_truncation_change}};
    }
};

/// Computes f_S^2 for S in S_{2,4} from the z-Taylor coefficients of Psi^{-1}
/// and matches each against tau_1..tau_6 by constancy of f_S / tau_i.
inline PipelineReport psi_inverse_pipeline(const std::vector<Point3>& points = default_sample_points(),
                                           PipelineOptions opt = {}) {
    if (points.size() < 2) throw InvalidRange("need at least two sample points");
    PipelineReport rep;
    rep.options = opt;
    rep.points = points;
    const auto seqs = enumerate_Skn(2, 4);
    std::vector<std::vector<Real>> f(seqs.size()), taus;
    for (const auto& p : points) {
        auto H = psi_inverse_blocks(p, opt.K, opt.transpose);
        auto H1 = psi_inverse_blocks(p, opt.K + 1, opt.transpose);
        auto T = example_taus(p.x, p.y, p.t);
        taus.emplace_back(T.begin(), T.end());
        for (std::size_t a = 0; a < seqs.size(); ++a) {
            Real v = nschur_numeric(seqs[a], H), w = nschur_numeric(seqs[a], H1);
            double change = to_double(rabs(v - w) / std::max(Real(1), rabs(v)));
            rep.max_truncation_change = std::max(rep.max_truncation_change, change);
            f[a].push_back(v);
        }
    }
    if (rep.max_truncation_change >= opt.truncation_tolerance)
        throw TruncationInsufficient("f_S changes by " + std::to_string(rep.max_truncation_change) + " between K=" +
                                     std::to_string(opt.K) + " and K+1");

    std::set<int> used;
    bool unique = true;
    for (std::size_t a = 0; a < seqs.size(); ++a) {
        PipelinePair pair{seqs[a], subset_label(seqs[a], 2, 4), 0, 0, 0, {}};
        for (Real v : f[a]) pair.values.push_back(to_double(v));
        int found = 0;
        double best = 0, best_ratio = 0;
        for (int i = 1; i <= 6; ++i) {
            const Real r0 = f[a][0] / taus[0][static_cast<std::size_t>(i)];
            Real spread = 0;
            for (std::size_t q = 1; q < points.size(); ++q) {
                Real r = f[a][q] / taus[q][static_cast<std::size_t>(i)];
                spread = std::max(spread, rabs(r - r0) / rabs(r0));
            }
            if (!risfinite(spread) || r0 == 0 || spread > opt.ratio_tolerance) continue;
            if (found) unique = false;
            if (!found || spread < best) found = i, best = to_double(spread), best_ratio = to_double(r0);
        }
        pair.tau = found;
        pair.spread = best;
        pair.ratio = best_ratio;
        if (!found || !used.insert(found).second) unique = false;
        rep.max_spread = std::max(rep.max_spread, best);
        rep.pairs.push_back(std::move(pair));
    }
    rep.bijection = unique && used.size() == 6;
    return rep;
}

/// log |tau_0 sum_i pi_i tau_i| for coefficients pi_1..pi_6.
inline Field example_combination_log(std::array<Real, 6> pi, Real floor = kDefaultPoleFloor) {
    return guarded_log([pi](Real x, Real y, Real t) {
        auto T = example_taus(x, y, t);
        Real s = 0;
        for (std::size_t i = 0; i < 6; ++i) s += pi[i] * T[i + 1];
        return T[0] * s;
    }, floor);
}

/// The Plucker quadric p12 p34 - p13 p24 + p14 p23 carried to pi_1..pi_6 by a labelling.
inline Real example_quadric(const std::array<Real, 6>& pi, const std::map<std::vector<int>, int>& labelling) {
    static const QuadraticRelation rel = exchange_relations(2, 4).front();
    Real q = 0;
    for (const auto& [key, c] : rel.terms) {
        Real a = pi[static_cast<std::size_t>(labelling.at(key.first) - 1)];
        Real b = pi[static_cast<std::size_t>(labelling.at(key.second) - 1)];
        q += static_cast<Real>(c.get_d()) * a * b;
    }
    return q;
}

struct SeparationReport {
    double max_satisfying = 0;  // largest |KP residual| over quadric-satisfying combinations
    double min_violating = 0;   // smallest |KP residual| over violating combinations
    double min_quadric = 0;     // smallest |quadric| among the violating draws
    int count = 0;
    std::uint64_t seed = 0;
    double ratio() const { return max_satisfying > 0 ? min_violating / max_satisfying : INFINITY; }
    bool separated(double factor = 100) const { return min_violating >= factor * max_satisfying; }

    json to_json() const {
        return {{"count", count}, {"seed", seed}, {"max_satisfying", max_satisfying}, {"min_violating", min_violating},
                {"min_quadric", min_quadric}, {"ratio", ratio()}};
    }
};

/// KP residuals of tau_0 sum pi_i tau_i for pi from 2x4 minors (satisfying) and
/// for random pi with |quadric| >= 1/4 (violating), at the same points.
inline SeparationReport quadric_separation(const std::map<std::vector<int>, int>& labelling, std::uint64_t seed,
                                           int count = 10,
                                           const std::vector<Point3>& points = default_sample_points()) {
    SeparationReport rep;
    rep.seed = seed;
    rep.count = count;
    rep.min_violating = INFINITY;
    rep.min_quadric = INFINITY;
    auto residuals = [&](const std::array<Real, 6>& pi) {
        std::vector<double> r;
        for (const auto& p : points) r.push_back(to_double(rabs(numeric_kp_from_log_adaptive(example_combination_log(pi), p).value)));
        return r;
    };
    for (int trial = 0; trial < count; ++trial) {
        InstanceRng rng(instance_seed(seed, static_cast<std::uint64_t>(trial)));
        for (bool satisfying : {true, false}) {
            for (;;) {
                std::array<Real, 6> pi{};
                if (satisfying) {
                    Matrix<BigRational> A = zero_matrix<BigRational>(2, 4);
                    for (auto& row : A)
                        for (auto& e : row) e = rng.rational();
                    PluckerVector<BigRational> P;
                    try {
                        P = minors(A);
                    } catch (const RankDeficient&) {
                        continue;
                    }
                    for (const auto& [label, v] : P.coords)
                        pi[static_cast<std::size_t>(labelling.at(label) - 1)] = static_cast<Real>(v.get_d());
                } else {
                    for (auto& v : pi) v = static_cast<Real>(rng.rational().get_d());
                    Real q = rabs(example_quadric(pi, labelling));
                    if (q < Real(1) / 4) continue;
                    rep.min_quadric = std::min(rep.min_quadric, to_double(q));
                }
                std::vector<double> r;
                try {
                    r = residuals(pi);
                } catch (const PoleNearSample&) {
                    continue;
                }
                if (satisfying) rep.max_satisfying = std::max(rep.max_satisfying, *std::max_element(r.begin(), r.end()));
                else rep.min_violating = std::min(rep.min_violating, *std::min_element(r.begin(), r.end()));
                break;
            }
        }
    }
    return rep;
}

}  // namespace nschur
