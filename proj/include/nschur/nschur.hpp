#pragma once

#include <optional>
#include <vector>

#include "nschur/hmodel.hpp"
#include "nschur/sequences.hpp"

namespace nschur {

/// Floor division and non-negative remainder for a positive divisor.
constexpr int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
constexpr int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

/// Reference to h^{i,j}_k; k < 0 means the entry is identically zero.
struct HRef {
    int i = 1, j = 1, k = 0;
    bool is_zero() const { return k < 0; }
    friend bool operator==(const HRef&, const HRef&) = default;
};

/// Entry (l, col) of M_S:
/// i = 1 + (l mod N), j = 1 + (s_col mod N), k = floor(l/N) - floor(s_col/N).
inline HRef ms_entry(const VirtualSequence& s, int N, int l, int col) {
    if (l < 0 || col < 0) throw InvalidRange("matrix indices must be nonnegative");
    const int sc = s[col];
    return {1 + floor_mod(l, N), 1 + floor_mod(sc, N), floor_div(l, N) - floor_div(sc, N)};
}

/// Smallest m >= 1 with s_i = i for every i >= mN, so that the columns of
/// M_S beyond the top-left mN x mN block coincide with those of M_0.
inline int stabilization_m(const VirtualSequence& s, int N) {
    if (N < 1) throw InvalidRange("N must be positive");
    const int L = s.stable_from();
    return std::max(1, (L + N - 1) / N);
}

/// Top-left mN x mN block of M_S with entries produced by `lookup(HRef)`.
template <class Scalar, class Lookup>
Matrix<Scalar> ms_block(const VirtualSequence& s, int N, int m, Lookup&& lookup) {
    const int n = m * N;
    Matrix<Scalar> M = zero_matrix<Scalar>(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l)
        for (int c = 0; c < n; ++c) {
            HRef r = ms_entry(s, N, l, c);
            if (!r.is_zero()) M[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] = lookup(r);
        }
    return M;
}

inline Matrix<RationalFunction> ms_matrix(const VirtualSequence& s, const HModel& model, int m) {
    return ms_block<RationalFunction>(s, model.N(), m, [&](const HRef& r) { return model.h(r.i, r.j, r.k); });
}

/// f_S^N = det(M_S restricted to mN x mN) / (det H_0)^m.
inline RationalFunction nschur(const VirtualSequence& s, const HModel& model, std::optional<int> m_override = {}) {
    const int m_min = stabilization_m(s, model.N());
    const int m = m_override.value_or(m_min);
    if (m < m_min) throw InvalidRange("m_override below the stabilization bound " + std::to_string(m_min));
    RationalFunction d0 = model.det_H0();
    if (d0.is_zero()) throw SingularH0("det H_0 vanishes identically");
    RationalFunction num = det(ms_matrix(s, model, m));
    if (num.is_zero()) return {};
    if (d0.is_polynomial()) return num * RationalFunction(Polynomial(1), d0.numerator(), m);
    return num / d0.pow(m);
}

/// Schur polynomial s_lambda in t_1, t_2, ...: the N = 1 function with
/// h_k taken from exp(sign * sum t_i z^i).
inline Polynomial schur_polynomial(const Partition& lambda, int sign = +1) {
    VirtualSequence s = from_partition(lambda);
    RationalFunction f = nschur(s, HModel::exponential(lambda.size(), sign));
    return f.as_polynomial();
}

/// Grading h^{i,j}_k -> kN + i - j; non-h variables have weight 0.
inline int h_weight(const Variable& v, int N) {
    return v.kind == Variable::Kind::H ? v.h_k() * N + v.h_i() - v.h_j() : 0;
}

/// The set of weights of the monomials of p under h_weight.
inline std::set<int> weights_of(const Polynomial& p, int N) {
    std::set<int> ws;
    for (const auto& t : p.terms()) {
        int w = 0;
        for (const auto& [v, e] : t.monomial.factors()) w += e * h_weight(v, N);
        ws.insert(w);
    }
    return ws;
}

}  // namespace nschur
