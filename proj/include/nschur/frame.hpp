#pragma once

#include <optional>
#include <vector>

#include "nschur/nschur.hpp"
#include "nschur/plucker.hpp"

namespace nschur {

/// A point of the finite-truncation Grassmannian: the span of columns
/// w_0..w_{r-1}, each supported on basis indices -d..r-1, together with
/// w_i = e_i for every i >= r.
class FiniteFrame {
public:
    FiniteFrame(int N, int r, int d, Matrix<BigRational> coeffs) : N_(N), r_(r), d_(d), A_(std::move(coeffs)) {
        if (N < 1 || r < 0 || d < 0) throw InvalidRange("frame needs N >= 1, r >= 0, d >= 0");
        if (static_cast<int>(A_.size()) != r + d) throw InvalidRange("frame needs r + d rows");
        for (const auto& row : A_)
            if (static_cast<int>(row.size()) != r) throw InvalidRange("frame needs r columns");
        if (rank() != r) throw RankDeficient("frame columns are linearly dependent");
    }

    /// H_+ itself.
    static FiniteFrame standard(int N) { return FiniteFrame(N, 0, 0, {}); }

    /// The frame spanned by e_{s_0}, e_{s_1}, ...
    static FiniteFrame of_sequence(const VirtualSequence& s, int N) {
        const int r = s.stable_from();
        const int d = r ? std::max(0, -s[0]) : 0;
        Matrix<BigRational> A = zero_matrix<BigRational>(static_cast<std::size_t>(r + d), static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) A[s[j] + d][j] = 1;
        return FiniteFrame(N, r, d, std::move(A));
    }

    /// Frame whose columns are the rows of a k x n matrix, placed on indices k-n..k-1.
    static FiniteFrame from_coefficient_matrix(const Matrix<BigRational>& rows, int N) {
        const int k = static_cast<int>(rows.size());
        const int n = k ? static_cast<int>(rows[0].size()) : 0;
        Matrix<BigRational> A = zero_matrix<BigRational>(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) A[j][i] = rows[i][j];
        return FiniteFrame(N, k, n - k, std::move(A));
    }

    int N() const { return N_; }
    int r() const { return r_; }
    int d() const { return d_; }
    const Matrix<BigRational>& coefficients() const { return A_; }

    /// Coefficient of e_index in w_col.
    BigRational coefficient(int index, int col) const {
        if (col >= r_) return index == col ? BigRational(1) : BigRational(0);
        if (index < -d_ || index >= r_) return 0;
        return A_[index + d_][col];
    }

    FiniteFrame with_column_scaled(int col, const BigRational& c) const {
        if (c == 0) throw InvalidRange("scale must be nonzero");
        Matrix<BigRational> A = A_;
        for (auto& row : A) row[col] *= c;
        return FiniteFrame(N_, r_, d_, std::move(A));
    }

    json to_json() const {
        json cols = json::array();
        for (int c = 0; c < r_; ++c) {
            json col = json::array();
            for (int i = -d_; i < r_; ++i)
                if (A_[i + d_][c] != 0) col.push_back({i, nschur::to_string(A_[i + d_][c])});
            cols.push_back(col);
        }
        return {{"N", N_}, {"r", r_}, {"d", d_}, {"columns", cols}};
    }

    static FiniteFrame from_json(const json& j) {
        try {
            const int N = j.at("N").get<int>(), r = j.at("r").get<int>(), d = j.at("d").get<int>();
            if (r < 0 || d < 0) throw InvalidRange("frame needs r >= 0, d >= 0");
            if (static_cast<int>(j.at("columns").size()) != r) throw InvalidRange("frame needs r columns");
            Matrix<BigRational> A = zero_matrix<BigRational>(static_cast<std::size_t>(r + d), static_cast<std::size_t>(r));
            int c = 0;
            for (const auto& col : j.at("columns")) {
                for (const auto& e : col) {
                    const int i = e.at(0).get<int>();
                    if (i < -d || i >= r) throw InvalidRange("column entry outside the declared support");
                    const json& v = e.at(1);
                    A[i + d][c] = v.is_string() ? parse_rational(v.get<std::string>()) : BigRational(v.get<long>());
                }
                ++c;
            }
            return FiniteFrame(N, r, d, std::move(A));
        } catch (const json::exception& e) {
            throw ParseError(std::string("frame JSON: ") + e.what());
        }
    }

private:
    int rank() const {
        Matrix<BigRational> m = A_;
        int rk = 0;
        for (int col = 0; col < r_ && rk < static_cast<int>(m.size()); ++col) {
            std::size_t p = static_cast<std::size_t>(rk);
            while (p < m.size() && m[p][col] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[static_cast<std::size_t>(rk)]);
            for (std::size_t i = static_cast<std::size_t>(rk) + 1; i < m.size(); ++i) {
                BigRational f = m[i][col] / m[static_cast<std::size_t>(rk)][col];
                for (int c = col; c < r_; ++c) m[i][c] -= f * m[static_cast<std::size_t>(rk)][c];
            }
            ++rk;
        }
        return rk;
    }

    int N_, r_, d_;
    Matrix<BigRational> A_;  // row index + d, column
};

/// Block lower-triangular g = sum_k H_k z^k acting on H^N, with finite support K.
class GOperator {
public:
    explicit GOperator(HModel model) : model_(std::move(model)) {
        if (!model_.support()) throw InvalidRange("GOperator needs a finite h-support K");
    }

    const HModel& model() const { return model_; }
    int N() const { return model_.N(); }
    int K() const { return *model_.support(); }

    /// Coefficient of e_l in g e_c.
    RationalFunction entry(int l, int c) const {
        const int N = model_.N();
        return model_.h(1 + floor_mod(l, N), 1 + floor_mod(c, N), floor_div(l, N) - floor_div(c, N));
    }

    /// Blocks G_0..G_kmax of a^{-1}, a = pi_+ g pi_+.
    std::vector<Matrix<RationalFunction>> inverse_blocks(int kmax) const {
        if (model_.det_H0().is_zero()) throw SingularH0("det H_0 vanishes");
        Matrix<RationalFunction> H0inv = inverse(model_.block(0));
        std::vector<Matrix<RationalFunction>> G{H0inv};
        const std::size_t N = static_cast<std::size_t>(model_.N());
        for (int k = 1; k <= kmax; ++k) {
            Matrix<RationalFunction> acc = zero_matrix<RationalFunction>(N, N);
            for (int j = 1; j <= std::min(k, K()); ++j) {
                Matrix<RationalFunction> t = multiply(model_.block(j), G[static_cast<std::size_t>(k - j)]);
                for (std::size_t a = 0; a < N; ++a)
                    for (std::size_t b = 0; b < N; ++b) acc[a][b] += t[a][b];
            }
            Matrix<RationalFunction> gk = multiply(H0inv, acc);
            for (auto& row : gk)
                for (auto& e : row) e = -e;
            G.push_back(std::move(gk));
        }
        return G;
    }

private:
    HModel model_;
};

/// <S|W>: the minor of the frame on the rows s_0 < s_1 < ..., taken in
/// increasing order. Zero unless s_i = i for i >= r and s_0 >= -d.
inline BigRational plucker_coord(const FiniteFrame& W, const VirtualSequence& s) {
    const int r = W.r();
    if (s.stable_from() > r) return 0;
    if (r == 0) return 1;
    if (s[0] < -W.d()) return 0;
    Matrix<BigRational> m = zero_matrix<BigRational>(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) m[a][b] = W.coefficient(s[a], b);
    return det_rational(std::move(m));
}

/// Every S on which plucker_coord can be nonzero: the r-subsets of -d..r-1.
inline std::vector<VirtualSequence> frame_support(const FiniteFrame& W) {
    if (W.r() == 0 || W.d() == 0) return {VirtualSequence::vacuum()};
    return enumerate_Skn(W.r(), W.r() + W.d());
}

struct ExpansionResult {
    RationalFunction value;
    int M_used = 0;
};

/// Smallest row count that captures every nonzero row of g w beyond the identity.
inline int default_truncation(const GOperator& g, const FiniteFrame& W) {
    const int N = g.N();
    int M = W.r() + N * g.K() + N * ((W.d() + N - 1) / N);
    M = std::max(M, N);
    return ((M + N - 1) / N) * N;
}

/// <0|g|W> = det(pi_+ g w a^{-1}) on the first M rows and columns.
///
/// M is a multiple of N, so the truncation of the product is the product of
/// truncations. The result is accepted once the trailing N columns of the
/// block are unit vectors; otherwise M grows by N up to `max_extra_blocks` times.
inline ExpansionResult expansion_lhs(const GOperator& g, const FiniteFrame& W, std::optional<int> M_request = {},
                                     int max_extra_blocks = 4) {
    const int N = g.N();
    if (W.N() != N) throw InvalidRange("frame and operator have different N");
    int M = M_request.value_or(default_truncation(g, W));
    if (M % N != 0 || M < W.r()) throw InvalidRange("truncation must be a multiple of N and at least r");
    for (int attempt = 0; attempt <= max_extra_blocks; ++attempt, M += N) {
        const int blocks = M / N;
        auto G = g.inverse_blocks(blocks);
        auto ainv = [&](int l, int c) -> RationalFunction {
            const int k = floor_div(l, N) - floor_div(c, N);
            if (k < 0) return {};
            return G[static_cast<std::size_t>(k)][static_cast<std::size_t>(floor_mod(l, N))][static_cast<std::size_t>(floor_mod(c, N))];
        };
        const std::size_t n = static_cast<std::size_t>(M);
        Matrix<RationalFunction> X = zero_matrix<RationalFunction>(n, n);
        for (int c = 0; c < M; ++c)
            for (int l = 0; l < M; ++l) {
                if (c >= W.r()) {
                    X[l][c] = g.entry(l, c);
                    continue;
                }
                RationalFunction acc;
                for (int i = -W.d(); i < W.r(); ++i) {
                    BigRational w = W.coefficient(i, c);
                    if (w != 0) acc += g.entry(l, i).scaled(w);
                }
                X[l][c] = acc;
            }
        Matrix<RationalFunction> Ainv = zero_matrix<RationalFunction>(n, n);
        for (int l = 0; l < M; ++l)
            for (int c = 0; c < M; ++c) Ainv[l][c] = ainv(l, c);
        Matrix<RationalFunction> Y = multiply(X, Ainv);
        bool certified = true;
        for (int c = M - N; c < M && certified; ++c)
            for (int l = 0; l < M && certified; ++l)
                certified = rf_equal(Y[l][c], RationalFunction(l == c ? 1 : 0));
        if (certified) return {det(Y), M};
    }
    throw NonStabilizing("truncated g w a^{-1} did not stabilize up to M = " + std::to_string(M - N));
}

struct Theorem1Report {
    RationalFunction lhs, rhs;
    bool equal = false;
    int M_used = 0;
    std::vector<std::pair<VirtualSequence, BigRational>> support;

    json to_json() const {
        json sup = json::array();
        for (const auto& [s, c] : support) sup.push_back({{"sequence", s.prefix()}, {"coord", nschur::to_string(c)}});
        return {{"lhs", nschur::to_json(lhs)}, {"rhs", nschur::to_json(rhs)}, {"equal", equal}, {"M_used", M_used}, {"support", sup}};
    }
};

/// Compares <0|g|W> with sum_S <S|W> f_S^N.
inline Theorem1Report theorem1_check(const GOperator& g, const FiniteFrame& W) {
    Theorem1Report rep;
    auto lhs = expansion_lhs(g, W);
    rep.lhs = lhs.value;
    rep.M_used = lhs.M_used;
    for (const auto& s : frame_support(W)) {
        BigRational c = plucker_coord(W, s);
        if (c == 0) continue;
        rep.support.emplace_back(s, c);
        rep.rhs += nschur(s, g.model()).scaled(c);
    }
    rep.equal = rf_equal(rep.lhs, rep.rhs);
    return rep;
}

}  // namespace nschur
