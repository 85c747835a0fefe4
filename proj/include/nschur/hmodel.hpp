#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "nschur/determinant.hpp"
#include "nschur/serialize.hpp"

namespace nschur {

/// Assignment of the symbols h^{i,j}_k (1 <= i, j <= N, k >= 0); h with
/// negative k is zero.
///
/// Formal: h^{i,j}_k is the indeterminate itself, optionally truncated to
///   zero for k > K.
/// Assigned: explicit rational functions; unlisted entries are zero.
/// Exponential: N = 1 and h_k is the z^k coefficient of
///   exp(sign * sum_{i>=1} t_i z^i), kept for k <= K.
class HModel {
public:
    enum class Mode { Formal, Assigned, Exponential };
    using Key = std::tuple<int, int, int>;  // (i, j, k)

    static HModel formal(int N, std::optional<int> K = std::nullopt) {
        check_N(N);
        HModel m;
        m.N_ = N;
        m.mode_ = Mode::Formal;
        m.K_ = K;
        return m;
    }

    static HModel assigned(int N, std::map<Key, RationalFunction> entries) {
        check_N(N);
        HModel m;
        m.N_ = N;
        m.mode_ = Mode::Assigned;
        int K = 0;
        for (auto& [key, value] : entries) {
            auto [i, j, k] = key;
            if (i < 1 || i > N || j < 1 || j > N || k < 0)
                throw InvalidRange("h index out of range (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
            if (!value.is_zero()) {
                K = std::max(K, k);
                m.entries_.emplace(key, std::move(value));
            }
        }
        m.K_ = K;
        return m;
    }

    /// Builds an assigned model from the matrices H_0, H_1, ..., H_K.
    static HModel from_matrices(const std::vector<Matrix<RationalFunction>>& H) {
        if (H.empty()) throw InvalidRange("need at least H_0");
        const int N = static_cast<int>(H[0].size());
        std::map<Key, RationalFunction> entries;
        for (std::size_t k = 0; k < H.size(); ++k) {
            if (static_cast<int>(H[k].size()) != N) throw InvalidRange("H_k blocks must all be N x N");
            for (int i = 0; i < N; ++i) {
                if (static_cast<int>(H[k][i].size()) != N) throw InvalidRange("H_k blocks must all be N x N");
                for (int j = 0; j < N; ++j)
                    entries.emplace(Key{i + 1, j + 1, static_cast<int>(k)}, H[k][i][j]);
            }
        }
        return assigned(N, std::move(entries));
    }

    static HModel exponential(int K, int sign = +1) {
        if (K < 0) throw InvalidRange("K must be nonnegative");
        if (sign != 1 && sign != -1) throw InvalidRange("sign must be +1 or -1");
        HModel m;
        m.N_ = 1;
        m.mode_ = Mode::Exponential;
        m.K_ = K;
        m.sign_ = sign;
        // k h_k = sign * sum_{i=1}^{k} i t_i h_{k-i}
        std::vector<Polynomial> h{Polynomial(1)};
        for (int k = 1; k <= K; ++k) {
            Polynomial acc;
            for (int i = 1; i <= k; ++i) acc += var(Variable::time(i)).scaled(i) * h[static_cast<std::size_t>(k - i)];
            h.push_back(acc.scaled(make_rational(sign, k)));
        }
        for (int k = 0; k <= K; ++k) m.entries_.emplace(Key{1, 1, k}, RationalFunction(h[static_cast<std::size_t>(k)]));
        return m;
    }

    int N() const { return N_; }
    Mode mode() const { return mode_; }
    /// Largest k with a possibly non-zero h^{i,j}_k; nullopt for untruncated formal models.
    std::optional<int> support() const { return K_; }
    int sign() const { return sign_; }

    RationalFunction h(int i, int j, int k) const {
        if (k < 0) return {};
        if (K_ && k > *K_) return {};
        if (mode_ == Mode::Formal) return RationalFunction(var(Variable::h(i, j, k)));
        auto it = entries_.find(Key{i, j, k});
        return it == entries_.end() ? RationalFunction{} : it->second;
    }

    /// The N x N block H_k.
    Matrix<RationalFunction> block(int k) const {
        Matrix<RationalFunction> m = zero_matrix<RationalFunction>(static_cast<std::size_t>(N_), static_cast<std::size_t>(N_));
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h(i + 1, j + 1, k);
        return m;
    }

    RationalFunction det_H0() const { return det(block(0)); }

    const std::map<Key, RationalFunction>& entries() const { return entries_; }

    json to_json() const {
        json j{{"N", N_}};
        switch (mode_) {
            case Mode::Formal:
                j["mode"] = "formal";
                if (K_) j["K"] = *K_;
                break;
            case Mode::Exponential:
                j["mode"] = "exponential";
                j["K"] = *K_;
                j["sign"] = sign_;
                break;
            case Mode::Assigned: {
                j["mode"] = "assigned";
                json es = json::array();
                for (const auto& [key, value] : entries_) {
                    auto [i, jj, k] = key;
                    es.push_back({{"i", i}, {"j", jj}, {"k", k}, {"value", nschur::to_json(value)}});
                }
                j["entries"] = es;
                break;
            }
        }
        return j;
    }

    static HModel from_json(const json& j) {
        try {
            const int N = j.at("N").get<int>();
            const std::string mode = j.value("mode", std::string("assigned"));
            if (mode == "formal")
                return j.contains("K") ? formal(N, j["K"].get<int>()) : formal(N);
            if (mode == "exponential") {
                if (N != 1) throw ParseError("exponential model requires N = 1");
                return exponential(j.at("K").get<int>(), j.value("sign", 1));
            }
            if (mode != "assigned") throw ParseError("unknown model mode '" + mode + "'");
            std::map<Key, RationalFunction> entries;
            for (const auto& e : j.at("entries")) {
                Key key{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>()};
                const json& v = e.at("value");
                RationalFunction value = v.is_string() ? RationalFunction(parse_rational(v.get<std::string>()))
                                                       : rational_function_from_json(v);
                if (!entries.emplace(key, std::move(value)).second) throw ParseError("duplicate h entry");
            }
            return assigned(N, std::move(entries));
        } catch (const json::exception& e) {
            throw ParseError(std::string("model JSON: ") + e.what());
        }
    }

private:
    static void check_N(int N) {
        if (N < 1) throw InvalidRange("N must be positive");
    }

    int N_ = 1;
    Mode mode_ = Mode::Formal;
    std::optional<int> K_;
    int sign_ = 1;
    std::map<Key, RationalFunction> entries_;
};

}  // namespace nschur
