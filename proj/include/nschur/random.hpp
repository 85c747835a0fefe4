#pragma once

#include <cstdint>
#include <random>

#include "nschur/frame.hpp"

namespace nschur {

/// splitmix64 step; derives independent per-instance seeds from one root seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t instance_seed(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root ^ splitmix64(index + 1));
}

class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    BigRational rational(int span = 4, int max_den = 3) {
        return make_rational(integer(-span, span), integer(1, max_den));
    }

    /// Assigned model with random rational H_0..H_K and det H_0 != 0.
    HModel assigned_model(int N, int K) {
        for (;;) {
            std::map<HModel::Key, RationalFunction> e;
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int k = 0; k <= K; ++k) e[{i, j, k}] = RationalFunction(rational());
            HModel m = HModel::assigned(N, e);
            // assigned() shrinks K to the largest nonzero block; keep the requested support.
            if (!m.det_H0().is_zero() && m.support() == K) return m;
        }
    }

    /// Random frame with linearly independent columns.
    FiniteFrame frame(int N, int r, int d) {
        for (;;) {
            Matrix<BigRational> A = zero_matrix<BigRational>(static_cast<std::size_t>(r + d), static_cast<std::size_t>(r));
            for (auto& row : A)
                for (auto& e : row) e = integer(0, 2) ? rational() : BigRational(0);
            try {
                return FiniteFrame(N, r, d, std::move(A));
            } catch (const RankDeficient&) {
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace nschur
