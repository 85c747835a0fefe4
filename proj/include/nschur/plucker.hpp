#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nschur/determinant.hpp"
#include "nschur/serialize.hpp"

namespace nschur {

/// Sorted k-subset of {1..n}.
using Subset = std::vector<int>;

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<Subset> k_subsets(int k, int n) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline std::string subset_string(const Subset& s) {
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out;
}

template <class Scalar>
struct PluckerVector {
    int k = 0, n = 0;
    std::map<Subset, Scalar> coords;

    Scalar at(const Subset& s) const {
        auto it = coords.find(s);
        return it == coords.end() ? Scalar(0) : it->second;
    }
};

/// Maximal minors of a k x n matrix, indexed by column subsets.
inline PluckerVector<BigRational> minors(const Matrix<BigRational>& A) {
    const int k = static_cast<int>(A.size());
    if (k == 0) throw InvalidRange("empty matrix");
    const int n = static_cast<int>(A[0].size());
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n) throw InvalidRange("ragged matrix");
    if (k > n) throw RankDeficient("more rows than columns");
    PluckerVector<BigRational> v{k, n, {}};
    bool nonzero = false;
    for (const auto& cols : k_subsets(k, n)) {
        Matrix<BigRational> sub = zero_matrix<BigRational>(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = A[i][cols[static_cast<std::size_t>(j)] - 1];
        BigRational d = det_rational(std::move(sub));
        nonzero = nonzero || d != 0;
        v.coords.emplace(cols, d);
    }
    if (!nonzero) throw RankDeficient("matrix has rank below " + std::to_string(k));
    return v;
}

/// Quadratic form sum c * p_I * p_J with I <= J.
struct QuadraticRelation {
    std::map<std::pair<Subset, Subset>, BigRational> terms;

    void add(Subset a, Subset b, const BigRational& c) {
        if (a > b) std::swap(a, b);
        auto key = std::make_pair(std::move(a), std::move(b));
        BigRational& slot = terms[key];
        slot += c;
        if (slot == 0) terms.erase(key);
    }

    template <class Scalar>
    Scalar evaluate(const std::map<Subset, Scalar>& p) const {
        Scalar total(0);
        auto get = [&](const Subset& s) {
            auto it = p.find(s);
            return it == p.end() ? Scalar(0) : it->second;
        };
        for (const auto& [key, c] : terms) total += Scalar(c) * get(key.first) * get(key.second);
        return total;
    }

    /// Polynomial in pi variables, with `label` mapping each subset to its variable.
    template <class Label>
    Polynomial to_polynomial(Label&& label) const {
        Polynomial p;
        for (const auto& [key, c] : terms) p += var(label(key.first)) * var(label(key.second)) * Polynomial(c);
        return p;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [key, c] : terms) {
            BigRational a = abs(c);
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (a != 1) s += nschur::to_string(a) + "*";
            s += "p" + subset_string(key.first) + "*p" + subset_string(key.second);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const QuadraticRelation&, const QuadraticRelation&) = default;
    friend auto operator<=>(const QuadraticRelation& a, const QuadraticRelation& b) {
        if (a.terms.size() != b.terms.size()) return a.terms.size() <=> b.terms.size();
        auto ia = a.terms.begin();
        for (auto ib = b.terms.begin(); ib != b.terms.end(); ++ia, ++ib) {
            if (auto c = ia->first <=> ib->first; c != 0) return c;
            if (ia->second != ib->second) return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
};

namespace detail {

// Sorts v in place; returns the permutation sign, or 0 on a repeated entry.
inline int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace detail

/// Exchange relations sum_l (-1)^l p(I + j_l) p(J - j_l) over (k-1)-subsets I
/// and (k+1)-subsets J, scaled to leading coefficient 1 and deduplicated.
inline std::vector<QuadraticRelation> exchange_relations(int k, int n) {
    if (k <= 0 || k >= n) throw InvalidRange("need 0 < k < n");
    std::set<QuadraticRelation> seen;
    for (const auto& I : k_subsets(k - 1, n))
        for (const auto& J : k_subsets(k + 1, n)) {
            QuadraticRelation rel;
            for (int l = 0; l <= k; ++l) {
                std::vector<int> left = I;
                left.push_back(J[static_cast<std::size_t>(l)]);
                int sign = detail::sort_with_sign(left);
                if (sign == 0) continue;
                Subset right = J;
                right.erase(right.begin() + l);
                rel.add(left, right, BigRational((l % 2 ? -1 : 1) * sign));
            }
            if (rel.terms.empty()) continue;
            BigRational lead = rel.terms.begin()->second;
            for (auto& [key, c] : rel.terms) c /= lead;
            seen.insert(std::move(rel));
        }
    return {seen.begin(), seen.end()};
}

/// Number of linearly independent relations in the list.
inline int relation_rank(const std::vector<QuadraticRelation>& rels) {
    std::map<std::pair<Subset, Subset>, std::size_t> column;
    for (const auto& r : rels)
        for (const auto& [key, c] : r.terms) column.emplace(key, column.size());
    Matrix<BigRational> m = zero_matrix<BigRational>(rels.size(), column.size());
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (const auto& [key, c] : rels[i].terms) m[i][column.at(key)] = c;
    int rank = 0;
    for (std::size_t col = 0; col < column.size() && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col] == 0) continue;
            BigRational f = m[r][col] / m[static_cast<std::size_t>(rank)][col];
            for (std::size_t c = col; c < column.size(); ++c) m[r][c] -= f * m[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    return rank;
}

/// True iff every exchange relation vanishes exactly on v.
inline bool plucker_check(const PluckerVector<BigRational>& v) {
    if (v.k <= 0 || v.k >= v.n) return true;
    for (const auto& rel : exchange_relations(v.k, v.n))
        if (rel.evaluate(v.coords) != 0) return false;
    return true;
}

inline json to_json(const PluckerVector<BigRational>& v) {
    json coords = json::array();
    for (const auto& [s, c] : v.coords) coords.push_back({{"subset", s}, {"value", to_string(c)}});
    return {{"k", v.k}, {"n", v.n}, {"coords", coords}};
}

inline PluckerVector<BigRational> plucker_from_json(const json& j) {
    try {
        PluckerVector<BigRational> v{j.at("k").get<int>(), j.at("n").get<int>(), {}};
        if (v.k <= 0 || v.k >= v.n) throw InvalidRange("need 0 < k < n");
        for (const auto& e : j.at("coords")) {
            Subset s = e.at("subset").get<Subset>();
            if (static_cast<int>(s.size()) != v.k || !std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 || s.back() > v.n)
                throw ParseError("invalid subset in Plucker vector");
            const json& val = e.at("value");
            v.coords[s] = val.is_string() ? parse_rational(val.get<std::string>()) : BigRational(val.get<long>());
        }
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("Plucker JSON: ") + e.what());
    }
}

}  // namespace nschur
