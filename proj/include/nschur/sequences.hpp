#pragma once

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nschur/errors.hpp"

namespace nschur {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

/// Strictly increasing integer sequence (s_0, s_1, ...) with s_j = j for all
/// large j. Only the shortest non-trivial prefix is stored; the vacuum
/// (0, 1, 2, ...) has an empty prefix.
class VirtualSequence {
public:
    VirtualSequence() = default;

    /// Accepts any prefix of a valid sequence, trivial tail entries included.
    explicit VirtualSequence(std::vector<int> prefix) : prefix_(std::move(prefix)) {
        for (std::size_t j = 1; j < prefix_.size(); ++j)
            if (prefix_[j] <= prefix_[j - 1]) throw InvalidRange("sequence must be strictly increasing");
        const int n = static_cast<int>(prefix_.size());
        if (n > 0 && prefix_.back() > n - 1)
            throw InvalidRange("sequence prefix cannot be continued by s_j = j");
        while (!prefix_.empty() && prefix_.back() == static_cast<int>(prefix_.size()) - 1) prefix_.pop_back();
    }

    static VirtualSequence vacuum() { return {}; }

    /// Comma-separated prefix literal, e.g. "-2,1"; empty string is the vacuum.
    static VirtualSequence parse(std::string_view text) {
        std::vector<int> values;
        std::string item;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, item, ',')) {
            auto b = item.find_first_not_of(" \t");
            if (b == std::string::npos) {
                if (text.find_first_not_of(" \t") == std::string_view::npos) break;
                throw InvalidRange("empty entry in sequence literal '" + std::string(text) + "'");
            }
            auto e = item.find_last_not_of(" \t");
            std::string tok = item.substr(b, e - b + 1);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw InvalidRange("not an integer: '" + tok + "'");
            values.push_back(v);
        }
        return VirtualSequence(std::move(values));
    }

    const std::vector<int>& prefix() const { return prefix_; }
    /// Length of the canonical prefix: s_j = j for every j >= this.
    int stable_from() const { return static_cast<int>(prefix_.size()); }
    bool is_vacuum() const { return prefix_.empty(); }

    int operator[](int j) const { return j < stable_from() ? prefix_[static_cast<std::size_t>(j)] : j; }

    /// Sum over j of (j - s_j); equals the size of the associated partition.
    int weight() const {
        int w = 0;
        for (int j = 0; j < stable_from(); ++j) w += j - prefix_[static_cast<std::size_t>(j)];
        return w;
    }

    friend auto operator<=>(const VirtualSequence&, const VirtualSequence&) = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < prefix_.size(); ++j) s += (j ? "," : "") + std::to_string(prefix_[j]);
        return s;
    }

private:
    std::vector<int> prefix_;
};

/// lambda_{j+1} = j - s_j.
inline Partition to_partition(const VirtualSequence& s) {
    Partition p;
    for (int j = 0; j < s.stable_from(); ++j) {
        int part = j - s[j];
        if (part > 0) p.parts.push_back(part);
    }
    return p;
}

/// s_j = j - lambda_{j+1}.
inline VirtualSequence from_partition(const Partition& p) {
    std::vector<int> prefix;
    for (int j = 0; j < p.length(); ++j) {
        int part = p.parts[static_cast<std::size_t>(j)];
        if (part <= 0 || (j > 0 && part > p.parts[static_cast<std::size_t>(j - 1)]))
            throw InvalidRange("not a partition: " + p.to_string());
        prefix.push_back(j - part);
    }
    return VirtualSequence(std::move(prefix));
}

/// All partitions of n, largest first part first (reverse lexicographic).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n);
    return out;
}

/// Sequences with k - n <= s_i <= k - 1 for i < k and s_i = i beyond, in
/// lexicographic order of the length-k prefix.
inline std::vector<VirtualSequence> enumerate_Skn(int k, int n) {
    if (k <= 0 || k >= n)
        throw InvalidRange("need 0 < k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    std::vector<VirtualSequence> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = next; v <= k - 1 - (need - 1); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, k - n);
    return out;
}

/// The k-subset of {1..n} corresponding to S in S_{k,n}: s_i + n - k + 1.
inline std::vector<int> subset_label(const VirtualSequence& s, int k, int n) {
    if (k <= 0 || k >= n) throw InvalidRange("need 0 < k < n");
    if (s.stable_from() > k) throw NotInSkn("sequence " + s.to_string() + " is not stable from index k");
    std::vector<int> label;
    for (int i = 0; i < k; ++i) {
        int v = s[i];
        if (v < k - n || v > k - 1) throw NotInSkn("entry " + std::to_string(v) + " out of range");
        label.push_back(v + n - k + 1);
    }
    return label;
}

/// Inverse of subset_label.
inline VirtualSequence from_subset_label(const std::vector<int>& label, int k, int n) {
    if (static_cast<int>(label.size()) != k) throw NotInSkn("label must have k entries");
    std::vector<int> prefix;
    for (int v : label) {
        if (v < 1 || v > n) throw NotInSkn("label entry out of range");
        prefix.push_back(v - (n - k + 1));
    }
    return VirtualSequence(std::move(prefix));
}

/// Every sequence of weight at most w_max, ordered by weight then by
/// partition in reverse lexicographic order.
inline std::vector<VirtualSequence> enumerate_by_weight(int w_max) {
    if (w_max < 0) throw InvalidRange("w_max must be nonnegative");
    std::vector<VirtualSequence> out;
    for (int w = 0; w <= w_max; ++w)
        for (const auto& p : partitions_of(w)) out.push_back(from_partition(p));
    return out;
}

}  // namespace nschur
