#pragma once

#include <array>
#include <compare>
#include <string>

#include "nschur/errors.hpp"

namespace nschur {

/// A polynomial indeterminate.
///
/// The kind fixes the global variable order used by the term order:
/// time variables by index, then h symbols by (k, i, j), then Plücker
/// coefficients by their index tuple, then auxiliary symbols.
/// t_1, t_2, t_3 double as x, y, t.
struct Variable {
    enum class Kind : unsigned char { Time = 0, H = 1, Pi = 2, Aux = 3 };

    Kind kind = Kind::Aux;
    // Time: {i, 0, 0}; H: {k, i, j}; Pi: up to three labels; Aux: {n, 0, 0}.
    std::array<int, 3> key{};

    static Variable time(int i) { return {Kind::Time, {i, 0, 0}}; }
    static Variable x() { return time(1); }
    static Variable y() { return time(2); }
    static Variable t() { return time(3); }
    static Variable h(int i, int j, int k) { return {Kind::H, {k, i, j}}; }
    static Variable pi(int a, int b = 0, int c = 0) { return {Kind::Pi, {a, b, c}}; }
    static Variable aux(int n) { return {Kind::Aux, {n, 0, 0}}; }

    int h_i() const { return key[1]; }
    int h_j() const { return key[2]; }
    int h_k() const { return key[0]; }
    int time_index() const { return key[0]; }

    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;

    /// Human-readable name: x, y, t, t4, h[1,2,0], pi[1,2], a0.
    std::string name() const {
        switch (kind) {
            case Kind::Time:
                if (key[0] == 1) return "x";
                if (key[0] == 2) return "y";
                if (key[0] == 3) return "t";
                return "t" + std::to_string(key[0]);
            case Kind::H:
                return "h[" + std::to_string(h_i()) + "," + std::to_string(h_j()) + "," +
                       std::to_string(h_k()) + "]";
            case Kind::Pi: {
                std::string s = "pi[" + std::to_string(key[0]);
                for (int n = 1; n < 3 && key[n] != 0; ++n) s += "," + std::to_string(key[n]);
                return s + "]";
            }
            case Kind::Aux:
                return "a" + std::to_string(key[0]);
        }
        return "?";
    }
};

}  // namespace nschur
