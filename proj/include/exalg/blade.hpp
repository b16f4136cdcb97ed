#pragma once

// Basis blades e_I as bitmasks of strictly increasing generator indices.
// Index i in [1, 62] occupies bit i-1; the empty mask is the unit of A_0.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exalg {

inline constexpr int kMaxGenerators = 62;   // arithmetic cap
inline constexpr int kMaxEnumeration = 16;  // cap for exhaustive basis walks

class Blade {
public:
    Blade() = default;  // unit blade, grade 0
    explicit Blade(std::uint64_t mask) : mask_(mask) {}

    static Blade unit() { return Blade(); }

    static Blade from_indices(const std::vector<int>& indices, int n) {
        std::uint64_t mask = 0;
        int prev = 0;
        for (int i : indices) {
            if (i < 1 || i > n) throw std::out_of_range("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
            if (i <= prev) throw std::invalid_argument("blade indices must be strictly increasing");
            mask |= std::uint64_t{1} << (i - 1);
            prev = i;
        }
        return Blade(mask);
    }

    std::uint64_t mask() const { return mask_; }
    int grade() const { return std::popcount(mask_); }
    bool is_unit() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> (i - 1)) & 1; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    bool operator==(const Blade& o) const { return mask_ == o.mask_; }
    bool operator!=(const Blade& o) const { return mask_ != o.mask_; }

    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        for (int i : indices()) {
            if (!s.empty()) s += "^";
            s += "e" + std::to_string(i);
        }
        return s;
    }

private:
    std::uint64_t mask_ = 0;
};

// Lexicographic order on the increasing index sequences, the conventional
// listing for an equal-grade basis (e1^e2 < e1^e3 < e2^e3).
inline bool blade_lex_less(Blade a, Blade b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x && y) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

// Term order of canonical output: grade-major, then lexicographic.
struct BladeOrder {
    bool operator()(Blade a, Blade b) const {
        if (a.grade() != b.grade()) return a.grade() < b.grade();
        return blade_lex_less(a, b);
    }
};

// Sign of reordering the concatenation u,v into one increasing sequence:
// 0 when the supports overlap, otherwise (-1)^inv with
// inv = |{(i, j) : i in u, j in v, i > j}|.
struct WedgeSign {
    int sign;  // +1, -1, or 0
    Blade result;
};

inline WedgeSign blade_wedge_sign(Blade u, Blade v) {
    if (u.mask() & v.mask()) return {0, Blade()};
    int inversions = 0;
    for (std::uint64_t m = u.mask(); m; m &= m - 1) {
        int i = std::countr_zero(m);  // index i+1 in u
        std::uint64_t below = (std::uint64_t{1} << i) - 1;
        inversions += std::popcount(v.mask() & below);
    }
    return {inversions % 2 == 0 ? 1 : -1, Blade(u.mask() | v.mask())};
}

}  // namespace exalg
