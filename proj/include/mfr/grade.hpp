#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>

namespace mfr {

struct Grade {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Grade&, const Grade&) = default;

    // product order
    bool leq(const Grade& o) const { return x <= o.x && y <= o.y; }

    Grade operator+(const Grade& o) const { return {x + o.x, y + o.y}; }
    Grade operator-(const Grade& o) const { return {x - o.x, y - o.y}; }
    Grade operator-() const { return {-x, -y}; }
};

inline constexpr Grade kEpsilon{1, 1};

inline Grade join(const Grade& a, const Grade& b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }
inline Grade meet(const Grade& a, const Grade& b) { return {std::min(a.x, b.x), std::min(a.y, b.y)}; }

inline bool lex_less(const Grade& a, const Grade& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
inline bool colex_less(const Grade& a, const Grade& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

enum class Order { product, lex, colex };
enum class Cmp { less, equal, greater, incomparable };

inline Cmp grade_compare(const Grade& a, const Grade& b, Order order) {
    if (a == b) return Cmp::equal;
    switch (order) {
    case Order::lex:
        return lex_less(a, b) ? Cmp::less : Cmp::greater;
    case Order::colex:
        return colex_less(a, b) ? Cmp::less : Cmp::greater;
    case Order::product:
        break;
    }
    if (a.leq(b)) return Cmp::less;
    if (b.leq(a)) return Cmp::greater;
    return Cmp::incomparable;
}

inline std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << '(' << g.x << ',' << g.y << ')'; }

struct ColexLess {
    bool operator()(const Grade& a, const Grade& b) const { return colex_less(a, b); }
};
struct LexLess {
    bool operator()(const Grade& a, const Grade& b) const { return lex_less(a, b); }
};

} // namespace mfr

template <>
struct std::hash<mfr::Grade> {
    std::size_t operator()(const mfr::Grade& g) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(g.x)) << 32) | std::uint32_t(g.y));
    }
};
