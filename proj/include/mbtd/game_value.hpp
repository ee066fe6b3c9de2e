#pragma once

#include <cstdint>
#include <string>

namespace mbtd {

// Move count in N together with an absorbing infinity ("no winning
// strategy"). Finite values compare by count and every finite value is
// below infinity.
class GameValue {
public:
    static constexpr GameValue finite(std::uint32_t moves) { return GameValue(moves); }
    static constexpr GameValue infinity() { return GameValue(kInf); }

    constexpr GameValue() : raw_(kInf) {}

    constexpr bool is_finite() const { return raw_ != kInf; }
    constexpr std::uint32_t moves() const { return raw_; }

    // One more move by the scored player; infinity absorbs.
    constexpr GameValue plus_one() const {
        return is_finite() ? finite(raw_ + 1) : infinity();
    }

    constexpr bool operator==(const GameValue&) const = default;
    constexpr bool operator<(GameValue o) const { return raw_ < o.raw_; }
    constexpr bool operator<=(GameValue o) const { return raw_ <= o.raw_; }
    constexpr bool operator>(GameValue o) const { return raw_ > o.raw_; }
    constexpr bool operator>=(GameValue o) const { return raw_ >= o.raw_; }

    std::string to_string() const {
        return is_finite() ? std::to_string(raw_) : std::string("infinity");
    }

    static constexpr std::uint32_t kInf = 0xFFFFFFFFu;

private:
    constexpr explicit GameValue(std::uint32_t raw) : raw_(raw) {}

    std::uint32_t raw_;
};

inline GameValue min(GameValue a, GameValue b) { return a < b ? a : b; }
inline GameValue max(GameValue a, GameValue b) { return a > b ? a : b; }

}  // namespace mbtd
