#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spherecheck {

// Permutation of {0,1,2,3}; (p * q)(x) = p(q(x)).
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    static std::optional<Perm4> from_string(std::string_view digits);
    static constexpr Perm4 transposition(int a, int b) {
        Perm4 p;
        p.img_[a] = static_cast<std::uint8_t>(b);
        p.img_[b] = static_cast<std::uint8_t>(a);
        return p;
    }

    constexpr int operator[](int x) const { return img_[x]; }
    constexpr Perm4 operator*(const Perm4& q) const {
        return Perm4(img_[q.img_[0]], img_[q.img_[1]], img_[q.img_[2]], img_[q.img_[3]]);
    }
    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }
    // +1 for even, -1 for odd.
    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }
    constexpr bool is_odd() const { return sign() < 0; }

    std::string str() const;

    constexpr auto operator<=>(const Perm4&) const = default;

private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace spherecheck
