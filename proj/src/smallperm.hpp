#ifndef OSCBASIS_SMALLPERM_HPP
#define OSCBASIS_SMALLPERM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace osc {

// Permutation of {0,1,2,3}, stored as images.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    Perm4() = default;
    Perm4(int a, int b, int c, int d)
        : img{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
              static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    int operator[](int i) const { return img[static_cast<std::size_t>(i)]; }

    bool operator==(const Perm4& o) const { return img == o.img; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[img[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // this after other: (this*other)(x) = this(other(x))
    Perm4 of(const Perm4& other) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[static_cast<std::size_t>(i)] = img[other.img[static_cast<std::size_t>(i)]];
        return r;
    }

    bool isOdd() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[static_cast<std::size_t>(i)] > img[static_cast<std::size_t>(j)]) ++inv;
        return (inv % 2) == 1;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>('0' + img[static_cast<std::size_t>(i)]));
        return s;
    }

    static Perm4 fromDigits(const std::string& s) {
        if (s.size() != 4) throw std::invalid_argument("permutation needs 4 digits");
        Perm4 p;
        bool seen[4] = {false, false, false, false};
        for (int i = 0; i < 4; ++i) {
            char c = s[static_cast<std::size_t>(i)];
            if (c < '0' || c > '3') throw std::invalid_argument("permutation digit out of range");
            int v = c - '0';
            if (seen[v]) throw std::invalid_argument("permutation repeats a digit");
            seen[v] = true;
            p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        return p;
    }
};

} // namespace osc

#endif
