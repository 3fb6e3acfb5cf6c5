#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uilab {

// Fixed browser viewport. Pages scroll vertically only.
inline constexpr int kViewportWidth = 1280;
inline constexpr int kViewportHeight = 720;
inline constexpr int kScrollStep = 360;

inline constexpr int kSiteSchemaVersion = 1;
inline constexpr int kLogSchemaVersion = 1;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Axis-aligned rectangle in CSS-pixel page coordinates. Half-open on both
// axes: a point (px, py) is inside iff x <= px < x+w and y <= py < y+h,
// so zero-area boxes contain nothing and intersect nothing.
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool contains(int px, int py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
    bool intersects(const Rect& o) const {
        return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
    }
    Rect intersection(const Rect& o) const {
        int ix = std::max(x, o.x);
        int iy = std::max(y, o.y);
        int ix2 = std::min(x + w, o.x + o.w);
        int iy2 = std::min(y + h, o.y + o.h);
        if (ix2 <= ix || iy2 <= iy) return {};
        return {ix, iy, ix2 - ix, iy2 - iy};
    }
    bool empty() const { return w <= 0 || h <= 0; }
    bool operator==(const Rect&) const = default;
};

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(uint64_t v);

// Deterministic PRNG used everywhere randomness is needed. The standard
// <random> distributions are not specified bit-for-bit across library
// implementations, so bounded draws are done by hand here.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        // Lemire rejection; unbiased.
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        uint64_t l = static_cast<uint64_t>(m);
        if (l < n) {
            uint64_t t = (0 - n) % n;
            while (l < t) {
                x = next();
                m = static_cast<__uint128_t>(x) * n;
                l = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double real() { return (next() >> 11) * 0x1.0p-53; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    uint64_t state_;
};

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string lower(std::string_view s);

// "issue-delete-3" -> "issue-delete". Instance suffixes never carry meaning.
std::string strip_index(std::string_view id);

// Lowercase, non-alphanumerics collapsed to single dashes.
std::string slugify(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

}  // namespace uilab
