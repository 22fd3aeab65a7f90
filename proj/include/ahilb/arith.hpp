#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahilb {

using Int = std::int64_t;
using Wide = __int128;

// Bad user input (exit code 1 at the CLI).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (exit code 2 at the CLI).
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] void violation(const std::string& what);

inline void require(bool cond, const std::string& what) {
    if (!cond) violation(what);
}

Int add_checked(Int a, Int b);
Int sub_checked(Int a, Int b);
Int mul_checked(Int a, Int b);
Int narrow(Wide w);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int mod(Int a, Int n);

// g = gcd(a,b) >= 0 with x*a + y*b = g.
struct Egcd {
    Int g, x, y;
};
Egcd egcd(Int a, Int b);

Int binomial(Int n, Int k);

struct Vec2 {
    Int x = 0, y = 0;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {add_checked(x, o.x), add_checked(y, o.y)}; }
    Vec2 operator-(const Vec2& o) const { return {sub_checked(x, o.x), sub_checked(y, o.y)}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec2 operator*(Int k, const Vec2& v) { return {mul_checked(k, v.x), mul_checked(k, v.y)}; }

// Standard determinant x1*y2 - x2*y1.
Int det2(const Vec2& a, const Vec2& b);
Int content(const Vec2& v);
Vec2 primitive(const Vec2& v);

struct Vec3 {
    std::array<Int, 3> c{0, 0, 0};
    Int& operator[](std::size_t i) { return c[i]; }
    Int operator[](std::size_t i) const { return c[i]; }
    friend auto operator<=>(const Vec3&, const Vec3&) = default;
    Vec3 operator+(const Vec3& o) const;
    Vec3 operator-(const Vec3& o) const;
    Vec3 operator-() const { return {{-c[0], -c[1], -c[2]}}; }
    Int sum() const { return c[0] + c[1] + c[2]; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

Vec3 operator*(Int k, const Vec3& v);
Int dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Wide det3(const Vec3& a, const Vec3& b, const Vec3& c);
Int content(const Vec3& v);
Vec3 primitive(const Vec3& v);

std::string to_string(const Vec3& v);

}  // namespace ahilb
