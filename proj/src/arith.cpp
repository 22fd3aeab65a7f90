#include "ahilb/arith.hpp"

#include <limits>

namespace ahilb {

void violation(const std::string& what) { throw InvariantViolation(what); }

Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) violation("integer overflow in addition");
    return r;
}

Int sub_checked(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) violation("integer overflow in subtraction");
    return r;
}

Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) violation("integer overflow in multiplication");
    return r;
}

Int narrow(Wide w) {
    if (w > std::numeric_limits<Int>::max() || w < std::numeric_limits<Int>::min())
        violation("integer overflow narrowing a wide product");
    return static_cast<Int>(w);
}

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return mul_checked(a / gcd(a, b), b < 0 ? -b : b);
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

Egcd egcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < k) return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = mul_checked(r, n - k + i) / i;
    return r;
}

Int det2(const Vec2& a, const Vec2& b) {
    return narrow(Wide(a.x) * b.y - Wide(a.y) * b.x);
}

Int content(const Vec2& v) { return gcd(v.x, v.y); }

Vec2 primitive(const Vec2& v) {
    Int g = content(v);
    require(g != 0, "primitive of the zero vector");
    return {v.x / g, v.y / g};
}

Vec3 Vec3::operator+(const Vec3& o) const {
    return {{add_checked(c[0], o.c[0]), add_checked(c[1], o.c[1]), add_checked(c[2], o.c[2])}};
}

Vec3 Vec3::operator-(const Vec3& o) const {
    return {{sub_checked(c[0], o.c[0]), sub_checked(c[1], o.c[1]), sub_checked(c[2], o.c[2])}};
}

Vec3 operator*(Int k, const Vec3& v) {
    return {{mul_checked(k, v[0]), mul_checked(k, v[1]), mul_checked(k, v[2])}};
}

Int dot(const Vec3& a, const Vec3& b) {
    return narrow(Wide(a[0]) * b[0] + Wide(a[1]) * b[1] + Wide(a[2]) * b[2]);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {{narrow(Wide(a[1]) * b[2] - Wide(a[2]) * b[1]),
             narrow(Wide(a[2]) * b[0] - Wide(a[0]) * b[2]),
             narrow(Wide(a[0]) * b[1] - Wide(a[1]) * b[0])}};
}

Wide det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    Vec3 x = cross(b, c);
    return Wide(a[0]) * x[0] + Wide(a[1]) * x[1] + Wide(a[2]) * x[2];
}

Int content(const Vec3& v) { return gcd(gcd(v[0], v[1]), v[2]); }

Vec3 primitive(const Vec3& v) {
    Int g = content(v);
    require(g != 0, "primitive of the zero vector");
    return {{v[0] / g, v[1] / g, v[2] / g}};
}

std::string to_string(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

}  // namespace ahilb
