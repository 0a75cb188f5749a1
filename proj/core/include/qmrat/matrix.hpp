#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace qmrat {

// 2x2 integer matrix [[a, b], [c, d]]; group elements always have det +-1.
struct IntMatrix2 {
    int64_t a = 1, b = 0, c = 0, d = 1;

    auto operator<=>(const IntMatrix2&) const = default;

    int64_t det() const { return a * d - b * c; }
    int64_t trace() const { return a + d; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }

    IntMatrix2 transpose() const { return {a, c, b, d}; }

    // Inverse of a unimodular matrix (adjugate over det).
    IntMatrix2 inverse() const {
        int64_t dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
               std::to_string(c) + "," + std::to_string(d) + "]]";
    }
};

inline const IntMatrix2 kIdentity{1, 0, 0, 1};
inline const IntMatrix2 kLambda{1, 0, 0, -1};   // order-2 reflection, det -1
inline const IntMatrix2 kTau{0, 1, 1, 0};       // swap, det -1
inline const IntMatrix2 kSigma{0, -1, 1, 0};    // rotation of order 4
inline const IntMatrix2 kRho{1, -1, 1, 0};      // rotation of order 6

} // namespace qmrat
