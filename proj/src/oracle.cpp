#include "es/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace es {

namespace {

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

u64 narrow(u128 v, const char* what) {
    if (v > kU64Max)
        throw std::overflow_error(std::string(what) + " exceeds 64 bits; n is past the oracle's documented range");
    return static_cast<u64>(v);
}

// x must satisfy n/4 < x (1/x < 4/n) and x <= 3n/4 (3/x >= 4/n).
u64 x_lo(u64 n) { return n / 4 + 1; }
u64 x_hi(u64 n) { return (3 * n) / 4; }

// All divisors of (n*x)^2 that are <= n*x, ascending. n and x are factored
// separately so the product never needs factoring as one big integer.
std::vector<u64> square_divisors_upto_root(u64 n, u64 x, u64 root) {
    std::map<u64, int> exps;
    for (auto [p, e] : detail::factorize(n)) exps[p] += 2 * e;
    for (auto [p, e] : detail::factorize(x)) exps[p] += 2 * e;
    std::vector<u64> divs{1};
    for (auto [p, e] : exps) {
        std::size_t prev = divs.size();
        u128 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            if (pe > root) break;
            for (std::size_t j = 0; j < prev; ++j) {
                u128 d = u128(divs[j]) * static_cast<u64>(pe);
                if (d <= root) divs.push_back(static_cast<u64>(d));
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

EnumerationResult enumerate_all(u64 n, std::optional<u64> cap) {
    if (n == 0) throw std::invalid_argument("enumerate_all: n must be positive");
    EnumerationResult out;
    for (u64 x = x_lo(n); x <= x_hi(n); ++x) {
        const u128 nx = u128(n) * x;
        const u64 a = 4 * x - n;  // > 0 on this x range
        // z > 0 forces y > nx/a; z >= y forces y <= 2nx/a; plus y >= x.
        u64 y = std::max(x, narrow(nx / a + 1, "oracle y bound"));
        const u64 y_end = narrow(2 * nx / a, "oracle y bound");
        for (; y <= y_end; ++y) {
            const u128 den = u128(a) * y - nx;
            const u128 num = nx * y;
            if (num % den != 0) continue;
            const u64 z = narrow(num / den, "oracle z");
            if (z < y) continue;  // only at y = 2nx/a edge cases
            if (!checked_triple_identity(n, x, y, z))
                throw std::logic_error("enumerate_all: derived triple fails the identity at n=" +
                                       std::to_string(n));
            if (cap && out.triples.size() == *cap) {
                // This hit is the (cap+1)-th solution, so the cut is real;
                // reaching the end of the scan instead leaves the flag off.
                out.truncated = true;
                return out;
            }
            out.triples.push_back(Triple{x, y, z});
        }
    }
    return out;
}

std::optional<Triple> first_solution(u64 n) {
    if (n == 0) throw std::invalid_argument("first_solution: n must be positive");
    for (u64 x = x_lo(n); x <= x_hi(n); ++x) {
        const u64 A = 4 * x - n;
        const u64 B = narrow(u128(n) * x, "oracle B = n*x");
        // 1/y + 1/z = A/B  <=>  (Ay - B)(Az - B) = B^2. Taking D = Ay - B
        // over divisors of B^2 with D <= B (ascending, so y ascends) makes
        // z >= y automatic; y and z must then divide out exactly.
        const u128 Bsq = u128(B) * B;
        for (u64 D : square_divisors_upto_root(n, x, B)) {
            if ((B + D) % A != 0) continue;
            const u128 zn = Bsq / D + B;
            if (zn % A != 0) continue;
            const u64 y = (B + D) / A;
            if (y < x) continue;
            const u64 z = narrow(zn / A, "oracle z");
            if (!checked_triple_identity(n, x, y, z))
                throw std::logic_error("first_solution: derived triple fails the identity at n=" +
                                       std::to_string(n));
            return Triple{x, y, z};
        }
    }
    return std::nullopt;
}

bool is_egyptian_order3(u64 n) {
    return first_solution(n).has_value();
}

u64 count_solutions(u64 n) {
    return enumerate_all(n).triples.size();
}

}  // namespace es
