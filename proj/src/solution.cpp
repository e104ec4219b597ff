#include "es/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace es {

Triple make_triple(u64 n, u64 a, u64 b, u64 c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (!checked_triple_identity(n, a, b, c)) {
        throw std::invalid_argument("make_triple: (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) +
                                    ") does not solve 4/" + std::to_string(n));
    }
    return Triple{a, b, c};
}

SolutionType classify_type(u64 p, const Triple& t) {
    if (!checked_triple_identity(p, t.x, t.y, t.z))
        throw std::invalid_argument("classify_type: triple does not solve 4/" + std::to_string(p));
    if (!is_prime(p)) return SolutionType::Other;
    // Valid prime-denominator triples always satisfy p | z, p ∤ x, x < p;
    // a breach here means the triple came from broken code, not from math.
    if (t.z % p != 0 || t.x % p == 0 || t.x >= p)
        throw std::logic_error("classify_type: valid triple for prime " + std::to_string(p) +
                               " violates p | z, p ∤ x, x < p");
    return (t.y % p == 0) ? SolutionType::TypeII : SolutionType::TypeI;
}

std::optional<DuvWitness> duv_decompose(const Triple& t, u64 p) {
    if (!is_prime(p))
        throw std::invalid_argument("duv_decompose: p must be prime");
    if (!checked_triple_identity(p, t.x, t.y, t.z))
        throw std::invalid_argument("duv_decompose: triple does not solve 4/" + std::to_string(p));
    // d = x*y/z is the only candidate: z = d*u*v forces it. Checking d | x
    // and d | y explicitly guards against x*y/z being integral by accident.
    const u128 xy = u128(t.x) * t.y;
    if (xy % t.z != 0) return std::nullopt;
    const u64 d = static_cast<u64>(xy / t.z);  // <= min(x, y) once d | x holds
    if (d == 0 || t.x % d != 0 || t.y % d != 0) return std::nullopt;
    const u64 u = t.x / d;
    const u64 v = t.y / d;
    // z = d*u*v now holds by construction; p | v is forced for valid prime
    // triples (p | z = duv, p ∤ x = du ⇒ p | v), as is gcd(u, v) = 1.
    if (v % p != 0)
        throw std::logic_error("duv_decompose: witness for prime " + std::to_string(p) +
                               " has p ∤ v");
    if (gcd(u, v) != 1)
        throw std::logic_error("duv_decompose: witness for prime " + std::to_string(p) +
                               " has gcd(u, v) != 1");
    return DuvWitness{d, u, v, v / p};
}

bool is_gcd_form(const Triple& t) {
    return t.y % t.x == 0 && t.z % t.x == 0;
}

}  // namespace es
