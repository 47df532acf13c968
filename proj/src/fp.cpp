#include "diagcube/fp.hpp"

#include <map>
#include <mutex>
#include <random>
#include <set>

namespace diagcube {

using fpdetail::mulm;
using fpdetail::powm;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powm(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool fp_has_cube_roots(std::uint64_t p) { return is_prime_u64(p) && p % 3 == 1; }

FpField fp_plain(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("fp_plain: " + std::to_string(p) + " is not prime");
    if (p <= 3) throw std::invalid_argument("fp_plain: characteristic 2 and 3 are excluded");
    FpField f;
    f.p = p;
    f.omega = 0;
    return f;
}

namespace {
std::mutex omega_cache_mutex;
std::map<std::uint64_t, std::uint64_t> omega_cache; // p -> smaller primitive cube root
} // namespace

FpField fp_with_omega(std::uint64_t p, bool pick_larger) {
    if (!is_prime_u64(p)) throw std::invalid_argument("fp_with_omega: " + std::to_string(p) + " is not prime");
    if (p % 3 != 1) throw std::invalid_argument("fp_with_omega: p = " + std::to_string(p) + " has no primitive cube root of unity (p mod 3 != 1)");
    std::uint64_t w = 0;
    {
        std::lock_guard<std::mutex> lock(omega_cache_mutex);
        auto it = omega_cache.find(p);
        if (it != omega_cache.end()) w = it->second;
    }
    if (w == 0) {
        for (std::uint64_t g = 2; ; ++g) {
            std::uint64_t x = powm(g, (p - 1) / 3, p);
            if (x != 1) {
                std::uint64_t y = mulm(x, x, p);
                w = x < y ? x : y;
                break;
            }
        }
        std::lock_guard<std::mutex> lock(omega_cache_mutex);
        omega_cache[p] = w;
    }
    FpField f;
    f.p = p;
    f.omega = pick_larger ? mulm(w, w, p) : w;
    return f;
}

std::optional<FpElem> elem_cbrt(const FpElem& x) {
    std::uint64_t p = x.modulus();
    if (x.is_zero()) return FpElem(0, p);
    if (p % 3 != 1) {
        // cubing is a bijection; invert it
        std::uint64_t e = (2 * p - 1) / 3; // 3e ≡ 1 (mod p-1)
        return FpElem(powm(x.value(), e, p), p);
    }
    if (powm(x.value(), (p - 1) / 3, p) != 1) return std::nullopt;
    // moduli stay ≤ ~10^7, so a scan is fine; smallest root for determinism
    for (std::uint64_t r = 1; r < p; ++r) {
        if (mulm(mulm(r, r, p), r, p) == x.value()) return FpElem(r, p);
    }
    return std::nullopt;
}

std::optional<FpElem> elem_sqrt(const FpElem& x) {
    std::uint64_t p = x.modulus();
    if (x.is_zero()) return FpElem(0, p);
    if (p == 2) return x;
    if (powm(x.value(), (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        std::uint64_t r = powm(x.value(), (p + 1) / 4, p);
        return FpElem(r < p - r ? r : p - r, p);
    }
    // Tonelli–Shanks with the least quadratic non-residue
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powm(z, q, p), t = powm(x.value(), q, p), r = powm(x.value(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulm(tt, tt, p); ++i; }
        std::uint64_t b = powm(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulm(b, b, p);
        t = mulm(t, c, p);
        r = mulm(r, b, p);
    }
    return FpElem(r < p - r ? r : p - r, p);
}

std::optional<FpElem> rat_to_fp(const Rat& q, const FpField& f) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_class dm = den % pz;
    if (dm == 0) return std::nullopt;
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    std::uint64_t n = nm.get_ui(), d = dm.get_ui();
    return FpElem(n, f.p) * FpElem(d, f.p).inv();
}

std::optional<FpElem> cyclo_to_fp(const CycloRat& c, const FpField& f) {
    auto a = rat_to_fp(c.re(), f);
    if (!a) return std::nullopt;
    auto b = rat_to_fp(c.wcoef(), f);
    if (!b) return std::nullopt;
    return *a + *b * f.omega_elem();
}

std::uint64_t nth_sample_prime(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, unsigned index) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    rng.discard(7); // decouple from other users of the same seed
    std::set<std::uint64_t> seen;
    std::uint64_t span = hi - lo + 1;
    for (int attempts = 0; attempts < 100000; ++attempts) {
        std::uint64_t cand = lo + rng() % span;
        // walk forward to the next p ≡ 1 (mod 3)
        for (std::uint64_t p = cand; p <= hi; ++p) {
            if (p % 3 == 1 && p > 3 && is_prime_u64(p)) {
                if (seen.insert(p).second && seen.size() == index + 1u) return p;
                break;
            }
        }
    }
    throw error("nth_sample_prime: range too small for requested count");
}

} // namespace diagcube
