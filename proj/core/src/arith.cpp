#include "fricke/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fricke {

long long Factorization::phi() const {
    long long r = 1;
    for (auto [p, v] : factors) {
        r *= p - 1;
        for (int i = 1; i < v; ++i) r *= p;
    }
    return r;
}

bool Factorization::is_squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](auto f) { return f.second == 1; });
}

int Factorization::valuation(long long p) const {
    for (auto [q, v] : factors)
        if (q == p) return v;
    return 0;
}

std::vector<long long> Factorization::divisors() const {
    std::vector<long long> ds{1};
    for (auto [p, v] : factors) {
        std::size_t sz = ds.size();
        long long pk = 1;
        for (int i = 0; i < v; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<long long> Factorization::hall_divisors() const {
    std::vector<long long> ds{1};
    for (auto [p, v] : factors) {
        long long pk = 1;
        for (int i = 0; i < v; ++i) pk *= p;
        std::size_t sz = ds.size();
        for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long long mul_mod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long pow_mod(long long base, long long exp, long long mod) {
    if (mod == 1) return 0;
    long long r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a0 = a % m;
    if (a0 < 0) a0 += m;
    long long b = a0;
    while (b != 0) {
        long long q = g / b;
        g -= q * b;
        std::swap(g, b);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % p == 0) return n == p;
    }
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        long long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

long long pollard_rho(long long n) {
    if (n % 2 == 0) return 2;
    for (long long c = 1;; ++c) {
        long long x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = std::gcd(std::abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(long long n, std::vector<long long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    long long d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    long long m = n;
    constexpr long long kTrialBound = 1LL << 20;
    for (long long p = 2; p <= kTrialBound && p * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (m % p != 0) continue;
        int v = 0;
        while (m % p == 0) {
            m /= p;
            ++v;
        }
        f.factors.emplace_back(p, v);
    }
    if (m > 1) {
        std::vector<long long> rest;
        factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            f.factors.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    return f;
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v2 = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v2;
    }
    int k = 1;
    if (v2 & 1) {
        long long r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        int t = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++t;
        }
        if (t & 1) {
            long long r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        long long tmp = n % a;
        n = a;
        a = tmp;
    }
    return n == 1 ? k : 0;
}

namespace {

// Square root mod an odd prime, requires (d|p) = 1. Tonelli-Shanks.
long long sqrt_mod_prime(long long d, long long p) {
    d %= p;
    if (d < 0) d += p;
    if (p % 4 == 3) return pow_mod(d, (p + 1) / 4, p);
    long long q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    long long z = 2;
    while (kronecker(z, p) != -1) ++z;
    long long c = pow_mod(z, q, p);
    long long x = pow_mod(d, (q + 1) / 2, p);
    long long t = pow_mod(d, q, p);
    int m = s;
    while (t != 1) {
        long long t2 = t;
        int i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        long long b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        x = mul_mod(x, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return x;
}

// Solutions of x^2 = d (mod p^v) for odd prime p.
std::vector<long long> sqrt_mod_odd_pp(long long d, long long p, int v) {
    long long q = 1;
    for (int i = 0; i < v; ++i) q *= p;
    d %= q;
    if (d < 0) d += q;
    if (d == 0) {
        long long step = 1;
        for (int i = 0; i < (v + 1) / 2; ++i) step *= p;
        std::vector<long long> out;
        for (long long x = 0; x < q; x += step) out.push_back(x);
        return out;
    }
    int a = 0;
    long long u = d;
    while (u % p == 0) {
        u /= p;
        ++a;
    }
    if (a & 1) return {};
    int w = v - a;  // u is a unit mod p^w
    if (kronecker(u, p) != 1) return {};
    long long pw = 1;
    for (int i = 0; i < w; ++i) pw *= p;
    // Hensel: lift the mod-p root until the modulus covers p^w.
    long long y = sqrt_mod_prime(u, p);
    long long mod = p;
    while (mod < pw) {
        long long next = (mod > pw / mod) ? pw : mod * mod;
        long long num = (static_cast<__int128>(y) * y - u) % next;
        if (num < 0) num += next;
        long long corr = mul_mod(num, inv_mod(2 * y % next, next), next);
        y = (y - corr) % next;
        if (y < 0) y += next;
        mod = next;
    }
    y %= pw;
    long long half = 1;
    for (int i = 0; i < a / 2; ++i) half *= p;
    std::vector<long long> out;
    for (long long y0 : {y, pw - y}) {
        for (long long j = 0; j < half; ++j)
            out.push_back((half * (y0 + j * pw)) % q);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Direct enumeration at p = 2; exponents stay small in every caller.
std::vector<long long> sqrt_mod_two_pp(long long d, int v) {
    long long q = 1LL << v;
    d &= q - 1;
    std::vector<long long> out;
    for (long long x = 0; x < q; ++x)
        if ((x * x - d) % q == 0) out.push_back(x);
    return out;
}

}  // namespace

std::vector<long long> sqrt_mod(long long d, long long m) {
    if (m < 1) throw std::invalid_argument("sqrt_mod: modulus must be positive");
    if (m == 1) return {0};
    auto fac = factorize(m);
    std::vector<long long> sols{0};
    long long mod_so_far = 1;
    for (auto [p, v] : fac.factors) {
        long long q = 1;
        for (int i = 0; i < v; ++i) q *= p;
        auto part = (p == 2) ? sqrt_mod_two_pp(d, v) : sqrt_mod_odd_pp(d, p, v);
        if (part.empty()) return {};
        std::vector<long long> next;
        next.reserve(sols.size() * part.size());
        long long inv_q = inv_mod(q % mod_so_far == 0 ? 1 : q, mod_so_far);
        for (long long s : sols) {
            for (long long r : part) {
                // CRT: x = r (mod q), x = s (mod mod_so_far)
                long long t = ((s - r) % mod_so_far + mod_so_far) % mod_so_far;
                long long x = r + q * mul_mod(t, inv_q, mod_so_far);
                next.push_back(x % (q * mod_so_far));
            }
        }
        sols = std::move(next);
        mod_so_far *= q;
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

}  // namespace fricke
