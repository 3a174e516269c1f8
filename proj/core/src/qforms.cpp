#include "fricke/qforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fricke {

bool QForm::is_primitive() const {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) == 1;
}

bool is_reduced(const QForm& q) {
    if (std::abs(q.b) > q.a || q.a > q.c) return false;
    if ((std::abs(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
}

QForm reduce(QForm q) {
    if (q.disc() >= 0 || q.a <= 0)
        throw std::invalid_argument("reduce: form must be positive definite");
    while (!is_reduced(q)) {
        // translate: B -> B mod 2A in (-A, A]
        long long t = (q.b + q.a) / (2 * q.a);
        if (q.b + q.a < 0) t = -((-q.b - q.a + 2 * q.a - 1) / (2 * q.a));
        if (t != 0) {
            q.c += t * t * q.a - t * q.b;
            q.b -= 2 * t * q.a;
        }
        if (q.a > q.c || (q.a == q.c && q.b < 0)) {
            q = {q.c, -q.b, q.a};
        } else if (q.b == -q.a) {
            q.b = q.a;
        }
    }
    return q;
}

std::vector<QForm> reduced_forms(long long disc) {
    if (disc >= 0) throw std::invalid_argument("reduced_forms: disc must be negative");
    long long r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::invalid_argument("reduced_forms: disc must be 0 or 1 mod 4");
    std::vector<QForm> out;
    for (long long a = 1; 3 * a * a <= -disc; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            QForm q{a, b, c};
            if (q.is_primitive()) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QForm& x, const QForm& y) {
                  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
    return out;
}

long long class_number(long long disc) {
    static std::map<long long, long long> cache;
    static std::mutex mtx;
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(disc); it != cache.end()) return it->second;
    }
    long long h = static_cast<long long>(reduced_forms(disc).size());
    std::lock_guard lock(mtx);
    cache.emplace(disc, h);
    return h;
}

std::pair<long long, long long> fundamental_part(long long disc) {
    if (disc >= 0) throw std::invalid_argument("fundamental_part: disc must be negative");
    long long r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::invalid_argument("fundamental_part: disc must be 0 or 1 mod 4");
    auto fac = factorize(-disc);
    long long core = -1;  // squarefree kernel, with sign
    for (auto [p, v] : fac.factors)
        if (v & 1) core *= p;
    long long fund = (((core % 4) + 4) % 4 == 1) ? core : 4 * core;
    long long l2 = disc / fund;
    long long l = 1;
    while (l * l < l2) ++l;
    return {fund, l};
}

int GenericChar::eval(long long r) const {
    switch (kind) {
        case Kind::OddPrime: return kronecker(r, p);
        case Kind::M4: return kronecker(-1, r);
        case Kind::P8: return kronecker(2, r);
        case Kind::M8: return kronecker(-2, r);
    }
    return 0;
}

std::string GenericChar::label() const {
    switch (kind) {
        case Kind::OddPrime: return "(./" + std::to_string(p) + ")";
        case Kind::M4: return "(-1/.)";
        case Kind::P8: return "(2/.)";
        case Kind::M8: return "(-2/.)";
    }
    return "?";
}

std::vector<GenericChar> generic_characters(long long N) {
    if (N < 1) throw std::invalid_argument("generic_characters: N must be positive");
    auto fac = factorize(N);
    std::vector<GenericChar> out;
    for (auto [p, v] : fac.factors)
        if (p != 2) out.push_back({GenericChar::Kind::OddPrime, p});
    int v2 = fac.valuation(2);
    long long nmod4 = N % 4;
    if (nmod4 == 0) {
        out.push_back({GenericChar::Kind::M4, 0});
        if (v2 >= 3) out.push_back({GenericChar::Kind::P8, 0});
    } else if (nmod4 == 1) {
        out.push_back({GenericChar::Kind::M4, 0});
    } else if (nmod4 == 2) {
        if (N % 8 == 2)
            out.push_back({GenericChar::Kind::M8, 0});
        else
            out.push_back({GenericChar::Kind::P8, 0});
    }
    // N = 3 mod 4: odd-prime symbols only
    return out;
}

std::vector<GenericChar> generic_characters_for_disc(long long disc) {
    long long r = ((disc % 4) + 4) % 4;
    if (r == 0) return generic_characters(-disc / 4);
    if (r != 1) throw std::invalid_argument("generic characters: bad discriminant");
    auto fac = factorize(-disc);
    std::vector<GenericChar> out;
    for (auto [p, v] : fac.factors)
        if (p != 2) out.push_back({GenericChar::Kind::OddPrime, p});
    return out;
}

long long represented_value(const QForm& q, long long coprime_to) {
    if (!q.is_positive_definite() || !q.is_primitive())
        throw std::invalid_argument("represented_value: need a primitive positive definite form");
    for (long long box = 4;; box *= 2) {
        long long best = 0;
        for (long long x = -box; x <= box; ++x) {
            for (long long y = -box; y <= box; ++y) {
                long long v = q.a * x * x + q.b * x * y + q.c * y * y;
                if (v <= 0) continue;
                if (std::gcd(v, coprime_to) != 1) continue;
                if (best == 0 || v < best) best = v;
            }
        }
        if (best != 0) return best;
        if (box > (1LL << 20))
            throw std::runtime_error("represented_value: search bound exceeded");
    }
}

GenusTable genus_partition(long long disc) {
    GenusTable table;
    table.disc = disc;
    table.characters = generic_characters_for_disc(disc);
    auto classes = reduced_forms(disc);
    std::map<std::vector<int>, std::vector<QForm>> buckets;
    for (const auto& q : classes) {
        long long r = represented_value(q, 2 * disc);
        std::vector<int> signs;
        signs.reserve(table.characters.size());
        for (const auto& ch : table.characters) signs.push_back(ch.eval(r));
        buckets[signs].push_back(q);
    }
    for (auto& [signs, forms] : buckets)
        table.genera.push_back({signs, std::move(forms)});
    return table;
}

}  // namespace fricke
