#include "fricke/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fricke {

std::string unit_to_string(GaussInt u) {
    if (u == kOne) return "+1";
    if (u == kMinusOne) return "-1";
    if (u == kI) return "+i";
    if (u == kMinusI) return "-i";
    throw std::invalid_argument("unit_to_string: not a unit");
}

GaussInt unit_from_string(std::string_view s) {
    if (s == "+1" || s == "1") return kOne;
    if (s == "-1") return kMinusOne;
    if (s == "+i" || s == "i") return kI;
    if (s == "-i") return kMinusI;
    throw std::invalid_argument("bad sign token: " + std::string(s));
}

QuadChar::QuadChar(long long N, std::vector<long long> odd_primes, TwoPart two)
    : level_(N), fac_(factorize(N)), odd_primes_(std::move(odd_primes)), two_(two) {
    std::sort(odd_primes_.begin(), odd_primes_.end());
    if (std::adjacent_find(odd_primes_.begin(), odd_primes_.end()) != odd_primes_.end())
        throw std::invalid_argument("duplicate character component");
    for (long long p : odd_primes_) {
        if (p % 2 == 0 || !is_prime(p) || N % p != 0)
            throw std::invalid_argument("character component " + std::to_string(p) +
                                        " is not an odd prime dividing the level");
    }
    int v2 = fac_.valuation(2);
    if (two_ != TwoPart::None) {
        int need = (two_ == TwoPart::M4) ? 2 : 3;
        if (v2 < need)
            throw std::invalid_argument("2-adic component incompatible with v2(level)");
    }
    conductor_ = 1;
    for (long long p : odd_primes_) conductor_ *= p;
    if (two_ == TwoPart::M4) conductor_ *= 4;
    if (two_ == TwoPart::P8 || two_ == TwoPart::M8) conductor_ *= 8;
    parity_ = 1;
    for (long long p : odd_primes_) parity_ *= kronecker(-1, p);
    if (two_ == TwoPart::M4 || two_ == TwoPart::M8) parity_ = -parity_;
}

int QuadChar::operator()(long long n) const {
    long long r = n % level_;
    if (r < 0) r += level_;
    if (level_ > 1 && std::gcd(r, level_) != 1) return 0;
    int v = 1;
    for (long long p : odd_primes_) {
        int s = kronecker(n, p);
        if (s == 0) return 0;
        v *= s;
    }
    switch (two_) {
        case TwoPart::None: break;
        case TwoPart::M4: v *= kronecker(-1, n); break;
        case TwoPart::P8: v *= kronecker(2, n); break;
        case TwoPart::M8: v *= kronecker(-2, n); break;
    }
    if (two_ != TwoPart::None && n % 2 == 0) return 0;
    return v;
}

bool QuadChar::has_odd_component(long long p) const {
    return std::binary_search(odd_primes_.begin(), odd_primes_.end(), p);
}

std::string QuadChar::spec_string() const {
    if (is_trivial()) return "triv";
    std::string out;
    switch (two_) {
        case TwoPart::None: break;
        case TwoPart::M4: out = "m4"; break;
        case TwoPart::P8: out = "p8"; break;
        case TwoPart::M8: out = "m8"; break;
    }
    for (long long p : odd_primes_) {
        if (!out.empty()) out += ',';
        out += 'p' + std::to_string(p);
    }
    return out;
}

QuadChar parse_char(long long N, std::string_view spec) {
    std::vector<long long> odd;
    TwoPart two = TwoPart::None;
    bool have_two = false;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string_view tok = spec.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        pos = (comma == std::string_view::npos) ? spec.size() : comma + 1;
        if (tok.empty() || tok == "triv") continue;
        if (tok == "m4" || tok == "p8" || tok == "m8") {
            if (have_two) throw std::invalid_argument("duplicate 2-adic component");
            have_two = true;
            two = (tok == "m4") ? TwoPart::M4 : (tok == "p8") ? TwoPart::P8 : TwoPart::M8;
        } else if (tok.size() > 1 && tok.front() == 'p') {
            long long p = 0;
            for (char ch : tok.substr(1)) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("bad character token: " + std::string(tok));
                p = p * 10 + (ch - '0');
            }
            odd.push_back(p);
        } else {
            throw std::invalid_argument("bad character token: " + std::string(tok));
        }
    }
    return QuadChar(N, std::move(odd), two);
}

std::vector<QuadChar> list_chars(long long N) {
    auto fac = factorize(N);
    std::vector<long long> odd;
    for (auto [p, v] : fac.factors)
        if (p != 2) odd.push_back(p);
    int v2 = fac.valuation(2);
    std::vector<TwoPart> twos{TwoPart::None};
    if (v2 >= 2) twos.push_back(TwoPart::M4);
    if (v2 >= 3) {
        twos.push_back(TwoPart::P8);
        twos.push_back(TwoPart::M8);
    }
    std::vector<QuadChar> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
        std::vector<long long> sel;
        for (std::size_t i = 0; i < odd.size(); ++i)
            if (mask & (std::size_t{1} << i)) sel.push_back(odd[i]);
        for (TwoPart two : twos) out.emplace_back(N, sel, two);
    }
    return out;
}

ALMatrix atkin_lehner(long long N, long long e) {
    if (N < 1 || e < 1 || N % e != 0 || std::gcd(e, N / e) != 1)
        throw std::invalid_argument("atkin_lehner: e must be a Hall divisor of N");
    if (e == 1) return {N, 1, 1, 0, 0, 1};
    if (e == N) return {N, N, 0, -1, 1, 0};
    long long m = N / e;
    long long a = inv_mod(e, m);  // 0 <= a < N/e, a*e = 1 (mod N/e)
    if (a == 0) a = m;            // e = 1 handled above, so a >= 1 anyway
    long long c = (a * e - 1) / m;
    return {N, e, a, 1, c, 1};
}

ALMatrix al_mul(const ALMatrix& m1, const ALMatrix& m2) {
    if (m1.level != m2.level) throw std::invalid_argument("al_mul: level mismatch");
    long long N = m1.level;
    long long g = std::gcd(m1.e, m2.e);
    long long l = m1.e / g * m2.e;  // lcm
    long long e3 = l / g;
    ALMatrix r;
    r.level = N;
    r.e = e3;
    r.a = m1.a * m2.a * g + m1.b * m2.c * (N / l);
    r.b = m1.a * m2.b * (m1.e / g) + m1.b * m2.d * (m2.e / g);
    r.c = m1.c * m2.a * (m2.e / g) + m1.d * m2.c * (m1.e / g);
    r.d = m1.c * m2.b * (N / l) + m1.d * m2.d * g;
    return r;
}

ALMatrix al_inverse(const ALMatrix& m) {
    return {m.level, m.e, m.d, -m.b, -m.c, m.a};
}

std::string group_to_string(GroupKind g) {
    switch (g) {
        case GroupKind::Gamma0: return "gamma0";
        case GroupKind::Gamma0Plus: return "gamma0+";
        case GroupKind::Gamma0Star: return "gamma0*";
    }
    return "?";
}

GroupKind group_from_string(std::string_view s) {
    if (s == "gamma0") return GroupKind::Gamma0;
    if (s == "gamma0+") return GroupKind::Gamma0Plus;
    if (s == "gamma0*") return GroupKind::Gamma0Star;
    throw std::invalid_argument("bad group: " + std::string(s));
}

namespace {

// chi evaluated at the lower-right entry of W_e^2, an element of Gamma0(N).
// This is the square any consistent sign value on W_e must have.
int sign_square(const QuadChar& chi, long long N, long long e) {
    ALMatrix w = atkin_lehner(N, e);
    ALMatrix sq = al_mul(w, w);
    return chi(sq.d);
}

}  // namespace

ExtChar::ExtChar(QuadChar base, GroupKind kind, std::map<long long, GaussInt> signs)
    : base_(std::move(base)), kind_(kind), signs_(std::move(signs)) {
    long long N = base_.level();
    if (kind_ == GroupKind::Gamma0) {
        if (!signs_.empty()) throw std::invalid_argument("Gamma0 character takes no signs");
        return;
    }
    if (kind_ == GroupKind::Gamma0Plus) {
        if (N < 2) throw std::invalid_argument("Gamma0Plus needs N > 1");
        if (signs_.size() != 1 || !signs_.contains(N))
            throw std::invalid_argument("Gamma0Plus character needs exactly the W_N sign");
        GaussInt u = signs_.at(N);
        if (!(u * u == GaussInt{base_.parity(), 0}))
            throw std::invalid_argument("sign squared must equal chi(-1)");
        return;
    }
    if (!base_.level_factorization().is_squarefree())
        throw std::invalid_argument("Gamma0Star requires square-free level");
    if (N < 2) throw std::invalid_argument("Gamma0Star needs N > 1");
    for (auto [p, v] : base_.level_factorization().factors) {
        auto it = signs_.find(p);
        if (it == signs_.end())
            throw std::invalid_argument("missing sign for prime " + std::to_string(p));
        GaussInt u = it->second;
        if (!(u * u == GaussInt{sign_square(base_, N, p), 0}))
            throw std::invalid_argument("inconsistent sign for prime " + std::to_string(p));
    }
    if (signs_.size() != static_cast<std::size_t>(base_.level_factorization().omega()))
        throw std::invalid_argument("sign keys must be exactly the primes of N");
}

GaussInt ExtChar::sign_at(long long e) const {
    if (e == 1) return kOne;
    long long N = level();
    if (kind_ == GroupKind::Gamma0)
        throw std::invalid_argument("Gamma0 character has no Atkin-Lehner signs");
    if (kind_ == GroupKind::Gamma0Plus) {
        if (e == N) return signs_.at(N);
        throw std::invalid_argument("Gamma0Plus: only W_1 and W_N are in the group");
    }
    if (N % e != 0 || std::gcd(e, N / e) != 1)
        throw std::invalid_argument("sign_at: e must be a Hall divisor of N");
    if (auto it = signs_.find(e); it != signs_.end()) return it->second;
    // composite e: peel one prime with the exact coset-law correction
    long long p = factorize(e).factors.front().first;
    long long rest = e / p;
    ALMatrix wp = atkin_lehner(N, p);
    ALMatrix wr = atkin_lehner(N, rest);
    ALMatrix we = atkin_lehner(N, e);
    ALMatrix h = al_mul(al_mul(wp, wr), al_inverse(we));
    int corr = base_(h.d);  // +-1
    return corr * (signs_.at(p) * sign_at(rest));
}

GaussInt ExtChar::eval(const ALMatrix& m) const {
    if (m.level != level()) throw std::invalid_argument("ext_eval: level mismatch");
    ALMatrix g = al_mul(m, al_inverse(atkin_lehner(level(), m.e)));
    int chival = base_(g.d);
    if (chival == 0) return {0, 0};
    return chival * sign_at(m.e);
}

bool ExtChar::is_trivial() const {
    if (!base_.is_trivial()) return false;
    return std::all_of(signs_.begin(), signs_.end(),
                       [](const auto& kv) { return kv.second == kOne; });
}

std::string ExtChar::signs_string() const {
    if (kind_ == GroupKind::Gamma0) return "";
    if (kind_ == GroupKind::Gamma0Plus) return unit_to_string(signs_.at(level()));
    std::string out;
    for (const auto& [p, u] : signs_) {
        if (!out.empty()) out += ',';
        out += std::to_string(p) + ':' + unit_to_string(u);
    }
    return out;
}

std::vector<ExtChar> extensions(const QuadChar& chi, GroupKind kind) {
    long long N = chi.level();
    if (kind == GroupKind::Gamma0) return {ExtChar(chi, kind, {})};
    if (kind == GroupKind::Gamma0Plus) {
        GaussInt s = (chi.parity() == 1) ? kOne : kI;
        return {ExtChar(chi, kind, {{N, s}}),
                ExtChar(chi, kind, {{N, kMinusOne * s}})};
    }
    if (!chi.level_factorization().is_squarefree())
        throw std::invalid_argument("Gamma0Star requires square-free level");
    std::vector<long long> primes;
    std::vector<GaussInt> base_signs;
    for (auto [p, v] : chi.level_factorization().factors) {
        primes.push_back(p);
        base_signs.push_back(sign_square(chi, N, p) == 1 ? kOne : kI);
    }
    std::vector<ExtChar> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
        std::map<long long, GaussInt> signs;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            GaussInt u = base_signs[i];
            if (mask & (std::size_t{1} << i)) u = kMinusOne * u;
            signs[primes[i]] = u;
        }
        out.emplace_back(chi, kind, std::move(signs));
    }
    return out;
}

ExtChar conjugate(const ExtChar& c) {
    std::map<long long, GaussInt> signs;
    for (const auto& [p, u] : c.signs()) signs[p] = u.conj();
    return ExtChar(c.base(), c.kind(), std::move(signs));
}

bool star_obstructed(const QuadChar& chi) {
    long long N = chi.level();
    std::vector<long long> primes;
    for (auto [p, v] : chi.level_factorization().factors) primes.push_back(p);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            ALMatrix p12 = al_mul(atkin_lehner(N, primes[i]), atkin_lehner(N, primes[j]));
            ALMatrix p21 = al_mul(atkin_lehner(N, primes[j]), atkin_lehner(N, primes[i]));
            ALMatrix h12 = al_mul(p12, al_inverse(atkin_lehner(N, p12.e)));
            ALMatrix h21 = al_mul(p21, al_inverse(atkin_lehner(N, p21.e)));
            if (chi(h12.d) * chi(h21.d) != 1) return true;
        }
    return false;
}

}  // namespace fricke
