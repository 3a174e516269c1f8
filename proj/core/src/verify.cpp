#include "fricke/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fricke {

namespace {

void record_failure(SuiteResult& r, const std::string& msg) {
    if (static_cast<int>(r.failures.size()) < kMaxFailuresKept)
        r.failures.push_back(msg);
    else if (static_cast<int>(r.failures.size()) == kMaxFailuresKept)
        r.failures.push_back("(more failures suppressed)");
}

std::string place(long long N, const std::string& chi, long long k) {
    std::ostringstream os;
    os << "N=" << N << " chi=" << chi << " k=" << k;
    return os.str();
}

}  // namespace

SuiteResult run_examples_suite() {
    SuiteResult r;
    r.name = "examples";
    auto expect = [&](bool cond, const std::string& msg) {
        ++r.checked;
        if (!cond) record_failure(r, msg);
    };

    QuadChar chi = parse_char(221, "p13,p17");
    expect(nu2(chi) == -4, "nu2(chi mod 221) != -4");
    expect(dim_cusp(ExtChar(chi, GroupKind::Gamma0, {}), 6) == 104,
           "dim S_6(Gamma0(221), chi) != 104");
    expect(dim_cusp(ExtChar(chi, GroupKind::Gamma0Plus, {{221, kMinusOne}}), 6) == 52,
           "dim S_6(Gamma0+(221), eps=-1) != 52");
    expect(dim_cusp(ExtChar(chi, GroupKind::Gamma0Star,
                            {{13, kMinusOne}, {17, kMinusOne}}),
                    6) == 26,
           "dim S_6(Gamma0*(221), (-1,-1)) != 26");

    expect(class_number(-884) == 16, "h(-884) != 16");
    expect(class_number(-52) == 2, "h(-52) != 2");
    expect(class_number(-68) == 4, "h(-68) != 4");
    expect(star_elliptic_classes(221, 221).size() == 16, "star classes e=221: size != 16");
    expect(star_elliptic_classes(221, 13).size() == 4, "star classes e=13: size != 4");
    expect(star_elliptic_classes(221, 17).size() == 8, "star classes e=17: size != 8");

    // N = 65 genus decomposition of disc -260: four genera of two classes
    // each, keyed by the generic characters ((.|5), (.|13), (-1|.)).
    struct Row {
        int p5, p13, m4;
        QForm f1, f2;
    };
    const Row rows[] = {
        {+1, +1, +1, {65, 0, 1}, {1885, -260, 9}},
        {-1, -1, +1, {130, -130, 33}, {1170, -910, 177}},
        {+1, -1, -1, {390, -130, 11}, {390, 130, 11}},
        {-1, +1, -1, {1430, 130, 3}, {1430, -130, 3}},
    };
    GenusTable gt = genus_partition(-260);
    expect(gt.genera.size() == 4, "disc -260: genus count != 4");
    expect(gt.characters.size() == 3, "disc -260: generic character count != 3");
    for (const Row& row : rows) {
        std::vector<int> want{row.p5, row.p13, row.m4};
        bool found = false;
        for (const auto& genus : gt.genera) {
            if (genus.signs != want) continue;
            std::set<QForm> have(genus.classes.begin(), genus.classes.end());
            std::set<QForm> listed{reduce(row.f1), reduce(row.f2)};
            found = (have == listed);
        }
        std::ostringstream os;
        os << "disc -260 genus (" << row.p5 << "," << row.p13 << "," << row.m4
           << ") mismatch";
        expect(found, os.str());
    }
    return r;
}

SuiteResult run_sum_identity_suite(long long max_level) {
    if (max_level <= 0) max_level = 300;
    long long star_cap = std::min<long long>(max_level, 200);
    SuiteResult r;
    r.name = "sum-identity";
    for (long long N = 2; N <= max_level; ++N) {
        bool squarefree = factorize(N).is_squarefree();
        for (const QuadChar& chi : list_chars(N)) {
            for (long long k = 2; k <= 13; ++k) {
                if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
                long long base = dim_cusp(ExtChar(chi, GroupKind::Gamma0, {}), k);
                long long plus_sum = 0;
                for (const ExtChar& ext : extensions(chi, GroupKind::Gamma0Plus))
                    plus_sum += dim_cusp(ext, k);
                ++r.checked;
                if (plus_sum != base)
                    record_failure(r, "plus " + place(N, chi.spec_string(), k));
                // Obstructed characters admit no Gamma0* extension at all, so
                // there are no star dimensions to sum.
                if (squarefree && N <= star_cap && !star_obstructed(chi)) {
                    long long star_sum = 0;
                    for (const ExtChar& ext : extensions(chi, GroupKind::Gamma0Star))
                        star_sum += dim_cusp(ext, k);
                    ++r.checked;
                    if (star_sum != base)
                        record_failure(r, "star " + place(N, chi.spec_string(), k));
                } else {
                    ++r.skipped;
                }
            }
        }
    }
    return r;
}

SuiteResult run_oracle_suite(long long max_level) {
    if (max_level <= 0) max_level = 500;
    SuiteResult r;
    r.name = "oracle";
    for (long long N = 4; N <= max_level; ++N) {
        for (const QuadChar& chi : list_chars(N)) {
            for (const ExtChar& ext : extensions(chi, GroupKind::Gamma0Plus)) {
                ++r.checked;
                if (!(nu2_plus(ext) == nu2_plus_oracle(ext)))
                    record_failure(r, "nu2_plus mismatch N=" + std::to_string(N) + " chi=" +
                                          chi.spec_string() + " sign=" + ext.signs_string());
            }
        }
    }
    return r;
}

SuiteResult run_zero_sum_suite(long long max_level) {
    if (max_level <= 0) max_level = 500;
    SuiteResult r;
    r.name = "zero-sum";
    for (long long N = 3; N <= max_level; N += 2) {
        auto fac = factorize(N);
        // The lemma needs every prime factor to be 1 (mod 4): only then is
        // every trace-zero element attached to a primitive form of
        // discriminant -4e (no half-integer subfamily).
        bool admissible = fac.is_squarefree();
        for (auto [p, v] : fac.factors)
            if (p % 4 != 1) admissible = false;
        if (!admissible) {
            ++r.skipped;
            continue;
        }
        std::vector<long long> primes;
        for (auto [p, v] : fac.factors) primes.push_back(p);
        QuadChar chi(N, primes, TwoPart::None);  // conductor N
        for (long long e : fac.hall_divisors()) {
            if (e == 1) continue;
            ++r.checked;
            if (star_class_sum(chi, e) != 0)
                record_failure(r, "S_e != 0 at N=" + std::to_string(N) +
                                      " e=" + std::to_string(e));
        }
    }
    return r;
}

SuiteResult run_integrality_suite(long long max_level) {
    if (max_level <= 0) max_level = 300;
    long long star_cap = std::min<long long>(max_level, 200);
    SuiteResult r;
    r.name = "integrality";
    for (long long N = 2; N <= max_level; ++N) {
        bool squarefree = factorize(N).is_squarefree();
        for (const QuadChar& chi : list_chars(N)) {
            for (GroupKind kind :
                 {GroupKind::Gamma0, GroupKind::Gamma0Plus, GroupKind::Gamma0Star}) {
                if (kind == GroupKind::Gamma0Star &&
                    (!squarefree || N > star_cap || star_obstructed(chi))) {
                    ++r.skipped;
                    continue;
                }
                for (const ExtChar& ext : extensions(chi, kind)) {
                    for (long long k = 2; k <= 13; ++k) {
                        if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
                        ++r.checked;
                        try {
                            long long s = dim_cusp(ext, k);
                            long long m = dim_modular(ext, k);
                            long long eis = dim_eisenstein(ext, k);
                            if (m != s + eis)
                                record_failure(r, "dim_mod != dim_cusp + dim_eis at " +
                                                      place(N, chi.spec_string(), k));
                        } catch (const std::exception& ex) {
                            record_failure(r, std::string(ex.what()) + " at " +
                                                  place(N, chi.spec_string(), k) + " sign=" +
                                                  ext.signs_string());
                        }
                    }
                }
            }
        }
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"examples", "sum-identity", "oracle",
                                               "zero-sum", "integrality"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, long long max_level) {
    std::vector<SuiteResult> out;
    auto run_one = [&](const std::string& n) {
        if (n == "examples")
            out.push_back(run_examples_suite());
        else if (n == "sum-identity")
            out.push_back(run_sum_identity_suite(max_level));
        else if (n == "oracle")
            out.push_back(run_oracle_suite(max_level));
        else if (n == "zero-sum")
            out.push_back(run_zero_sum_suite(max_level));
        else if (n == "integrality")
            out.push_back(run_integrality_suite(max_level));
        else
            throw std::invalid_argument("unknown suite: " + n);
    };
    if (name == "all")
        for (const auto& n : suite_names()) run_one(n);
    else
        run_one(name);
    return out;
}

std::string render_suite_results(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& s : results) {
        os << s.name << ": checked " << s.checked << ", skipped " << s.skipped << ", "
           << (s.ok() ? "all passed" : "FAILED") << "\n";
        for (const auto& f : s.failures) os << "  " << f << "\n";
        all_ok = all_ok && s.ok();
    }
    os << (all_ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return os.str();
}

}  // namespace fricke
