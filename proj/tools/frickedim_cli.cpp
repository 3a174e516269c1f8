#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "fricke/report.hpp"
#include "fricke/verify.hpp"

namespace {

using namespace fricke;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadWeight = 3;

struct Range {
    long long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(s);
    } else {
        r.lo = std::stoll(s.substr(0, dots));
        r.hi = std::stoll(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw std::invalid_argument("empty range: " + s);
    return r;
}

std::map<long long, GaussInt> parse_signs(long long N, GroupKind kind,
                                          const std::string& sign,
                                          const std::string& signs) {
    std::map<long long, GaussInt> out;
    if (kind == GroupKind::Gamma0) return out;
    if (kind == GroupKind::Gamma0Plus) {
        out[N] = unit_from_string(sign.empty() ? "+1" : sign);
        return out;
    }
    if (signs.empty()) throw std::invalid_argument("gamma0* needs --signs p:s,...");
    std::string rest = signs;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string tok = rest.substr(0, comma);
        rest = (comma == std::string::npos) ? "" : rest.substr(comma + 1);
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad sign token (want p:s): " + tok);
        out[std::stoll(tok.substr(0, colon))] = unit_from_string(tok.substr(colon + 1));
    }
    return out;
}

/// All extensions matching the requested sign specification.
std::vector<ExtChar> select_extensions(const QuadChar& chi, GroupKind kind,
                                       const std::string& sign, const std::string& signs) {
    bool want_all = (kind == GroupKind::Gamma0) ||
                    (kind == GroupKind::Gamma0Plus && sign == "all") ||
                    (kind == GroupKind::Gamma0Star && signs == "all");
    if (want_all) return extensions(chi, kind);
    return {ExtChar(chi, kind, parse_signs(chi.level(), kind, sign, signs))};
}

std::vector<QuadChar> select_chars(long long N, const std::string& spec) {
    if (spec == "all") return list_chars(N);
    return {parse_char(N, spec)};
}

int cmd_dim(const std::string& group, long long N, long long k, const std::string& chi_spec,
            const std::string& sign, const std::string& signs, const std::string& format) {
    if (k == 1) {
        std::cerr << "error: weight 1 is unsupported\n";
        return kExitBadWeight;
    }
    GroupKind kind = group_from_string(group);
    QuadChar chi = parse_char(N, chi_spec);
    ExtChar ext(chi, kind, parse_signs(N, kind, sign, signs));
    DimReport rep = compute_report(ext, k);
    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << csv_header() << "\n" << csv_row(rep) << "\n";
    else
        std::cout << render_text(rep);
    return kExitOk;
}

int cmd_table(const std::string& group, const std::string& level, const std::string& weight,
              const std::string& chi_spec, const std::string& sign, const std::string& signs,
              const std::string& format) {
    Range nr = parse_range(level);
    Range kr = parse_range(weight);
    if (nr.lo < 1 || nr.hi > 100000 || kr.hi > 1000)
        throw std::invalid_argument("range out of bounds (N <= 1e5, k <= 1e3)");
    GroupKind kind = group_from_string(group);
    std::vector<DimReport> rows;
    for (long long N = nr.lo; N <= nr.hi; ++N) {
        if (kind == GroupKind::Gamma0Star && !factorize(N).is_squarefree()) continue;
        std::vector<QuadChar> chars;
        try {
            chars = select_chars(N, chi_spec);
        } catch (const std::invalid_argument&) {
            if (nr.lo == nr.hi) throw;  // a fixed chi spec may not fit every N
            continue;
        }
        for (const QuadChar& chi : chars) {
            // no Gamma0* spaces exist for obstructed characters; skip the rows
            if (kind == GroupKind::Gamma0Star && star_obstructed(chi)) continue;
            for (const ExtChar& ext : select_extensions(chi, kind, sign, signs))
                for (long long k = kr.lo; k <= kr.hi; ++k) {
                    if (k == 1) continue;
                    rows.push_back(compute_report(ext, k));
                }
        }
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& r : rows) std::cout << csv_row(r) << "\n";
    } else {
        for (const auto& r : rows) std::cout << render_text(r);
    }
    return kExitOk;
}

int cmd_genera(long long level, long long disc) {
    if (disc == 0) {
        if (level < 1) throw std::invalid_argument("genera: need --level or --disc");
        disc = -4 * level;
    }
    GenusTable gt = genus_partition(disc);
    std::cout << "disc " << gt.disc << ", characters:";
    for (const auto& ch : gt.characters) std::cout << " " << ch.label();
    std::cout << "\n";
    for (const auto& genus : gt.genera) {
        for (int s : genus.signs) std::cout << (s > 0 ? "+ " : "- ");
        std::cout << ":";
        for (const auto& q : genus.classes)
            std::cout << " (" << q.a << "," << q.b << "," << q.c << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, long long max_level) {
    auto results = run_suites(suite, max_level);
    std::cout << render_suite_results(results);
    for (const auto& s : results)
        if (!s.ok()) return kExitVerifyFail;
    return kExitOk;
}

int cmd_selftest() {
    std::vector<SuiteResult> results;
    results.push_back(run_examples_suite());
    results.push_back(run_sum_identity_suite(60));
    results.push_back(run_oracle_suite(60));
    results.push_back(run_zero_sum_suite(60));
    results.push_back(run_integrality_suite(40));
    std::cout << render_suite_results(results);
    for (const auto& s : results)
        if (!s.ok()) return kExitVerifyFail;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimension formulas for Gamma0(N), Gamma0+(N) and Gamma0*(N)"};
    app.require_subcommand(1);

    std::string group = "gamma0", level, weight, chi = "triv", sign, signs, format = "text";
    std::string suite = "all";
    long long max_level = 0, disc = 0, level_n = 0;

    auto* dim = app.add_subcommand("dim", "Single dimension query");
    dim->add_option("--group", group)->check(CLI::IsMember({"gamma0", "gamma0+", "gamma0*"}));
    dim->add_option("--level", level)->required();
    dim->add_option("--weight", weight)->required();
    dim->add_option("--chi", chi);
    dim->add_option("--sign", sign);
    dim->add_option("--signs", signs);
    dim->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table = app.add_subcommand("table", "Sweep over levels/weights/characters");
    table->add_option("--group", group)->check(CLI::IsMember({"gamma0", "gamma0+", "gamma0*"}));
    table->add_option("--level", level)->required();
    table->add_option("--weight", weight)->required();
    table->add_option("--chi", chi);
    table->add_option("--sign", sign);
    table->add_option("--signs", signs);
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* genera = app.add_subcommand("genera", "Genus table of a discriminant");
    genera->add_option("--level", level_n);
    genera->add_option("--disc", disc);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite);
    verify->add_option("--max-level", max_level);

    auto* selftest = app.add_subcommand("selftest", "Quick self-check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) {
            Range nr = parse_range(level), kr = parse_range(weight);
            if (nr.lo != nr.hi || kr.lo != kr.hi)
                throw std::invalid_argument("dim takes a single level and weight");
            return cmd_dim(group, nr.lo, kr.lo, chi, sign, signs, format);
        }
        if (table->parsed()) return cmd_table(group, level, weight, chi, sign, signs, format);
        if (genera->parsed()) return cmd_genera(level_n, disc);
        if (verify->parsed()) return cmd_verify(suite, max_level);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadWeight;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
