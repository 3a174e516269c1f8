#include "fricke/report.hpp"

#include <sstream>
#include <stdexcept>

namespace fricke {

namespace {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

Json report_to_json(const DimReport& rep) {
    Json j;
    j["group"] = group_to_string(rep.group);
    j["level"] = rep.level;
    j["weight"] = rep.weight;
    j["chi"] = rep.chi_spec;
    j["signs"] = rep.signs_spec;
    j["terms"] = Json{{"index", to_string(rep.terms.index)},
                      {"e2", to_string(rep.terms.e2)},
                      {"e3", to_string(rep.terms.e3)},
                      {"d8", to_string(rep.terms.d8)},
                      {"d12", to_string(rep.terms.d12)},
                      {"cusp", to_string(rep.terms.cusp)}};
    if (rep.dims_defined) {
        j["dims"] = Json{{"cusp", rep.dim_cusp},
                         {"eisenstein", rep.dim_eisenstein},
                         {"modular", rep.dim_modular}};
    } else {
        j["dims"] = Json{{"cusp", nullptr}, {"eisenstein", nullptr}, {"modular", nullptr}};
    }
    Json flags = Json::array();
    if (rep.parity_vanishing) flags.push_back("parity_vanishing");
    if (rep.weight_unsupported) flags.push_back("weight_unsupported");
    if (rep.star_obstruction) flags.push_back("star_obstruction");
    j["flags"] = flags;
    return j;
}

DimReport report_from_json(const Json& j) {
    DimReport rep;
    rep.group = group_from_string(j.at("group").get<std::string>());
    rep.level = j.at("level").get<long long>();
    rep.weight = j.at("weight").get<long long>();
    rep.chi_spec = j.at("chi").get<std::string>();
    rep.signs_spec = j.at("signs").get<std::string>();
    const Json& t = j.at("terms");
    rep.terms.index = rational_from_string(t.at("index").get<std::string>());
    rep.terms.e2 = rational_from_string(t.at("e2").get<std::string>());
    rep.terms.e3 = rational_from_string(t.at("e3").get<std::string>());
    rep.terms.d8 = rational_from_string(t.at("d8").get<std::string>());
    rep.terms.d12 = rational_from_string(t.at("d12").get<std::string>());
    rep.terms.cusp = rational_from_string(t.at("cusp").get<std::string>());
    const Json& d = j.at("dims");
    rep.dims_defined = !d.at("cusp").is_null();
    if (rep.dims_defined) {
        rep.dim_cusp = d.at("cusp").get<long long>();
        rep.dim_eisenstein = d.at("eisenstein").get<long long>();
        rep.dim_modular = d.at("modular").get<long long>();
    }
    for (const auto& f : j.at("flags")) {
        std::string name = f.get<std::string>();
        if (name == "parity_vanishing") rep.parity_vanishing = true;
        if (name == "weight_unsupported") rep.weight_unsupported = true;
        if (name == "star_obstruction") rep.star_obstruction = true;
    }
    return rep;
}

std::string render_text(const DimReport& rep) {
    std::ostringstream os;
    os << group_to_string(rep.group) << "(" << rep.level << "), weight " << rep.weight
       << ", chi " << rep.chi_spec << ", signs " << rep.signs_spec << "\n";
    if (rep.weight_unsupported) {
        os << "  weight 1 is unsupported\n";
        return os.str();
    }
    if (rep.star_obstruction) {
        os << "  no character of Gamma0*(N) restricts to chi "
              "(Atkin-Lehner cocycle obstruction)\n";
        return os.str();
    }
    if (rep.parity_vanishing) {
        os << "  space vanishes: chi(-1) != (-1)^k\n";
        return os.str();
    }
    os << "  terms: index " << to_string(rep.terms.index) << ", e2 " << to_string(rep.terms.e2)
       << ", e3 " << to_string(rep.terms.e3) << ", d8 " << to_string(rep.terms.d8) << ", d12 "
       << to_string(rep.terms.d12) << ", cusp " << to_string(rep.terms.cusp) << "\n";
    os << "  dim_cusp " << rep.dim_cusp << ", dim_eisenstein " << rep.dim_eisenstein
       << ", dim_modular " << rep.dim_modular << "\n";
    return os.str();
}

std::string csv_header() {
    return "group,N,chi,sign,k,dim_cusp,dim_eis,dim_mod,parity_vanishing";
}

std::string csv_row(const DimReport& rep) {
    std::ostringstream os;
    os << group_to_string(rep.group) << "," << rep.level << ",\"" << rep.chi_spec << "\","
       << "\"" << rep.signs_spec << "\"," << rep.weight << ",";
    if (rep.dims_defined)
        os << rep.dim_cusp << "," << rep.dim_eisenstein << "," << rep.dim_modular;
    else
        os << ",,";
    os << "," << (rep.parity_vanishing ? 1 : 0);
    return os.str();
}

std::string render_power_relations(const PowerRelationReport& rep) {
    std::ostringstream os;
    os << "N=" << rep.level << " chi=" << rep.chi_spec << " k=" << rep.weight << "\n";
    for (const auto& r : rep.relations) {
        os << "  " << r.name << ": "
           << (!r.applicable ? "skipped" : (r.passed ? "pass" : "FAIL")) << " (" << r.detail
           << ")\n";
    }
    return os.str();
}

}  // namespace fricke
