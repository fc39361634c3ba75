#include "dopkit/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace dopkit {

Json poly_to_json(const RatPoly2& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e.first, e.second, rat_to_string(c)});
    return arr;
}

RatPoly2 poly_from_json(const Json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a string or an array of triples");
    RatPoly2 p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("polynomial term must be [i, j, \"num/den\"]");
        int i = t[0].get<int>();
        int jj = t[1].get<int>();
        if (i < 0 || jj < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
        Rat c = t[2].is_string() ? rat_from_string(t[2].get<std::string>()) : Rat(t[2].get<long>());
        p += RatPoly2::monomial(i, jj, c);
    }
    return p;
}

Json cometric_to_json(const Cometric& g) {
    return Json{{"a", poly_to_json(g.a)}, {"b", poly_to_json(g.b)}, {"c", poly_to_json(g.c)}};
}

Cometric cometric_from_json(const Json& j) {
    return Cometric(poly_from_json(j.at("a")), poly_from_json(j.at("b")), poly_from_json(j.at("c")));
}

Json boundary_to_json(const BoundarySpec& b) {
    Json f = Json::array();
    for (const auto& p : b.factors) f.push_back(poly_to_json(p));
    return Json{{"factors", f}};
}

BoundarySpec boundary_from_json(const Json& j) {
    std::vector<RatPoly2> factors;
    const Json& arr = j.is_array() ? j : j.at("factors");
    for (const auto& f : arr) factors.push_back(poly_from_json(f));
    return BoundarySpec(std::move(factors));
}

Json weights_to_json(const Weights& w) { return Json::array({w.w1, w.w2}); }

Weights weights_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("weights must be 'w1,w2'");
        return Weights::from_rationals(rat_from_string(s.substr(0, comma)), rat_from_string(s.substr(comma + 1)));
    }
    if (j.is_array() && j.size() == 2) {
        auto get = [](const Json& v) {
            return v.is_string() ? rat_from_string(v.get<std::string>()) : Rat(v.get<long>());
        };
        return Weights::from_rationals(get(j[0]), get(j[1]));
    }
    throw std::invalid_argument("weights must be an array [w1, w2] or a string");
}

Json density_to_json(const DensitySpec& d) {
    Json fs = Json::array();
    for (const auto& [f, p] : d.factor_exponents)
        fs.push_back(Json{{"factor", poly_to_json(f)}, {"exponent", rat_to_string(p)}});
    return Json{{"exponents", fs}, {"Q", poly_to_json(d.Q)}};
}

DensitySpec density_from_json(const Json& j) {
    DensitySpec d;
    for (const auto& f : j.at("exponents"))
        d.factor_exponents.push_back({poly_from_json(f.at("factor")), rat_from_string(f.at("exponent").get<std::string>())});
    if (j.contains("Q")) d.Q = poly_from_json(j.at("Q"));
    return d;
}

Json domain_to_json(const DomainSpec& d) {
    Json signs = Json::array();
    for (const auto& s : d.conditions) signs.push_back(Json{{"poly", poly_to_json(s.poly)}, {"sign", s.sign}});
    Json out{{"signs", signs}, {"bounded", d.bounded}};
    if (d.bounded) {
        out["box"] = Json::array({rat_to_string(d.xlo), rat_to_string(d.xhi), rat_to_string(d.ylo),
                                  rat_to_string(d.yhi)});
        Json br = Json::array();
        for (const auto& b : d.x_breaks) br.push_back(rat_to_string(b));
        out["x_breaks"] = br;
    }
    return out;
}

DomainSpec domain_from_json(const Json& j) {
    DomainSpec d;
    for (const auto& s : j.at("signs"))
        d.conditions.push_back({poly_from_json(s.at("poly")), s.at("sign").get<int>()});
    d.bounded = j.at("bounded").get<bool>();
    if (d.bounded) {
        const Json& box = j.at("box");
        d.xlo = rat_from_string(box[0].get<std::string>());
        d.xhi = rat_from_string(box[1].get<std::string>());
        d.ylo = rat_from_string(box[2].get<std::string>());
        d.yhi = rat_from_string(box[3].get<std::string>());
        if (j.contains("x_breaks"))
            for (const auto& b : j.at("x_breaks")) d.x_breaks.push_back(rat_from_string(b.get<std::string>()));
    }
    return d;
}

Json series_to_json(const LaurentSeries& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.terms()) arr.push_back(Json::array({e, rat_to_string(c)}));
    return arr;
}

LaurentSeries series_from_json(const Json& j) {
    LaurentSeries s;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("series term must be [exponent, \"num/den\"]");
        Rat c = t[1].is_string() ? rat_from_string(t[1].get<std::string>()) : Rat(t[1].get<long>());
        s += LaurentSeries::term(t[0].get<int>(), c);
    }
    return s;
}

Json germ_to_json(const BranchGerm& g) {
    return Json{{"xi", series_to_json(g.xi)}, {"eta", series_to_json(g.eta)}, {"trunc_order", g.trunc_order}};
}

BranchGerm germ_from_json(const Json& j) {
    int order = j.contains("trunc_order") ? j.at("trunc_order").get<int>() : 64;
    return BranchGerm(series_from_json(j.at("xi")), series_from_json(j.at("eta")), order);
}

Json bundle_to_json(const Bundle& b) {
    Json out{{"id", b.id},
             {"weights", weights_to_json(b.w)},
             {"metric", cometric_to_json(b.g)},
             {"boundary", boundary_to_json(b.boundary)}};
    if (b.domain) out["domain"] = domain_to_json(*b.domain);
    if (b.density) out["density"] = density_to_json(*b.density);
    Json df = Json::array();
    for (const auto& f : b.delta_factors) df.push_back(poly_to_json(f));
    out["delta_factors"] = df;
    if (!b.branch_vectors.empty()) {
        Json bv = Json::array();
        for (const auto& g : b.branch_vectors) bv.push_back(germ_to_json(g));
        out["branch_vectors"] = bv;
    }
    out["citations"] = b.citation;
    return out;
}

Bundle bundle_from_json(const Json& j) {
    Bundle b;
    b.id = j.value("id", std::string{});
    b.w = weights_from_json(j.at("weights"));
    b.g = cometric_from_json(j.at("metric"));
    b.boundary = boundary_from_json(j.at("boundary"));
    if (j.contains("domain")) b.domain = domain_from_json(j.at("domain"));
    if (j.contains("density")) b.density = density_from_json(j.at("density"));
    if (j.contains("delta_factors"))
        for (const auto& f : j.at("delta_factors")) b.delta_factors.push_back(poly_from_json(f));
    if (j.contains("branch_vectors"))
        for (const auto& g : j.at("branch_vectors")) b.branch_vectors.push_back(germ_from_json(g));
    if (j.contains("citations")) b.citation = j.at("citations").get<std::string>();
    return b;
}

Json load_json(const std::string& path) {
    if (path == "-") {
        Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void store_json(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace dopkit
