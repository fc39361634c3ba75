// dopkit: verify, solve, catalog and spectrally test weighted
// diffusion-orthogonal-polynomial systems on the plane.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dopkit/branches.hpp"
#include "dopkit/density.hpp"
#include "dopkit/io.hpp"
#include "dopkit/jet.hpp"
#include "dopkit/linalg.hpp"
#include "dopkit/spectral.hpp"

using namespace dopkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string output;
    std::string weights = "1,2";
    int threads = 1;
    long seed = 0;
};

Weights parse_weights(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("weights must be W1,W2");
    return Weights::from_rationals(rat_from_string(s.substr(0, comma)), rat_from_string(s.substr(comma + 1)));
}

Params parse_params(const std::string& s) {
    Params out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? s.size() : comma + 1;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("parameter must be name=value: '" + item + "'");
        std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        try {
            out[name] = rat_from_string(value);
        } catch (const std::invalid_argument&) {
            out[name] = parse_poly(value);
        }
    }
    return out;
}

void emit(const Json& j, const GlobalOpts& g) { store_json(j, g.output.empty() ? "-" : g.output); }

Json meta(const GlobalOpts& g) {
    return Json{{"seed", g.seed}, {"threads", g.threads}};
}

int run_verify(const std::string& metric_path, const std::string& boundary_path, const GlobalOpts& g) {
    Cometric gm = cometric_from_json(load_json(metric_path));
    BoundarySpec bd = boundary_from_json(load_json(boundary_path));
    Weights w = parse_weights(g.weights);
    Json rep;
    rep["a1"] = check_A1(gm, w);
    auto res = check_A2_A3(gm, bd);
    rep["a2"] = res.status != A2A3Status::zero_determinant && res.status != A2A3Status::gamma_not_dividing;
    rep["a3"] = res.ok();
    switch (res.status) {
        case A2A3Status::zero_determinant: rep["detail"] = "det g is identically zero"; break;
        case A2A3Status::gamma_not_dividing: rep["detail"] = "Gamma does not divide det g"; break;
        case A2A3Status::a3_fails: rep["detail"] = "Gamma does not divide a row of g grad Gamma"; break;
        case A2A3Status::ok: break;
    }
    if (res.ok()) {
        rep["certificate"] = Json{{"S1", poly_to_json(res.certificate->S1)},
                                  {"S2", poly_to_json(res.certificate->S2)},
                                  {"degree_bounds_ok", res.certificate->degree_bounds_ok(w)}};
    }
    rep["meta"] = meta(g);
    emit(rep, g);
    bool pass = rep["a1"].get<bool>() && res.ok() && res.certificate->degree_bounds_ok(w);
    return pass ? kExitOk : kExitMathFail;
}

int run_solve_metric(const std::string& boundary_path, const GlobalOpts& g) {
    BoundarySpec bd = boundary_from_json(load_json(boundary_path));
    Weights w = parse_weights(g.weights);
    auto basis = solve_metric(bd, w);
    Json rep;
    rep["dimension"] = basis.size();
    Json arr = Json::array();
    for (const auto& ms : basis)
        arr.push_back(Json{{"a", poly_to_json(ms.g.a)},
                           {"b", poly_to_json(ms.g.b)},
                           {"c", poly_to_json(ms.g.c)},
                           {"S1", poly_to_json(ms.S1)},
                           {"S2", poly_to_json(ms.S2)}});
    rep["basis"] = arr;
    rep["meta"] = meta(g);
    emit(rep, g);
    return kExitOk;
}

int run_density(const std::string& metric_path, const std::string& boundary_path, const std::string& at,
                const GlobalOpts& g) {
    Cometric gm = cometric_from_json(load_json(metric_path));
    BoundarySpec bd = boundary_from_json(load_json(boundary_path));
    Weights w = parse_weights(g.weights);
    auto drifts = solve_drift(gm, w);
    Json rep;
    rep["drift_dimension"] = drifts.size();
    std::vector<DensitySpec> gens;
    Json gen_arr = Json::array();
    for (const auto& d : drifts) {
        Json item{{"L1", poly_to_json(d.L1)}, {"L2", poly_to_json(d.L2)}};
        try {
            DensitySpec ds = integrate_drift(gm, d, bd);
            gens.push_back(ds);
            item["density"] = density_to_json(ds);
            item["degree_bound_9"] = check_degree_bound_9(gm.det(), ds.Q, w);
        } catch (const IntegrateError& e) {
            gens.push_back(DensitySpec{});
            item["density_error"] = e.what();
        }
        gen_arr.push_back(item);
    }
    rep["generators"] = gen_arr;

    if (!at.empty()) {
        // target exponents by name: p, q, r map to the factor list in order;
        // lambda matches Q against -lambda*x; t1, t2, ... set basis coordinates
        Params assigns = parse_params(at);
        std::size_t nfac = bd.factors.size();
        RatMat A;
        RatVec rhs;
        const std::vector<std::string> expo_names = {"p", "q", "r", "s"};
        auto gen_expo = [&](std::size_t gen, std::size_t k) { return gens[gen].factor_exponents.empty() ? Rat(0) : gens[gen].factor_exponents[k].second; };
        for (std::size_t k = 0; k < std::min(nfac, expo_names.size()); ++k) {
            auto it = assigns.find(expo_names[k]);
            if (it == assigns.end()) continue;
            RatVec row(drifts.size());
            for (std::size_t i = 0; i < drifts.size(); ++i) row[i] = gen_expo(i, k);
            A.push_back(row);
            rhs.push_back(std::get<Rat>(it->second) - 1);
        }
        if (assigns.count("lambda")) {
            // match every monomial of Q against -lambda * x
            std::map<Expo, Rat> target;
            target[{1, 0}] = -std::get<Rat>(assigns.at("lambda"));
            std::map<Expo, bool> support;
            for (const auto& gen : gens)
                for (const auto& [e, c] : gen.Q.terms()) support[e] = true;
            support[{1, 0}] = true;
            for (const auto& [e, unused] : support) {
                RatVec row(drifts.size());
                for (std::size_t i = 0; i < drifts.size(); ++i) row[i] = gens[i].Q.coeff(e.first, e.second);
                A.push_back(row);
                rhs.push_back(target.count(e) ? target[e] : Rat(0));
            }
        }
        for (std::size_t i = 0; i < drifts.size(); ++i) {
            auto it = assigns.find("t" + std::to_string(i + 1));
            if (it == assigns.end()) continue;
            RatVec row(drifts.size(), Rat(0));
            row[i] = 1;
            A.push_back(row);
            rhs.push_back(std::get<Rat>(it->second));
        }
        RatVec t;
        if (A.empty() || !solve_linear(A, rhs, t)) {
            rep["at_error"] = "requested assignment is not realizable by the drift family";
            rep["meta"] = meta(g);
            emit(rep, g);
            return kExitMathFail;
        }
        DriftPair combo;
        for (std::size_t i = 0; i < drifts.size(); ++i) {
            combo.L1 += t[i] * drifts[i].L1;
            combo.L2 += t[i] * drifts[i].L2;
        }
        DensitySpec ds = integrate_drift(gm, combo, bd);
        rep["at"] = Json{{"coordinates", [&] {
                              Json a = Json::array();
                              for (const auto& v : t) a.push_back(rat_to_string(v));
                              return a;
                          }()},
                         {"density", density_to_json(ds)},
                         {"degree_bound_9", check_degree_bound_9(gm.det(), ds.Q, w)}};
    }
    rep["meta"] = meta(g);
    emit(rep, g);
    return kExitOk;
}

int run_branch_check(const std::string& germ_path, const std::string& metric_path,
                     const std::string& boundary_path, const GlobalOpts& g) {
    BranchGerm germ = germ_from_json(load_json(germ_path));
    Cometric gm = cometric_from_json(load_json(metric_path));
    auto verdict_str = [](Verdict v) {
        switch (v) {
            case Verdict::yes: return "yes";
            case Verdict::no: return "no";
            default: return "inconclusive";
        }
    };
    Json rep;
    Verdict v11 = check_condition_11(germ, gm);
    rep["condition_11"] = verdict_str(v11);
    try {
        rep["eq_12"] = verdict_str(check_eq_12(germ, gm));
    } catch (const std::invalid_argument& e) {
        rep["eq_12_error"] = e.what();
    }
    if (!boundary_path.empty()) {
        BoundarySpec bd = boundary_from_json(load_json(boundary_path));
        Valuation v = valuation(germ, bd.product());
        if (v.is_finite())
            rep["valuation_gamma"] = v.value;
        else
            rep["valuation_gamma"] = v.is_infinite() ? "infinity" : "inconclusive";
    }
    rep["meta"] = meta(g);
    emit(rep, g);
    return v11 == Verdict::yes ? kExitOk : kExitMathFail;
}

int run_catalog_list(const GlobalOpts& g) {
    const Catalog& cat = Catalog::instance();
    Json arr = Json::array();
    for (const auto& id : cat.ids()) {
        const auto& e = cat.entry(id);
        arr.push_back(Json{{"id", e.id}, {"summary", e.summary}, {"citation", e.citation}});
    }
    emit(Json{{"entries", arr}}, g);
    return kExitOk;
}

int run_catalog_show(const std::string& id, const GlobalOpts& g) {
    const auto& e = Catalog::instance().entry(id);
    Json params = Json::array();
    for (const auto& p : e.params) params.push_back(Json{{"name", p.name}, {"domain", p.domain}});
    emit(Json{{"id", e.id}, {"summary", e.summary}, {"citation", e.citation}, {"params", params}}, g);
    return kExitOk;
}

int run_catalog_instantiate(const std::string& id, const std::string& params, const GlobalOpts& g) {
    Bundle b = Catalog::instance().instantiate(id, parse_params(params));
    emit(bundle_to_json(b), g);
    return kExitOk;
}

int run_spectral(const std::string& bundle_path, long degree, int order, double symmetry_tol,
                 const std::string& nodes_csv, const std::string& eigen_csv, const GlobalOpts& g) {
    Bundle b = bundle_from_json(load_json(bundle_path));
    if (!b.domain) throw std::invalid_argument("bundle has no domain; spectral tests need Omega");
    if (!b.density) throw std::invalid_argument("bundle has no density");
    Json rep;
    auto inv = filtration_invariance(b.g, *b.density, b.w, degree);
    rep["invariance"] = inv.invariant;
    if (!inv.invariant) {
        rep["witness"] = Json::array({inv.witness->first, inv.witness->second});
        rep["meta"] = meta(g);
        emit(rep, g);
        return kExitMathFail;
    }
    QuadratureRule rule = build_quadrature(*b.domain, *b.density, order);
    rep["quadrature"] = Json{{"nodes", rule.nodes.size()}, {"order", rule.order}, {"mass", rule.mass}};
    double defect = symmetry_defect(b.g, *b.density, b.w, degree, rule);
    rep["symmetry_defect"] = defect;
    auto gs = gram_schmidt(inv.basis, rule);
    rep["gram_residual"] = gs.gram_residual;
    auto eig = eigenstructure(b.g, *b.density, b.w, degree);
    Json evs = Json::array();
    for (const auto& blk : eig.blocks) {
        Json bj{{"degree", blk.degree}, {"defective", blk.defective}};
        Json vals = Json::array();
        for (const auto& ev : blk.eigenvalues) vals.push_back(Json::array({ev.real(), ev.imag()}));
        bj["eigenvalues"] = vals;
        evs.push_back(bj);
    }
    rep["eigenvalues"] = evs;
    rep["max_imag"] = eig.max_imag;

    if (!nodes_csv.empty()) {
        std::ofstream out(nodes_csv);
        out << "x,y,weight\n";
        for (const auto& n : rule.nodes) out << n.x << "," << n.y << "," << n.weight << "\n";
    }
    if (!eigen_csv.empty()) {
        std::ofstream out(eigen_csv);
        out << "degree,eigenvalue_re,eigenvalue_im";
        for (std::size_t k = 0; k < eig.basis.size(); ++k)
            out << ",c_x" << eig.basis.monomials[k].first << "y" << eig.basis.monomials[k].second;
        out << "\n";
        for (const auto& blk : eig.blocks)
            for (std::size_t v = 0; v < blk.eigenvalues.size(); ++v) {
                out << blk.degree << "," << blk.eigenvalues[v].real() << "," << blk.eigenvalues[v].imag();
                for (double c : blk.eigenvectors[v]) out << "," << c;
                out << "\n";
            }
    }
    rep["meta"] = meta(g);
    emit(rep, g);
    bool pass = inv.invariant && defect <= symmetry_tol;
    return pass ? kExitOk : kExitMathFail;
}

int run_curvature(const std::string& bundle_path, const std::string& point, bool use_float,
                  const GlobalOpts& g) {
    Bundle b = bundle_from_json(load_json(bundle_path));
    auto comma = point.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--point must be x,y");
    Rat x = rat_from_string(point.substr(0, comma)), y = rat_from_string(point.substr(comma + 1));
    Json rep;
    if (use_float) {
        rep["curvature"] = scalar_curvature(b.g, rat_to_double(x), rat_to_double(y));
        rep["gaussian"] = gaussian_curvature(b.g, rat_to_double(x), rat_to_double(y));
    } else {
        Rat k = curvature(b, x, y);
        rep["curvature"] = rat_to_string(k);
        rep["curvature_float"] = rat_to_double(k);
        rep["gaussian"] = rat_to_string(Rat(k / 2));
    }
    rep["meta"] = meta(g);
    emit(rep, g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dopkit: weighted diffusion-orthogonal-polynomial toolkit"};
    app.set_config("--config");
    GlobalOpts g;
    app.add_option("--output,-o", g.output, "output path for the JSON artifact ('-' = stdout)");
    app.add_option("--weights", g.weights, "weights W1,W2 (positive rationals)");
    app.add_option("--threads", g.threads, "worker threads (deterministic reduction)");
    app.add_option("--seed", g.seed, "seed for quasi-random point sets");

    std::string metric_path, boundary_path, germ_path, bundle_path, at, params_str, point;
    long degree = 6;
    int order = 48;
    double symmetry_tol = 1e-8;
    std::string nodes_csv, eigen_csv, catalog_id;
    bool use_float = false;

    auto* verify = app.add_subcommand("verify", "check (A1)-(A3) for a metric/boundary pair");
    verify->add_option("--metric", metric_path)->required();
    verify->add_option("--boundary", boundary_path)->required();

    auto* solve = app.add_subcommand("solve-metric", "solve eq. (4) for all cometrics of a boundary");
    solve->add_option("--boundary", boundary_path)->required();

    auto* density = app.add_subcommand("density", "drift family and measure densities for a metric");
    density->add_option("--metric", metric_path)->required();
    density->add_option("--boundary", boundary_path)->required();
    density->add_option("--at", at, "p=..,q=..[,lambda=..] or t1=..,t2=..");

    auto* branch = app.add_subcommand("branch-check", "verify the branch tangency conditions");
    branch->add_option("--germ", germ_path)->required();
    branch->add_option("--metric", metric_path)->required();
    branch->add_option("--boundary", boundary_path);

    auto* cat = app.add_subcommand("catalog", "classified solution families");
    auto* cat_list = cat->add_subcommand("list", "list entries");
    auto* cat_show = cat->add_subcommand("show", "entry details");
    cat_show->add_option("id", catalog_id)->required();
    auto* cat_inst = cat->add_subcommand("instantiate", "instantiate an entry at parameters");
    cat_inst->add_option("id", catalog_id)->required();
    cat_inst->add_option("--params", params_str, "name=value,... (rationals or polynomials in x)");

    auto* spectral = app.add_subcommand("spectral", "quadrature, symmetry and eigenstructure desk test");
    spectral->add_option("--bundle", bundle_path)->required();
    spectral->add_option("--degree", degree, "weighted-degree cutoff (default 6)");
    spectral->add_option("--order", order, "Gauss order (default 48)");
    spectral->add_option("--symmetry-tol", symmetry_tol, "pass threshold for the symmetry defect (default 1e-8)");
    spectral->add_option("--nodes-csv", nodes_csv);
    spectral->add_option("--eigen-csv", eigen_csv);

    auto* curv = app.add_subcommand("curvature", "Gaussian curvature at a rational point");
    curv->add_option("--bundle", bundle_path)->required();
    curv->add_option("--point", point)->required();
    curv->add_flag("--float", use_float, "float fast path");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return run_verify(metric_path, boundary_path, g);
        if (*solve) return run_solve_metric(boundary_path, g);
        if (*density) return run_density(metric_path, boundary_path, at, g);
        if (*branch) return run_branch_check(germ_path, metric_path, boundary_path, g);
        if (*cat) {
            if (*cat_list) return run_catalog_list(g);
            if (*cat_show) return run_catalog_show(catalog_id, g);
            if (*cat_inst) return run_catalog_instantiate(catalog_id, params_str, g);
            std::cerr << "catalog requires a subcommand (list, show, instantiate)\n";
            return kExitUsage;
        }
        if (*spectral) return run_spectral(bundle_path, degree, order, symmetry_tol, nodes_csv, eigen_csv, g);
        if (*curv) return run_curvature(bundle_path, point, use_float, g);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParam& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegrateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitUsage;
}
