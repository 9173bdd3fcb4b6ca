// quatdesign: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a requested check failed, 2 usage error,
// 3 resource budget exceeded, 4 internal integrity failure, 5 other error,
// 10 + k for verify-paper when blocking criterion k is the first to fail.

#include "quatdesign/quatdesign.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace quatdesign;

namespace {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2, resource = 3, integrity = 4, other = 5 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct context {
    output_format format = output_format::text;
};

group_label require_group(const std::string& name) {
    auto g = parse_group_label(name);
    if (!g) throw usage_error("unknown group '" + name + "' (expected Q8, 2T, 2O, 2I, Cn(n), D2n(n))");
    return *g;
}

group_label require_order_group(const std::string& name) {
    const auto g = require_group(name);
    if (!has_order(g)) throw usage_error("group " + name + " has no maximal order here (expected 2T, 2O or 2I)");
    return g;
}

int emit(const context& ctx, const json& j, const table& t) {
    std::cout << render(j, t, ctx.format);
    return ok;
}

json ints(const std::vector<int>& v) { return json(v); }

// ---------------------------------------------------------------------------

int cmd_group(const context& ctx, const std::string& name) {
    const auto g = build_group(require_group(name));
    const bool closed = is_closed(g.elements), antipodal = is_antipodal(g.elements);
    json j{{"group", g.name()}, {"order", g.order()}, {"field", std::string(field_name(g.tag))},
           {"closed", closed}, {"antipodal", antipodal}, {"elements", to_json(g.elements)}};
    table t{{"index", "x1", "x2", "x3", "x4"}};
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (std::size_t k = 0; k < 4; ++k) row.push_back(to_string(g.elements[i][k]));
        t.push_back(row);
    }
    emit(ctx, j, t);
    return closed ? ok : check_failed;
}

json strength_json(const strength_report& r) {
    return json{{"label", r.label},
                {"method", r.method},
                {"max_degree", r.max_degree},
                {"even_members", ints(r.even_members)},
                {"antipodal", r.antipodal},
                {"all_odd_in", r.all_odd_in},
                {"odd_members", ints(r.odd_members)},
                {"odd_spot_checked", ints(r.odd_spot_checked)}};
}

table strength_table(const strength_report& r) {
    table t{{"degree", "in_strength"}};
    std::set<int> in(r.even_members.begin(), r.even_members.end());
    in.insert(r.odd_members.begin(), r.odd_members.end());
    for (int l = 1; l <= r.max_degree; ++l) t.push_back({std::to_string(l), in.count(l) ? "1" : "0"});
    return t;
}

int cmd_strength(const context& ctx, const std::string& group, const std::string& points, int max_degree, bool direct) {
    if (group.empty() == points.empty()) throw usage_error("give exactly one of --group or --points");
    if (max_degree < 1) throw usage_error("--max must be positive");
    strength_report r;
    if (!points.empty()) {
        const point_list pts = read_points(points);
        require_unit(pts);
        r = harmonic_strength(pts, max_degree, points);
    } else {
        const auto g = build_group(require_group(group));
        r = direct ? harmonic_strength(g.elements, max_degree, g.name()) : harmonic_strength(g, max_degree);
    }
    return emit(ctx, strength_json(r), strength_table(r));
}

int cmd_molien(const context& ctx, const std::string& name, int n) {
    if (n < 0) throw usage_error("--max must be nonnegative");
    const auto label = require_group(name);
    const auto g = build_group(label);
    const auto psi = molien_series(g, n);
    const auto closed = molien_closed_series(label, n);
    const auto f = molien_closed_form(label);
    json coef = json::array();
    table t{{"degree", "coefficient"}};
    for (int l = 0; l <= n; ++l) {
        coef.push_back(to_json(psi[l]));
        t.push_back({std::to_string(l), to_string(psi[l])});
    }
    const bool agree = psi == closed;
    json j{{"group", g.name()},
           {"truncation", n},
           {"coefficients", coef},
           {"closed_form", {{"numerator_exponents", ints(f.numerator)}, {"denominator_exponents", ints(f.denominator)}}},
           {"closed_form_agrees", agree}};
    emit(ctx, j, t);
    return agree ? ok : check_failed;
}

std::optional<rpoly> parse_poly(const std::string& text) {
    std::vector<rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto r = parse_rational(item);
        if (!r) return std::nullopt;
        c.push_back(*r);
    }
    if (c.empty()) return std::nullopt;
    return rpoly(std::move(c));
}

json poly_json(const rpoly& p) {
    json a = json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(to_json(p[k]));
    return a;
}

int cmd_gegenbauer(const context& ctx, int ell, int d, const std::string& expand) {
    if (d < 3) throw usage_error("--d must be at least 3");
    if (!expand.empty()) {
        auto f = parse_poly(expand);
        if (!f) throw usage_error("--expand takes comma-separated rational coefficients c0,c1,...");
        const auto coef = gegenbauer_expand(*f, d);
        json a = json::array();
        table t{{"ell", "f"}};
        for (std::size_t l = 0; l < coef.size(); ++l) {
            a.push_back(to_json(coef[l]));
            t.push_back({std::to_string(l), to_string(coef[l])});
        }
        return emit(ctx, json{{"d", d}, {"polynomial", poly_json(*f)}, {"expansion", a}}, t);
    }
    if (ell < 0) throw usage_error("--ell must be nonnegative");
    const rational lambda(d - 2, 2);
    const rpoly c = gegenbauer(ell, lambda), q = scaled_q(ell, d);
    table t{{"power", "C", "Q"}};
    for (int k = 0; k <= ell; ++k) t.push_back({std::to_string(k), to_string(c[k]), to_string(q[k])});
    json j{{"ell", ell},
           {"d", d},
           {"lambda", to_json(lambda)},
           {"gegenbauer", poly_json(c)},
           {"scaled_q", poly_json(q)},
           {"q_at_one", to_json(q.eval(rational(1)))},
           {"harmonic_dimension", to_json(harmonic_dimension(ell, d))}};
    return emit(ctx, j, t);
}

json quads(const std::vector<quad>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

int cmd_lp(const context& ctx, const std::string& name) {
    const auto names = test_function_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw usage_error("unknown test function '" + name + "' (expected F2T, F2O or F2I)");
    const auto tf = build_test_function(name);
    const auto cert = verify_certificate(tf);
    const rational half = lp_lower_bound(tf);
    const auto angles = angle_certificate(tf);
    const std::string group = name == "F2T" ? "2T" : (name == "F2O" ? "2O" : "2I");
    const auto eq = check_equality_case(build_group(group).elements, tf);
    json coef = json::object();
    table t{{"ell", "f"}};
    const auto f = gegenbauer_expand(tf.expanded, 4);
    for (std::size_t l = 0; l < f.size(); ++l) {
        if (f[l] == 0) continue;
        coef[std::to_string(l)] = to_json(f[l]);
        t.push_back({std::to_string(l), to_string(f[l])});
    }
    json j{{"name", tf.name},
           {"degree", tf.expanded.degree()},
           {"coefficients", coef},
           {"design_set", ints(tf.design_set)},
           {"bound", to_json(2 * half)},
           {"half_set_bound", to_json(half)},
           {"angle_set", quads(angles)},
           {"certificate",
            {{"pass", cert.pass()},
             {"coefficients_ok", cert.coefficients_ok},
             {"offending_degrees", ints(cert.offending_degrees)},
             {"f0_positive", cert.f0_positive},
             {"forms_agree", cert.forms_agree},
             {"positive_factor_min", to_json(cert.positive_factor_min)},
             {"nonnegative", cert.nonnegative},
             {"failures", cert.failures}}},
           {"equality_case",
            {{"group", group},
             {"size", eq.size},
             {"is_design", eq.is_design},
             {"attained", eq.attained},
             {"inner_products_are_roots", eq.inner_products_are_roots}}}};
    emit(ctx, j, t);
    return cert.pass() && eq.consistent() ? ok : check_failed;
}

json lattice_json(const lattice_point& p, int dim) {
    json a = json::array();
    for (int i = 0; i < dim; ++i) a.push_back(p[static_cast<std::size_t>(i)]);
    return a;
}

int cmd_shells(const context& ctx, const std::string& name, int m, bool count_only, const std::string& emit_path, bool orbits) {
    if (m < 1) throw usage_error("--m must be positive");
    const auto label = require_order_group(name);
    const auto s = enumerate_shell(label, m);
    const auto& o = order_for(label);
    const bigint formula = shell_count_formula(label, m);
    const bool match = formula == bigint(static_cast<long long>(s.size()));
    json j{{"group", to_string(label)}, {"m", m}, {"count", s.size()}, {"formula", formula.str()}, {"formula_agrees", match}};
    if (orbits) j["orbits"] = orbit_decompose(s).size();
    if (!count_only || !emit_path.empty()) {
        json pts = json::array();
        for (const auto& p : s.points) pts.push_back(json{{"coords", lattice_json(p, o.dim)}, {"quaternion", to_json(embed(o, p))}});
        if (!emit_path.empty()) {
            std::ofstream out(emit_path);
            if (!out) throw usage_error("cannot write '" + emit_path + "'");
            out << json{{"group", to_string(label)}, {"m", m}, {"dimension", o.dim}, {"points", pts}}.dump(2) << "\n";
            j["emitted"] = emit_path;
        }
        if (!count_only) j["points"] = pts;
    }
    table t{{"group", "m", "count", "formula"}, {to_string(label), std::to_string(m), std::to_string(s.size()), formula.str()}};
    emit(ctx, j, t);
    return match ? ok : check_failed;
}

int cmd_theta(const context& ctx, const std::string& name, int ell, int shells) {
    if (ell < 0 || shells < 1) throw usage_error("--ell must be nonnegative and --shells positive");
    const auto label = require_order_group(name);
    const auto tab = theta_table(label, ell, shells);
    const int rank = theta_rank(tab);
    const int bound = harmonic_invariant_dimension(build_group(label), ell);
    json rows = json::array();
    table t{{"m", "column", "value"}};
    for (std::size_t m = 0; m < tab.matrix.size(); ++m) {
        rows.push_back(quads(tab.matrix[m]));
        for (std::size_t c = 0; c < tab.matrix[m].size(); ++c)
            t.push_back({std::to_string(m + 1), std::to_string(c), to_string(tab.matrix[m][c])});
    }
    json j{{"group", to_string(label)}, {"ell", ell}, {"shells", shells}, {"basis_size", (ell + 1) * (ell + 1)},
           {"rank", rank}, {"invariant_bound", bound}, {"bound_holds", rank <= bound}};
    if (rank == 1) j["normalized_vector"] = quads(*rank_one_vector(tab));
    j["matrix"] = rows;
    emit(ctx, j, t);
    return rank <= bound ? ok : integrity;
}

int cmd_qseries(const context& ctx, const std::string& name, int n) {
    const auto names = qseries_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw usage_error("unknown q-series '" + name + "'");
    if (n < 1) throw usage_error("--n must be at least 1");
    const auto q = qseries(name, n);
    json a = json::array();
    table t{{"m", "coefficient"}};
    for (std::size_t m = 0; m < q.size(); ++m) {
        a.push_back(q[m].str());
        t.push_back({std::to_string(m), q[m].str()});
    }
    return emit(ctx, json{{"name", name}, {"truncation", n}, {"coefficients", a}}, t);
}

int cmd_verify(const context& ctx, const std::vector<int>& only) {
    for (int k : only)
        if (k < 1 || k > static_cast<int>(acceptance_checks().size())) throw usage_error("--only takes criterion numbers 1..12");
    json checks = json::array();
    table t{{"id", "key", "status", "blocking"}};
    int code = ok;
    std::string text;
    for (const auto& c : acceptance_checks()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto r = run_check(c);
        checks.push_back(json{{"id", r.id}, {"key", r.key}, {"title", r.title}, {"blocking", r.blocking},
                              {"pass", r.pass}, {"details", r.details}});
        t.push_back({std::to_string(r.id), r.key, r.pass ? "PASS" : "FAIL", r.blocking ? "1" : "0"});
        if (ctx.format == output_format::text) {
            // stream progressively; the suite takes minutes
            std::cout << status_line(r) << "\n";
            for (const auto& d : r.details) std::cout << "    " << d << "\n";
            std::cout.flush();
        }
        if (!r.pass && r.blocking && code == ok) code = 10 + r.id;
    }
    if (ctx.format == output_format::text) {
        std::cout << (code == ok ? "all blocking checks pass\n" : "blocking check " + std::to_string(code - 10) + " failed\n");
        return code;
    }
    emit(ctx, json{{"budget", current_budget().name}, {"pass", code == ok}, {"checks", checks}}, t);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with the binary polyhedral groups 2T, 2O, 2I: designs, LP bounds, order shells, theta tables"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", budget;
    int threads = 0;
    app.add_option("--format", format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--budget", budget, "Resource budget: small, desk, large or <points>,<work> (overrides QUATDESIGN_BUDGET)");

    std::string group, points, name, expand, emit_path;
    int max_degree = 60, ell = 0, d = 4, m = 1, shells = 6, n = 20;
    bool count_only = false, direct = false, orbits = false;
    std::vector<int> only;

    auto* g = app.add_subcommand("group", "Build a finite unit-quaternion group");
    g->add_option("--name", name, "Q8, 2T, 2O, 2I, Cn(<n>) or D2n(<n>)")->required();

    auto* s = app.add_subcommand("strength", "Harmonic strength of a group or of a point set");
    s->add_option("--group", group, "Group label");
    s->add_option("--points", points, "JSON file with unit quaternions");
    s->add_option("--max", max_degree, "Largest degree examined");
    s->add_flag("--direct", direct, "Use pair sums instead of the Molien series for a group");

    auto* mo = app.add_subcommand("molien", "Molien series coefficients");
    mo->add_option("--group", group, "Group label")->required();
    mo->add_option("--max", max_degree, "Truncation degree");

    auto* ge = app.add_subcommand("gegenbauer", "Gegenbauer polynomials and expansions");
    ge->add_option("--ell", ell, "Degree");
    ge->add_option("--d", d, "Dimension d (lambda = (d - 2)/2)");
    ge->add_option("--expand", expand, "Expand a polynomial given as c0,c1,... in the Q_l^(d) basis");

    auto* lp = app.add_subcommand("lp", "Linear-programming certificate for F2T, F2O or F2I");
    lp->add_option("--name", name, "Test function")->required();
    lp->add_option("--report", format, "Alias for --format")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* sh = app.add_subcommand("shells", "Shells of the maximal orders of 2T, 2O, 2I");
    sh->add_option("--group", group, "2T, 2O or 2I")->required();
    sh->add_option("--m", m, "Shell index m >= 1")->required();
    sh->add_flag("--count-only", count_only, "Omit the point list");
    sh->add_option("--emit", emit_path, "Write the shell points to a JSON file");
    sh->add_flag("--orbits", orbits, "Also count orbits under the right group action");

    auto* th = app.add_subcommand("theta", "Spherical theta coefficient table and its exact rank");
    th->add_option("--group", group, "2T, 2O or 2I")->required();
    th->add_option("--ell", ell, "Harmonic degree")->required();
    th->add_option("--shells", shells, "Number of shells M");
    th->add_option("--report", format, "Alias for --format")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* qs = app.add_subcommand("qseries", "Reference q-series");
    qs->add_option("--name", name, "E2, E4, Delta, E4Delta, DeltaPlus64Delta2, Theta2T, Theta2O, Theta2I")->required();
    qs->add_option("--n", n, "Truncation");

    auto* vp = app.add_subcommand("verify-paper", "Run the full reproduction suite");
    vp->add_option("--only", only, "Restrict to these criterion numbers")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        context ctx;
        ctx.format = *parse_format(format);
        if (!budget.empty()) {
            auto b = parse_budget(budget);
            if (!b) throw usage_error("invalid --budget '" + budget + "'");
            set_budget(*b);
        } else if (const char* env = std::getenv("QUATDESIGN_BUDGET")) {
            if (!parse_budget(env)) throw usage_error(std::string("invalid QUATDESIGN_BUDGET '") + env + "'");
        }
        set_thread_count(static_cast<unsigned>(threads));

        if (g->parsed()) return cmd_group(ctx, name);
        if (s->parsed()) return cmd_strength(ctx, group, points, max_degree, direct);
        if (mo->parsed()) return cmd_molien(ctx, group, max_degree);
        if (ge->parsed()) return cmd_gegenbauer(ctx, ell, d, expand);
        if (lp->parsed()) return cmd_lp(ctx, name);
        if (sh->parsed()) return cmd_shells(ctx, group, m, count_only, emit_path, orbits);
        if (th->parsed()) return cmd_theta(ctx, group, ell, shells);
        if (qs->parsed()) return cmd_qseries(ctx, name, n);
        if (vp->parsed()) return cmd_verify(ctx, only);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const unsupported_angle& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return usage;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource;
    } catch (const integrity_error& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return integrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return other;
    }
    return usage;
}
