#include "genuskit/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "genuskit/fgl.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/grt.hpp"
#include "genuskit/operad.hpp"
#include "genuskit/pbn.hpp"
#include "genuskit/qsym.hpp"
#include "genuskit/symm.hpp"

namespace genuskit::cli {

using json = nlohmann::ordered_json;

std::string rational_string(const Rational& r) {
    const mpq_class& q = r.raw();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit(const Report& report, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            json doc = report.fields;
            if (!report.columns.empty()) {
                json rows = json::array();
                for (const auto& row : report.rows) {
                    json obj = json::object();
                    for (std::size_t c = 0; c < report.columns.size(); ++c) obj[report.columns[c]] = row.at(c);
                    rows.push_back(std::move(obj));
                }
                doc["rows"] = std::move(rows);
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            if (report.columns.empty()) {
                if (report.fields.empty()) break;
                out << "key,value\n";
                for (const auto& [k, v] : report.fields.items()) out << csv_escape(k) << "," << csv_escape(cell_text(v)) << "\n";
                break;
            }
            for (std::size_t c = 0; c < report.columns.size(); ++c) out << (c ? "," : "") << csv_escape(report.columns[c]);
            out << "\n";
            for (const auto& row : report.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c]));
                out << "\n";
            }
            break;
        }
        case Format::Text: {
            for (const auto& [k, v] : report.fields.items()) out << k << ": " << cell_text(v) << "\n";
            if (report.columns.empty()) break;
            if (!report.fields.empty()) out << "\n";
            std::vector<std::size_t> width(report.columns.size());
            for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
            for (const auto& row : report.rows)
                for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
            auto line = [&](const std::vector<std::string>& cells) {
                std::string text;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    text += cells[c];
                    if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
                }
                out << text << "\n";
            };
            line(report.columns);
            for (const auto& row : report.rows) {
                std::vector<std::string> cells;
                for (const auto& v : row) cells.push_back(cell_text(v));
                line(cells);
            }
            break;
        }
    }
    return out.str();
}

namespace {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    Report report;
    bool passed = true;
};

struct Config {
    int order = kDefaultOrder;
    std::string format = "text";
    double tol = 1e-6;
    int max_n = -1;
    int degree = -1;
    std::size_t cap = braid::kDefaultCap;

    int max_n_or(int fallback) const { return max_n >= 0 ? max_n : fallback; }
    int degree_or(int fallback) const { return degree >= 0 ? degree : fallback; }
};

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return arr;
}

void check_rows(Report& r, const std::vector<Check>& checks) {
    r.columns = {"check", "passed", "detail"};
    for (const auto& c : checks) r.rows.push_back({c.name, c.passed, c.detail});
}

// ---- genus ----

Outcome genus_cp(const Config& cfg, const std::string& name, int q_order, bool bernoulli) {
    const int n_max = cfg.max_n_or(std::min(8, cfg.order - 1));
    if (n_max < 0 || n_max >= cfg.order) throw InputError("--max-n must be below --order");
    const auto g = genus::make_genus(name, cfg.order, q_order);
    const auto a = genus::cp_by_extraction(g, n_max);
    const auto b = genus::cp_by_reversion(g, n_max);
    Outcome o;
    o.passed = a == b;
    o.report.fields["genus"] = g.name;
    o.report.fields["order"] = cfg.order;
    o.report.fields["max_n"] = n_max;
    o.report.fields["routes_agree"] = o.passed;
    o.report.columns = {"n", "value"};
    if (bernoulli) o.report.columns.push_back("bernoulli");
    for (int n = 0; n <= n_max; ++n) {
        std::vector<json> row{n, a[static_cast<std::size_t>(n)].to_string()};
        if (bernoulli) row.push_back(genus::bernoulli_rewrite(a[static_cast<std::size_t>(n)]).to_string());
        o.report.rows.push_back(std::move(row));
    }
    return o;
}

Outcome genus_duplication(const Config& cfg) {
    if (cfg.order % 2 != 0) throw InputError("duplication check needs an even --order");
    const auto checks = genus::duplication_check(cfg.order);
    Outcome o;
    o.passed = all_passed(checks);
    o.report.fields["order"] = cfg.order;
    o.report.fields["passed"] = o.passed;
    check_rows(o.report, checks);
    return o;
}

Outcome genus_witten(const Config& cfg, int q_order) {
    const int x_order = cfg.degree_or(9);
    if (x_order < 1) throw InputError("--degree must be positive");
    const auto g = genus::witten_g_series(q_order, x_order);
    Outcome o;
    bool odd_zero = true;
    for (int k = 1; k <= x_order; k += 2) odd_zero = odd_zero && g[static_cast<std::size_t>(k)].is_zero();
    const int order = x_order + 1;
    const auto w = genus::witten(order, q_order);
    const Series slice = w.Q.map_coefficients([](const SymbolPoly& c) { return c.substitute("q", SymbolPoly(0)); });
    const bool ahat_slice = slice == genus::ahat(order).Q;
    o.passed = odd_zero && ahat_slice;
    o.report.fields["q_order"] = q_order;
    o.report.fields["x_order"] = x_order;
    o.report.fields["odd_vanish"] = odd_zero;
    o.report.fields["q0_equals_ahat"] = ahat_slice;
    o.report.columns = {"k", "g_k"};
    for (std::size_t k = 0; k < g.size(); ++k) o.report.rows.push_back({static_cast<int>(k), g[k].to_string()});
    return o;
}

// ---- fgl ----

fgl::FormalDiffeo log_for(const std::string& source, int degree) {
    if (source == "additive") return fgl::FormalDiffeo::identity(degree);
    if (source == "multiplicative") return fgl::FormalDiffeo(log(Series::variable("z", degree + 1) + Series::constant("z", degree + 1, SymbolPoly(1))));
    if (source == "generic") return fgl::FormalDiffeo::generic(degree);
    try {
        return fgl::FormalDiffeo(genus::log_series(genus::make_genus(source, degree + 1)));
    } catch (const std::invalid_argument&) {
        throw InputError("unknown logarithm source '" + source + "' (additive, multiplicative, generic or a genus name)");
    }
}

Outcome fgl_law(const Config& cfg, const std::string& source) {
    const int degree = cfg.degree_or(6);
    if (degree < 1) throw InputError("--degree must be positive");
    const auto F = fgl::fgl_from_log(log_for(source, degree));
    const auto checks = fgl::check_fgl_axioms(F).checks();
    Outcome o;
    o.passed = all_passed(checks);
    o.report.fields["source"] = source;
    o.report.fields["degree"] = degree;
    o.report.fields["law"] = F.to_string();
    o.report.fields["passed"] = o.passed;
    check_rows(o.report, checks);
    return o;
}

Outcome fgl_coproduct(const Config& cfg) {
    const int degree = cfg.degree_or(4);
    if (degree < 1) throw InputError("--degree must be positive");
    const auto delta = fgl::ln_coproduct(degree);
    const auto checks = fgl::check_hopf_laws(degree);
    Outcome o;
    o.passed = all_passed(checks);
    json constants = json::array();
    o.report.columns = {"k", "i", "j", "coeff"};
    for (int k = 1; k <= degree; ++k) {
        json terms = json::array();
        for (const auto& t : fgl::tensor_terms(delta[static_cast<std::size_t>(k - 1)])) {
            const std::string i = t.left.to_string(), j = t.right.to_string();
            terms.push_back(json{{"i", i}, {"j", j}, {"coeff", rational_string(t.coeff)}});
            o.report.rows.push_back({k, i, j, rational_string(t.coeff)});
        }
        constants.push_back(json{{"k", k}, {"terms", std::move(terms)}});
    }
    o.report.fields["degree"] = degree;
    o.report.fields["coproduct"] = std::move(constants);
    o.report.fields["checks"] = checks_json(checks);
    return o;
}

Outcome fgl_thom(const Config& cfg) {
    const int degree = cfg.degree_or(15);
    if (degree < 1) throw InputError("--degree must be positive");
    const auto constraints = fgl::thom_twist_constraint(fgl::generic_twist(degree));
    std::vector<SymbolPoly> expected;
    for (int k = 1; k <= degree; k += 2) expected.emplace_back(sym::sigma(k));
    Outcome o;
    o.passed = constraints == expected;
    o.report.fields["degree"] = degree;
    o.report.fields["exactly_odd_sigma"] = o.passed;
    o.report.columns = {"constraint"};
    for (const auto& c : constraints) o.report.rows.push_back({c.to_string() + " = 0"});
    return o;
}

Outcome fgl_hbar(const Config& cfg, const std::string& name, int q_order) {
    const int degree = cfg.degree_or(8);
    if (degree < 1) throw InputError("--degree must be positive");
    const int order = std::max(cfg.order, degree + 1);
    const auto g = genus::make_genus(name, order, q_order);
    const auto cp = genus::cp_values(g, degree - 1);
    const Series hbar = fgl::hbar_series(cp, degree);
    const Series logarithm = genus::log_series(g);
    bool match = true;
    for (int k = 0; k <= degree; ++k) match = match && hbar[k] == logarithm[k];
    Outcome o;
    o.passed = match;
    o.report.fields["genus"] = g.name;
    o.report.fields["degree"] = degree;
    o.report.fields["hbar"] = hbar.to_string();
    o.report.fields["matches_log_series"] = match;
    o.report.columns = {"k", "coefficient"};
    for (int k = 1; k <= degree; ++k) o.report.rows.push_back({k, hbar[k].to_string()});
    return o;
}

Outcome fgl_descent(const Config& cfg, int max_exponent) {
    const int k_max = cfg.max_n_or(3);
    if (k_max < 1) throw InputError("--max-n must be positive");
    const auto gens = fgl::descent_generators(k_max);
    const auto monomials = fgl::gm_invariant_bidegrees(gens, max_exponent < 0 ? 2 * k_max + 1 : max_exponent);
    Outcome o;
    o.report.fields["k_max"] = k_max;
    o.report.columns = {"monomial", "p", "q"};
    for (const auto& m : monomials) o.report.rows.push_back({m.text, m.bidegree.first, m.bidegree.second});
    return o;
}

// ---- symm ----

Outcome symm_convert(const std::string& expr, const std::string& to) {
    const auto x = symm::parse_symm(expr);
    const auto y = symm::convert(x, symm::parse_basis(to));
    Outcome o;
    o.report.fields["input"] = x.to_string();
    o.report.fields["basis"] = std::string(1, symm::basis_letter(y.basis()));
    o.report.fields["result"] = y.to_string();
    o.report.columns = {"partition", "coefficient"};
    for (const auto& [lambda, c] : y.terms()) {
        std::string p;
        for (std::size_t k = 0; k < lambda.size(); ++k) p += (k ? "," : "") + std::to_string(lambda[k]);
        o.report.rows.push_back({p, rational_string(c)});
    }
    return o;
}

symm::Specialization parse_rule(const std::string& rule) {
    auto number = [&rule](const std::string& text) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || v < 1) throw InputError("bad specialization rule '" + rule + "'");
        return v;
    };
    if (rule == "zeta") return symm::Specialization::zeta();
    if (rule.rfind("power:", 0) == 0) return symm::Specialization::power_sum(number(rule.substr(6)));
    if (rule.rfind("finite:", 0) == 0) return symm::Specialization::finite(number(rule.substr(7)));
    throw InputError("unknown specialization rule '" + rule + "' (zeta, power:S or finite:M)");
}

Outcome symm_specialize(const std::string& expr, const std::string& rule, bool bernoulli) {
    const auto x = symm::parse_symm(expr);
    const auto value = symm::specialize(x, parse_rule(rule));
    Outcome o;
    o.report.fields["input"] = x.to_string();
    o.report.fields["rule"] = rule;
    o.report.fields["value"] = value.to_string();
    if (bernoulli) o.report.fields["bernoulli"] = genus::bernoulli_rewrite(value).to_string();
    return o;
}

// ---- qsym ----

Outcome qsym_stuffle(const std::string& a, const std::string& b, int m) {
    if (m < 1) throw InputError("--max-n must be positive");
    const auto ca = qsym::parse_composition(a), cb = qsym::parse_composition(b);
    const auto product = qsym::stuffle(ca, cb);
    const Rational lhs = qsym::finite_truncation(product, m);
    const Rational rhs = qsym::finite_truncation(qsym::QSymmElement::monomial(ca), m) *
                         qsym::finite_truncation(qsym::QSymmElement::monomial(cb), m);
    Outcome o;
    o.passed = lhs == rhs;
    o.report.fields["product"] = product.to_string();
    o.report.fields["truncation_m"] = m;
    o.report.fields["truncation_product"] = rational_string(lhs);
    o.report.fields["truncation_matches"] = o.passed;
    o.report.columns = {"composition", "coefficient"};
    for (const auto& [c, v] : product.terms()) o.report.rows.push_back({qsym::composition_string(c), rational_string(v)});
    return o;
}

std::string fixed(long double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

Outcome qsym_mzv(const Config& cfg, const std::string& text) {
    const auto I = qsym::parse_composition(text);
    const auto v = qsym::mzv_eval(I, cfg.tol);
    Outcome o;
    o.report.fields["composition"] = qsym::composition_string(I);
    o.report.fields["value"] = std::stod(fixed(v.value, "%.17Lg"));
    o.report.fields["error_bound"] = std::stod(fixed(v.error_bound, "%.6Le"));
    o.report.fields["cutoff"] = v.cutoff;
    return o;
}

// ---- grt ----

lie::LieElement read_psi(const grt::GrtContext& g, const std::string& text) {
    auto degree_of = [&text](const std::string& s) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size()) throw InputError("bad degree in '" + text + "'");
        return n;
    };
    if (text.rfind("ihara:", 0) == 0) return g.ihara_psi(degree_of(text.substr(6)));
    if (text.rfind("grt:", 0) == 0) {
        const int n = degree_of(text.substr(4));
        const auto s = g.solve(n, g.ihara_psi(n));
        if (!s) throw InputError("no grt element extends ihara:" + std::to_string(n));
        return s->particular;
    }
    return g.parse(text);
}

json lie_coordinates(const lie::FreeLie& f, const lie::LieElement& x) {
    json obj = json::object();
    for (const auto& [w, c] : x.terms()) obj[f.bracketing(w)] = rational_string(c);
    return obj;
}

void lie_rows(Report& r, const lie::FreeLie& f, const lie::LieElement& x, const std::string& label = "") {
    if (r.columns.empty()) {
        if (!label.empty()) r.columns.push_back("part");
        r.columns.push_back("lyndon");
        r.columns.push_back("coefficient");
    }
    for (const auto& [w, c] : x.terms()) {
        std::vector<json> row;
        if (!label.empty()) row.push_back(label);
        row.push_back(f.bracketing(w));
        row.push_back(rational_string(c));
        r.rows.push_back(std::move(row));
    }
}

void grt_report(Outcome& o, const grt::GrtReport& report) {
    o.passed = report.passed();
    o.report.fields["degree"] = report.degree;
    o.report.fields["pentagon_method"] =
        report.pentagon_method == grt::PentagonMethod::Elimination ? "elimination" : "semidirect";
    o.report.fields["passed"] = o.passed;
    o.report.columns = {"relation", "zero", "residual"};
    for (const auto& r : report.residuals) o.report.rows.push_back({r.relation, r.zero, r.text});
}

Outcome grt_ihara(const Config& cfg, int n) {
    grt::GrtContext g(cfg.cap);
    const auto psi = g.ihara_psi(n);
    Outcome o;
    o.report.fields["degree"] = n;
    o.report.fields["psi"] = g.free().to_string(psi);
    lie_rows(o.report, g.free(), psi);
    return o;
}

Outcome grt_check(const Config& cfg, const std::string& text) {
    grt::GrtContext g(cfg.cap);
    const auto psi = read_psi(g, text);
    g.free().degree(psi);
    Outcome o;
    o.report.fields["psi"] = g.free().to_string(psi);
    grt_report(o, g.check(psi));
    return o;
}

Outcome grt_solve(const Config& cfg, int n, const std::string& seed_text) {
    grt::GrtContext g(cfg.cap);
    const auto seed = seed_text.empty() ? g.ihara_psi(n) : read_psi(g, seed_text);
    const auto s = g.solve(n, seed);
    Outcome o;
    o.report.fields["degree"] = n;
    o.report.fields["seed"] = g.free().to_string(seed);
    o.report.fields["solvable"] = s.has_value();
    o.report.fields["particular_solution"] = s ? lie_coordinates(g.free(), s->particular) : json(nullptr);
    json null = json::array();
    if (s)
        for (const auto& d : s->nullspace) null.push_back(lie_coordinates(g.free(), d));
    o.report.fields["nullspace_basis"] = std::move(null);
    if (s) {
        lie_rows(o.report, g.free(), s->particular, "particular");
        for (std::size_t k = 0; k < s->nullspace.size(); ++k)
            lie_rows(o.report, g.free(), s->nullspace[k], "nullspace_" + std::to_string(k + 1));
    }
    return o;
}

Outcome grt_bracket(const Config& cfg, const std::string& a, const std::string& b) {
    grt::GrtContext g(cfg.cap);
    const auto p1 = read_psi(g, a), p2 = read_psi(g, b);
    const auto bracket = g.drinfeld_bracket(p1, p2);
    Outcome o;
    o.report.fields["bracket"] = g.free().to_string(bracket);
    grt_report(o, g.check(bracket));
    return o;
}

// ---- braid ----

Outcome braid_dim(const Config& cfg, int n) {
    if (n < 2) throw InputError("p_n needs n >= 2");
    const int top = cfg.degree_or(3);
    if (top < 1) throw InputError("--degree must be positive");
    braid::PureBraid p(n, cfg.cap);
    Outcome o;
    o.report.columns = {"n", "degree", "dimension", "free_dimension"};
    for (int d = 1; d <= top; ++d) {
        const auto& c = p.component(d);
        o.report.rows.push_back({n, d, c.dimension(), c.free_dimension});
    }
    return o;
}

Outcome braid_cable(const std::string& partition, const std::string& element) {
    const auto I = braid::OrderedPartition::parse(partition);
    Outcome o;
    o.report.fields["partition"] = I.to_string();
    if (!element.empty()) {
        if (I.size() < 2) throw InputError("cabling an element needs at least two parts");
        const lie::FreeLie source(braid::pure_braid_alphabet(I.size()));
        const lie::FreeLie target(braid::pure_braid_alphabet(std::max(2, I.total())));
        const auto x = lie::parse_lie(source, element);
        o.report.fields["element"] = source.to_string(x);
        o.report.fields["image"] = target.to_string(braid::cabling_map(I, x, target));
        return o;
    }
    if (I.total() < 2) throw InputError("partition must cover at least two strands");
    const braid::PureBraid target(I.total());
    const auto report = braid::cabling_respects_relations(I, target);
    o.passed = report.passed();
    o.report.fields["passed"] = o.passed;
    o.report.columns = {"partition", "relation", "residual_zero"};
    for (const auto& r : report.relations) o.report.rows.push_back({I.to_string(), r.relation, r.residual_zero});
    return o;
}

Outcome braid_sweep(const Config& cfg, int coherence) {
    const int max_total = cfg.max_n_or(6);
    if (max_total < 1 || coherence < 0) throw InputError("sweep bounds must be positive");
    const auto s = braid::cabling_sweep(max_total, coherence);
    Outcome o;
    o.passed = s.passed();
    o.report.fields["max_n"] = max_total;
    o.report.fields["coherence_max_n"] = coherence;
    o.report.fields["partitions"] = s.partitions;
    o.report.fields["relation_images"] = s.relation_images;
    o.report.fields["compositions"] = s.compositions;
    o.report.fields["passed"] = o.passed;
    if (!s.failures.empty()) check_rows(o.report, s.failures);
    return o;
}

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw InputError("unknown format '" + f + "'");
}

int env_order() {
    const char* v = std::getenv("GENUSKIT_ORDER");
    if (!v || !*v) return kDefaultOrder;
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(v).size() || n < 1) throw InputError("GENUSKIT_ORDER must be a positive integer");
    return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with genera, formal group laws, symmetric functions, and grt.", "genuskit"};
    app.fallthrough();
    app.require_subcommand(1);
    Config cfg;
    try {
        cfg.order = env_order();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    app.add_option("--order", cfg.order, "truncation order (default 20, or GENUSKIT_ORDER)");
    app.add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--max-n", cfg.max_n, "largest n (CP^n, sweep size, descent k)");
    app.add_option("--degree", cfg.degree, "degree or truncation degree");
    app.add_option("--cap", cfg.cap, "largest free Lie dimension handled by elimination");

    std::string name, to = "p", rule = "zeta", text, text2, seed;
    int q_order = -1, int_arg = 0, max_exponent = -1, coherence = 5;
    bool bernoulli = false;

    auto* genus_cmd = app.add_subcommand("genus", "Hirzebruch genera");
    genus_cmd->require_subcommand(1);
    auto* cp = genus_cmd->add_subcommand("cp", "values on CP^n by two routes");
    cp->add_option("--name", name, "todd, ahat, L, gamma, witten, additive")->required();
    cp->add_option("--q-order", q_order, "q truncation for witten");
    cp->add_flag("--bernoulli", bernoulli, "also rewrite even zeta values");
    auto* dup = genus_cmd->add_subcommand("check-duplication", "Gamma duplication identities");
    auto* witten = genus_cmd->add_subcommand("witten", "Witten genus logarithm coefficients g_k");
    witten->add_option("--q-order", q_order, "q truncation (default 8)");

    auto* fgl_cmd = app.add_subcommand("fgl", "formal group laws and formal diffeomorphisms");
    fgl_cmd->require_subcommand(1);
    auto* law = fgl_cmd->add_subcommand("law", "F(X,Y) from a logarithm, with axiom residuals");
    law->add_option("source", text, "additive, multiplicative, generic or a genus name")->required();
    auto* coproduct = fgl_cmd->add_subcommand("coproduct", "Landweber-Novikov coproduct");
    auto* thom = fgl_cmd->add_subcommand("thom-constraint", "sign constraint on a generic twist");
    auto* hbar = fgl_cmd->add_subcommand("hbar", "sum CP_{k-1} e^k / k for a genus");
    hbar->add_option("--name", name, "genus name")->required();
    hbar->add_option("--q-order", q_order, "q truncation for witten");
    auto* descent = fgl_cmd->add_subcommand("descent", "G_m-invariant monomials and bidegrees");
    descent->add_option("--max-exponent", max_exponent, "largest exponent of b");

    auto* symm_cmd = app.add_subcommand("symm", "symmetric functions");
    symm_cmd->require_subcommand(1);
    auto* convert = symm_cmd->add_subcommand("convert", "change of basis");
    convert->add_option("expr", text, "e.g. \"e[2,1] - 3*h_3\"")->required();
    convert->add_option("--to", to, "e, h or p");
    auto* specialize = symm_cmd->add_subcommand("specialize", "specialize power sums");
    specialize->add_option("expr", text, "symmetric function")->required();
    specialize->add_option("--rule", rule, "zeta, power:S or finite:M");
    specialize->add_flag("--bernoulli", bernoulli, "also rewrite even zeta values");

    auto* qsym_cmd = app.add_subcommand("qsym", "quasisymmetric functions and multiple zeta values");
    qsym_cmd->require_subcommand(1);
    auto* stuffle = qsym_cmd->add_subcommand("stuffle", "M_a * M_b with a finite-truncation check");
    stuffle->add_option("a", text, "composition, e.g. 2,1")->required();
    stuffle->add_option("b", text2, "composition")->required();
    auto* mzv = qsym_cmd->add_subcommand("mzv", "numeric zeta(i_1,...,i_k)");
    mzv->add_option("composition", text, "e.g. 2,1")->required();

    auto* grt_cmd = app.add_subcommand("grt", "Grothendieck-Teichmueller Lie algebra");
    grt_cmd->require_subcommand(1);
    auto* ihara = grt_cmd->add_subcommand("ihara", "Ihara element psi_n");
    ihara->add_option("n", int_arg, "odd degree >= 3")->required();
    auto* check = grt_cmd->add_subcommand("check", "residuals of the four grt relations");
    check->add_option("psi", text, "Lie element in A, B, or ihara:N, grt:N")->required();
    auto* solve = grt_cmd->add_subcommand("solve", "corrections in [fr',fr'] making the seed satisfy grt");
    solve->add_option("n", int_arg, "degree")->required();
    solve->add_option("--seed", seed, "seed element (default ihara:N)");
    auto* bracket = grt_cmd->add_subcommand("bracket", "Drinfeld bracket, then grt check");
    bracket->add_option("psi1", text, "first element")->required();
    bracket->add_option("psi2", text2, "second element")->required();

    auto* braid_cmd = app.add_subcommand("braid", "pure braid Lie algebras and cabling");
    braid_cmd->require_subcommand(1);
    auto* pbn = braid_cmd->add_subcommand("pbn-dim", "graded dimensions of p_n");
    pbn->add_option("n", int_arg, "strand count")->required();
    auto* cable = braid_cmd->add_subcommand("cable", "cabling image or relation report");
    cable->add_option("partition", text, "ordered partition, e.g. 2,1,1")->required();
    cable->add_option("element", text2, "element of p_r, e.g. \"[x12,x13]\"");
    auto* sweep = braid_cmd->add_subcommand("sweep", "relation, juxtaposition and coherence sweep");
    sweep->add_option("--coherence", coherence, "largest |I| for coherence (default 5)");

    auto usage_for = [&app]() {
        const CLI::App* sub = &app;
        while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
        return sub->help();
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << usage_for();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << usage_for();
        return kExitInvalidInput;
    }

    try {
        if (cfg.order < 1) throw InputError("--order must be positive");
        if (!(cfg.tol > 0)) throw InputError("--tol must be positive");
        if (cfg.cap < 1) throw InputError("--cap must be positive");
        const Format format = parse_format(cfg.format);
        Outcome o;
        if (*cp) o = genus_cp(cfg, name, q_order < 0 ? 4 : q_order, bernoulli);
        else if (*dup) o = genus_duplication(cfg);
        else if (*witten) o = genus_witten(cfg, q_order < 0 ? 8 : q_order);
        else if (*law) o = fgl_law(cfg, text);
        else if (*coproduct) o = fgl_coproduct(cfg);
        else if (*thom) o = fgl_thom(cfg);
        else if (*hbar) o = fgl_hbar(cfg, name, q_order < 0 ? 4 : q_order);
        else if (*descent) o = fgl_descent(cfg, max_exponent);
        else if (*convert) o = symm_convert(text, to);
        else if (*specialize) o = symm_specialize(text, rule, bernoulli);
        else if (*stuffle) o = qsym_stuffle(text, text2, cfg.max_n_or(20));
        else if (*mzv) o = qsym_mzv(cfg, text);
        else if (*ihara) o = grt_ihara(cfg, int_arg);
        else if (*check) o = grt_check(cfg, text);
        else if (*solve) o = grt_solve(cfg, int_arg, seed);
        else if (*bracket) o = grt_bracket(cfg, text, text2);
        else if (*pbn) o = braid_dim(cfg, int_arg);
        else if (*cable) o = braid_cable(text, text2);
        else if (*sweep) o = braid_sweep(cfg, coherence);
        out << emit(o.report, format);
        if (!o.passed) err << "verification failed\n";
        return o.passed ? kExitOk : kExitCheckFailed;
    } catch (const qsym::DivergentSeries& e) {
        err << "error: " << e.what() << "\n\n" << usage_for();
    } catch (const braid::CapExceeded& e) {
        err << "error: " << e.what() << "; raise --cap\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n\n" << usage_for();
    }
    return kExitInvalidInput;
}

}  // namespace genuskit::cli
