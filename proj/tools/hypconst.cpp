// hypconst — curvature constants, alpha bounds, and certified integer
// thresholds for the ball and the Siegel half-space.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
// mismatch.

#include <hypconst/hypconst.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hypconst;
using nlohmann::json;

namespace {

// A result row: ordered key/value pairs, values already rendered in the
// documented rational ("p/q") or interval ("[lo,hi]") text formats.
using Row = std::vector<std::pair<std::string, std::string>>;

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void emit(const std::vector<Row>& rows, const std::string& format) {
    if (rows.empty()) return;
    if (format == "json") {
        // Counting keys are JSON numbers; rationals and intervals stay strings
        // so they round-trip through the documented text formats.
        static const std::set<std::string> integer_keys{"g",     "p",     "n",           "l",      "q",      "r",
                                                        "d",     "level", "paper",       "codim",  "min_dim", "closed_form"};
        for (const Row& row : rows) {
            json obj = json::object();
            for (const auto& [k, v] : row) {
                if (v == "true" || v == "false")
                    obj[k] = (v == "true");
                else if (integer_keys.count(k))
                    obj[k] = std::stol(v);
                else
                    obj[k] = v;
            }
            std::cout << obj.dump() << "\n";
        }
    } else if (format == "csv") {
        for (size_t i = 0; i < rows[0].size(); ++i) std::cout << (i ? "," : "") << rows[0][i].first;
        std::cout << "\n";
        for (const Row& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_quote(row[i].second);
            std::cout << "\n";
        }
    } else if (format == "md") {
        for (size_t i = 0; i < rows[0].size(); ++i) std::cout << "| " << rows[0][i].first << " ";
        std::cout << "|\n";
        for (size_t i = 0; i < rows[0].size(); ++i) std::cout << "| --- ";
        std::cout << "|\n";
        for (const Row& row : rows) {
            for (const auto& [k, v] : row) std::cout << "| " << v << " ";
            std::cout << "|\n";
        }
    } else {  // text
        for (const Row& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "  " : "") << row[i].first << " = " << row[i].second;
            std::cout << "\n";
        }
    }
}

std::string approx(const Interval& iv) {
    std::ostringstream os;
    os << std::setprecision(10) << iv.lo().to_double();
    return os.str();
}

Row level_row(const LevelReport& rep, bool with_g = true) {
    Row row;
    if (with_g) row.push_back({"g", std::to_string(rep.g)});
    row.push_back({"quantity", rep.exact ? rep.quantity.lo().str() : rep.quantity.str()});
    if (!rep.exact) row.push_back({"approx", approx(rep.quantity)});
    row.push_back({"level", std::to_string(rep.certified_level)});
    if (rep.paper_value) row.push_back({"paper", std::to_string(*rep.paper_value)});
    if (rep.paper_closed_form) row.push_back({"closed_form", std::to_string(*rep.paper_closed_form)});
    if (rep.agrees) row.push_back({"agrees", *rep.agrees ? "true" : "false"});
    return row;
}

void print_level_text(const LevelReport& rep, const std::string& label) {
    std::cout << label << ": threshold " << (rep.exact ? rep.quantity.lo().str() : approx(rep.quantity))
              << ", smallest level " << rep.certified_level;
    if (rep.paper_value) std::cout << " (paper: " << *rep.paper_value << (*rep.agrees ? ", agrees" : ", diverges") << ")";
    if (rep.paper_closed_form) std::cout << " (paper closed form: " << *rep.paper_closed_form << ")";
    std::cout << "\n";
}

// Reference-style grid of C values: one column per k, one row per r (p-1 = k(k+1)/2 + r).
void print_fig1_grid(int g) {
    std::cout << "\nC by (k, r), p = k(k+1)/2 + r + 1:\n  r\\k";
    for (int k = 0; k <= g - 1; ++k) std::cout << "\t" << k;
    std::cout << "\n";
    for (int r = 0; r <= g - 1; ++r) {
        std::cout << "  " << r;
        for (int k = 0; k <= g - 1; ++k) {
            std::cout << "\t";
            if (r <= k) std::cout << siegel_D(g, k * (k + 1) / 2 + r + 1).C.str();
        }
        std::cout << "\n";
    }
}

std::vector<long> parse_exponents(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw CLI::ValidationError("--a", "not a comma-separated integer list");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--a", "empty exponent list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature constants and certified hyperbolicity thresholds"};
    app.require_subcommand(1);

    int prec_bits = 128;
    if (const char* env = std::getenv("HYPCONST_PREC")) prec_bits = std::atoi(env);
    app.add_option("--prec", prec_bits, "Working precision in bits (overrides HYPCONST_PREC)")
        ->capture_default_str();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "md"}))
        ->capture_default_str();
    app.fallthrough();

    int g = 0, p = 0, n = 0, gmax = 0;
    long l = 0, r = 0, d = 0;
    unsigned long q = 0;
    std::string oracle_kind = "exact", bound_kind, cp_str, lambda_str, alpha_str, a_str;

    // cp siegel | cp ball
    auto* cp = app.add_subcommand("cp", "Curvature constant C_p");
    auto* cp_siegel = cp->add_subcommand("siegel", "C_p for the Siegel half-space H_g");
    cp_siegel->add_option("--g", g, "genus")->required();
    cp_siegel->add_option("--p", p, "dimension")->required();
    auto* cp_ball = cp->add_subcommand("ball", "C_p for the unit ball B^n");
    cp_ball->add_option("--n", n, "ambient dimension")->required();
    cp_ball->add_option("--p", p, "dimension")->required();
    cp->require_subcommand(1);

    // table siegel
    auto* table = app.add_subcommand("table", "Full C_p table");
    auto* table_siegel = table->add_subcommand("siegel", "All p for a given g, with closed-form comparison");
    table_siegel->add_option("--g", g, "genus")->required();
    table->require_subcommand(1);

    // verify siegel
    auto* verify = app.add_subcommand("verify", "Cross-check against an independent oracle");
    auto* verify_siegel = verify->add_subcommand("siegel", "Validate siegel constants");
    verify_siegel->add_option("--gmax", gmax, "largest genus to check")->required();
    verify_siegel->add_option("--oracle", oracle_kind, "oracle to use")
        ->check(CLI::IsMember({"exact", "numeric", "table"}))
        ->capture_default_str();
    verify->require_subcommand(1);

    // level ag | ag-uniform | mg | ball
    auto* level = app.add_subcommand("level", "Certified integer level thresholds");
    auto* level_ag = level->add_subcommand("ag", "Kobayashi level for A_g(l)");
    level_ag->add_option("--g", g, "genus")->required();
    auto* level_agu = level->add_subcommand("ag-uniform", "Uniform level valid for every g");
    auto* level_mg = level->add_subcommand("mg", "Level for M_g with level structure");
    level_mg->add_option("--g", g, "genus")->required();
    auto* level_ball = level->add_subcommand("ball", "Minimal general-type dimension for ball quotients");
    level_ball->add_option("--l", l, "ramification order")->required();
    level->require_subcommand(1);

    // codim ag
    auto* codim = app.add_subcommand("codim", "Largest general-type codimension");
    auto* codim_ag = codim->add_subcommand("ag", "For subvarieties of A_g");
    codim_ag->add_option("--g", g, "genus")->required();
    codim->require_subcommand(1);

    // alpha [--g --bound] | alpha ball --n
    auto* alpha = app.add_subcommand("alpha", "Published alpha bounds");
    auto* alpha_g = alpha->add_option("--g", g, "genus (Siegel bounds)");
    alpha->add_option("--bound", bound_kind, "which bound")
        ->check(CLI::IsMember({"weissauer", "grushevsky", "ht06"}));
    auto* alpha_ball = alpha->add_subcommand("ball", "Bakker-Tsimerman bound for B^n");
    alpha_ball->add_option("--n", n, "ambient dimension")->required();

    // volume-factor
    auto* volf = app.add_subcommand("volume-factor", "Certified ((c_p - lambda/alpha)/(2 pi))^q");
    volf->add_option("--cp", cp_str, "c_p as a rational p/q")->required();
    volf->add_option("--lambda", lambda_str, "lambda as a rational")->required();
    volf->add_option("--alpha", alpha_str, "alpha as a rational")->required();
    volf->add_option("--q", q, "exponent")->required();

    // beta / condition-i
    auto* beta = app.add_subcommand("beta", "Tightest beta for an isotropy datum");
    beta->add_option("--a", a_str, "rotation exponents a1,a2,...")->required();
    beta->add_option("--r", r, "order of the cyclic action")->required();
    beta->add_option("--p", p, "dimension")->required();
    auto* condi = app.add_subcommand("condition-i", "Check condition (I_{x,d})");
    condi->add_option("--a", a_str, "rotation exponents a1,a2,...")->required();
    condi->add_option("--r", r, "order of the cyclic action")->required();
    condi->add_option("--d", d, "number of exponents")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        const Precision prec(prec_bits);

        if (cp_siegel->parsed()) {
            const SiegelConstant s = siegel_D(g, p);
            emit({{{"g", std::to_string(g)}, {"p", std::to_string(p)}, {"D", s.D.str()}, {"C", s.C.str()}}}, format);
        } else if (cp_ball->parsed()) {
            emit({{{"n", std::to_string(n)}, {"p", std::to_string(p)}, {"C", ball_C(n, p).str()}}}, format);
        } else if (table_siegel->parsed()) {
            std::vector<Row> rows;
            for (int pp = 1; pp <= triangle_size(g); ++pp) {
                const SiegelConstant s = siegel_D(g, pp);
                const Rational closed = table_C(g, pp);
                rows.push_back({{"g", std::to_string(g)},
                                {"p", std::to_string(pp)},
                                {"D", s.D.str()},
                                {"C", s.C.str()},
                                {"closed_form", closed.str()},
                                {"match", s.C == closed ? "true" : "false"}});
            }
            emit(rows, format);
            if (format == "text") print_fig1_grid(g);
        } else if (verify_siegel->parsed()) {
            int mismatches = 0;
            if (oracle_kind == "exact") {
                if (gmax < 2 || gmax > 6) throw std::invalid_argument("verify: exact oracle supports 2 <= gmax <= 6");
                for (int gg = 2; gg <= gmax; ++gg)
                    for (int pp = 1; pp <= triangle_size(gg); ++pp)
                        if (brute_force_D(gg, pp) != siegel_D(gg, pp).D) {
                            std::cout << "mismatch g=" << gg << " p=" << pp << "\n";
                            ++mismatches;
                        }
            } else if (oracle_kind == "numeric") {
                if (gmax < 2 || gmax > 4) throw std::invalid_argument("verify: numeric oracle supports 2 <= gmax <= 4");
                for (int gg = 2; gg <= gmax; ++gg)
                    for (int pp = 1; pp <= triangle_size(gg); ++pp) {
                        const double exact = siegel_D(gg, pp).D.to_double();
                        const double grid = numeric_D(gg, pp, 40);
                        if (!(exact <= grid + 1e-9 && grid - exact <= 0.05)) {
                            std::cout << "mismatch g=" << gg << " p=" << pp << " exact=" << exact
                                      << " grid=" << grid << "\n";
                            ++mismatches;
                        }
                    }
            } else {  // table
                for (const TableMismatch& m : verify_table(gmax)) {
                    std::cout << "mismatch g=" << m.g << " p=" << m.p << " computed=" << m.computed.str()
                              << " table=" << m.table.str() << "\n";
                    ++mismatches;
                }
            }
            if (mismatches > 0) {
                std::cout << mismatches << " mismatches\n";
                return 3;
            }
            std::cout << "verified: no mismatches (gmax=" << gmax << ", oracle=" << oracle_kind << ")\n";
        } else if (level_ag->parsed()) {
            const LevelReport rep = ag_kobayashi_level(g);
            if (format == "text")
                print_level_text(rep, "A_g(l), g=" + std::to_string(g));
            else
                emit({level_row(rep)}, format);
        } else if (level_agu->parsed()) {
            const LevelReport rep = ag_uniform_level(prec);
            if (format == "text")
                print_level_text(rep, "A_g(l), uniform in g");
            else
                emit({level_row(rep, false)}, format);
        } else if (level_mg->parsed()) {
            const LevelReport rep = mg_level(g);
            if (format == "text")
                print_level_text(rep, "M_g with level structure, g=" + std::to_string(g));
            else
                emit({level_row(rep)}, format);
        } else if (level_ball->parsed()) {
            const long dim = ball_min_general_type_dim(l, prec);
            emit({{{"l", std::to_string(l)}, {"min_dim", std::to_string(dim)}}}, format);
        } else if (codim_ag->parsed()) {
            emit({{{"g", std::to_string(g)}, {"codim", std::to_string(ag_max_general_type_codim(g))}}}, format);
        } else if (alpha_ball->parsed()) {
            const Interval v = bakker_tsimerman_alpha(n, prec);
            emit({{{"n", std::to_string(n)}, {"bound", "bakker-tsimerman"}, {"value", v.str()}, {"approx", approx(v)}}},
                 format);
        } else if (alpha->parsed()) {
            if (!*alpha_g || bound_kind.empty())
                throw CLI::RequiredError("alpha: --g and --bound (or the ball subcommand)");
            Row row{{"g", std::to_string(g)}, {"bound", bound_kind}};
            if (bound_kind == "weissauer") {
                row.push_back({"value", weissauer_alpha_base(g).str()});
            } else if (bound_kind == "ht06") {
                // dimension of A_g is g(g+1)/2
                row.push_back({"value", ht06_alpha_base(triangle_size(g)).str()});
            } else {
                const Interval v = grushevsky_alpha_eff(g, prec);
                row.push_back({"value", v.str()});
                row.push_back({"approx", approx(v)});
            }
            emit({row}, format);
        } else if (volf->parsed()) {
            const Interval v = volume_factor(Rational::parse(cp_str), Rational::parse(lambda_str),
                                             Rational::parse(alpha_str), q, prec);
            emit({{{"value", v.str()}, {"approx", approx(v)}}}, format);
        } else if (beta->parsed()) {
            IsotropyData data{parse_exponents(a_str), r};
            emit({{{"r", std::to_string(r)},
                   {"p", std::to_string(p)},
                   {"beta", beta_level(data, static_cast<size_t>(p)).str()}}},
                 format);
        } else if (condi->parsed()) {
            IsotropyData data{parse_exponents(a_str), r};
            emit({{{"r", std::to_string(r)},
                   {"d", std::to_string(d)},
                   {"satisfied", check_condition_I(data, static_cast<size_t>(d)) ? "true" : "false"}}},
                 format);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
