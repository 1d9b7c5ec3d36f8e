#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maghom/chains.hpp"
#include "maghom/check.hpp"
#include "maghom/errors.hpp"
#include "maghom/homology.hpp"
#include "maghom/io.hpp"
#include "maghom/magnitude.hpp"
#include "maghom/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace maghom;

namespace {

struct common_opts {
    std::string input;
    std::string format = "metric-json";
    bool as_json = false;
};

void add_common(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--input", o.input, "input file")->required();
    cmd->add_option("--format", o.format, "metric-json, dist-csv or graph-edges")
        ->default_val("metric-json");
    cmd->add_flag("--json", o.as_json, "emit a JSON report instead of text");
}

// Computations need a skeletal space; quotienting points at mutual distance
// zero changes neither the magnitude nor the homology.
fin_metric load_skeletal(const common_opts& o) {
    fin_metric x = load_space(o.input, parse_format(o.format));
    if (x.skeletal) return x;
    auto [sk, classes] = skeletonize(x);
    std::cerr << "note: input is not skeletal; computing on its skeleton (" << sk.size()
              << " of " << x.size() << " points)\n";
    return sk;
}

rat parse_grading(const std::string& s) {
    rat g = rat::parse(s);
    if (g.is_negative()) throw input_error("--max-grading must be nonnegative");
    return g;
}

std::string describe(const fin_metric& x) {
    std::ostringstream os;
    os << x.size() << (x.size() == 1 ? " point" : " points") << ", "
       << (x.symmetric ? "symmetric" : "asymmetric") << ", "
       << (x.skeletal ? "skeletal" : "non-skeletal");
    return os.str();
}

json space_json(const fin_metric& x) {
    return json{{"points", x.labels},
                {"symmetric", x.symmetric},
                {"skeletal", x.skeletal}};
}

json poly_json(const poly& p) {
    json a = json::array();
    for (long k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(static_cast<std::size_t>(k)).str());
    if (a.empty()) a.push_back("0");
    return a;
}

json ratfun_json(const rat_fun& f) {
    return json{{"numerator", poly_json(f.num())},
                {"denominator", poly_json(f.den())},
                {"scale", f.scale()},
                {"display", f.str()}};
}

json genpoly_json(const gen_poly& p) {
    json a = json::array();
    for (const auto& [exponent, coeff] : p.terms())
        a.push_back(json::array({exponent.str(), coeff.str()}));
    return a;
}

std::string torsion_str(const std::vector<mpz_class>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
    return s;
}

std::string cell_str(const homology_group& g) {
    std::string s = std::to_string(g.rank);
    if (!g.torsion.empty()) s += "+T(" + torsion_str(g.torsion) + ")";
    return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- magnitude

int cmd_magnitude(const common_opts& o, const std::optional<std::string>& max_grading,
                  const std::vector<double>& samples) {
    fin_metric x = load_skeletal(o);
    magnitude_result mag = magnitude(x);

    std::optional<rat> series_bound;
    if (max_grading) series_bound = parse_grading(*max_grading);
    std::vector<std::pair<rat, rat>> series;
    if (series_bound) series = magnitude_series(x, *series_bound);

    struct sample_row {
        double t, numeric, rational;
    };
    std::vector<sample_row> rows;
    for (double t : samples)
        rows.push_back({t, magnitude_at(x, t), mag.value.evaluate(std::exp(-t))});

    if (o.as_json) {
        json j;
        j["space"] = space_json(x);
        j["magnitude"] = ratfun_json(mag.value);
        json w = json::array(), v = json::array();
        for (std::size_t i = 0; i < x.size(); ++i) {
            w.push_back(json{{"point", x.labels[i]}, {"value", ratfun_json(mag.weighting[i])}});
            v.push_back(json{{"point", x.labels[i]}, {"value", ratfun_json(mag.coweighting[i])}});
        }
        j["weighting"] = w;
        j["coweighting"] = v;
        if (series_bound) {
            json s = json::array();
            for (const auto& [grading, coeff] : series)
                s.push_back(json::array({grading.str(), coeff.str()}));
            j["series"] = json{{"max_grading", series_bound->str()}, {"coefficients", s}};
        }
        if (!rows.empty()) {
            json e = json::array();
            for (const auto& r : rows)
                e.push_back(json{{"t", r.t},
                                 {"numeric", r.numeric},
                                 {"rational", r.rational},
                                 {"abs_diff", std::fabs(r.numeric - r.rational)}});
            j["evaluate"] = e;
        }
        emit(j);
        return 0;
    }

    std::cout << "space: " << describe(x) << "\n";
    std::cout << "magnitude: " << mag.value.str() << "\n";
    std::cout << "weighting:\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        std::cout << "  " << x.labels[i] << " = " << mag.weighting[i].str() << "\n";
    if (!x.symmetric) {
        std::cout << "coweighting:\n";
        for (std::size_t i = 0; i < x.size(); ++i)
            std::cout << "  " << x.labels[i] << " = " << mag.coweighting[i].str() << "\n";
    }
    if (series_bound) {
        std::cout << "series to grading " << series_bound->str() << ":\n";
        for (const auto& [grading, coeff] : series)
            std::cout << "  q^" << grading.str() << ": " << coeff.str() << "\n";
    }
    for (const auto& r : rows) {
        std::ostringstream os;
        os << std::setprecision(15) << "  t = " << r.t << ": numeric " << r.numeric
           << ", rational " << r.rational << ", |diff| " << std::fabs(r.numeric - r.rational);
        std::cout << (&r == &rows.front() ? "evaluate (q = exp(-t)):\n" : "") << os.str() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- homology

struct oracle_row {
    std::size_t degree;
    rat grading;
    std::optional<std::size_t> predicted;
    std::size_t computed;
    bool free_group;
    bool agrees() const { return predicted && *predicted == computed && free_group; }
};

int cmd_homology(const common_opts& o, const std::string& max_grading,
                 std::optional<std::size_t> max_degree, bool dump_chains, std::size_t budget) {
    fin_metric x = load_skeletal(o);
    rat bound = parse_grading(max_grading);

    chain_basis basis = enumerate_generators(x, bound, budget);
    homology_table table = compute_homology_table(x, basis, max_degree);

    std::vector<std::size_t> keys = basis.grading_keys();
    std::size_t degrees = basis.max_degree();
    if (max_degree && *max_degree < degrees) degrees = *max_degree;

    bool geodesic_oracle = is_geodetic(x) && has_no_4cuts(x);
    std::vector<oracle_row> oracle;
    for (std::size_t key : keys) {
        rat grading = basis.grading_of(key);
        for (std::size_t n = 0; n <= std::min<std::size_t>(2, degrees); ++n) {
            oracle_row row;
            row.degree = n;
            row.grading = grading;
            if (n == 0) row.predicted = h0_oracle(x, grading);
            if (n == 1) row.predicted = h1_oracle(x, grading);
            if (n == 2) row.predicted = h2_oracle(x, grading);
            auto it = table.find({n, key});
            row.computed = it == table.end() ? 0 : it->second.rank;
            row.free_group = it == table.end() || it->second.torsion.empty();
            oracle.push_back(row);
        }
    }

    if (o.as_json) {
        json j;
        j["space"] = space_json(x);
        j["max_grading"] = bound.str();
        j["scale"] = basis.scale;
        json gradings = json::array();
        for (std::size_t key : keys) gradings.push_back(basis.grading_of(key).str());
        j["gradings"] = gradings;
        json cells = json::array();
        for (std::size_t n = 0; n <= degrees; ++n)
            for (std::size_t key : keys) {
                auto it = table.find({n, key});
                if (it == table.end()) continue;
                json torsion = json::array();
                for (const auto& t : it->second.torsion) torsion.push_back(t.get_str());
                cells.push_back(json{{"degree", n},
                                     {"grading", basis.grading_of(key).str()},
                                     {"rank", it->second.rank},
                                     {"torsion", torsion}});
            }
        j["homology"] = cells;
        json orc = json::array();
        for (const auto& row : oracle) {
            json r{{"degree", row.degree}, {"grading", row.grading.str()}};
            if (row.predicted)
                r["predicted"] = *row.predicted;
            else
                r["predicted"] = nullptr;
            r["computed"] = row.computed;
            r["agrees"] = row.predicted ? json(row.agrees()) : json(nullptr);
            orc.push_back(r);
        }
        j["oracle"] = orc;
        if (dump_chains) {
            json basis_json = json::array();
            json bnd_json = json::array();
            for (std::size_t n = 0; n <= basis.max_degree(); ++n)
                for (std::size_t key : keys) {
                    const auto& tuples = basis.tuples(n, key);
                    if (tuples.empty()) continue;
                    json tj = json::array();
                    for (const auto& tup : tuples) {
                        json labels = json::array();
                        for (auto idx : tup) labels.push_back(x.labels[idx]);
                        tj.push_back(labels);
                    }
                    basis_json.push_back(json{{"degree", n},
                                              {"grading", basis.grading_of(key).str()},
                                              {"tuples", tj}});
                    if (n == 0) continue;
                    int_matrix b = boundary_matrix(x, basis, n, basis.grading_of(key));
                    json entries = json::array();
                    for (const auto& e : b.entries)
                        entries.push_back(json::array({e.row, e.col, e.value}));
                    bnd_json.push_back(json{{"degree", n},
                                            {"grading", basis.grading_of(key).str()},
                                            {"rows", b.rows},
                                            {"cols", b.cols},
                                            {"entries", entries}});
                }
            j["chains"] = json{{"basis", basis_json}, {"boundaries", bnd_json}};
        }
        emit(j);
        return 0;
    }

    std::cout << "space: " << describe(x) << "\n";
    std::cout << "homology up to grading " << bound.str() << " (rows: degree, columns: grading)\n";
    std::vector<std::string> headers;
    for (std::size_t key : keys) headers.push_back(basis.grading_of(key).str());
    std::vector<std::vector<std::string>> grid(degrees + 1,
                                               std::vector<std::string>(keys.size(), "."));
    for (std::size_t n = 0; n <= degrees; ++n)
        for (std::size_t c = 0; c < keys.size(); ++c) {
            auto it = table.find({n, keys[c]});
            if (it != table.end()) grid[n][c] = cell_str(it->second);
        }
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
        width[c] = headers[c].size();
        for (std::size_t n = 0; n <= degrees; ++n) width[c] = std::max(width[c], grid[n][c].size());
    }
    std::cout << "  n \\ l";
    for (std::size_t c = 0; c < keys.size(); ++c)
        std::cout << "  " << std::setw(static_cast<int>(width[c])) << headers[c];
    std::cout << "\n";
    for (std::size_t n = 0; n <= degrees; ++n) {
        std::cout << "  " << std::setw(5) << n;
        for (std::size_t c = 0; c < keys.size(); ++c)
            std::cout << "  " << std::setw(static_cast<int>(width[c])) << grid[n][c];
        std::cout << "\n";
    }

    std::cout << "oracle check (closed forms for H0, H1, H2):\n";
    for (std::size_t n = 0; n <= std::min<std::size_t>(2, degrees); ++n) {
        std::vector<std::string> bad;
        bool applicable = n < 2 || geodesic_oracle;
        for (const auto& row : oracle) {
            if (row.degree != n || !row.predicted) continue;
            if (!row.agrees())
                bad.push_back("l=" + row.grading.str() + " predicted " +
                              std::to_string(*row.predicted) + ", computed " +
                              std::to_string(row.computed));
        }
        std::cout << "  H" << n << ": ";
        if (!applicable)
            std::cout << "not applicable (needs a geodetic space with no 4-cuts)\n";
        else if (bad.empty())
            std::cout << "agrees at every grading\n";
        else {
            std::cout << "MISMATCH";
            for (const auto& b : bad) std::cout << " [" << b << "]";
            std::cout << "\n";
        }
    }
    if (dump_chains)
        std::cerr << "note: --dump-chains only affects JSON output; add --json\n";
    return 0;
}

// -------------------------------------------------------------------- check

int cmd_check(const common_opts& o, const std::string& max_grading, std::size_t budget) {
    fin_metric x = load_skeletal(o);
    rat bound = parse_grading(max_grading);
    check_report rep = run_check(x, bound, budget);

    if (o.as_json) {
        json j;
        j["space"] = space_json(x);
        j["max_grading"] = bound.str();
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(json{{"grading", r.grading.str()},
                                {"series", r.series_coeff.str()},
                                {"chain_euler", r.chain_euler},
                                {"homology_euler", r.homology_euler},
                                {"match", r.match}});
        j["rows"] = rows;
        j["divergent_matches"] = rep.divergent_matches;
        j["weighting_matches"] = rep.weighting_matches;
        j["pass"] = rep.passed();
        emit(j);
        return rep.passed() ? 0 : 2;
    }

    std::cout << "space: " << describe(x) << "\n";
    std::cout << "Euler-characteristic reconciliation up to grading " << bound.str() << ":\n";
    std::size_t gw = 7, sw = 6;
    for (const auto& r : rep.rows) {
        gw = std::max(gw, r.grading.str().size());
        sw = std::max(sw, r.series_coeff.str().size());
    }
    std::cout << "  " << std::setw(static_cast<int>(gw)) << "grading" << "  "
              << std::setw(static_cast<int>(sw)) << "series" << "  " << std::setw(11)
              << "chain-euler" << "  " << std::setw(14) << "homology-euler" << "  match\n";
    for (const auto& r : rep.rows)
        std::cout << "  " << std::setw(static_cast<int>(gw)) << r.grading.str() << "  "
                  << std::setw(static_cast<int>(sw)) << r.series_coeff.str() << "  "
                  << std::setw(11) << r.chain_euler << "  " << std::setw(14) << r.homology_euler
                  << "  " << (r.match ? "ok" : "MISMATCH") << "\n";
    std::cout << "divergent-series closed form equals magnitude: "
              << (rep.divergent_matches ? "yes" : "NO") << "\n";
    std::cout << "weighting and coweighting sums equal magnitude: "
              << (rep.weighting_matches ? "yes" : "NO") << "\n";
    std::cout << "check: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : 2;
}

// --------------------------------------------------------------- predicates

int cmd_predicates(const common_opts& o) {
    fin_metric x = load_space(o.input, parse_format(o.format));

    auto cut = find_4cut(x);
    auto geo = find_geodetic_failure(x);
    std::vector<std::pair<std::size_t, std::size_t>> adj;
    if (x.skeletal)
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                if (i != j && adjacent(x, i, j)) adj.emplace_back(i, j);
    auto eps = x.min_positive_distance();

    if (o.as_json) {
        json j;
        j["space"] = space_json(x);
        j["epsilon"] = eps ? json(eps->str()) : json(nullptr);
        j["no_4cuts"] = !cut.has_value();
        if (cut)
            j["four_cut"] = json{{"x", x.labels[cut->x]},
                                 {"y1", x.labels[cut->y1]},
                                 {"y2", x.labels[cut->y2]},
                                 {"z", x.labels[cut->z]}};
        j["geodetic"] = !geo.has_value();
        if (geo)
            j["geodetic_failure"] = json{{"x", x.labels[geo->x]},
                                         {"z", x.labels[geo->z]},
                                         {"y1", x.labels[geo->y1]},
                                         {"y2", x.labels[geo->y2]}};
        if (x.skeletal) {
            json pairs = json::array();
            for (const auto& [i, k] : adj)
                pairs.push_back(json::array({x.labels[i], x.labels[k]}));
            j["adjacent_pairs"] = pairs;
            j["menger_convex"] = adj.empty();
        }
        emit(j);
        return 0;
    }

    std::cout << "space: " << describe(x) << "\n";
    std::cout << "epsilon (min positive distance): " << (eps ? eps->str() : "none") << "\n";
    if (cut)
        std::cout << "no-4-cuts: false (x=" << x.labels[cut->x] << ", y1=" << x.labels[cut->y1]
                  << ", y2=" << x.labels[cut->y2] << ", z=" << x.labels[cut->z] << ")\n";
    else
        std::cout << "no-4-cuts: true\n";
    if (geo)
        std::cout << "geodetic: false (x=" << x.labels[geo->x] << ", z=" << x.labels[geo->z]
                  << ", witnesses y1=" << x.labels[geo->y1] << ", y2=" << x.labels[geo->y2]
                  << ")\n";
    else
        std::cout << "geodetic: true\n";
    if (x.skeletal) {
        std::cout << "adjacent ordered pairs (" << adj.size() << "):";
        for (const auto& [i, k] : adj)
            std::cout << " (" << x.labels[i] << "," << x.labels[k] << ")";
        std::cout << "\n";
        std::cout << "menger convex: " << (adj.empty() ? "yes" : "no") << "\n";
    } else {
        std::cout << "adjacency: skipped (space is not skeletal)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact magnitude and magnitude homology of finite metric spaces"};
    app.require_subcommand(1);

    common_opts mag_o, hom_o, chk_o, prd_o;
    std::optional<std::string> mag_grading;
    std::string hom_grading, chk_grading;
    std::vector<double> samples;
    std::optional<std::size_t> max_degree;
    bool dump_chains = false;
    std::size_t hom_budget = default_generator_budget;
    std::size_t chk_budget = default_generator_budget;

    CLI::App* mag = app.add_subcommand(
        "magnitude", "magnitude, weighting and series of a finite metric space");
    add_common(mag, mag_o);
    std::string mag_grading_raw;
    mag->add_option("--max-grading", mag_grading_raw,
                    "also print series coefficients up to this grading");
    mag->add_option("--evaluate", samples, "numeric spot checks at q = exp(-t), comma separated")
        ->delimiter(',');

    CLI::App* hom = app.add_subcommand("homology", "graded homology ranks and torsion");
    add_common(hom, hom_o);
    hom->add_option("--max-grading", hom_grading, "largest grading to compute")->required();
    std::size_t max_degree_raw = 0;
    CLI::Option* md =
        hom->add_option("--max-degree", max_degree_raw, "cap the reported chain degree");
    hom->add_flag("--dump-chains", dump_chains, "include basis tuples and boundary matrices (JSON)");
    hom->add_option("--budget", hom_budget, "generator enumeration cap")
        ->default_val(default_generator_budget);

    CLI::App* chk = app.add_subcommand(
        "check", "verify that the magnitude series matches chain and homology Euler sums");
    add_common(chk, chk_o);
    chk->add_option("--max-grading", chk_grading, "largest grading to reconcile")->required();
    chk->add_option("--budget", chk_budget, "generator enumeration cap")
        ->default_val(default_generator_budget);

    CLI::App* prd = app.add_subcommand(
        "predicates", "betweenness structure: 4-cuts, geodeticity, adjacency");
    add_common(prd, prd_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mag->parsed()) {
            if (!mag_grading_raw.empty()) mag_grading = mag_grading_raw;
            return cmd_magnitude(mag_o, mag_grading, samples);
        }
        if (hom->parsed()) {
            if (md->count() > 0) max_degree = max_degree_raw;
            return cmd_homology(hom_o, hom_grading, max_degree, dump_chains, hom_budget);
        }
        if (chk->parsed()) return cmd_check(chk_o, chk_grading, chk_budget);
        if (prd->parsed()) return cmd_predicates(prd_o);
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "; lower --max-grading or raise --budget\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
