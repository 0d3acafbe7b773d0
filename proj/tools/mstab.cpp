// mstab: exact divisor-class, cone-chamber, top-intersection and
// moving-curve computations for Kontsevich spaces of stable maps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mstab/chamber.hpp"
#include "mstab/json_io.hpp"
#include "mstab/movcurve.hpp"
#include "mstab/picard.hpp"
#include "mstab/presentation_io.hpp"
#include "mstab/volume.hpp"

using namespace mstab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitExhausted = 3;

std::string default_format() {
    if (const char* env = std::getenv("MSTAB_FORMAT")) return env;
    return "json";
}

void print_header_plain(const ordered_json& config) {
    std::cout << "# config:";
    for (const auto& [k, v] : config.items())
        std::cout << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << "\n";
}

// every run echoes its resolved configuration
void emit(const ordered_json& config, const ordered_json& result, const std::string& format,
          const GoldenTable* table = nullptr) {
    if (format == "json") {
        ordered_json out;
        out["config"] = config;
        out["result"] = result;
        std::cout << out.dump(2) << "\n";
        return;
    }
    print_header_plain(config);
    if (table) {
        if (format == "md") std::cout << table->to_markdown();
        else if (format == "csv") std::cout << table->to_csv();
        else std::cout << table->to_plain();
        return;
    }
    if (format == "md" || format == "csv" || format == "plain") {
        std::cout << result.dump(2) << "\n";
        return;
    }
    throw bad_parameters("unknown output format '" + format + "'");
}

ordered_json divisor_row(const std::string& name, const DivisorClass& dc) {
    ordered_json j;
    j["name"] = name;
    j["class"] = to_json(dc);
    return j;
}

int run_divclass(const std::string& name, int d, const NamedParams& params, bool all_named,
                 const std::string& format) {
    ordered_json config;
    config["subcommand"] = "divclass";
    config["d"] = d;
    config["name"] = all_named ? "*" : name;
    config["format"] = format;
    if (params.r) config["r"] = *params.r;
    if (params.m) config["m"] = *params.m;
    if (params.k) config["k"] = *params.k;
    if (params.alpha) config["alpha"] = to_string(*params.alpha);

    if (!all_named) {
        emit(config, to_json(named_class(name, d, params)), format);
        return kExitOk;
    }
    ordered_json rows = ordered_json::array();
    rows.push_back(divisor_row("A", classes::A(d)));
    rows.push_back(divisor_row("B", classes::B(d)));
    rows.push_back(divisor_row("C", classes::C(d)));
    rows.push_back(divisor_row("Dm(1)", classes::D_m(d, 1)));
    if (params.r) rows.push_back(divisor_row("K", classes::canonical(d, *params.r)));
    rows.push_back(divisor_row("Ddeg", classes::D_deg(d)));
    rows.push_back(divisor_row("T", classes::T(d)));
    rows.push_back(divisor_row("NL", classes::NL(d)));
    rows.push_back(divisor_row("TN", classes::TN(d)));
    rows.push_back(divisor_row("TR", classes::TR(d)));
    rows.push_back(divisor_row("NI", classes::NI(d)));
    rows.push_back(divisor_row("DeltaWt", classes::weighted_boundary(d)));
    rows.push_back(divisor_row("DeltaTotal", classes::boundary_total(d)));
    if (d == 4) {
        rows.push_back(divisor_row("P", classes::P(4)));
        rows.push_back(divisor_row("Q", classes::Q(4)));
    }
    emit(config, rows, format);
    return kExitOk;
}

struct Check {
    std::string name;
    bool pass;
    std::string expected;
    std::string actual;
};

ordered_json checks_to_json(const std::vector<Check>& checks) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks)
        rows.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"expected", c.expected},
                        {"actual", c.actual}});
    return rows;
}

std::string brief(const DivisorClass& dc) { return to_json(dc).dump(); }

void check_class(std::vector<Check>& out, const std::string& name, const DivisorClass& got,
                 const DivisorClass& want) {
    out.push_back({name, got == want, brief(want), brief(got)});
}

std::vector<Check> suite_theorem11(int d) {
    using namespace classes;
    std::vector<Check> out;
    if (d == 4) {
        auto frozen = [&](const Rat& h, const Rat& d1, const Rat& d2) {
            DivisorClass x(4);
            x.h = h;
            x.delta[1] = d1;
            x.delta[2] = d2;
            return x;
        };
        check_class(out, "T@4", T(4), frozen(rat(3, 4), rat(3, 4), rat(1)));
        check_class(out, "Ddeg@4", D_deg(4), frozen(rat(5, 8), rat(-3, 8), rat(-1, 2)));
        check_class(out, "NL@4", NL(4), frozen(rat(21, 8), rat(-3, 8), rat(-1, 2)));
        check_class(out, "TN@4", TN(4), frozen(rat(9, 4), rat(1, 4), rat(-1)));
        check_class(out, "TR@4", TR(4), frozen(rat(3, 4), rat(-1, 4), rat(0)));
        check_class(out, "NI@4", NI(4), frozen(rat(3, 2), rat(-1, 2), rat(-1)));
        check_class(out, "P@4", P(4), frozen(rat(1), rat(1), rat(4)));
        check_class(out, "Q@4", Q(4), frozen(rat(3), rat(3), rat(-2)));
    }
    check_class(out, "T=A+B@" + std::to_string(d), T(d), A(d) + B(d));
    check_class(out, "C=-Delta@" + std::to_string(d), C(d), -boundary_total(d));
    check_class(out, "NL-Ddeg=(d-2)H@" + std::to_string(d), NL(d) - D_deg(d),
                rat(d - 2) * hyperplane(d));
    if (d >= 3) {
        const auto [cs, vals] = ni_test_system(d);
        check_class(out, "NI-rederivation@" + std::to_string(d),
                    solve_from_test_curves(cs, vals, d), NI(d));
    }
    return out;
}

std::vector<Check> suite_coplanar() {
    std::vector<Check> out;
    for (const auto& [label, ok] : verify_coplanarity_groups())
        out.push_back({"coplanar:" + label, ok, "rank<=2", ok ? "rank<=2" : "rank>2"});
    QMat control = {coeffs(classes::hyperplane(4)), coeffs(classes::boundary(4, 1)),
                    coeffs(classes::boundary(4, 2))};
    const int r = matrix_rank(control);
    out.push_back({"control:H,D13,D22", r == 3, "rank=3", "rank=" + std::to_string(r)});
    return out;
}

std::vector<Check> suite_faces() {
    using namespace classes;
    using namespace curves;
    const auto d1 = boundary(4, 1), d2 = boundary(4, 2);
    std::vector<Check> out;
    auto add = [&](const std::string& name, bool got) {
        out.push_back({name, got, "face", got ? "face" : "not-a-face"});
    };
    add("B2:NI,D22", certify_face({b2()}, {NI(4), d2}, {d1}));
    add("C3:NI,D13", certify_face({c3_moving()}, {NI(4), d1}, {d2}));
    add("B1:TR,TN", certify_face({b1()}, {TR(4), TN(4)}, {d1, d2}));
    add("C2:TN,D13", certify_face({c2_moving()}, {TN(4), d1}, {TR(4), d2}));
    add("B2proj:TR,D22", certify_face({b2()}, {TR(4), d2}, {TN(4), d1}));
    return out;
}

std::vector<Check> suite_corollary36(int dmin, int dmax) {
    using namespace classes;
    std::vector<Check> out;
    for (int d = dmin; d <= dmax; ++d) {
        for (int k = 1; k <= (d - 1) / 2; ++k) {
            const auto pp = push_pull_h(d, k);
            bool ortho = true;
            for (int i = 1; i <= k; ++i)
                ortho = ortho && pair(curves::contract_family(d, i), pp) == 0;
            out.push_back({"contract-orthogonal d=" + std::to_string(d) + " k=" + std::to_string(k),
                           ortho, "0", ortho ? "0" : "nonzero"});
        }
        for (int r = 2; r <= 4; ++r) {
            check_class(out,
                        "KStable(k=0)=K d=" + std::to_string(d) + " r=" + std::to_string(r),
                        k_stable_canonical(d, 0, r), canonical(d, r));
        }
        const auto corr = k_stable_canonical(d, 1, 3);
        const auto verb = k_stable_canonical(d, 1, 3, Cor36Reading::verbatim);
        const bool ratio = verb.h == rat(d) * corr.h && verb.delta == corr.delta;
        out.push_back({"verbatim-H-coefficient-ratio d=" + std::to_string(d), ratio,
                       "x" + std::to_string(d), ratio ? "x" + std::to_string(d) : "other"});
    }
    return out;
}

int run_verify(const std::string& suite, int d, int dmin, int dmax, const std::string& format) {
    ordered_json config;
    config["subcommand"] = "verify";
    config["suite"] = suite;
    config["d"] = d;
    config["d_range"] = std::to_string(dmin) + ".." + std::to_string(dmax);
    config["format"] = format;
    std::vector<Check> checks;
    if (suite == "theorem11") {
        checks = suite_theorem11(d);
        for (int dd = std::max(dmin, 3); dd <= dmax; ++dd) {
            if (dd == d) continue;
            auto more = suite_theorem11(dd);
            checks.insert(checks.end(), more.begin(), more.end());
        }
    } else if (suite == "coplanar") {
        checks = suite_coplanar();
    } else if (suite == "faces") {
        checks = suite_faces();
    } else if (suite == "corollary36") {
        checks = suite_corollary36(std::max(3, dmin), dmax);
    } else {
        throw bad_parameters("unknown suite '" + suite + "'");
    }
    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    ordered_json result;
    result["checks"] = checks_to_json(checks);
    result["pass"] = all;
    emit(config, result, format);
    return all ? kExitOk : kExitSemantic;
}

int run_chamber(const std::string& coeffs_text, const std::string& format) {
    ordered_json config;
    config["subcommand"] = "chamber";
    config["coeffs"] = coeffs_text;
    config["format"] = format;
    std::stringstream ss(coeffs_text);
    std::string tok;
    std::vector<Rat> vals;
    while (std::getline(ss, tok, ',')) vals.push_back(rat_from_string(tok));
    if (vals.size() != 3) throw bad_parameters("--coeffs needs a,b,c");
    DivisorClass dc(4);
    dc.h = vals[0];
    dc.delta[1] = vals[1];
    dc.delta[2] = vals[2];
    try {
        emit(config, to_json(classify_base_locus(dc)), format);
    } catch (const not_effective& e) {
        ordered_json err;
        err["error"] = "NotEffective";
        err["detail"] = e.what();
        emit(config, err, format);
        return kExitSemantic;
    }
    return kExitOk;
}

GoldenTable volume_table_p2() {
    GoldenTable t;
    t.name = "volume-p2";
    const auto table = volume_table_d3_r2();
    for (int a = 8; a >= 0; --a)
        t.rows.push_back({"H^" + std::to_string(a) + "NL^" + std::to_string(8 - a),
                          to_string(table.at(a)), "computed"});
    return t;
}

GoldenTable volume_table_p3(const Rat& seed) {
    GoldenTable t;
    t.name = "volume-p3";
    const auto table = volume_table_d3_r3(seed);
    for (int a = 12; a >= 0; --a)
        t.rows.push_back({"H^" + std::to_string(a) + "NL^" + std::to_string(12 - a),
                          to_string(table.at(a)),
                          a == 12 ? "seed(external)" : "computed"});
    return t;
}

GoldenTable intersection_catalog() {
    using namespace classes;
    using namespace curves;
    GoldenTable t;
    t.name = "intersection-catalog";
    const std::vector<CurveClass> cs = {b13(), b22(), b1(), b2(), c2_moving(), c3_moving()};
    const std::vector<std::pair<std::string, DivisorClass>> ds = {
        {"H", hyperplane(4)}, {"D13", boundary(4, 1)}, {"D22", boundary(4, 2)},
        {"T", T(4)},          {"Ddeg", D_deg(4)},      {"NL", NL(4)},
        {"TN", TN(4)},        {"TR", TR(4)},           {"NI", NI(4)},
        {"P", P(4)},          {"Q", Q(4)},
    };
    for (const auto& c : cs)
        for (const auto& [name, dc] : ds)
            t.rows.push_back({c.name + "." + name, to_string(pair(c, dc)), "computed"});
    return t;
}

int run_tables(const std::string& which, const Rat& seed, int d, const std::string& format) {
    ordered_json config;
    config["subcommand"] = "tables";
    config["which"] = which;
    config["seed"] = to_string(seed);
    config["d"] = d;
    config["format"] = format;
    GoldenTable t;
    if (which == "volume-p2") t = volume_table_p2();
    else if (which == "volume-p3") t = volume_table_p3(seed);
    else if (which == "intersection-catalog") {
        if (d != 4) throw bad_parameters("the intersection catalog is recorded at d = 4");
        t = intersection_catalog();
    } else {
        throw bad_parameters("unknown table '" + which + "'");
    }
    emit(config, t.to_json(), format, &t);
    return kExitOk;
}

int run_volume(const std::string& preset, const Rat& seed, const std::string& format) {
    ordered_json config;
    config["subcommand"] = "volume";
    config["preset"] = preset;
    config["seed"] = to_string(seed);
    config["format"] = format;
    GoldenTable t;
    if (preset == "m03-p2") t = volume_table_p2();
    else if (preset == "m03-p3") t = volume_table_p3(seed);
    else throw bad_parameters("unknown volume preset '" + preset + "'");
    t.name = preset;
    emit(config, t.to_json(), format, &t);
    return kExitOk;
}

int run_movcheck(const std::string& preset, const std::string& config_path,
                 std::uint64_t seed, bool seed_given, const std::string& format) {
    FatPointConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw bad_parameters("cannot read config file '" + config_path + "'");
        ordered_json j;
        in >> j;
        cfg = movcheck_config_from_json(j);
    } else if (preset == "c3") {
        cfg = preset_c3();
    } else if (preset == "c2") {
        cfg = preset_c2();
    } else {
        throw bad_parameters("unknown movcheck preset '" + preset + "'");
    }
    if (seed_given) cfg.seed = seed;

    ordered_json config;
    config["subcommand"] = "movcheck";
    config["preset"] = config_path.empty() ? preset : ("file:" + config_path);
    config["a"] = cfg.a;
    config["b"] = cfg.b;
    config["p"] = cfg.p;
    config["points"] = cfg.point_count();
    config["seed"] = cfg.seed;
    config["expected_kernel_dim"] = cfg.expected_kernel_dim;
    config["expected_rank"] = cfg.expected_rank;
    config["retries"] = cfg.retries;
    config["format"] = format;

    try {
        const auto rep = moving_curve_check(cfg);
        emit(config, to_json(rep), format);
        return rep.pass ? kExitOk : kExitSemantic;
    } catch (const retries_exhausted& e) {
        ordered_json err;
        err["error"] = "RetriesExhausted";
        err["detail"] = e.what();
        emit(config, err, format);
        return kExitExhausted;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisor-class and cone toolkit for stable-map moduli"};
    app.require_subcommand(1);
    std::string format = default_format();

    // divclass
    auto* divclass = app.add_subcommand("divclass", "print a named divisor class");
    int dc_d = 4;
    std::string dc_name = "T", dc_alpha;
    int dc_r = 0, dc_k = 0;
    long long dc_m = 0;
    bool dc_all = false;
    divclass->add_option("--d", dc_d, "degree of the maps");
    divclass->add_option("--name", dc_name, "class name");
    divclass->add_option("--r", dc_r, "target projective space dimension");
    divclass->add_option("--m", dc_m, "bundle-twist parameter m");
    divclass->add_option("--k", dc_k, "boundary / contraction index k");
    divclass->add_option("--alpha", dc_alpha, "weight parameter as p/q");
    divclass->add_flag("--all-named", dc_all, "print the whole catalog for this d");
    divclass->add_option("--format", format, "json|plain|csv|md");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string vf_suite = "theorem11";
    int vf_d = 4, vf_dmin = 4, vf_dmax = 4;
    verify->add_option("--suite", vf_suite, "theorem11|coplanar|faces|corollary36");
    verify->add_option("--d", vf_d, "primary degree");
    verify->add_option("--d-min", vf_dmin, "range start");
    verify->add_option("--d-max", vf_dmax, "range end");
    verify->add_option("--format", format, "json|plain|csv|md");

    // chamber
    auto* chamber = app.add_subcommand("chamber", "classify the stable base locus at d=4");
    std::string ch_coeffs;
    chamber->add_option("--coeffs", ch_coeffs, "a,b,c as exact rationals")->required();
    chamber->add_option("--format", format, "json|plain|csv|md");

    // volume
    auto* volume = app.add_subcommand("volume", "emit a top-intersection table");
    std::string vol_preset = "m03-p2", vol_seed = "80160";
    volume->add_option("--preset", vol_preset, "m03-p2|m03-p3");
    volume->add_option("--seed", vol_seed, "seed for H^12 (external constant)");
    volume->add_option("--format", format, "json|plain|csv|md");

    // movcheck
    auto* movcheck = app.add_subcommand("movcheck", "finite-field moving-curve certificate");
    std::string mc_preset = "c3", mc_config;
    std::uint64_t mc_seed = 0;
    bool mc_json = false;
    movcheck->add_option("--preset", mc_preset, "c3|c2");
    movcheck->add_option("--config", mc_config, "JSON config file");
    auto* seed_opt = movcheck->add_option("--seed", mc_seed, "RNG seed");
    movcheck->add_flag("--json", mc_json, "force JSON output");
    movcheck->add_option("--format", format, "json|plain|csv|md");

    // tables
    auto* tables = app.add_subcommand("tables", "emit a golden table");
    std::string tb_which = "volume-p2", tb_seed = "80160";
    int tb_d = 4;
    tables->add_option("--which", tb_which, "volume-p2|volume-p3|intersection-catalog");
    tables->add_option("--seed", tb_seed, "seed for volume-p3");
    tables->add_option("--d", tb_d, "degree (intersection catalog)");
    tables->add_option("--format", format, "json|plain|csv|md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (format != "json" && format != "plain" && format != "csv" && format != "md") {
        std::cerr << "error: unknown output format '" << format << "'\n";
        return kExitUsage;
    }

    try {
        if (divclass->parsed()) {
            NamedParams p;
            if (divclass->count("--r")) p.r = dc_r;
            if (divclass->count("--m")) p.m = dc_m;
            if (divclass->count("--k")) p.k = dc_k;
            if (!dc_alpha.empty()) p.alpha = rat_from_string(dc_alpha);
            return run_divclass(dc_name, dc_d, p, dc_all, format);
        }
        if (verify->parsed()) {
            if (!verify->count("--d-min")) vf_dmin = vf_d;
            if (!verify->count("--d-max")) vf_dmax = vf_d;
            return run_verify(vf_suite, vf_d, vf_dmin, vf_dmax, format);
        }
        if (chamber->parsed()) return run_chamber(ch_coeffs, format);
        if (volume->parsed()) return run_volume(vol_preset, rat_from_string(vol_seed), format);
        if (movcheck->parsed())
            return run_movcheck(mc_preset, mc_config, mc_seed, seed_opt->count() > 0,
                                mc_json ? "json" : format);
        if (tables->parsed()) return run_tables(tb_which, rat_from_string(tb_seed), tb_d, format);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitUsage;
}
