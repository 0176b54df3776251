#include "flagcw/charclass.hpp"
#include "flagcw/enumerate.hpp"
#include "flagcw/flagchow.hpp"
#include "flagcw/steenrod.hpp"
#include "flagcw/suites.hpp"
#include "flagcw/wdring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace flagcw;
using Json = nlohmann::ordered_json;

namespace {

struct Report {
    Report() = default;
    explicit Report(std::string c) : command(std::move(c)) {}

    std::string command;
    Json input = Json::object();
    Json result = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> text;  // body of the text format
};

std::string big(const BigInt& x) { return x.get_str(); }

struct Options {
    std::string shape;
    std::string twist = "0";
    std::string wring_twist = "all";
    std::string theory;
    std::string expr;
    std::string preset;
    std::string suite;
    int degree_max = -1;
    int block = 0;
    int roots = 2;
    int blocks = 0;
};

TwistClass parse_twist(const std::string& text, const FlagShape& shape)
{
    return TwistClass::parse(text, shape.blocks());
}

void add_shape_input(Report& r, const FlagShape& shape)
{
    r.input["shape"] = shape.to_string();
    for (const auto& n : shape.notices()) r.text.push_back("note: " + n);
}

Report run_poincare(const Options& o)
{
    Report r{"poincare"};
    FlagShape shape = FlagShape::parse(o.shape);
    TwistClass tw = parse_twist(o.twist, shape);
    if (o.theory != "chow" && o.theory != "ch2" && o.theory != "w" && o.theory != "torsion")
        throw std::invalid_argument("unknown theory '" + o.theory + "'");
    add_shape_input(r, shape);
    r.input["theory"] = o.theory;
    r.input["twist"] = tw.to_string();

    Polynomial p = t_poly({0});
    if (o.theory == "chow" || o.theory == "ch2") {
        ChowRing ring(shape);
        p = chow_poincare(shape);
        Polynomial from_basis = chow_poincare_from_basis(ring);
        r.checks.push_back({"closed form matches the computed basis", p == from_basis, from_basis.to_string()});
    } else if (o.theory == "w") {
        p = wd_poincare(shape, tw);
        if (shape.is_full()) {
            Polynomial want = tw.trivial() ? free_poincare_fln(shape.n()) : t_poly({0});
            r.checks.push_back({"complete-flag closed form", p == want, want.to_string()});
        }
    } else {
        p = torsion_poincare_from_sq2(shape, tw);
        if (shape.is_full()) {
            Polynomial want = torsion_poincare_closed(shape.n(), !tw.trivial());
            r.checks.push_back({"complete-flag closed form", p == want, want.to_string()});
        }
    }
    r.result["poincare"] = p.to_string();
    Json coeffs = Json::array();
    for (const auto& c : t_coefficients(p)) coeffs.push_back(big(c));
    r.result["coefficients"] = coeffs;
    r.text.push_back(p.to_string());
    return r;
}

Report run_wring(const Options& o)
{
    Report r{"wring"};
    FlagShape shape = FlagShape::parse(o.shape);
    std::optional<TwistClass> only;
    if (o.wring_twist != "all") only = parse_twist(o.wring_twist, shape);
    if (o.degree_max < -1) throw std::invalid_argument("--degree-max must be nonnegative");
    add_shape_input(r, shape);
    r.input["twist"] = only ? only->to_string() : "all";

    WRing ring(shape);
    const int top = ring.top_degree();
    const int qmax = o.degree_max < 0 ? top : std::min(o.degree_max, top);
    r.input["degree_max"] = qmax;
    r.result["parity"] = ring.parity_name();
    r.result["top_degree"] = top;
    r.text.push_back("parity: " + ring.parity_name());
    Json gens = Json::array();
    for (const auto& g : ring.generators()) {
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"twist", g.twist.to_string()}});
        r.text.push_back("generator " + g.name + " degree " + std::to_string(g.degree) + " twist " + g.twist.to_string());
    }
    r.result["generators"] = gens;
    std::vector<TwistClass> twists = only ? std::vector<TwistClass>{*only} : ring.twists();
    Json pieces = Json::array();
    for (int q = 0; q <= qmax; ++q)
        for (const auto& tw : twists) {
            Grade g{q, tw.mask()};
            size_t rank = ring.rank(g);
            if (!rank) continue;
            auto labels = ring.basis_labels(g);
            pieces.push_back({{"degree", q}, {"twist", tw.to_string()}, {"rank", rank}, {"basis", labels}});
            std::string line = "degree " + std::to_string(q) + " twist " + tw.to_string() + ": rank " +
                               std::to_string(rank) + " [";
            for (size_t i = 0; i < labels.size(); ++i) line += (i ? ", " : "") + labels[i];
            r.text.push_back(line + "]");
        }
    r.result["pieces"] = pieces;
    return r;
}

Report run_annihilator(const Options& o)
{
    Report r{"annihilator"};
    FlagShape shape = FlagShape::parse(o.shape);
    if (o.block < 1 || o.block > shape.blocks()) throw std::invalid_argument("--block is outside the shape");
    if (shape.part(o.block) % 2) throw std::invalid_argument("block " + std::to_string(o.block) + " has odd rank and no Euler class");
    add_shape_input(r, shape);
    r.input["block"] = o.block;
    WRing ring(shape);
    AnnihilatorReport rep = ann_euler(ring, o.block, o.degree_max);
    r.result["generator"] = rep.generator_text;
    Json pieces = Json::array();
    for (const auto& p : rep.pieces) {
        pieces.push_back({{"degree", p.degree}, {"twist", TwistClass(shape.blocks(), p.twist).to_string()}, {"ok", p.ok}});
        r.checks.push_back({"degree " + std::to_string(p.degree) + " twist " +
                                TwistClass(shape.blocks(), p.twist).to_string(),
                            p.ok, {}});
    }
    r.result["pieces"] = pieces;
    r.result["degrees_checked"] = rep.pieces.empty() ? 0 : rep.pieces.back().degree + 1;
    r.text.push_back("Ann(e" + std::to_string(o.block) + ") = (" + rep.generator_text + ")");
    return r;
}

Report run_euler(const Options& o)
{
    Report r{"euler"};
    if (o.roots != 1 && o.roots != 2) throw std::invalid_argument("--roots must be 1 or 2");
    BundleExpr e = parse_bundle(o.expr);
    r.input["expr"] = e.to_string();
    r.input["roots"] = o.roots;
    BundleClasses c = evaluate_bundle(e, o.roots, o.blocks);
    r.result["rank"] = c.rank;
    r.result["euler"] = c.euler.to_string();
    r.result[o.roots == 2 ? "pontryagin" : "chern"] = c.total.to_string();
    r.text.push_back("rank: " + std::to_string(c.rank));
    r.text.push_back("euler: " + c.euler.to_string());
    r.text.push_back(std::string(o.roots == 2 ? "pontryagin" : "chern") + ": " + c.total.to_string());
    return r;
}

void add_gw(Report& r, const BigInt& complex, const BigInt& real)
{
    try {
        GWForm gw = gw_form(complex, real);
        r.result["gw"] = {{"plus", big(gw.plus)}, {"minus", big(gw.minus)}};
        r.text.push_back("gw: " + big(gw.plus) + "<1> + " + big(gw.minus) + "<-1>");
        r.checks.push_back({"real count fits the complex count", true, {}});
    } catch (const std::invalid_argument& e) {
        r.checks.push_back({"real count fits the complex count", false, e.what()});
    }
}

Report run_count(const Options& o)
{
    Report r{"count"};
    if (o.preset != "cubic-lines" && o.preset != "quintic-4planes" && o.preset != "flag-3-5")
        throw std::invalid_argument("unknown preset '" + o.preset + "'");
    r.input["preset"] = o.preset;
    if (o.preset == "cubic-lines") {
        CountResult c = count_lines_cubic();
        r.result["complex"] = big(c.complex);
        r.result["real"] = big(*c.real);
        r.text.push_back("complex: " + big(c.complex));
        r.text.push_back("real: " + big(*c.real));
        add_gw(r, c.complex, *c.real);
    } else if (o.preset == "quintic-4planes") {
        BigInt n = count_quintic_fourplanes();
        r.result["complex"] = big(n);
        r.text.push_back("complex: " + big(n));
    } else {
        FlagComplexCount c = count_flags_complex();
        RealFlagCount real = count_flags_real();
        r.result["complex"] = big(c.via_product);
        r.result["complex_via_pushforward"] = big(c.via_pushforward);
        r.result["fiber_pushforward"] = big(c.fiber_pushforward);
        r.result["real"] = big(real.primary);
        r.result["real_diagnostic"] = big(real.diagnostic);
        r.result["top_coefficients"] = {big(real.upper), big(real.lower)};
        r.text.push_back("complex: " + big(c.via_product));
        r.text.push_back("real: " + big(real.primary));
        r.text.push_back("real (diagnostic, opposite sign identification): " + big(real.diagnostic));
        r.checks.push_back({"both complex routes agree", c.agree(), big(c.via_pushforward)});
        r.checks.push_back({"complex count divisible by 27", c.via_product % 27 == 0, {}});
        add_gw(r, c.via_product, real.primary);
    }
    return r;
}

Report run_verify(const Options& o)
{
    Report r{"verify"};
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
    r.input["suite"] = o.suite;
    r.checks = run_suite(o.suite);
    size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass;
    r.result["total"] = r.checks.size();
    r.result["passed"] = passed;
    r.text.push_back(std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks passed");
    return r;
}

void emit(const Report& r, const std::string& format)
{
    if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json j = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
            if (!c.pass && !c.detail.empty()) j["detail"] = c.detail;
            checks.push_back(j);
        }
        Json out = {{"command", r.command}, {"input", r.input}, {"result", r.result}, {"checks", checks}};
        std::cout << out.dump(2) << '\n';
        return;
    }
    for (const auto& line : r.text) std::cout << line << '\n';
    for (const auto& c : r.checks) {
        std::cout << (c.pass ? "pass: " : "FAIL: ") << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chow, Witt and mod-2 invariants of flag varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    Options o;

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a cohomology theory");
    poincare->add_option("--shape", o.shape, "Flag shape d1,d2,...")->required();
    poincare->add_option("--theory", o.theory, "chow, ch2, w or torsion")->required();
    poincare->add_option("--twist", o.twist, "0 or a list of blocks");

    auto* wring = app.add_subcommand("wring", "Generators and graded ranks of the W-cohomology ring");
    wring->add_option("--shape", o.shape, "Flag shape d1,d2,...")->required();
    wring->add_option("--degree-max", o.degree_max, "Highest degree to list");
    wring->add_option("--twist", o.wring_twist, "0, a list of blocks, or all");

    auto* ann = app.add_subcommand("annihilator", "Annihilator of an Euler class");
    ann->add_option("--shape", o.shape, "Flag shape d1,d2,...")->required();
    ann->add_option("--block", o.block, "Block with even rank")->required();
    ann->add_option("--degree-max", o.degree_max, "Highest degree to check");

    auto* euler = app.add_subcommand("euler", "Characteristic classes of a bundle expression");
    euler->add_option("--expr", o.expr, "Bundle expression, e.g. sym^5(D1+D2)")->required();
    euler->add_option("--roots", o.roots, "Rank of the building blocks: 1 or 2");
    euler->add_option("--blocks", o.blocks, "Number of root variables (default: largest block used)");

    auto* count = app.add_subcommand("count", "Enumerative counts");
    count->add_option("--preset", o.preset, "cubic-lines, quintic-4planes or flag-3-5")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "piqp, annihilator, sq2 or poincare")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code ? 1 : 0;
    }

    Report r;
    try {
        if (*poincare) r = run_poincare(o);
        else if (*wring) r = run_wring(o);
        else if (*ann) r = run_annihilator(o);
        else if (*euler) r = run_euler(o);
        else if (*count) r = run_count(o);
        else r = run_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    emit(r, format);
    return all_pass(r.checks) ? 0 : 2;
}
