#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qgl/json_io.hpp"

using namespace qgl;
using nlohmann::json;

namespace {

struct Options {
    int n = 2;
    std::vector<long long> qs;
    bool dd = false;
    std::string config_path;
    std::string cache_dir;
    bool stats = false;
    int d = 2;
    int sample = 0;
    unsigned seed = 1;
    std::string kind;
    std::string suite;
    int gen_i = 1, gen_j = 1;
    std::string expr_a, expr_b;
    std::string matrices_json;
    Guards guards;
};

void apply_config_file(Options& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in.is_open()) throw std::runtime_error("cannot open config file " + o.config_path);
    json cfg = json::parse(in);
    if (cfg.contains("n")) o.n = cfg["n"].get<int>();
    if (cfg.contains("q")) {
        o.qs.clear();
        for (const auto& x : cfg["q"]) o.qs.push_back(x.get<long long>());
    }
    if (cfg.contains("model")) o.dd = cfg["model"].get<std::string>() == "dd";
    if (cfg.contains("kind") && o.kind.empty()) o.kind = cfg["kind"].get<std::string>();
    if (cfg.contains("guards")) {
        const auto& g = cfg["guards"];
        if (g.contains("max_d")) o.guards.max_d = g["max_d"].get<int>();
        if (g.contains("max_q")) o.guards.max_q = g["max_q"].get<long long>();
    }
    if (cfg.contains("cache_dir") && o.cache_dir.empty())
        o.cache_dir = cfg["cache_dir"].get<std::string>();
}

std::vector<long long> parse_q_list(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        if (piece.empty()) throw std::domain_error("bad q list: " + text);
        out.push_back(std::stoll(piece));
        pos = comma + 1;
    }
    if (out.empty()) throw std::domain_error("empty q list");
    return out;
}

void finalize_options(Options& o, const std::string& q_flag) {
    apply_config_file(o);
    if (!q_flag.empty()) o.qs = parse_q_list(q_flag);
    if (o.qs.empty()) o.qs = {2};
    if (const char* env = std::getenv("QGL_CACHE_DIR"); env && *env) o.cache_dir = env;
    for (long long q : o.qs) {
        if (!is_prime(q)) throw std::domain_error("q must be prime, got " + std::to_string(q));
        if (q > o.guards.max_q)
            throw std::domain_error("q exceeds the size guard (" + std::to_string(q) + ")");
    }
    if (o.n < 1 || o.n > 6) throw std::domain_error("n must lie in 1..6");
}

AlgebraKind model_of(const Options& o) { return o.dd ? AlgebraKind::DD : AlgebraKind::FRT; }

json localized_or_poly_json(const LocalizedElement& e) {
    const auto& parts = e.parts();
    if (parts.empty()) return ncpoly_json(NCPoly(AlgebraKind::FRT, e.n()));
    if (parts.size() == 1 && parts.begin()->first == 0) return ncpoly_json(parts.begin()->second);
    return localized_json(e);
}

NCPoly detfree_part(const LocalizedElement& e) {
    for (const auto& [k, p] : e.parts())
        if (k != 0)
            throw std::domain_error("this command needs a determinant-inverse-free expression");
    if (e.parts().empty()) return NCPoly(AlgebraKind::FRT, e.n());
    return e.parts().begin()->second;
}

Report merge(Report base, const Report& extra) {
    base.instances += extra.instances;
    base.failures.insert(base.failures.end(), extra.failures.begin(), extra.failures.end());
    return base;
}

Report run_suite(const std::string& suite, const Options& o, long long q,
                 StructureContext& ctx) {
    if (suite == "relations-circ") {
        Report r = verify_relations(EmbedModel::Phi, o.n, q, ctx);
        if (o.n == 2) r = merge(std::move(r), verify_relation_tables(true, q, ctx));
        return merge(std::move(r), verify_divided(3, q, ctx));
    }
    if (suite == "relations-dot") {
        Report r = verify_relations(EmbedModel::Psi, o.n, q, ctx);
        if (o.n == 2) r = merge(std::move(r), verify_relation_tables(false, q, ctx));
        return r;
    }
    if (suite == "relations-bullet") return verify_relations(EmbedModel::PsiPrime, o.n, q, ctx);
    if (suite == "pbw") return verify_pbw(o.n, o.d, q, ctx);
    if (suite == "newpbw") return verify_newpbw(o.n, o.d, q, ctx);
    if (suite == "green") return verify_green(o.n, o.d, q, ctx, o.sample, o.seed);
    if (suite == "mult-h") return verify_mult_h(o.n, o.d, q, ctx);
    if (suite == "determinant") return verify_determinant(o.n, q, ctx);
    if (suite == "hopf") return verify_hopf(o.n);
    if (suite == "coassoc") return verify_coassoc(o.n, o.d, q, ctx);
    if (suite == "tilde-hom") return verify_tilde_hom(o.n, q, ctx);
    if (suite == "twist-iso") return verify_twist_iso(o.n, q, ctx);
    if (suite == "tau") return verify_tau(o.n, q, ctx);
    throw std::domain_error("unknown suite: " + suite);
}

int run(int argc, char** argv) {
    CLI::App app{"exact quantum GL(n) coordinate algebras over finite-field flag geometry"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    std::string q_flag;
    app.add_option("--n", o.n, "matrix size n");
    app.add_option("--q", q_flag, "prime field size(s), comma separated");
    app.add_flag("--dd", o.dd, "use the Dipper-Donkin presentation");
    app.add_option("--config", o.config_path, "JSON config file");
    app.add_option("--cache-dir", o.cache_dir, "structure-constant cache directory");
    app.add_flag("--stats", o.stats, "print cache statistics to stderr");
    app.add_option("--d", o.d, "degree bound");
    app.add_option("--sample", o.sample, "sample size (0 = exhaustive)");
    app.add_option("--seed", o.seed, "sampling seed");

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", o.expr_a, "expression")->required();

    auto* mul = app.add_subcommand("mul", "multiply two expressions");
    mul->add_option("exprA", o.expr_a, "left factor")->required();
    mul->add_option("exprB", o.expr_b, "right factor")->required();
    mul->add_option("--kind", o.kind, "circ|dot|bullet|symbolic");

    auto* delta = app.add_subcommand("delta", "coproduct of an expression");
    delta->add_option("expr", o.expr_a, "expression")->required();
    delta->add_option("--kind", o.kind, "plain|tilde|prime");

    app.add_subcommand("det", "quantum determinant");

    auto* antipode = app.add_subcommand("antipode", "antipode of a generator");
    antipode->add_option("--i", o.gen_i, "row index")->required();
    antipode->add_option("--j", o.gen_j, "column index")->required();

    app.add_subcommand("orbits", "orbit census for given n, d, q");

    auto* sc = app.add_subcommand("sc", "structure constant");
    sc->add_option("--kind", o.kind, "c|h|g|a")->required();
    sc->add_option("matrices", o.matrices_json, "JSON list of matrices")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name")->required();

    auto* tables = app.add_subcommand("tables", "relation tables as CSV");
    tables->add_option("--suite", o.suite, "relations-circ|relations-dot")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    }
    finalize_options(o, q_flag);

    StructureContext ctx(o.guards);
    if (!o.cache_dir.empty()) ctx.load(o.cache_dir);

    int exit_code = 0;
    json out;
    std::string text_out;

    if (nf->parsed()) {
        const ExprPtr e = parse_expression(o.expr_a, o.n, model_of(o));
        if (o.dd) out = ncpoly_json(normal_form(eval_dd(e, o.n)));
        else out = localized_or_poly_json(eval_frt(e, o.n));
    } else if (mul->parsed()) {
        if (o.kind.empty()) o.kind = "symbolic";
        const ExprPtr ea = parse_expression(o.expr_a, o.n, model_of(o));
        const ExprPtr eb = parse_expression(o.expr_b, o.n, model_of(o));
        if (o.kind == "symbolic") {
            if (o.dd) out = ncpoly_json(normal_form(multiply(eval_dd(ea, o.n), eval_dd(eb, o.n))));
            else out = localized_or_poly_json(eval_frt(ea, o.n) * eval_frt(eb, o.n));
        } else {
            EmbedModel model;
            if (o.kind == "circ" || o.kind == "dot") {
                if (o.dd)
                    throw std::domain_error("kinds circ and dot read the FRT presentation");
                model = o.kind == "circ" ? EmbedModel::Phi : EmbedModel::Psi;
            } else if (o.kind == "bullet") {
                if (!o.dd) throw std::domain_error("kind bullet reads the DD presentation (--dd)");
                model = EmbedModel::PsiPrime;
            } else {
                throw std::domain_error("unknown product kind: " + o.kind);
            }
            out = json::array();
            for (long long q : o.qs) {
                NCPoly a = o.dd ? eval_dd(ea, o.n) : detfree_part(eval_frt(ea, o.n));
                NCPoly b = o.dd ? eval_dd(eb, o.n) : detfree_part(eval_frt(eb, o.n));
                ProductKind pk = o.kind == "circ"   ? ProductKind::Circ
                                 : o.kind == "dot"  ? ProductKind::Dot
                                                    : ProductKind::Bullet;
                out.push_back(kelement_json(
                    k_multiply(embed_symbolic(a, q, model, ctx),
                               embed_symbolic(b, q, model, ctx), pk, ctx)));
            }
            if (out.size() == 1) out = out[0];
        }
    } else if (delta->parsed()) {
        if (o.kind.empty()) o.kind = "plain";
        CoproductKind ck;
        if (o.kind == "plain") ck = CoproductKind::Plain;
        else if (o.kind == "tilde") ck = CoproductKind::Tilde;
        else if (o.kind == "prime") ck = CoproductKind::Prime;
        else throw std::domain_error("unknown coproduct kind: " + o.kind);
        const ExprPtr e = parse_expression(o.expr_a, o.n, model_of(o));
        EmbedModel model = o.dd ? EmbedModel::PsiPrime
                                : (ck == CoproductKind::Plain ? EmbedModel::Psi : EmbedModel::Phi);
        out = json::array();
        for (long long q : o.qs) {
            NCPoly p = o.dd ? eval_dd(e, o.n) : detfree_part(eval_frt(e, o.n));
            out.push_back(ktensor_json(k_comultiply(embed_symbolic(p, q, model, ctx), ck, ctx)));
        }
        if (out.size() == 1) out = out[0];
    } else if (app.got_subcommand("det")) {
        out = ncpoly_json(quantum_determinant(o.n, model_of(o)));
    } else if (antipode->parsed()) {
        if (o.dd)
            throw std::domain_error(
                "no native DD localization; the antipode transports through the FRT side");
        out = localized_json(antipode_generator(o.gen_i, o.gen_j, o.n, AlgebraKind::FRT));
    } else if (app.got_subcommand("orbits")) {
        out = json::array();
        for (long long q : o.qs) {
            json list = json::array();
            for (const auto& m : theta(o.n, o.d))
                list.push_back({{"matrix", matrix_json(m)},
                                {"ro", m.ro().parts},
                                {"co", m.co().parts},
                                {"dim", m.orbit_dim()},
                                {"orbit_size", orbit_size(m, q, o.guards)},
                                {"stabilizer_order", stabilizer_order(m, q, o.guards)}});
            out.push_back({{"n", o.n}, {"d", o.d}, {"q", q}, {"orbits", std::move(list)}});
        }
        if (out.size() == 1) out = out[0];
    } else if (sc->parsed()) {
        const json parsed = json::parse(o.matrices_json);
        std::vector<MatrixType> ms;
        for (const auto& jm : parsed) ms.push_back(matrix_from_json(jm));
        const size_t need = o.kind == "a" ? 1 : 3;
        if (ms.size() != need)
            throw std::domain_error("kind '" + o.kind + "' needs " + std::to_string(need) +
                                    " matrices");
        out = json::array();
        for (long long q : o.qs) {
            long long value;
            if (o.kind == "c") value = ctx.c(ms[0], ms[1], ms[2], q);
            else if (o.kind == "h") value = ctx.h(ms[0], ms[1], ms[2], q);
            else if (o.kind == "g") value = ctx.g(ms[0], ms[1], ms[2], q);
            else if (o.kind == "a") value = ctx.a(ms[0], q);
            else throw std::domain_error("unknown structure constant kind: " + o.kind);
            out.push_back({{"kind", o.kind}, {"q", q}, {"value", value}});
        }
        if (out.size() == 1) out = out[0];
    } else if (verify->parsed()) {
        out = json::array();
        for (long long q : o.qs) {
            const Report r = run_suite(o.suite, o, q, ctx);
            if (!r.ok()) exit_code = 1;
            out.push_back(report_json(r));
        }
        if (out.size() == 1) out = out[0];
    } else if (tables->parsed()) {
        if (o.suite != "relations-circ" && o.suite != "relations-dot")
            throw std::domain_error("tables: suite must be relations-circ or relations-dot");
        for (long long q : o.qs) text_out += table_csv(o.suite == "relations-circ", q, ctx);
    }

    if (!o.cache_dir.empty()) ctx.save(o.cache_dir);
    if (o.stats)
        std::cerr << "cache: computed=" << ctx.computed() << " served=" << ctx.served()
                  << " records=" << ctx.size() << "\n";

    if (!text_out.empty()) std::cout << text_out;
    else std::cout << out.dump() << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"offset", e.offset}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
