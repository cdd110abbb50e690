#include "springer/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>

#include "springer/json_io.hpp"
#include "springer/root_datum.hpp"
#include "springer/verify.hpp"

namespace springer::cli {

namespace {

using nlohmann::json;

json parse_json_arg(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON argument");
    return j;
}

// --json FILE|-  : read a JSON document from a file or stdin.
json read_json_source(const std::string& src) {
    if (src == "-") {
        json j = json::parse(std::cin, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON on stdin");
        return j;
    }
    std::ifstream in(src);
    if (!in) throw ParseError("cannot open " + src);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in " + src);
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Options {
    std::string datum = "SL2";
    std::string element, a, b, json_src;
    std::vector<std::int64_t> lambda;
    std::string q = "generic";
    std::string sqrt_q;
    std::string lambda_text = "generic";
    std::string algebra = "sym_h";
    int rank = 1;
    std::string mode = "equivariant";
    int N = 6;
    int window = 4;
    int u_bound = 3;
    int n = 1;
    int orbits = 1;
    std::string group = "GLn";
    std::string type_file, catalog_file, spec_file;
    std::string q_convention = "a";
    std::string out_dir;
    int threads = 1;
    std::string variant = "negative";
};

IntVector to_vec(const std::vector<std::int64_t>& v) {
    IntVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
}

// Inline flags take precedence; otherwise --json supplies the payload,
// either directly or under the keys "element", "a", "b".
struct Payload {
    json element, a, b;
};

Payload resolve_payload(const Options& o) {
    Payload p;
    if (!o.element.empty()) p.element = parse_json_arg(o.element);
    if (!o.a.empty()) p.a = parse_json_arg(o.a);
    if (!o.b.empty()) p.b = parse_json_arg(o.b);
    if (!o.json_src.empty()) {
        json doc = read_json_source(o.json_src);
        if (doc.is_object() && doc.contains("a") && p.a.is_null()) p.a = doc.at("a");
        if (doc.is_object() && doc.contains("b") && p.b.is_null()) p.b = doc.at("b");
        if (doc.is_object() && doc.contains("element") && p.element.is_null())
            p.element = doc.at("element");
        if (p.element.is_null() && !(doc.is_object() && (doc.contains("a") || doc.contains("b"))))
            p.element = doc;
        if (p.a.is_null() && p.element.is_object()) p.a = p.element;
    }
    return p;
}

int run_weyl(const Options& o, const std::string& action, std::ostream& out) {
    const RootDatum* rd = RootDatum::preset(o.datum);
    Payload in = resolve_payload(o);
    if (action == "length") {
        auto x = io::element_from_json(rd, in.element);
        emit(out, {{"length", wa_length(x)}});
    } else if (action == "reduced-word") {
        auto x = io::element_from_json(rd, in.element);
        auto rw = reduced_word(x);
        emit(out, {{"omega", io::to_json(rw.omega)}, {"word", rw.word}});
    } else if (action == "multiply") {
        auto xa = io::element_from_json(rd, in.a);
        auto xb = io::element_from_json(rd, in.b);
        emit(out, io::to_json(xa * xb));
    } else if (action == "split") {
        auto [l1, l2] = dominant_split(rd, to_vec(o.lambda));
        emit(out, {{"lambda1", std::vector<std::int64_t>(l1.data(), l1.data() + l1.size())},
                   {"lambda2", std::vector<std::int64_t>(l2.data(), l2.data() + l2.size())}});
    } else if (action == "datum-info") {
        json j;
        j["name"] = rd->name;
        j["rank"] = rd->ssrank;
        j["cochar_rank"] = rd->cochar_rank;
        j["positive_roots"] = rd->positive_roots.size();
        emit(out, j);
    }
    return 0;
}

int run_hecke(const Options& o, const std::string& action, std::ostream& out) {
    const RootDatum* rd = RootDatum::preset(o.datum);
    Payload in = resolve_payload(o);
    if (action == "mul") {
        HeckeElement a = io::hecke_from_json(in.a);
        HeckeElement b = io::hecke_from_json(in.b);
        emit(out, io::to_json(a * b));
    } else if (action == "invert") {
        auto x = io::element_from_json(rd, in.element);
        emit(out, io::to_json(hecke_invert_Tw(x)));
    } else if (action == "theta") {
        emit(out, io::to_json(theta(rd, to_vec(o.lambda)).expansion));
    } else if (action == "center") {
        emit(out, io::to_json(center_element(rd, to_vec(o.lambda))));
    } else if (action == "specialize") {
        HeckeElement a = io::hecke_from_json(in.a);
        std::optional<Rational> root;
        if (!o.sqrt_q.empty()) root = parse_rational(o.sqrt_q);
        emit(out, io::to_json(specialize_q(a, parse_rational(o.q), root)));
    }
    return 0;
}

int run_hh(const Options& o, const std::string& action, std::ostream& out) {
    if (action == "bg") {
        if (o.algebra != "sym_h") throw ParseError("only --algebra sym_h is built in");
        GradedAlgebra A = sym_algebra(o.rank, o.window);
        BgOptions opt;
        opt.simplicial_bound = o.N;
        opt.weight_window = o.window;
        if (o.mode == "equivariant") {
            opt.mode = BgMode::equivariant;
        } else if (o.mode == "plain") {
            opt.mode = BgMode::plain;
        } else if (o.mode == "twisted") {
            opt.mode = BgMode::twisted;
            if (o.q == "generic") throw ParseError("twisted mode needs an exact --q");
            opt.q = parse_rational(o.q);
        } else {
            throw ParseError("mode must be equivariant|plain|twisted");
        }
        auto cx = build_bg_complex(A, opt);
        json j = io::to_json(hh_ranks(cx));
        if (opt.mode != BgMode::twisted && o.variant != "none") {
            auto cyc = cyclic_ranks(cx, o.variant == "periodic", o.u_bound);
            if (o.variant == "periodic") {
                json p = json::object();
                for (const auto& [d, r] : cyc.periodic_by_degree) p[std::to_string(d)] = r;
                j["periodic_ranks"] = p;
                j["periodic_stable_degrees"] = cyc.periodic_stable_degrees;
            } else {
                json neg = json::array();
                for (const auto& [key, r] : cyc.negative_gr)
                    neg.push_back(
                        json{{"degree", key.first}, {"u_power", key.second}, {"rank", r}});
                j["negative_cyclic_gr"] = neg;
            }
        }
        emit(out, j);
    } else if (action == "dg") {
        DgAlgebraSpec spec = io::dg_spec_from_json(read_json_source(o.spec_file));
        auto ranks = dg_cohomology(spec, o.window);
        json rows = json::array();
        for (const auto& [key, r] : ranks)
            rows.push_back(json{{"degree", key.first}, {"weight", key.second}, {"rank", r}});
        emit(out, {{"ranks", rows}});
    }
    return 0;
}

int run_steinberg(const Options& o, std::ostream& out) {
    auto conv = o.q_convention == "b" ? sl2::QConvention::b : sl2::QConvention::a;
    auto report = sl2::hecke_model_check(conv);
    emit(out, io::to_json(report));
    return report.all_pass ? 0 : 1;
}

int run_params(const Options& o, const std::string& action, std::ostream& out) {
    if (action == "enumerate") {
        if (o.group != "GLn") throw ParseError("only --group GLn is supported");
        auto q = io::qmode_from_text(o.q);
        auto classes = dl::enumerate_gln(o.n, q, o.orbits);
        json rows = json::array();
        for (const auto& [sizes, cls] : classes) {
            json j = io::to_json(cls);
            j["orbit_sizes"] = sizes;
            rows.push_back(j);
        }
        emit(out, {{"count", classes.size()}, {"classes", rows}});
    } else if (action == "sl2-table") {
        auto lambda = io::lambda_from_text(o.lambda_text);
        auto q = io::qmode_from_text(o.q);
        auto rows = dl::sl2_table(lambda, q);
        json jr = json::array();
        for (const auto& r : rows) jr.push_back(io::to_json(r));
        emit(out, {{"regime", dl::regime_name(dl::classify_sl2(lambda, q))}, {"rows", jr}});
    }
    return 0;
}

int run_blocks(const Options& o, const std::string& action, std::ostream& out) {
    if (action == "decompose") {
        auto spec = io::type_from_json(read_json_source(o.type_file));
        if (o.n != 1 && spec.n != o.n)
            throw DimensionMismatch("--n disagrees with the type file");
        emit(out, io::to_json(blocks::block_decompose(spec)));
    } else if (action == "enumerate") {
        auto catalog = io::catalog_from_json(read_json_source(o.catalog_file));
        auto types = blocks::enumerate_types(o.n, catalog);
        json rows = json::array();
        for (const auto& t : types) rows.push_back(io::to_json(t));
        emit(out, {{"count", types.size()},
                   {"oracle_count", blocks::enumerate_types_count_oracle(o.n, catalog)},
                   {"types", rows}});
    }
    return 0;
}

int run_verify_all(const Options& o, std::ostream& out) {
    auto results = springer::verify::run_acceptance(o.threads);
    bool all = true;
    json rows = json::array();
    out << std::left;
    for (const auto& r : results) {
        all = all && r.pass;
        out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << " "
            << std::setw(34) << r.name << std::fixed << std::setprecision(2) << r.seconds
            << "s" << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    }
    out << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
    if (!o.out_dir.empty()) {
        std::ofstream f(o.out_dir + "/verify_all.json");
        if (!f) throw ParseError("cannot write to " + o.out_dir);
        f << json({{"all_pass", all}, {"criteria", rows}}).dump(2) << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations around affine Hecke algebras and Springer theory"};
    app.require_subcommand(1);
    Options o;

    std::string data_dir;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--datum", o.datum, "root datum preset name");
        cmd->add_option("--data", data_dir, "directory searched first for datum files");
        cmd->add_option("--json", o.json_src, "read inputs from a JSON file or -");
        cmd->add_option("--q", o.q, "rational value or 'generic'");
        cmd->add_option("--out", o.out_dir, "output directory");
        cmd->add_option("--threads", o.threads, "worker threads");
    };

    auto* weyl = app.add_subcommand("weyl", "extended affine Weyl group operations");
    weyl->require_subcommand(1);
    for (const char* act : {"length", "reduced-word", "multiply", "split", "datum-info"}) {
        auto* cmd = weyl->add_subcommand(act);
        add_common(cmd);
        cmd->add_option("--element", o.element, "element JSON {lambda, word}");
        cmd->add_option("--a", o.a, "left element JSON");
        cmd->add_option("--b", o.b, "right element JSON");
        cmd->add_option("--lambda", o.lambda, "cocharacter entries");
    }

    auto* hecke = app.add_subcommand("hecke", "affine Hecke algebra operations");
    hecke->require_subcommand(1);
    for (const char* act : {"mul", "invert", "theta", "center", "specialize"}) {
        auto* cmd = hecke->add_subcommand(act);
        add_common(cmd);
        cmd->add_option("--a", o.a, "left element JSON");
        cmd->add_option("--b", o.b, "right element JSON");
        cmd->add_option("--element", o.element, "element JSON {lambda, word}");
        cmd->add_option("--lambda", o.lambda, "cocharacter entries");
        cmd->add_option("--sqrt-q", o.sqrt_q, "square root of q for odd v-powers");
    }

    auto* hh = app.add_subcommand("hh", "Hochschild/cyclic homology of truncations");
    hh->require_subcommand(1);
    {
        auto* bg = hh->add_subcommand("bg", "Block-Getzler complex ranks");
        add_common(bg);
        bg->add_option("--algebra", o.algebra, "algebra family (sym_h)");
        bg->add_option("--rank", o.rank, "number of Sym generators");
        bg->add_option("--mode", o.mode, "equivariant|plain|twisted");
        bg->add_option("--N", o.N, "simplicial bound");
        bg->add_option("--window", o.window, "weight window");
        bg->add_option("--u-bound", o.u_bound, "u-power bound for cyclic variants");
        bg->add_option("--variant", o.variant, "negative|periodic|none");
        auto* dg = hh->add_subcommand("dg", "dg-algebra cohomology");
        add_common(dg);
        dg->add_option("--spec", o.spec_file, "dg algebra spec JSON file or -")->required();
        dg->add_option("--window", o.window, "weight window");
    }

    auto* steinberg = app.add_subcommand("steinberg", "SL2 localization model");
    {
        auto* v = steinberg->add_subcommand("verify-sl2", "check the model identities");
        add_common(v);
        v->add_option("--q-convention", o.q_convention, "a|b fiber scaling convention");
    }
    steinberg->require_subcommand(1);

    auto* params = app.add_subcommand("params", "Deligne-Langlands parameters");
    params->require_subcommand(1);
    {
        auto* en = params->add_subcommand("enumerate");
        add_common(en);
        en->add_option("--group", o.group, "GLn");
        en->add_option("--n", o.n, "rank")->required();
        en->add_option("--orbits", o.orbits, "number of eigenvalue q-orbits");
        auto* tb = params->add_subcommand("sl2-table");
        add_common(tb);
        tb->add_option("--lambda", o.lambda_text, "1, -1, i, sqrt-q, generic, or a rational");
    }

    auto* blocks_cmd = app.add_subcommand("blocks", "GL_n inertial blocks");
    blocks_cmd->require_subcommand(1);
    {
        auto* de = blocks_cmd->add_subcommand("decompose");
        add_common(de);
        de->add_option("--n", o.n, "ambient rank");
        de->add_option("--type", o.type_file, "inertial type JSON file or -")->required();
        auto* en = blocks_cmd->add_subcommand("enumerate");
        add_common(en);
        en->add_option("--n", o.n, "ambient rank")->required();
        en->add_option("--catalog", o.catalog_file, "catalog JSON file or -")->required();
    }

    auto* verify_all = app.add_subcommand("verify-all", "run the acceptance battery");
    add_common(verify_all);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!data_dir.empty()) RootDatum::set_data_directory(data_dir);
        for (auto* sub : app.get_subcommands()) {
            const std::string name = sub->get_name();
            std::string action =
                sub->get_subcommands().empty() ? "" : sub->get_subcommands()[0]->get_name();
            if (name == "weyl") return run_weyl(o, action, out);
            if (name == "hecke") return run_hecke(o, action, out);
            if (name == "hh") return run_hh(o, action, out);
            if (name == "steinberg") return run_steinberg(o, out);
            if (name == "params") return run_params(o, action, out);
            if (name == "blocks") return run_blocks(o, action, out);
            if (name == "verify-all") return run_verify_all(o, out);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace springer::cli
