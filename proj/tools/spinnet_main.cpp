#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "spinnet/asymptotics.hpp"
#include "spinnet/bench.hpp"
#include "spinnet/contraction.hpp"
#include "spinnet/error.hpp"
#include "spinnet/json_io.hpp"
#include "spinnet/recoupling.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/wigner.hpp"
#include "spinnet/yutsis.hpp"

using namespace spinnet;

namespace {

struct GlobalOpts {
    std::string format = "plain";
    unsigned digits = 17;
    std::string out;
};

std::ostream& output_stream(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out);
    if (!file) throw ArgumentError("cannot open output file '" + g.out + "'");
    return file;
}

void print_value(const GlobalOpts& g, std::ostream& os, const RadicalRational& v,
                 const nlohmann::json& json_doc) {
    if (g.format == "json") {
        os << json_doc.dump(2) << "\n";
    } else {
        os << v.to_decimal(g.digits) << "\n";
        os << "exact: " << v.to_exact_string() << "\n";
    }
}

std::string cache_path() {
    const char* dir = std::getenv("SPINNET_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/sixj.cache";
}

void load_cache() {
    const std::string path = cache_path();
    if (path.empty()) return;
    std::ifstream in(path, std::ios::binary);
    if (in) SixJCache::instance().load(in);
}

void save_cache() {
    const std::string path = cache_path();
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (out) SixJCache::instance().save(out);
}

YutsisGraph make_graph(const std::string& family, int n) {
    if (family == "cartwheel") return cartwheel_type1(n);
    if (family == "prism") return prism_type2(n);
    if (family == "tetrahedron") return tetrahedron_6j();
    if (family == "petersen") return petersen();
    throw ArgumentError("unknown graph family '" + family +
                        "' (cartwheel, prism, tetrahedron, petersen)");
}

std::vector<Spin> parse_spin_list(const std::string& csv) {
    std::vector<Spin> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_spin(item));
    return out;
}

AsymFormula parse_formula(const std::string& name) {
    if (name == "63" || name == "asym63") return AsymFormula::Asym63;
    if (name == "45" || name == "asym45") return AsymFormula::Asym45;
    throw ArgumentError("unknown formula '" + name + "' (use 63 or 45)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinnet: exact SU(2) recoupling coefficients, their diagrams, and "
                 "semiclassical approximations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "plain, json, csv or dot")
        ->check(CLI::IsMember({"plain", "json", "csv", "dot"}));
    app.add_option("--digits", g.digits, "significant digits for decimal output")
        ->check(CLI::Range(1u, 150u));
    app.add_option("--out", g.out, "write output to a file instead of stdout");

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "evaluate a coefficient exactly");
    compute->require_subcommand(1);

    std::vector<std::string> args3j;
    auto* c3j = compute->add_subcommand("3j", "Wigner 3j: j1 j2 j3 m1 m2 m3");
    c3j->add_option("values", args3j, "six spin arguments")->expected(6);

    std::vector<std::string> args6j;
    auto* c6j = compute->add_subcommand("6j", "Wigner 6j: a b c d e f");
    c6j->add_option("values", args6j, "six spins, row-major")->expected(6);

    std::vector<std::string> args9j;
    auto* c9j = compute->add_subcommand("9j", "Wigner 9j: nine spins row-major");
    c9j->add_option("values", args9j, "nine spins")->expected(9);

    std::string njType = "I", njJ, njK, njL;
    auto* c3nj = compute->add_subcommand("3nj", "3nj of type I or II");
    c3nj->add_option("--type", njType, "I or II")->check(CLI::IsMember({"I", "II"}));
    c3nj->add_option("--j", njJ, "comma-separated j_1..j_n")->required();
    c3nj->add_option("--k", njK, "comma-separated k_1..k_n")->required();
    c3nj->add_option("--l", njL, "comma-separated l_1..l_n")->required();

    // ---- graph ----
    auto* graph = app.add_subcommand("graph", "generate and analyze diagrams");
    graph->require_subcommand(1);
    std::string genFamily;
    int genN = 3;
    auto* ggen = graph->add_subcommand("gen", "emit a generated graph");
    ggen->add_option("family", genFamily, "cartwheel, prism, tetrahedron, petersen")
        ->required();
    ggen->add_option("n", genN, "family size parameter");
    std::string anaFamily;
    int anaN = 3;
    auto* gana = graph->add_subcommand("analyze", "girth, cycles, Euler number, cuts");
    gana->add_option("family", anaFamily, "cartwheel, prism, tetrahedron, petersen")
        ->required();
    gana->add_option("n", anaN, "family size parameter");
    std::string dotFamily;
    int dotN = 3;
    auto* gdot = graph->add_subcommand("dot", "emit DOT text");
    gdot->add_option("family", dotFamily, "cartwheel, prism, tetrahedron, petersen")
        ->required();
    gdot->add_option("n", dotN, "family size parameter");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity and oracle suites");
    verify->require_subcommand(1);
    int vCount = 100, vMaxTwice = 9;
    std::uint64_t vSeed = 1;
    auto add_verify_opts = [&](CLI::App* cmd) {
        cmd->add_option("--count", vCount, "number of random instances");
        cmd->add_option("--max-twice", vMaxTwice, "max twice-value of sampled spins");
        cmd->add_option("--seed", vSeed, "rng seed");
    };
    auto* vbe = verify->add_subcommand("be", "five-6j identity residuals");
    add_verify_opts(vbe);
    auto* vrec = verify->add_subcommand("rec5", "9j five-term recursion residuals");
    add_verify_opts(vrec);
    auto* vlam = verify->add_subcommand("lambda", "lambda-shift symmetry residuals");
    add_verify_opts(vlam);
    auto* vora = verify->add_subcommand("oracle", "kernels vs magnetic contractions");
    add_verify_opts(vora);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "semiclassical error campaigns");
    bench->require_subcommand(1);
    std::string bFormula = "both", bJs = "20,40,60,80,100", bJms = "2";
    int bCount = 200, bThreads = 1;
    std::uint64_t bSeed = 1;
    std::string bGnuplot;
    auto* brun = bench->add_subcommand("run", "sample, compare, emit CSV");
    brun->add_option("--formula", bFormula, "63, 45 or both");
    brun->add_option("--J", bJs, "comma-separated J values");
    brun->add_option("--jm", bJms, "comma-separated small-spin ceilings (spins)");
    brun->add_option("--count", bCount, "samples per cell");
    brun->add_option("--seed", bSeed, "campaign seed");
    brun->add_option("--threads", bThreads, "worker threads");
    brun->add_option("--gnuplot", bGnuplot, "also write a gnuplot script here");
    std::string fIn, fColumn = "frac_err";
    auto* bfit = bench->add_subcommand("fit", "fit log-log slopes from campaign CSV");
    bfit->add_option("--in", fIn, "campaign CSV path")->required();
    bfit->add_option("--column", fColumn, "frac_err, rms_mag or rms_dev")
        ->check(CLI::IsMember({"frac_err", "rms_mag", "rms_dev"}));

    // lets trailing global flags (--format, --digits, --out) follow subcommands
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit 2, --help stays 0
    }

    std::ofstream file;
    try {
        load_cache();
        std::ostream& os = output_stream(g, file);

        if (c3j->parsed()) {
            ThreeJArgs a;
            a.j1 = parse_spin(args3j[0]);
            a.j2 = parse_spin(args3j[1]);
            a.j3 = parse_spin(args3j[2]);
            a.m1 = parse_twice(args3j[3]);
            a.m2 = parse_twice(args3j[4]);
            a.m3 = parse_twice(args3j[5]);
            const RadicalRational v = wigner_3j(a);
            nlohmann::json doc;
            doc["type"] = "3j";
            doc["value"] = to_json(v);
            print_value(g, os, v, doc);
        } else if (c6j->parsed()) {
            SixJArgs a(parse_spin(args6j[0]), parse_spin(args6j[1]), parse_spin(args6j[2]),
                       parse_spin(args6j[3]), parse_spin(args6j[4]), parse_spin(args6j[5]));
            const RadicalRational v = wigner_6j(a);
            nlohmann::json doc;
            doc["type"] = "6j";
            doc["value"] = to_json(v);
            print_value(g, os, v, doc);
        } else if (c9j->parsed()) {
            NineJLabels L;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) L.j[r][c] = parse_spin(args9j[3 * r + c]);
            const RadicalRational v = nine_j(L);
            print_value(g, os, v, value_json_9j(L, v));
        } else if (c3nj->parsed()) {
            ThreeNJLabels L;
            L.kind = njType == "I" ? ThreeNJKind::TypeI : ThreeNJKind::TypeII;
            L.j = parse_spin_list(njJ);
            L.k = parse_spin_list(njK);
            L.l = parse_spin_list(njL);
            const RadicalRational v = three_nj(L);
            print_value(g, os, v, value_json_3nj(L, v));
        } else if (ggen->parsed() || gdot->parsed()) {
            const bool as_dot = gdot->parsed() || g.format == "dot";
            const std::string family = gdot->parsed() ? dotFamily : genFamily;
            const int n = gdot->parsed() ? dotN : genN;
            const YutsisGraph gr = make_graph(family, n);
            if (as_dot)
                os << to_dot(gr, family);
            else if (g.format == "json")
                os << to_json(gr).dump(2) << "\n";
            else {
                os << "nodes: " << gr.num_nodes << "\nedges: " << gr.num_edges() << "\n";
                for (const auto& e : gr.edges)
                    os << "  " << e.label << ": " << e.u << " -- " << e.v << "\n";
            }
        } else if (gana->parsed()) {
            const YutsisGraph gr = make_graph(anaFamily, anaN);
            nlohmann::json doc;
            doc["nodes"] = gr.num_nodes;
            doc["edges"] = gr.num_edges();
            doc["cubic"] = gr.is_cubic();
            doc["girth"] = girth(gr);
            const auto ham = hamiltonian_cycle(gr);
            doc["hamiltonian"] = ham.has_value();
            if (ham) {
                nlohmann::json cyc = nlohmann::json::array();
                for (int e : *ham) cyc.push_back(gr.edges[e].label);
                doc["hamiltonian_cycle"] = cyc;
            }
            if (gr.faces) {
                const EmbeddingData emb = euler_characteristic(gr);
                doc["V"] = emb.V;
                doc["E"] = emb.E;
                doc["F"] = emb.F;
                doc["chi"] = emb.chi;
            }
            const auto cut = nontrivial_cut3(gr);
            if (cut) {
                nlohmann::json jc = nlohmann::json::array();
                for (int e : *cut) jc.push_back(gr.edges[e].label);
                doc["cut3"] = jc;
            } else {
                doc["cut3"] = nullptr;
            }
            if (g.format == "json")
                os << doc.dump(2) << "\n";
            else {
                os << "nodes " << gr.num_nodes << ", edges " << gr.num_edges()
                   << ", girth " << doc["girth"] << "\n";
                os << "hamiltonian: " << (ham ? "yes" : "no") << "\n";
                if (gr.faces) os << "chi: " << doc["chi"] << "\n";
                os << "3-edge cut: " << (cut ? doc["cut3"].dump() : std::string("none"))
                   << "\n";
            }
        } else if (vbe->parsed()) {
            SplitMix64 rng(vSeed);
            int zero = 0;
            for (int i = 0; i < vCount; ++i) {
                auto draw = [&] { return Spin(rng.uniform_int(0, vMaxTwice)); };
                const Spin a = draw(), b = draw(), c = draw(), d = draw(), e = draw(),
                           f = draw(), p = draw(), q = draw(), r = draw();
                if (be_residual(a, b, c, d, e, f, p, q, r).is_zero()) ++zero;
            }
            os << zero << "/" << vCount << " residuals exactly zero\n";
            if (zero != vCount) return 1;
        } else if (vrec->parsed()) {
            SplitMix64 rng(vSeed);
            int zero = 0;
            for (int i = 0; i < vCount; ++i) {
                NineJLabels L;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        L.j[r][c] = Spin(r == c ? rng.uniform_int(2, std::max(2, vMaxTwice))
                                               : rng.uniform_int(0, vMaxTwice));
                bool ok = true;
                for (RecursionPair p :
                     {RecursionPair::CD, RecursionPair::CH, RecursionPair::DH})
                    ok = ok && nine_j_recursion_residual(L, p).is_zero();
                if (ok) ++zero;
            }
            os << zero << "/" << vCount
               << " residuals exactly zero (three variable pairs each)\n";
            if (zero != vCount) return 1;
        } else if (vlam->parsed()) {
            SplitMix64 rng(vSeed);
            int zero = 0;
            for (int i = 0; i < vCount; ++i) {
                auto draw = [&] { return Spin(rng.uniform_int(0, vMaxTwice)); };
                LambdaSymmetryArgs A;
                A.lambda = Spin(rng.uniform_int(0, 1) ? 2 : 1);
                A.a = draw();
                A.b = draw();
                A.c = draw();
                A.d = draw();
                A.e = draw();
                A.f = draw();
                A.g = draw();
                A.h = draw();
                A.jj = draw();
                A.a_prime = Spin(std::abs(
                    A.a.twice + (rng.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
                A.f_prime = Spin(std::abs(
                    A.f.twice + (rng.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
                if (lambda_symmetry_residual(A).is_zero()) ++zero;
            }
            os << zero << "/" << vCount << " residuals exactly zero\n";
            if (zero != vCount) return 1;
        } else if (vora->parsed()) {
            long checked = 0, bad = 0;
            const int T = std::min(vMaxTwice, 6);
            for (int a = 0; a <= T; ++a)
                for (int b = 0; b <= T; ++b)
                    for (int c = 0; c <= T; ++c)
                        for (int d = 0; d <= T; ++d)
                            for (int e = 0; e <= T; ++e)
                                for (int f = 0; f <= T; ++f) {
                                    const SixJArgs s =
                                        SixJArgs::from_twice(a, b, c, d, e, f);
                                    ++checked;
                                    if (!(wigner_6j(s) == sixj_by_contraction(s))) ++bad;
                                }
            os << "6j vs four-3j contraction: " << checked << " tuples, " << bad
               << " mismatches\n";
            if (bad) return 1;
        } else if (brun->parsed()) {
            CampaignConfig cfg;
            for (const auto& tok : parse_spin_list(bJs))
                cfg.J_values.push_back(tok.twice / 2);
            for (const auto& tok : parse_spin_list(bJms))
                cfg.jm_twices.push_back(tok.twice);
            if (bFormula == "both")
                cfg.formulas = {AsymFormula::Asym63, AsymFormula::Asym45};
            else
                cfg.formulas = {parse_formula(bFormula)};
            cfg.count = bCount;
            cfg.seed = bSeed;
            cfg.threads = bThreads;
            const CampaignResult result = run_campaign(cfg);
            os << result.csv;
            if (!bGnuplot.empty()) {
                std::ofstream gp(bGnuplot);
                gp << campaign_gnuplot(g.out.empty() ? "campaign.csv" : g.out);
            }
        } else if (bfit->parsed()) {
            std::ifstream in(fIn);
            if (!in) throw ArgumentError("cannot open '" + fIn + "'");
            const int col = fColumn == "rms_dev" ? 5 : fColumn == "rms_mag" ? 6 : 7;
            std::map<std::string, std::vector<std::pair<double, double>>> groups;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line.rfind("formula", 0) == 0)
                    continue;
                std::stringstream ss(line);
                std::vector<std::string> cells;
                std::string cell;
                while (std::getline(ss, cell, ',')) cells.push_back(cell);
                if (cells.size() < 9) continue;
                groups[cells[0] + " jm_twice=" + cells[2]].push_back(
                    {std::stod(cells[1]), std::stod(cells[col])});
            }
            for (const auto& [key, pts] : groups) {
                if (pts.size() < 3) {
                    os << key << ": needs >= 3 points\n";
                    continue;
                }
                os << key << ": " << fColumn << " slope " << scaling_fit(pts) << "\n";
            }
        }
        save_cache();
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const SamplingError& e) {
        std::cerr << "sampling error: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
