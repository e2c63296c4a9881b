#pragma once

// Command-line frontend. Each subcommand maps onto one library call and
// renders either `key=value` text lines or a JSON document
// {"command":..., "config":{...}, "result":...}.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "equisym/acceptance.hpp"
#include "equisym/branching.hpp"
#include "equisym/diagcat.hpp"
#include "equisym/error.hpp"
#include "equisym/homext.hpp"
#include "equisym/kgroup.hpp"
#include "equisym/oracle.hpp"
#include "equisym/partition.hpp"
#include "equisym/symfunc.hpp"

namespace equisym::cli {

using Json = nlohmann::ordered_json;

enum class OutputMode { text, json };

struct Config {
    int maxDegree = kDefaultMaxDegree;
    int oracleRank = 3;
    std::uint64_t sizeBudget = kDefaultSizeBudget;
    std::uint64_t seed = 0;
    OutputMode outputMode = OutputMode::text;
};

enum ExitCode : int { kOk = 0, kUserError = 1, kLimitError = 2, kInternalError = 3 };

inline Json toJson(const mpz_class& n) {
    if (n.fits_slong_p())
        return Json(n.get_si());
    return Json(n.get_str());
}

inline Json toJson(const Partition& lambda) { return Json(lambda.parts()); }

inline Json toJson(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back(Json{{"partition", toJson(lambda)}, {"coeff", toJson(c)}});
    return terms;
}

inline Json toJson(const DiagMorphism& m) {
    Json edges = Json::array();
    for (const auto& [a, b] : m.edges())
        edges.push_back(Json::array({a, b}));
    return Json{{"literal", formatMorphism(m)}, {"source", m.sourceSize()}, {"target", m.targetSize()},
                {"injection", m.injection()},    {"edges", edges},           {"sign", m.sign()}};
}

inline Json toJson(const Config& cfg) {
    return Json{{"maxDegree", cfg.maxDegree}, {"oracleRank", cfg.oracleRank}, {"sizeBudget", cfg.sizeBudget}, {"seed", cfg.seed}};
}

/// What a subcommand produced: text lines and the JSON `result` member.
struct Report {
    std::string text;
    Json result;
    int exitCode = kOk;
};

namespace detail {

inline std::string line(const std::string& key, const std::string& value) { return key + "=" + value + "\n"; }

inline std::string joined(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words)
        out += (out.empty() ? "" : " ") + w;
    return out;
}

inline void requireDegree(int d, const Config& cfg) {
    if (d > cfg.maxDegree)
        throw TruncationError("degree " + std::to_string(d) + " exceeds --max-degree " + std::to_string(cfg.maxDegree));
}

inline Report dimReport(const mpz_class& n) { return {n.get_str() + "\n", Json{{"dim", toJson(n)}}}; }

// `kclass euler` terms start with '+' or '-', which an option parser would
// take for flags; they are split off before parsing.
inline std::vector<std::string> splitEulerTerms(std::vector<std::string>& args) {
    std::vector<std::string> terms;
    if (args.size() < 2 || args[0] != "kclass" || args[1] != "euler")
        return terms;
    static const std::vector<std::string> valued{"--max-degree", "--rank", "--budget", "--seed"};
    std::vector<std::string> kept{args[0], args[1]};
    for (std::size_t i = 2; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a.rfind("--", 0) == 0) {
            kept.push_back(a);
            if (std::find(valued.begin(), valued.end(), a) != valued.end() && i + 1 < args.size())
                kept.push_back(args[++i]);
        } else {
            terms.push_back(a);
        }
    }
    args = std::move(kept);
    return terms;
}

} // namespace detail

/// Runs one command. Exit codes: 0 success, 1 user error, 2 budget or
/// truncation limit, 3 internal consistency failure (including a failed
/// oracle check or selftest criterion).
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    std::vector<std::string> args = argv;
    const auto eulerTerms = detail::splitEulerTerms(args);

    CLI::App app{"Exact symmetric-function, branching and diagram-category computations", "equisym"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false;
    app.add_option("--max-degree", cfg.maxDegree, "Truncation degree for graded series")
        ->envname("EQUISYM_MAX_DEGREE")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--rank", cfg.oracleRank, "Rank n of the finite model (dim V = 2n)")
        ->envname("EQUISYM_ORACLE_RANK")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.sizeBudget, "Largest tensor extent the oracle may build")
        ->envname("EQUISYM_SIZE_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized commands")->envname("EQUISYM_SEED");
    app.add_flag("--json", json, "Emit JSON")->envname("EQUISYM_JSON");

    std::function<Report()> action;
    std::string command;

    // lr LAMBDA MU [--nu NU]
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product s_lambda * s_mu");
    std::string lrLambda, lrMu, lrNu;
    lr->add_option("lambda", lrLambda)->required();
    lr->add_option("mu", lrMu)->required();
    lr->add_option("--nu", lrNu, "Only the coefficient of s_nu");
    lr->callback([&] {
        command = detail::joined({"lr", lrLambda, lrMu});
        action = [&]() -> Report {
            const auto lambda = parsePartition(lrLambda);
            const auto mu = parsePartition(lrMu);
            if (!lrNu.empty()) {
                const auto c = lrCoeff(parsePartition(lrNu), lambda, mu);
                return {c.get_str() + "\n", Json{{"coefficient", toJson(c)}}};
            }
            const auto product = lrMul(lambda, mu);
            return {formatSymFunc(product) + "\n", Json{{"product", toJson(product)}}};
        };
    });

    // pleth F G [--max-deg D]
    auto* pleth = app.add_subcommand("pleth", "Plethysm f[g], truncated");
    std::string plethF, plethG;
    int plethDeg = -1;
    pleth->add_option("f", plethF)->required();
    pleth->add_option("g", plethG)->required();
    pleth->add_option("--max-deg", plethDeg, "Truncation degree (default --max-degree)");
    pleth->callback([&] {
        command = detail::joined({"pleth", plethF, plethG});
        action = [&]() -> Report {
            const int d = plethDeg < 0 ? cfg.maxDegree : plethDeg;
            detail::requireDegree(d, cfg);
            const auto result = plethysm(parseSymFunc(plethF), parseSymFunc(plethG), d);
            return {formatSymFunc(result) + "\n", Json{{"maxDeg", d}, {"plethysm", toJson(result)}}};
        };
    });

    // series sym GEN D | series ext D
    auto* series = app.add_subcommand("series", "Graded series Sym(U) or Lambda^*(V + Lambda^2 V)");
    series->require_subcommand(1);
    auto* seriesSymCmd = series->add_subcommand("sym", "Sym(GEN) with GEN in V, wedge2, sym2, V+wedge2, V+sym2");
    auto* seriesExtCmd = series->add_subcommand("ext", "Exterior powers of V + Lambda^2 V");
    std::string seriesGen;
    int seriesDeg = 0;
    seriesSymCmd->add_option("gen", seriesGen)->required();
    seriesSymCmd->add_option("degree", seriesDeg)->required()->check(CLI::NonNegativeNumber);
    seriesExtCmd->add_option("degree", seriesDeg)->required()->check(CLI::NonNegativeNumber);
    auto seriesAction = [&](bool exterior) {
        command = exterior ? detail::joined({"series", "ext", std::to_string(seriesDeg)})
                           : detail::joined({"series", "sym", seriesGen, std::to_string(seriesDeg)});
        action = [&, exterior]() -> Report {
            detail::requireDegree(seriesDeg, cfg);
            const GradedSeries s = exterior ? seriesExt(seriesDeg) : seriesSym(parseGenerator(seriesGen), seriesDeg);
            Report r;
            Json comps = Json::array();
            for (int d = 0; d <= seriesDeg; ++d) {
                r.text += detail::line("d", std::to_string(d) + " " + formatSymFunc(s.component(d)));
                comps.push_back(Json{{"degree", d}, {"terms", toJson(s.component(d))}});
            }
            r.result = Json{{"grading", exterior ? "homological" : "polynomial"}, {"components", comps}};
            return r;
        };
    };
    seriesSymCmd->callback([&] { seriesAction(false); });
    seriesExtCmd->callback([&] { seriesAction(true); });

    // branch sp|o LAMBDA [--ell]
    auto* branchCmd = app.add_subcommand("branch", "Restriction of V_lambda from GL to Sp or O");
    std::string branchGroup, branchLambda;
    bool branchEll = false;
    branchCmd->add_option("group", branchGroup)->required();
    branchCmd->add_option("lambda", branchLambda)->required();
    branchCmd->add_flag("--ell", branchEll, "Print only the largest row count of a constituent");
    branchCmd->callback([&] {
        command = detail::joined({"branch", branchGroup, branchLambda});
        action = [&]() -> Report {
            const auto result = branch(parseGroup(branchGroup), parsePartition(branchLambda));
            if (branchEll) {
                const int ell = ellOf(result);
                return {std::to_string(ell) + "\n", Json{{"source", toJson(result.source)}, {"ell", ell}}};
            }
            Report r;
            Json constituents = Json::array();
            for (const auto& [mu, m] : result.multiplicities) {
                r.text += "mu=" + formatPartition(mu) + " mult=" + m.get_str() + "\n";
                constituents.push_back(Json{{"mu", toJson(mu)}, {"mult", toJson(m)}});
            }
            r.result = Json{{"source", toJson(result.source)}, {"constituents", constituents}};
            return r;
        };
    });

    // hom sp|h LAMBDA MU
    auto* hom = app.add_subcommand("hom", "dim Hom(V_lambda, V_mu) between injectives of Rep(Sp) or Rep(H)");
    std::string homGroup, homLambda, homMu;
    hom->add_option("group", homGroup)->required();
    hom->add_option("lambda", homLambda)->required();
    hom->add_option("mu", homMu)->required();
    hom->callback([&] {
        command = detail::joined({"hom", homGroup, homLambda, homMu});
        action = [&]() -> Report {
            const auto lambda = parsePartition(homLambda);
            const auto mu = parsePartition(homMu);
            if (homGroup == "sp")
                return detail::dimReport(homSpInj(lambda, mu, cfg.maxDegree));
            if (homGroup == "h")
                return detail::dimReport(homHInj(lambda, mu, cfg.maxDegree));
            throw UserError("hom: unknown group '" + homGroup + "' (expected sp or h)");
        };
    });

    // ext h I LAMBDA MU | ext a-cc I
    auto* ext = app.add_subcommand("ext", "Ext dimensions");
    ext->require_subcommand(1);
    auto* extHCmd = ext->add_subcommand("h", "dim Ext^i_H(S_[lambda] W, S_[mu] W)");
    auto* extACmd = ext->add_subcommand("a-cc", "dim Ext^i_A(C, C)");
    int extDegree = 0;
    std::string extLambda, extMu;
    extHCmd->add_option("i", extDegree)->required()->check(CLI::NonNegativeNumber);
    extHCmd->add_option("lambda", extLambda)->required();
    extHCmd->add_option("mu", extMu)->required();
    extACmd->add_option("i", extDegree)->required()->check(CLI::NonNegativeNumber);
    extHCmd->callback([&] {
        command = detail::joined({"ext", "h", std::to_string(extDegree), extLambda, extMu});
        action = [&] {
            return detail::dimReport(extH(extDegree, parsePartition(extLambda), parsePartition(extMu), cfg.maxDegree));
        };
    });
    extACmd->callback([&] {
        command = detail::joined({"ext", "a-cc", std::to_string(extDegree)});
        action = [&] { return detail::dimReport(extACC(extDegree)); };
    });

    // ccat dim S T | ccat basis S T | ccat homh LAMBDA MU | ccat compose G F | ccat trace S T SIGMA TAU
    auto* ccat = app.add_subcommand("ccat", "The diagram category C");
    ccat->require_subcommand(1);
    auto* ccatDim = ccat->add_subcommand("dim", "dim Hom_C([s], [t])");
    auto* ccatBasis = ccat->add_subcommand("basis", "Basis diagrams of Hom_C([s], [t])");
    auto* ccatHomh = ccat->add_subcommand("homh", "dim Hom_H(V_lambda, V_mu) from the bimodule characters of C");
    auto* ccatCompose = ccat->add_subcommand("compose", "Composite g o f of two morphism literals");
    auto* ccatTrace = ccat->add_subcommand("trace", "Trace of (sigma, tau) on Hom_C([s], [t])");
    int ccatS = 0, ccatT = 0;
    std::string ccatA, ccatB;
    for (auto* sub : {ccatDim, ccatBasis, ccatTrace}) {
        sub->add_option("s", ccatS)->required()->check(CLI::NonNegativeNumber);
        sub->add_option("t", ccatT)->required()->check(CLI::NonNegativeNumber);
    }
    ccatTrace->add_option("sigma", ccatA, "Cycle type in S_s")->required();
    ccatTrace->add_option("tau", ccatB, "Cycle type in S_t")->required();
    ccatHomh->add_option("lambda", ccatA)->required();
    ccatHomh->add_option("mu", ccatB)->required();
    ccatCompose->add_option("g", ccatA)->required();
    ccatCompose->add_option("f", ccatB)->required();
    ccatDim->callback([&] {
        command = detail::joined({"ccat", "dim", std::to_string(ccatS), std::to_string(ccatT)});
        action = [&] { return detail::dimReport(homDim(ccatS, ccatT)); };
    });
    ccatBasis->callback([&] {
        command = detail::joined({"ccat", "basis", std::to_string(ccatS), std::to_string(ccatT)});
        action = [&]() -> Report {
            const auto basis = homBasis(ccatS, ccatT);
            Report r;
            Json list = Json::array();
            for (const auto& m : basis) {
                r.text += formatMorphism(m) + "\n";
                list.push_back(formatMorphism(m));
            }
            r.result = Json{{"dim", basis.size()}, {"basis", list}};
            return r;
        };
    });
    ccatHomh->callback([&] {
        command = detail::joined({"ccat", "homh", ccatA, ccatB});
        action = [&] { return detail::dimReport(homHViaC(parsePartition(ccatA), parsePartition(ccatB))); };
    });
    ccatCompose->callback([&] {
        command = detail::joined({"ccat", "compose", ccatA, ccatB});
        action = [&]() -> Report {
            const auto composite = compose(parseMorphism(ccatA), parseMorphism(ccatB));
            return {formatMorphism(composite) + "\n", toJson(composite)};
        };
    });
    ccatTrace->callback([&] {
        command = detail::joined({"ccat", "trace", std::to_string(ccatS), std::to_string(ccatT), ccatA, ccatB});
        action = [&]() -> Report {
            const auto trace = bimoduleTrace(ccatS, ccatT, parsePartition(ccatA), parsePartition(ccatB));
            return {std::to_string(trace) + "\n", Json{{"trace", trace}}};
        };
    });

    // oracle traceless|schur|functoriality|homrank|surjective|lie
    auto* oracle = app.add_subcommand("oracle", "Finite-rank linear-algebra checks on V = C^{2n}");
    oracle->require_subcommand(1);
    auto* orTraceless = oracle->add_subcommand("traceless", "Dimension of the traceless tensors of degree d");
    auto* orSchur = oracle->add_subcommand("schur", "Young symmetrizer image intersected with traceless tensors");
    auto* orFunctor = oracle->add_subcommand("functoriality", "realize(g o f) = realize(f) realize(g) on random pairs");
    auto* orHomRank = oracle->add_subcommand("homrank", "Rank of the realized Hom_C([s], [t]) against its dimension");
    auto* orSurj = oracle->add_subcommand("surjective", "Whether the contractions out of the degree-d tensors span");
    auto* orLie = oracle->add_subcommand("lie", "The splitting sp = k + h");
    std::string orSpace = "V", orLambda;
    int orDeg = 0, orTrials = 100, orMaxSize = 4, orS = 0, orT = 0;
    bool orRandom = false;
    for (auto* sub : {orTraceless, orSchur})
        sub->add_option("--space", orSpace, "V or W = ker(xi)")->capture_default_str();
    orTraceless->add_option("--deg", orDeg)->required()->check(CLI::NonNegativeNumber);
    orSurj->add_option("--deg", orDeg)->required()->check(CLI::NonNegativeNumber);
    orSchur->add_option("lambda", orLambda)->required();
    orFunctor->add_option("--trials", orTrials)->capture_default_str()->check(CLI::NonNegativeNumber);
    orFunctor->add_option("--max-size", orMaxSize)->capture_default_str()->check(CLI::NonNegativeNumber);
    orHomRank->add_option("s", orS)->required()->check(CLI::NonNegativeNumber);
    orHomRank->add_option("t", orT)->required()->check(CLI::NonNegativeNumber);
    orLie->add_flag("--random", orRandom, "Also split one seeded random element");

    orTraceless->callback([&] {
        command = "oracle traceless --space " + orSpace + " --deg " + std::to_string(orDeg);
        action = [&]() -> Report {
            const FiniteModel model(cfg.oracleRank);
            const Space space = parseSpace(orSpace);
            const auto dim = tracelessTensors(model, space, orDeg, cfg.sizeBudget).cols();
            return {detail::line("dimension", std::to_string(dim)),
                    Json{{"rank", cfg.oracleRank}, {"space", orSpace}, {"degree", orDeg}, {"dimension", dim}}};
        };
    });
    orSchur->callback([&] {
        command = "oracle schur " + orLambda + " --space " + orSpace;
        action = [&]() -> Report {
            const FiniteModel model(cfg.oracleRank);
            const auto lambda = parsePartition(orLambda);
            const auto dim = schurIntersect(model, lambda, parseSpace(orSpace), cfg.sizeBudget);
            return {detail::line("dimension", std::to_string(dim)),
                    Json{{"rank", cfg.oracleRank}, {"space", orSpace}, {"lambda", toJson(lambda)}, {"dimension", dim}}};
        };
    });
    orFunctor->callback([&] {
        command = "oracle functoriality --trials " + std::to_string(orTrials) + " --max-size " + std::to_string(orMaxSize);
        action = [&]() -> Report {
            const FiniteModel model(cfg.oracleRank);
            std::mt19937_64 rng(cfg.seed);
            int passed = 0;
            Json failures = Json::array();
            for (int k = 0; k < orTrials; ++k) {
                const auto [g, f] = randomComposablePair(orMaxSize, rng);
                if (checkFunctoriality(model, g, f, cfg.sizeBudget))
                    ++passed;
                else
                    failures.push_back(Json{{"g", formatMorphism(g)}, {"f", formatMorphism(f)}});
            }
            const bool pass = passed == orTrials;
            return {detail::line("trials", std::to_string(orTrials)) + detail::line("passed", std::to_string(passed)),
                    Json{{"rank", cfg.oracleRank},
                         {"seed", cfg.seed},
                         {"trials", orTrials},
                         {"passed", passed},
                         {"failures", failures},
                         {"pass", pass}},
                    pass ? kOk : kInternalError};
        };
    });
    orHomRank->callback([&] {
        command = detail::joined({"oracle", "homrank", std::to_string(orS), std::to_string(orT)});
        action = [&]() -> Report {
            const auto rank = realizedHomRank(FiniteModel(cfg.oracleRank), orS, orT, cfg.sizeBudget);
            const auto dim = homDim(orS, orT);
            return {detail::line("rank", std::to_string(rank)) + detail::line("homdim", dim.get_str()),
                    Json{{"rank", cfg.oracleRank}, {"realizedRank", rank}, {"homDim", toJson(dim)},
                         {"faithful", mpz_class(static_cast<unsigned long>(rank)) == dim}}};
        };
    });
    orSurj->callback([&] {
        command = "oracle surjective --deg " + std::to_string(orDeg);
        action = [&]() -> Report {
            const bool s = contractionSurjective(FiniteModel(cfg.oracleRank), orDeg, cfg.sizeBudget);
            return {detail::line("surjective", s ? "true" : "false"),
                    Json{{"rank", cfg.oracleRank}, {"degree", orDeg}, {"surjective", s}}};
        };
    });
    orLie->callback([&] {
        command = orRandom ? "oracle lie --random" : "oracle lie";
        action = [&]() -> Report {
            const int n = cfg.oracleRank;
            const auto sp = symplecticLieBasis(n);
            const auto k = borelLieBasis(n);
            const auto h = stabilizerLieBasis(n);
            auto joint = k;
            joint.insert(joint.end(), h.begin(), h.end());
            const bool directSum = matrixFamilyRank(joint) == sp.size() && k.size() + h.size() == sp.size();
            Report r;
            r.text = detail::line("dim_sp", std::to_string(sp.size())) + detail::line("dim_k", std::to_string(k.size())) +
                     detail::line("dim_h", std::to_string(h.size())) + detail::line("direct_sum", directSum ? "true" : "false");
            r.result = Json{{"rank", n},
                            {"dimSp", sp.size()},
                            {"dimK", k.size()},
                            {"dimH", h.size()},
                            {"directSum", directSum}};
            bool pass = directSum;
            if (orRandom) {
                std::mt19937_64 rng(cfg.seed);
                const auto x = randomSymplecticLie(n, rng);
                const auto [y, z] = lieDecompose(n, x);
                const bool reconstructs = z - y == x;
                r.text += detail::line("reconstructs", reconstructs ? "true" : "false");
                r.result["seed"] = cfg.seed;
                r.result["reconstructs"] = reconstructs;
                pass = pass && reconstructs;
            }
            r.result["pass"] = pass;
            r.exitCode = pass ? kOk : kInternalError;
            return r;
        };
    });

    // kclass torsion|free LAMBDA | kclass euler TERMS...
    auto* kclass = app.add_subcommand("kclass", "Classes in K(A) over the basis [C], [A]");
    kclass->require_subcommand(1);
    auto* kTorsion = kclass->add_subcommand("torsion", "[V_lambda] for the torsion module V_lambda");
    auto* kFree = kclass->add_subcommand("free", "[V_lambda (x) A]");
    auto* kEuler = kclass->add_subcommand("euler", "Signed sum of terms +free:LAMBDA / -torsion:LAMBDA");
    std::string kLambda;
    kTorsion->add_option("lambda", kLambda)->required();
    kFree->add_option("lambda", kLambda)->required();
    auto kReport = [](const KClassA& c) -> Report {
        return {detail::line("C", formatSymFunc(c.torsionPart)) + detail::line("A", formatSymFunc(c.freePart)),
                Json{{"C", toJson(c.torsionPart)}, {"A", toJson(c.freePart)}}};
    };
    kTorsion->callback([&] {
        command = "kclass torsion " + kLambda;
        action = [&] { return kReport(classTorsion(SymFunc::schur(parsePartition(kLambda)))); };
    });
    kFree->callback([&] {
        command = "kclass free " + kLambda;
        action = [&] { return kReport(classFree(SymFunc::schur(parsePartition(kLambda)))); };
    });
    kEuler->callback([&] {
        std::vector<std::string> words{"kclass", "euler"};
        words.insert(words.end(), eulerTerms.begin(), eulerTerms.end());
        command = detail::joined(words);
        action = [&]() -> Report {
            std::vector<SignedClass> terms;
            for (const auto& t : eulerTerms)
                terms.push_back(parseSignedClass(t));
            return kReport(eulerOfComplex(terms));
        };
    });

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->callback([&] {
        command = "selftest";
        action = []() -> Report {
            Report r;
            Json criteria = Json::array();
            bool all = true;
            for (const auto& c : acceptance::runAll()) {
                r.text += acceptance::formatResult(c) + "\n";
                criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all = all && c.pass;
            }
            r.result = Json{{"criteria", criteria}, {"pass", all}};
            r.exitCode = all ? kOk : kInternalError;
            return r;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        const bool unknown = !args.empty() && args[0].rfind("-", 0) != 0 && app.get_subcommand_no_throw(args[0]) == nullptr;
        if (unknown)
            err << "error: unknown subcommand '" << args[0] << "'\n\n" << app.help();
        else
            err << "error: " << e.what() << "\n\n" << app.help();
        return kUserError;
    }
    cfg.outputMode = json ? OutputMode::json : OutputMode::text;
    if (!action) {
        err << app.help();
        return kUserError;
    }

    try {
        const Report report = action();
        if (cfg.outputMode == OutputMode::json)
            out << Json{{"command", command}, {"config", toJson(cfg)}, {"result", report.result}}.dump() << "\n";
        else
            out << report.text;
        return report.exitCode;
    } catch (const UserError& e) {
        err << "error: " << e.what() << "\n";
        return kUserError;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kLimitError;
    } catch (const TruncationError& e) {
        err << "truncation: " << e.what() << "\n";
        return kLimitError;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace equisym::cli
