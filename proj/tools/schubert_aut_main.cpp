// schubert-aut -- command-line front door for the root-system/Weyl engine.
//
// Verbs: classify, transporter, negator, witness-verify, witness-search,
// lemmas, demazure, verify-all. JSON is the machine interface; --text renders
// the same data for reading. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 enumeration cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubaut/classify.hpp"
#include "schubaut/constructions.hpp"
#include "schubaut/demazure.hpp"
#include "schubaut/errors.hpp"
#include "schubaut/extremal.hpp"
#include "schubaut/json_io.hpp"
#include "schubaut/schubert.hpp"
#include "schubaut/verify.hpp"

namespace {

using nlohmann::json;
using namespace schubaut;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
    std::string type;
    int index = 0;
    int target = 0;
    std::string ambient;
    std::string word;
    std::string module;
    std::string suite = "all";
    std::size_t cap = kDefaultEnumerationCap;
    bool deep = false;
    int rank = 0;  // 0 = full default sweep for D suites
    bool text = false;
    bool list = false;
};

void emit(const json& payload, bool text_mode, const std::string& rendered) {
    if (text_mode)
        std::cout << rendered;
    else
        std::cout << payload.dump(2) << "\n";
}

int run_classify(const Options& opt) {
    const RootSystem rs = RootSystem::build(opt.type);
    json arr = json::array();
    std::string text;
    for (const MinusculeReport& rep : classify_all(rs)) {
        arr.push_back(jsonio::to_json(rs, rep));
        text += "omega_" + std::to_string(rep.index) + ": " +
                (rep.minuscule ? "minuscule" : "not minuscule") + ", " +
                (rep.cominuscule ? "cominuscule" : "not cominuscule") +
                ", w0J image " + jsonio::to_json(rep.w0J_image).dump() + "\n";
    }
    emit(arr, opt.text, text);
    return kExitOk;
}

int run_transporter(const Options& opt, bool negate) {
    const RootSystem rs = RootSystem::build(opt.type);
    const int index = opt.index != 0 ? opt.index : opt.target;
    if (index == 0) throw CLI::ValidationError("an <index> argument is required");
    const TransporterResult res =
        negate ? minimal_negator(rs, index) : minimal_transporter(rs, rs.simple_root(index));
    std::string text = std::string(negate ? "negator" : "transporter") + " of alpha_" +
                       std::to_string(index) + ": length " + std::to_string(res.length) +
                       (res.unique ? " (unique)" : " (NOT unique)") + ", word " +
                       json(*res.element.cached_word()).dump() + "\n";
    emit(jsonio::to_json(rs, res), opt.text, text);
    return kExitOk;
}

int run_witness_verify(const Options& opt) {
    const RootSystem rs = RootSystem::build(opt.type);
    if (opt.target == 0) throw CLI::ValidationError("--target is required");
    const Parabolic J(jsonio::parse_int_list(opt.ambient));
    const WeylElement w = from_word(rs, jsonio::parse_int_list(opt.word));
    const WitnessReport rep = verify_witness(rs, opt.target, J, w);
    std::string text = std::string("verdict: ") + (rep.verdict ? "true" : "false") + "\n";
    for (const std::string& f : rep.failed) text += "  failed: " + f + "\n";
    emit(jsonio::to_json(rs, rep), opt.text, text);
    return rep.verdict ? kExitOk : kExitVerificationFailure;
}

int run_witness_search(const Options& opt) {
    const RootSystem rs = RootSystem::build(opt.type);
    if (opt.target == 0) throw CLI::ValidationError("--target is required");
    const auto found = search_witnesses(rs, opt.target, opt.cap);
    json arr = json::array();
    std::string text = std::to_string(found.size()) + " witness(es) for target " +
                       std::to_string(opt.target) + "\n";
    for (const auto& [J, w] : found) {
        arr.push_back(json{{"ambient", jsonio::to_json(J)}, {"element", jsonio::to_json(rs, w)}});
        text += "  J=" + J.to_string() + " word " +
                json(w.cached_word() ? *w.cached_word() : reduced_word(rs, w)).dump() + "\n";
    }
    emit(arr, opt.text, text);
    return kExitOk;
}

int run_lemmas(const Options& opt) {
    if (opt.list) {
        json arr = json::array();
        std::string text;
        for (const std::string& id : lemma_suite_ids()) {
            arr.push_back(id);
            text += id + "\n";
        }
        emit(arr, opt.text, text);
        return kExitOk;
    }
    std::vector<LemmaSuiteResult> results;
    if (opt.suite == "all") {
        results = run_all_lemma_suites(opt.rank == 0 ? 10 : opt.rank);
    } else if (opt.suite.rfind("D.", 0) == 0 && opt.rank == 0) {
        for (int n = 4; n <= 10; ++n) {
            LemmaSuiteResult r = verify_lemma_suite(opt.suite, n);
            r.suite_id += "@D" + std::to_string(n);
            results.push_back(std::move(r));
        }
    } else {
        results.push_back(verify_lemma_suite(opt.suite, opt.rank == 0 ? 4 : opt.rank));
    }
    json arr = json::array();
    std::string text;
    bool all_pass = true;
    for (const LemmaSuiteResult& r : results) {
        arr.push_back(jsonio::to_json(r));
        all_pass = all_pass && r.all_pass;
        text += r.suite_id + ": " + (r.all_pass ? "all pass" : "FAILURES") + " (" +
                std::to_string(r.checks.size()) + " checks)\n";
        for (const LemmaCheck& c : r.checks)
            if (!c.pass)
                text += "  FAIL " + c.description + ": expected " + c.expected + ", computed " +
                        c.computed + "\n";
        for (const std::string& note : r.notes) text += "  note: " + note + "\n";
    }
    emit(arr, opt.text, text);
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_demazure(const Options& opt) {
    const RootSystem rs = RootSystem::build(opt.type);
    const Parabolic J(jsonio::parse_int_list(opt.module));
    const Character chi =
        demazure_apply(rs, jsonio::parse_int_list(opt.word), module_character(rs, J));
    std::string text = "dimension " + std::to_string(chi.dimension()) + "\n";
    for (const auto& [w, m] : chi.terms())
        text += "  weight " + json(w.fw).dump() + " x " + std::to_string(m) + "\n";
    emit(jsonio::to_json(chi), opt.text, text);
    return kExitOk;
}

int run_verify_all(const Options& opt) {
    VerifyOptions vopt;
    vopt.deep = opt.deep;
    vopt.cap = opt.cap;
    vopt.dn_max = opt.rank == 0 ? 10 : opt.rank;
    json arr = json::array();
    std::string text;
    bool all = true;
    for (const CheckResult& r : verify_all(vopt)) {
        all = all && r.pass;
        arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"ms", r.ms}});
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", r.ms);
        text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + " -- " + r.detail + " [" +
                buf + " ms]\n";
    }
    emit(arr, opt.text, text);
    return all ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root-system / Weyl-group engine for Schubert-variety "
                 "automorphism verdicts"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_type) {
        if (with_type) sub->add_option("type", opt.type, "root system, e.g. E6, D5, B2")->required();
        sub->add_flag("--text", opt.text, "human-readable output instead of JSON");
        sub->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
        return sub;
    };

    auto* classify = add_common(app.add_subcommand("classify", "minuscule/cominuscule report"), true);
    auto* transporter =
        add_common(app.add_subcommand("transporter", "minimal element sending alpha_i to the "
                                                     "highest root"), true);
    transporter->add_option("index", opt.index, "simple index");
    transporter->add_option("--target", opt.target, "simple index (alternative spelling)");
    auto* negator =
        add_common(app.add_subcommand("negator", "minimal element sending the highest root to "
                                                 "-alpha_i"), true);
    negator->add_option("index", opt.index, "simple index");
    negator->add_option("--target", opt.target, "simple index (alternative spelling)");
    auto* wverify = add_common(app.add_subcommand("witness-verify", "stabilizer/faithfulness "
                                                                    "verdict for one element"), true);
    wverify->add_option("--target", opt.target, "simple index whose parabolic must be realised");
    wverify->add_option("--ambient", opt.ambient, "ambient parabolic subset J, e.g. 3 or 2,4");
    wverify->add_option("--word", opt.word, "element as a word in simple reflections, e.g. 2,4,5");
    auto* wsearch = add_common(app.add_subcommand("witness-search", "exhaustive witness search "
                                                                    "over all nonempty J"), true);
    wsearch->add_option("--target", opt.target, "simple index whose parabolic must be realised");
    wsearch->add_option("--cap", opt.cap, "coset enumeration bound");
    auto* lemmas = add_common(app.add_subcommand("lemmas", "root-image identity suites"), false);
    lemmas->add_option("suite", opt.suite, "suite id or 'all'");
    lemmas->add_flag("--list", opt.list, "list registered suite ids");
    lemmas->add_option("--rank", opt.rank, "rank for D suites (default: sweep 4..10)");
    auto* demazure = add_common(app.add_subcommand("demazure", "apply the Demazure operator of a "
                                                               "reduced word to char(g/p_J)"), true);
    demazure->add_option("--word", opt.word, "reduced word, e.g. 2,1")->required();
    demazure->add_option("--module", opt.module, "Levi subset J (empty for the full Borel)");
    auto* verify = add_common(app.add_subcommand("verify-all", "run the whole verification "
                                                               "pipeline"), false);
    verify->add_flag("--deep", opt.deep, "include the exhaustive D5/E6 witness oracle");
    verify->add_option("--cap", opt.cap, "coset enumeration bound");
    verify->add_option("--rank", opt.rank, "upper rank of the D_n sweep (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(transporter)) return run_transporter(opt, /*negate=*/false);
        if (app.got_subcommand(negator)) return run_transporter(opt, /*negate=*/true);
        if (app.got_subcommand(wverify)) return run_witness_verify(opt);
        if (app.got_subcommand(wsearch)) return run_witness_search(opt);
        if (app.got_subcommand(lemmas)) return run_lemmas(opt);
        if (app.got_subcommand(demazure)) return run_demazure(opt);
        if (app.got_subcommand(verify)) return run_verify_all(opt);
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
