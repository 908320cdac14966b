#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cncode/boolean_function.hpp"
#include "cncode/bounds.hpp"
#include "cncode/constructions.hpp"
#include "cncode/errors.hpp"
#include "cncode/gf2.hpp"
#include "cncode/metric.hpp"
#include "cncode/rational.hpp"
#include "cncode/word.hpp"

namespace {

// Invocation-syntax problems exit 2; domain errors from the library exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cncode::Ratio parse_ratio_arg(const std::string& text) {
    try {
        return cncode::Ratio::parse(text);
    } catch (const cncode::ParameterError&) {
        throw UsageError("'" + text + "' is not a rational; write a/b or a bare integer");
    }
}

std::vector<cncode::Ratio> parse_r_list(const std::vector<std::string>& texts) {
    std::vector<cncode::Ratio> rs;
    rs.reserve(texts.size());
    for (const std::string& t : texts)
        rs.push_back(parse_ratio_arg(t));
    return rs;
}

struct ConstructArgs {
    std::string name;
    int t = 0;
    int m = 0;
    std::string anf;
    int epsilon = -1;
    std::string output;
};

cncode::ConstructionRequest to_request(const std::string& name, int t, int m,
                                       const std::string& anf, int epsilon) {
    cncode::ConstructionRequest req;
    req.id = name;
    if (name == "hadamard") {
        req.m = t > 0 ? t : m;
        if (req.m == 0) throw UsageError("hadamard needs --t");
    } else {
        if (t > 0) throw UsageError("--t applies only to hadamard; use --m");
        req.m = m;
        if (req.m == 0) throw UsageError("construction '" + name + "' needs --m");
    }
    if (!anf.empty()) req.anf = anf;
    req.epsilon = epsilon;
    return req;
}

void run_construct(const ConstructArgs& args) {
    cncode::BuiltConstruction built =
        cncode::build_construction(to_request(args.name, args.t, args.m, args.anf, args.epsilon));
    cncode::write_code_file(args.output, built.code);
    std::string meta = cncode::metadata_json(built);
    std::ofstream meta_out(args.output + ".meta.json");
    if (!meta_out)
        throw cncode::ParameterError("cannot open '" + args.output + ".meta.json' for writing");
    meta_out << meta;
    std::cout << meta;
}

void run_analyze(const std::string& file, const std::vector<std::string>& r_texts, bool json) {
    std::vector<cncode::Ratio> rs = parse_r_list(r_texts);
    cncode::Code code = cncode::read_code_file(file);
    cncode::DiscrepancyProfile prof = cncode::profile(code);
    cncode::Ratio d_H = prof.evaluate(cncode::Ratio(1));

    if (json) {
        nlohmann::json j;
        j["n"] = code.length();
        j["K"] = code.size();
        j["d_H"] = d_H.num().get_ui();
        nlohmann::json envelope = nlohmann::json::array();
        for (const cncode::DiscrepancyPair& p : prof.pairs)
            envelope.push_back({p.d10, p.d01});
        j["profile"] = envelope;
        nlohmann::json deltas = nlohmann::json::object();
        for (const cncode::Ratio& r : rs)
            deltas[r.str()] = prof.evaluate(r).str();
        j["delta_r"] = deltas;
        std::cout << j.dump(2) << "\n";
        return;
    }

    std::cout << "n = " << code.length() << "\n";
    std::cout << "K = " << code.size() << "\n";
    std::cout << "d_H = " << d_H.str() << "\n";
    std::cout << "profile =";
    for (const cncode::DiscrepancyPair& p : prof.pairs)
        std::cout << " (" << p.d10 << "," << p.d01 << ")";
    std::cout << "\n";
    for (const cncode::Ratio& r : rs)
        std::cout << "delta[" << r.str() << "] = " << prof.evaluate(r).str() << "\n";
}

void print_bound_line(const char* name, const cncode::BoundStatus& s) {
    std::cout << name << ": ";
    if (!s.applicable) {
        std::cout << "not applicable\n";
        return;
    }
    std::cout << "rhs = " << s.rhs.str() << ", meets = " << (s.meets ? "yes" : "no")
              << ", slack = " << s.slack.str() << "\n";
}

void run_bounds(const std::string& file, const std::string& r_text, bool json) {
    cncode::Ratio r = parse_ratio_arg(r_text);
    cncode::Code code = cncode::read_code_file(file);
    cncode::OptimalityReport rep = cncode::classify_optimality(code, r);

    if (json) {
        std::cout << cncode::to_json(rep);
        return;
    }

    std::cout << "n = " << rep.n << ", K = " << rep.K.get_str() << ", d_H = " << rep.d_H
              << "\n";
    std::cout << "r = " << rep.r.str() << ", delta_r = " << rep.delta.str() << "\n";
    print_bound_line("singleton", rep.singleton.at_delta);
    print_bound_line("hamming", rep.hamming.at_delta);
    print_bound_line("plotkin", rep.plotkin.at_delta);
    auto verdict = [](const cncode::BoundOptimality& o) {
        return o.reaches_via_hamming ? "yes" : "no";
    };
    auto agreement = [](const cncode::BoundOptimality& o) { return o.agrees ? "yes" : "no"; };
    std::cout << "reaches via d_H + threshold: singleton = " << verdict(rep.singleton)
              << ", hamming = " << verdict(rep.hamming) << ", plotkin = " << verdict(rep.plotkin)
              << "\n";
    std::cout << "direct/threshold agreement: singleton = " << agreement(rep.singleton)
              << ", hamming = " << agreement(rep.hamming)
              << ", plotkin = " << agreement(rep.plotkin) << "\n";
}

void run_walsh(const std::string& anf, const std::string& tt, int m, bool json) {
    std::optional<cncode::BooleanFunction> f;
    if (!tt.empty()) {
        f = cncode::BooleanFunction::parse_table_hex(tt);
    } else if (!anf.empty()) {
        if (m == 0) throw UsageError("--anf needs --m");
        f = cncode::BooleanFunction::parse_anf(anf, m);
    } else {
        throw UsageError("walsh needs --anf with --m, or --tt");
    }

    cncode::WalshSpectrum spec = cncode::walsh(*f);
    cncode::BentStatus bent = cncode::is_bent(*f);
    std::size_t support_size = cncode::support(*f).size();

    if (json) {
        nlohmann::json j;
        j["m"] = f->vars();
        j["spectrum"] = spec.values;
        j["bent"] = bent.bent;
        j["epsilon"] = bent.bent ? nlohmann::json(bent.epsilon) : nlohmann::json(nullptr);
        j["support_size"] = support_size;
        std::cout << j.dump(2) << "\n";
        return;
    }

    std::cout << "m = " << f->vars() << "\n";
    std::cout << "spectrum =";
    for (std::int32_t w : spec.values) std::cout << " " << w;
    std::cout << "\n";
    std::cout << "bent = " << (bent.bent ? "yes" : "no") << "\n";
    if (bent.bent) std::cout << "epsilon = " << (bent.epsilon > 0 ? "+1" : "-1") << "\n";
    std::cout << "support_size = " << support_size << "\n";
}

void run_verify(const std::string& name, int t, int m, const std::string& anf, int epsilon,
                const std::vector<std::string>& r_texts) {
    std::vector<cncode::Ratio> rs = parse_r_list(r_texts);
    cncode::VerificationReport rep =
        cncode::verify_construction(to_request(name, t, m, anf, epsilon), rs);
    std::cout << cncode::to_json(rep);
}

void run_channel_r(double p, double q) {
    double r = cncode::channel_r({p, q});
    std::printf("%.12f\n", r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial neural code toolkit for the asymmetric discrepancy metric"};
    app.require_subcommand(1);

    ConstructArgs cons;
    CLI::App* construct = app.add_subcommand(
        "construct", "Build a code and write it with its metadata");
    construct->add_option("construction", cons.name,
                          "hadamard | bent-translate | bent-support | kerdock")
        ->required();
    construct->add_option("--t", cons.t, "Hadamard order exponent");
    construct->add_option("--m", cons.m, "number of variables");
    CLI::Option* cons_anf = construct->add_option("--anf", cons.anf, "bent function, ANF");
    construct->add_option("--epsilon", cons.epsilon, "default bent input sign")
        ->check(CLI::IsMember({-1, 1}))
        ->excludes(cons_anf);
    construct->add_option("-o,--output", cons.output, "code file to write")->required();

    std::string analyze_file;
    std::vector<std::string> analyze_rs;
    bool analyze_json = false;
    CLI::App* analyze = app.add_subcommand("analyze", "Profile a code file");
    analyze->add_option("file", analyze_file, "code file")->required();
    analyze->add_option("--r", analyze_rs, "metric parameter, rational a/b")->required();
    analyze->add_flag("--json", analyze_json, "JSON output");

    std::string bounds_file, bounds_r;
    bool bounds_json = false;
    CLI::App* bounds = app.add_subcommand("bounds", "Bound and optimality report");
    bounds->add_option("file", bounds_file, "code file")->required();
    bounds->add_option("--r", bounds_r, "metric parameter, rational a/b")->required();
    bounds->add_flag("--json", bounds_json, "JSON output");

    std::string walsh_anf, walsh_tt;
    int walsh_m = 0;
    bool walsh_json = false;
    CLI::App* walsh_cmd = app.add_subcommand("walsh", "Walsh spectrum and bentness");
    walsh_cmd->add_option("--anf", walsh_anf, "function in ANF");
    walsh_cmd->add_option("--m", walsh_m, "number of variables");
    walsh_cmd->add_option("--tt", walsh_tt, "truth table, m=<int>;tt=<hex>");
    walsh_cmd->add_flag("--json", walsh_json, "JSON output");

    std::string verify_name, verify_anf;
    int verify_t = 0, verify_m = 0, verify_eps = -1;
    std::vector<std::string> verify_rs;
    CLI::App* verify = app.add_subcommand(
        "verify", "Build a construction and verify predictions against brute force");
    verify->add_option("construction", verify_name,
                       "hadamard | construction-a | construction-b | construction-c")
        ->required();
    verify->add_option("--t", verify_t, "Hadamard order exponent");
    verify->add_option("--m", verify_m, "number of variables");
    CLI::Option* verify_anf_opt = verify->add_option("--anf", verify_anf, "bent function, ANF");
    verify->add_option("--epsilon", verify_eps, "default bent input sign")
        ->check(CLI::IsMember({-1, 1}))
        ->excludes(verify_anf_opt);
    verify->add_option("--r", verify_rs, "metric parameter, rational a/b")->required();

    double chan_p = 0, chan_q = 0;
    CLI::App* chan = app.add_subcommand("channel-r", "Metric parameter of a channel");
    chan->add_option("--p", chan_p, "P(1 received as 0)")->required();
    chan->add_option("--q", chan_q, "P(0 received as 1)")->required();

    try {
        app.parse(argc, argv);
        if (construct->parsed())
            run_construct(cons);
        else if (analyze->parsed())
            run_analyze(analyze_file, analyze_rs, analyze_json);
        else if (bounds->parsed())
            run_bounds(bounds_file, bounds_r, bounds_json);
        else if (walsh_cmd->parsed())
            run_walsh(walsh_anf, walsh_tt, walsh_m, walsh_json);
        else if (verify->parsed())
            run_verify(verify_name, verify_t, verify_m, verify_anf, verify_eps, verify_rs);
        else if (chan->parsed())
            run_channel_r(chan_p, chan_q);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
