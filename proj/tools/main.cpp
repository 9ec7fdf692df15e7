#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "runoff/io.hpp"
#include "runoff/repro.hpp"
#include "runoff/solvers.hpp"

namespace {

using namespace runoff;

std::string names_line(const std::vector<int>& ids, const Election& election) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += " ";
        out += election.candidates[ids[i]].name;
    }
    return out;
}

int resolve_candidate(const Election& election, const std::string& name) {
    const int id = election.candidate_by_name(name);
    if (id < 0) throw std::invalid_argument("no candidate named '" + name + "'");
    return id;
}

std::vector<long long> parse_manipulator_spec(const std::string& spec) {
    const auto parse_int = [&](const std::string& s, long long least) {
        try {
            size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size() || v < least) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad manipulator spec '" + spec + "'");
        }
    };
    if (spec.rfind("count=", 0) == 0)
        return std::vector<long long>(static_cast<size_t>(parse_int(spec.substr(6), 0)), 1);
    if (spec.rfind("weights=", 0) == 0) {
        std::vector<long long> weights;
        std::string item;
        std::istringstream in(spec.substr(8));
        while (std::getline(in, item, ',')) weights.push_back(parse_int(item, 1));
        if (weights.empty()) throw std::invalid_argument("empty weights list in '" + spec + "'");
        return weights;
    }
    throw std::invalid_argument("manipulator spec must be count=K or weights=w1,w2,...");
}

Strategy parse_strategy(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "greedy") return Strategy::Greedy;
    if (name == "exhaustive") return Strategy::Exhaustive;
    if (name == "bucket") return Strategy::Bucket;
    if (name == "fastpath") return Strategy::Fastpath;
    throw std::invalid_argument("unknown strategy: " + name);
}

struct WinnersArgs {
    std::string election_file, protocol = "plurality", mode = "runoff";
    bool always_runoff = false;
};

int cmd_winners(const WinnersArgs& args) {
    const Election election = load_election(args.election_file);
    const auto protocol = parse_protocol_tag(args.protocol);
    const Mode mode = parse_mode_tag(args.mode);
    const auto semantics =
        args.always_runoff ? ThenSemantics::OneWinnerRunoff : ThenSemantics::DecisiveStop;
    const auto result = run_two_round(election, protocol, {}, mode, semantics);
    std::cout << "initial winners: " << names_line(result.initial_winners, election) << "\n";
    std::cout << "runoff held: " << (result.runoff_held ? "yes" : "no") << "\n";
    std::cout << "overall winners: " << names_line(result.overall_winners, election) << "\n";
    return 0;
}

struct ManipulateArgs {
    std::string election_file, protocol = "plurality", mode = "runoff";
    std::string preferred, manipulators, strategy = "auto";
    std::string certificate_out;
    bool always_runoff = false;
};

int cmd_manipulate(const ManipulateArgs& args) {
    const Election election = load_election(args.election_file);
    ManipulationInstance instance{election, parse_protocol_tag(args.protocol),
                                  parse_manipulator_spec(args.manipulators),
                                  resolve_candidate(election, args.preferred),
                                  parse_mode_tag(args.mode)};
    const auto semantics =
        args.always_runoff ? ThenSemantics::OneWinnerRunoff : ThenSemantics::DecisiveStop;
    const auto result = solve(instance, semantics, parse_strategy(args.strategy));
    switch (result.verdict) {
        case Verdict::Manipulable: {
            const auto check = verify_certificate(instance, *result.certificate, semantics);
            if (!check.success())
                throw std::logic_error("solver success did not re-verify: " + check.reason);
            if (!args.certificate_out.empty())
                write_file(args.certificate_out,
                           serialize_certificate(*result.certificate, election, instance.mode,
                                                 instance.protocol));
            std::cout << "YES\n";
            return 0;
        }
        case Verdict::NotManipulable:
            std::cout << "NO\n";
            return 1;
        case Verdict::Unknown:
            std::cout << "UNKNOWN\n";
            return 4;
    }
    return 4;
}

struct GenArgs {
    std::string x3c_file, construction, election_out, certificate_out;
};

int cmd_gen(const GenArgs& args) {
    const X3CInstance instance = load_x3c(args.x3c_file);
    Election election;
    ScoringProtocol protocol;
    Certificate cert;
    bool have_cert = false;
    const auto cover = x3c_oracle(instance);
    if (args.construction == "veto") {
        const auto construction = gen_veto_construction(instance);
        election = construction.election;
        protocol = ScoringProtocol::veto();
        if (cover) {
            cert = veto_cover_certificate(construction, *cover);
            have_cert = true;
        }
    } else if (args.construction == "halfapproval") {
        const auto construction = gen_halfapproval_construction(instance);
        election = construction.election;
        protocol = ScoringProtocol::half_approval();
        if (cover) {
            cert = halfapproval_cover_certificate(construction, *cover);
            have_cert = true;
        }
    } else {
        throw std::invalid_argument("construction must be veto or halfapproval");
    }
    write_file(args.election_out, serialize_election(election));
    if (!args.certificate_out.empty()) {
        if (have_cert) {
            write_file(args.certificate_out,
                       serialize_certificate(cert, election, Mode::Runoff, protocol));
        } else {
            std::cerr << "no exact cover; certificate not written\n";
        }
    }
    return 0;
}

int cmd_oracle(const std::string& x3c_file) {
    const auto cover = x3c_oracle(load_x3c(x3c_file));
    if (!cover) {
        std::cout << "NONE\n";
        return 1;
    }
    std::string out = "cover:";
    for (int i : *cover) out += " " + std::to_string(i);
    std::cout << out << "\n";
    return 0;
}

struct VerifyArgs {
    std::string election_file, certificate_file;
    std::string protocol, mode, preferred;
    bool always_runoff = false;
};

int cmd_verify(const VerifyArgs& args) {
    const Election election = load_election(args.election_file);
    CertificateDoc doc;
    try {
        doc = load_certificate(args.certificate_file, election);
    } catch (const ParseError& err) {
        std::cout << "MALFORMED: " << err.what() << "\n";
        return 2;
    }
    if (!args.protocol.empty()) {
        const auto flag_protocol = parse_protocol_tag(args.protocol);
        if (protocol_tag(flag_protocol) != protocol_tag(doc.protocol))
            throw std::invalid_argument("--protocol disagrees with the certificate file");
        doc.protocol = flag_protocol;
    }
    if (!args.mode.empty()) {
        const Mode flag_mode = parse_mode_tag(args.mode);
        if (flag_mode != doc.mode)
            throw std::invalid_argument("--mode disagrees with the certificate file");
    }
    std::vector<long long> weights;
    for (const auto& plan : doc.certificate.plans) weights.push_back(plan.weight);
    const ManipulationInstance instance{election, doc.protocol, weights,
                                        resolve_candidate(election, args.preferred), doc.mode};
    const auto semantics =
        args.always_runoff ? ThenSemantics::OneWinnerRunoff : ThenSemantics::DecisiveStop;
    const auto result = verify_certificate(instance, doc.certificate, semantics);
    switch (result.status) {
        case VerifyResult::Status::ValidSuccess:
            std::cout << "VALID-SUCCESS\n";
            return 0;
        case VerifyResult::Status::ValidFailure:
            std::cout << "VALID-FAIL\n";
            return 1;
        case VerifyResult::Status::Malformed:
            break;
    }
    std::cout << "MALFORMED: " << result.reason << "\n";
    return 2;
}

int cmd_repro(const std::string& suite) {
    bool pass = true;
    if (suite == "all") {
        for (const auto& name : suite_names()) {
            const auto report = run_suite(name);
            std::cout << format_report(report);
            pass = pass && report.pass();
        }
    } else {
        const auto report = run_suite(suite);
        std::cout << format_report(report);
        pass = report.pass();
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"same-system runoff elections: winners, manipulation, hardness constructions"};
    app.require_subcommand(1);

    WinnersArgs winners_args;
    auto* winners = app.add_subcommand("winners", "evaluate a two-round election");
    winners->add_option("election", winners_args.election_file, "election file")->required();
    winners->add_option("--protocol", winners_args.protocol, "scoring protocol tag");
    winners->add_option("--mode", winners_args.mode, "single | runoff | revoting");
    winners->add_flag("--nw-semantics", winners_args.always_runoff,
                      "hold the runoff even after a decisive first round");

    ManipulateArgs manipulate_args;
    auto* manipulate = app.add_subcommand("manipulate", "decide coalition manipulability");
    manipulate->add_option("election", manipulate_args.election_file, "nonmanipulator election file")
        ->required();
    manipulate->add_option("--protocol", manipulate_args.protocol, "scoring protocol tag");
    manipulate->add_option("--mode", manipulate_args.mode, "single | runoff | revoting");
    manipulate->add_option("--p", manipulate_args.preferred, "preferred candidate name")->required();
    manipulate
        ->add_option("--manipulators", manipulate_args.manipulators, "count=K or weights=w1,w2,...")
        ->required();
    manipulate->add_option("--strategy", manipulate_args.strategy,
                           "auto | greedy | exhaustive | bucket | fastpath");
    manipulate->add_option("--certificate", manipulate_args.certificate_out,
                           "write the successful vote plans here");
    manipulate->add_flag("--nw-semantics", manipulate_args.always_runoff,
                         "hold the runoff even after a decisive first round");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a hardness-construction election");
    gen->add_option("x3c", gen_args.x3c_file, "cover instance file (JSON)")->required();
    gen->add_option("--construction", gen_args.construction, "veto | halfapproval")->required();
    gen->add_option("-o,--output", gen_args.election_out, "election file to write")->required();
    gen->add_option("--emit-certificate", gen_args.certificate_out,
                    "also write the prescribed certificate when a cover exists");

    std::string oracle_file;
    auto* oracle = app.add_subcommand("oracle", "search for an exact cover");
    oracle->add_option("x3c", oracle_file, "cover instance file (JSON)")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a manipulation certificate");
    verify->add_option("election", verify_args.election_file, "nonmanipulator election file")
        ->required();
    verify->add_option("certificate", verify_args.certificate_file, "certificate file")->required();
    verify->add_option("--protocol", verify_args.protocol, "must match the certificate if given");
    verify->add_option("--mode", verify_args.mode, "must match the certificate if given");
    verify->add_option("--p", verify_args.preferred, "preferred candidate name")->required();
    verify->add_flag("--nw-semantics", verify_args.always_runoff,
                     "hold the runoff even after a decisive first round");

    std::string suite;
    auto* repro = app.add_subcommand("repro", "run a reproduction experiment suite");
    repro->add_option("--suite", suite, "suite name, or 'all'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (winners->parsed()) return cmd_winners(winners_args);
        if (manipulate->parsed()) return cmd_manipulate(manipulate_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (oracle->parsed()) return cmd_oracle(oracle_file);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (repro->parsed()) return cmd_repro(suite);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 70;
    }
    return 0;
}
