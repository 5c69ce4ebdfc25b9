#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "winprob/winprob.hpp"

namespace winprob::cli {

namespace {

ParsedProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file '" + path + "'");
    return parse_profile_file(in);
}

int resolve_candidate(const CandidateSet& candidates, const std::string& name) {
    auto index = candidates.index_of(name);
    if (!index) throw ValidationError("unknown candidate '" + name + "'");
    return *index;
}

struct Options {
    std::string file;
    std::string registered_file;
    std::string unregistered_file;
    std::string rule_text;
    std::string candidate;
    std::string method = "exact";
    std::string kind;
    std::string out_prefix;
    bool unique = false;
    bool count = false;
    int limit = kDefaultBruteForceLimit;
    int k = 2;
    double epsilon = 0.1;
    double delta = 0.05;
    std::uint64_t seed = 0;
    std::optional<long long> trials;

    WinnerSemantics semantics() const {
        return unique ? WinnerSemantics::Unique : WinnerSemantics::CoWinner;
    }
};

void cmd_winners(const Options& opt, std::ostream& out) {
    auto parsed = load_profile(opt.file);
    const Rule rule = Rule::parse(opt.rule_text);
    auto winner_set = winners(rule, parsed.profile.profile(), opt.semantics());
    std::vector<std::string> names;
    for (int c : winner_set) names.push_back(parsed.candidates.name(c));
    ResultRecord record;
    record.add("command", "winners").add("rule", rule.to_string()).add_list("winners", names);
    out << record.line() << '\n';
}

void cmd_win_prob(const Options& opt, std::ostream& out) {
    auto parsed = load_profile(opt.file);
    const Rule rule = Rule::parse(opt.rule_text);
    const int candidate = resolve_candidate(parsed.candidates, opt.candidate);
    double probability = 0.0;
    if (opt.method == "exact") {
        if (rule.kind() != Rule::Kind::Positional)
            throw UnsupportedRuleError("exact method supports plurality and veto only");
        switch (rule.family()) {
        case PositionalFamily::Plurality:
            probability = win_prob_plurality(parsed.profile, candidate, opt.semantics());
            break;
        case PositionalFamily::Veto:
            probability = win_prob_veto(parsed.profile, candidate, opt.semantics());
            break;
        default: throw UnsupportedRuleError("exact method supports plurality and veto only");
        }
    } else if (opt.method == "brute") {
        probability = brute_force_win_prob(parsed.profile, rule, candidate, opt.semantics(),
                                           opt.limit);
    } else {
        throw ValidationError("unknown method '" + opt.method + "' (expected exact or brute)");
    }
    ResultRecord record;
    record.add("command", "win-prob")
        .add("rule", rule.to_string())
        .add("candidate", opt.candidate)
        .add("method", opt.method)
        .add_probability("probability", probability);
    out << record.line() << '\n';
}

void cmd_lose_prob(const Options& opt, std::ostream& out) {
    auto parsed = load_profile(opt.file);
    const Rule rule = Rule::parse(opt.rule_text);
    const int candidate = resolve_candidate(parsed.candidates, opt.candidate);
    EstimatorConfig config;
    config.epsilon = opt.epsilon;
    config.delta = opt.delta;
    config.seed = opt.seed;
    config.trials_override = opt.trials;
    Estimate est = klm_lose_prob(parsed.profile, rule, candidate, config);
    ResultRecord record;
    record.add("command", "lose-prob")
        .add("rule", rule.to_string())
        .add("candidate", opt.candidate)
        .add("method", method_name(est.method))
        .add_probability("probability", est.value)
        .add("trials", est.trials)
        .add("seed", static_cast<long long>(opt.seed));
    out << record.line() << '\n';
}

void cmd_win_positive(const Options& opt, std::ostream& out) {
    auto parsed = load_profile(opt.file);
    const Rule rule = Rule::parse(opt.rule_text);
    const int candidate = resolve_candidate(parsed.candidates, opt.candidate);
    const bool positive = win_positive(parsed.profile, rule, candidate,
                                       WinnerSemantics::CoWinner, opt.limit);
    ResultRecord record;
    record.add("command", "win-positive")
        .add("rule", rule.to_string())
        .add("candidate", opt.candidate)
        .add("decision", positive ? "true" : "false");
    out << record.line() << '\n';
}

void cmd_ccauv(const Options& opt, std::ostream& out) {
    auto registered = load_profile(opt.registered_file);
    auto unregistered = load_profile(opt.unregistered_file);
    if (registered.candidates.names() != unregistered.candidates.names())
        throw ValidationError("registered and unregistered files disagree on the candidates");
    const Rule rule = Rule::parse(opt.rule_text);
    const int candidate = resolve_candidate(registered.candidates, opt.candidate);
    CcauvInstance instance(registered.candidates, registered.profile.profile(),
                           unregistered.profile.profile(), candidate);
    ResultRecord record;
    record.add("command", "ccauv")
        .add("rule", rule.to_string())
        .add("candidate", opt.candidate);
    if (opt.count) {
        record.add("count", ccauv_count_brute(instance, rule, WinnerSemantics::CoWinner, opt.limit));
    } else {
        const int m = registered.candidates.size();
        CcauvDecision decision = rule.is_positional() && rule.is_binary(m)
                                     ? ccauv_binary(instance, rule)
                                     : ccauv_brute(instance, rule, WinnerSemantics::CoWinner,
                                                   opt.limit);
        record.add("decision", decision.controllable ? "true" : "false");
        if (decision.controllable) record.add_indices("witness", decision.witness);
    }
    out << record.line() << '\n';
}

void cmd_gen(const Options& opt, std::ostream& out) {
    std::ifstream in(opt.file);
    if (!in) throw ParseError("cannot open input file '" + opt.file + "'");

    std::optional<GeneratedInstance> gen;
    if (opt.kind == "matching-kapproval")
        gen = gen_kapproval_from_matching(parse_graph_file(in), opt.k);
    else if (opt.kind == "edgecover-kveto")
        gen = gen_kveto_from_edgecover(parse_graph_file(in), opt.k);
    else if (opt.kind == "x3c-condorcet")
        gen = gen_condorcet_from_x3c(parse_set_system_file(in));
    else if (opt.kind == "x3c-maximin")
        gen = gen_maximin_from_x3c(parse_set_system_file(in));
    else
        throw ValidationError("unknown generator kind '" + opt.kind + "'");

    const CcauvInstance& instance = gen->instance;
    const std::string registered_path = opt.out_prefix + ".registered";
    const std::string unregistered_path = opt.out_prefix + ".unregistered";
    std::vector<std::string> comments = {"generated: " + opt.kind,
                                         "rule: " + gen->rule.to_string(),
                                         "count: " + gen->count_kind,
                                         "target: " + instance.candidates.name(instance.target)};
    if (!gen->note.empty()) comments.push_back("note: " + gen->note);

    auto write = [&](const std::string& path, const Profile& profile, double p) {
        std::ofstream file(path);
        if (!file) throw ValidationError("cannot write '" + path + "'");
        ProbabilisticProfile pp(profile,
                                std::vector<double>(static_cast<std::size_t>(profile.voter_count()), p));
        write_profile_file(file, instance.candidates, pp, comments);
    };
    write(registered_path, instance.registered, 1.0);
    write(unregistered_path, instance.unregistered, 0.5);

    ResultRecord record;
    record.add("command", "gen")
        .add("kind", opt.kind)
        .add("rule", gen->rule.to_string())
        .add("candidate", instance.candidates.name(instance.target))
        .add("count", gen->count_kind)
        .add("registered", registered_path)
        .add("unregistered", unregistered_path);
    if (!gen->note.empty()) record.add("note", gen->note);
    out << record.line() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"win/lose probabilities for elections with uncertain voter attendance"};
    app.require_subcommand(1);
    Options opt;

    auto* winners_cmd = app.add_subcommand("winners", "deterministic winners of the full profile");
    winners_cmd->add_option("file", opt.file, "profile file")->required();
    winners_cmd->add_option("--rule", opt.rule_text, "voting rule")->required();
    winners_cmd->add_flag("--unique", opt.unique, "unique-winner semantics");

    auto* win_prob_cmd = app.add_subcommand("win-prob", "probability that a candidate wins");
    win_prob_cmd->add_option("file", opt.file)->required();
    win_prob_cmd->add_option("--rule", opt.rule_text)->required();
    win_prob_cmd->add_option("--candidate", opt.candidate)->required();
    win_prob_cmd->add_option("--method", opt.method, "exact | brute");
    win_prob_cmd->add_option("--limit", opt.limit, "voter limit for brute enumeration");
    win_prob_cmd->add_flag("--unique", opt.unique);

    auto* lose_prob_cmd =
        app.add_subcommand("lose-prob", "multiplicative estimate of the losing probability");
    lose_prob_cmd->add_option("file", opt.file)->required();
    lose_prob_cmd->add_option("--rule", opt.rule_text)->required();
    lose_prob_cmd->add_option("--candidate", opt.candidate)->required();
    lose_prob_cmd->add_option("--epsilon", opt.epsilon);
    lose_prob_cmd->add_option("--delta", opt.delta);
    lose_prob_cmd->add_option("--seed", opt.seed);
    long long trials_flag = -1;
    lose_prob_cmd->add_option("--trials", trials_flag, "explicit trial count");

    auto* win_positive_cmd = app.add_subcommand("win-positive", "decide Pr[win] > 0");
    win_positive_cmd->add_option("file", opt.file)->required();
    win_positive_cmd->add_option("--rule", opt.rule_text)->required();
    win_positive_cmd->add_option("--candidate", opt.candidate)->required();
    win_positive_cmd->add_option("--limit", opt.limit);

    auto* ccauv_cmd = app.add_subcommand("ccauv", "control by adding unregistered voters");
    ccauv_cmd->add_option("--registered", opt.registered_file)->required();
    ccauv_cmd->add_option("--unregistered", opt.unregistered_file)->required();
    ccauv_cmd->add_option("--rule", opt.rule_text)->required();
    ccauv_cmd->add_option("--candidate", opt.candidate)->required();
    ccauv_cmd->add_flag("--count", opt.count, "count the successful sublists");
    ccauv_cmd->add_option("--limit", opt.limit);

    auto* gen_cmd = app.add_subcommand("gen", "build a reduction instance from a graph or x3c file");
    gen_cmd->add_option("kind", opt.kind,
                        "matching-kapproval | edgecover-kveto | x3c-condorcet | x3c-maximin")
        ->required();
    gen_cmd->add_option("file", opt.file, "input graph / set-system file")->required();
    gen_cmd->add_option("--k", opt.k, "positional parameter for the graph constructions");
    gen_cmd->add_option("--out", opt.out_prefix, "output file prefix")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    if (trials_flag >= 0) opt.trials = trials_flag;

    try {
        if (winners_cmd->parsed()) cmd_winners(opt, out);
        else if (win_prob_cmd->parsed()) cmd_win_prob(opt, out);
        else if (lose_prob_cmd->parsed()) cmd_lose_prob(opt, out);
        else if (win_positive_cmd->parsed()) cmd_win_positive(opt, out);
        else if (ccauv_cmd->parsed()) cmd_ccauv(opt, out);
        else if (gen_cmd->parsed()) cmd_gen(opt, out);
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
        return 1;
    } catch (const UnsupportedRuleError& e) {
        err << "unsupported: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace winprob::cli
