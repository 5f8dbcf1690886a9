#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omega/congruence.hpp"
#include "omega/decide.hpp"
#include "omega/fdfa.hpp"
#include "omega/io.hpp"
#include "omega/learn.hpp"
#include "omega/translate.hpp"
#include "omega/zoo.hpp"

using namespace omega;

namespace {

constexpr int kExitNo = 3;
constexpr int kExitInput = 2;
constexpr int kExitCap = 4;

void output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_file(path, text);
}

std::string size_line(const Fdfa& f) {
    auto r = size_report(f);
    std::ostringstream out;
    out << "leading=" << r.leading << " progress=";
    for (std::size_t i = 0; i < r.progress.size(); ++i) out << (i ? "," : "") << r.progress[i];
    out << " progress_total=" << r.progress_total << " total=" << r.total;
    return out.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_canon(const std::string& in, const std::string& flavor, const std::string& out) {
    auto d = io::parse_det_omega(io::read_file(in));
    Fdfa f = build_canonical_fdfa(d, parse_flavor(flavor));
    output(out, io::emit(f));
    (out.empty() || out == "-" ? std::cerr : std::cout) << size_line(f) << '\n';
    return 0;
}

int cmd_decide(const std::string& in) {
    Fdfa f = io::parse_fdfa(io::read_file(in));
    Verdict v = decide_dba_recognizable(f);
    if (v.dba_recognizable) {
        std::cout << "yes\n";
        return 0;
    }
    std::cout << "no\n";
    if (v.non_cosafety_class)
        std::cout << "reason: progress DFA " << *v.non_cosafety_class << " has final states but no sink final state\n";
    if (v.witness)
        std::cout << "witness: " << f.sigma().render(v.witness->stem) << ' ' << f.sigma().render(v.witness->loop)
                  << '\n';
    return kExitNo;
}

int cmd_translate(const std::string& in, const std::string& to, const std::string& out) {
    Fdfa f = io::parse_fdfa(io::read_file(in));
    if (to == "nba")
        output(out, io::emit(fdfa_to_nba(f)));
    else if (to == "ldba")
        output(out, io::emit(fdfa_to_ldba(f).nba));
    else
        output(out, io::emit(fdfa_to_dba(f)));
    return 0;
}

int cmd_learn(const std::string& which, const std::string& log_path, const std::string& out, int max_iterations) {
    auto colon = which.find(':');
    if (colon == std::string::npos) throw PreconditionError("teacher must be dba:FILE or fdfa:FILE");
    std::string kind = which.substr(0, colon), path = which.substr(colon + 1);
    std::unique_ptr<Teacher> teacher;
    if (kind == "dba")
        teacher = teacher_from_dba(io::parse_det_omega(io::read_file(path)));
    else if (kind == "fdfa")
        teacher = teacher_from_fdfa(io::parse_fdfa(io::read_file(path)));
    else
        throw PreconditionError("unknown teacher kind '" + kind + "'");
    std::ofstream log_file;
    std::ostream* log = nullptr;
    if (!log_path.empty()) {
        log_file.open(log_path);
        if (!log_file) throw io::ParseError("cannot write " + log_path);
        log = &log_file;
    }
    LearnLimits limits;
    limits.max_iterations = max_iterations;
    auto result = learn_limit_fdfa(*teacher, limits, log);
    if (!out.empty()) io::write_file(out, io::emit(result.hypothesis));
    auto r = size_report(result.hypothesis);
    std::cout << "leading=" << r.leading << " progress_total=" << r.progress_total << " mq=" << result.stats.mq
              << " eq=" << result.stats.eq << '\n';
    return 0;
}

int cmd_bench_ln(int max_n, const std::string& flavors) {
    if (max_n < 1 || max_n > 12) throw PreconditionError("max-n must be in 1..12");
    std::vector<Flavor> fs;
    for (const auto& name : split_list(flavors)) fs.push_back(parse_flavor(name));
    std::cout << "n\tflavor\tleading\tprogress_total\ttotal\tmillis\n";
    for (int n = 1; n <= max_n; ++n)
        for (Flavor fl : fs) {
            auto start = std::chrono::steady_clock::now();
            Fdfa f = build_canonical_fdfa(zoo::gen_ln(n), fl);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            auto r = size_report(f);
            std::cout << n << '\t' << flavor_name(fl) << '\t' << r.leading << '\t' << r.progress_total << '\t'
                      << r.total << '\t' << ms.count() << '\n';
        }
    return 0;
}

int cmd_accepts(const std::string& in, const std::string& u, const std::string& v) {
    std::string text = io::read_file(in);
    bool member = false;
    if (io::is_fdfa_text(text)) {
        Fdfa f = io::parse_fdfa(text);
        UpWord w{f.sigma().parse(u), f.sigma().parse(v)};
        if (w.v.empty()) throw PreconditionError("period must be nonempty");
        member = accepts_upword(f, w);
    } else {
        auto a = io::parse_automaton(text);
        if (a.kind == io::Kind::DetOmega) {
            UpWord w{a.det.ts.sigma.parse(u), a.det.ts.sigma.parse(v)};
            if (w.v.empty()) throw PreconditionError("period must be nonempty");
            member = member_upword_det(a.det, w);
        } else if (a.kind == io::Kind::Nba) {
            UpWord w{a.nba.sigma.parse(u), a.nba.sigma.parse(v)};
            if (w.v.empty()) throw PreconditionError("period must be nonempty");
            member = member_upword_nba(a.nba, w);
        } else {
            throw PreconditionError("accepts needs an ω-automaton or an FDFA");
        }
    }
    std::cout << (member ? "member" : "non-member") << '\n';
    return 0;
}

int cmd_zoo(const std::vector<std::string>& args, const std::string& out) {
    if (args.empty()) throw PreconditionError("zoo needs a name: ln N | fig1 | fig5 | sigma-aa | random SEED STATES LETTERS DENSITY");
    const auto& name = args[0];
    if (name == "ln" && args.size() == 2)
        output(out, io::emit(zoo::gen_ln(std::stoi(args[1]))));
    else if (name == "fig1" && args.size() == 1)
        output(out, io::emit(zoo::gen_fig1()));
    else if (name == "fig5" && args.size() == 1)
        output(out, io::emit(zoo::gen_fig5_fdfa()));
    else if (name == "sigma-aa" && args.size() == 1)
        output(out, io::emit(zoo::gen_sigma_star_aa()));
    else if (name == "random" && args.size() == 5)
        output(out, io::emit(zoo::gen_random_dba(std::stoull(args[1]), std::stoi(args[2]), std::stoi(args[3]),
                                                 std::stod(args[4]))));
    else
        throw PreconditionError("unknown zoo entry or wrong arguments");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Families of DFAs for ω-regular languages"};
    app.require_subcommand(1);

    std::string in, out, flavor = "limit", to = "nba", teacher, log, u, v, flavors = "limit,recurrent";
    int max_n = 8, max_iterations = 2000;
    std::vector<std::string> zoo_args;

    auto* canon = app.add_subcommand("canon", "Canonical FDFA of a deterministic Büchi automaton");
    canon->add_option("input", in, "Automaton file")->required();
    canon->add_option("--flavor", flavor, "periodic|syntactic|recurrent|limit")
        ->check(CLI::IsMember({"periodic", "syntactic", "recurrent", "limit"}));
    canon->add_option("--out", out, "Output FDFA file (stdout if omitted)");

    auto* decide = app.add_subcommand("decide", "Decide DBA-recognizability of a limit FDFA");
    decide->add_option("input", in, "FDFA file")->required();

    auto* translate = app.add_subcommand("translate", "Translate an FDFA to an automaton");
    translate->add_option("input", in, "FDFA file")->required();
    translate->add_option("--to", to, "nba|ldba|dba")->check(CLI::IsMember({"nba", "ldba", "dba"}));
    translate->add_option("--out", out, "Output automaton file (stdout if omitted)");

    auto* learn = app.add_subcommand("learn", "Learn a limit FDFA from a teacher");
    learn->add_option("--teacher", teacher, "dba:FILE or fdfa:FILE")->required();
    learn->add_option("--log", log, "Query log file");
    learn->add_option("--out", out, "Learned FDFA file");
    learn->add_option("--max-iterations", max_iterations, "Equivalence query limit");

    auto* bench = app.add_subcommand("bench-ln", "Canonical FDFA sizes for the L_n family");
    bench->add_option("--max-n", max_n, "Largest n (<= 12)");
    bench->add_option("--flavors", flavors, "Comma-separated flavors");

    auto* accepts = app.add_subcommand("accepts", "Membership of u·v^ω");
    accepts->add_option("input", in, "Automaton or FDFA file")->required();
    accepts->add_option("u", u, "Prefix (ε or empty string for the empty word)")->required();
    accepts->add_option("v", v, "Period")->required();

    auto* zoo_cmd = app.add_subcommand("zoo", "Write a built-in example automaton");
    zoo_cmd->add_option("name", zoo_args, "ln N | fig1 | fig5 | sigma-aa | random SEED STATES LETTERS DENSITY")
        ->required();
    zoo_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*canon) return cmd_canon(in, flavor, out);
        if (*decide) return cmd_decide(in);
        if (*translate) return cmd_translate(in, to, out);
        if (*learn) return cmd_learn(teacher, log, out, max_iterations);
        if (*bench) return cmd_bench_ln(max_n, flavors);
        if (*accepts) return cmd_accepts(in, u, v);
        if (*zoo_cmd) return cmd_zoo(zoo_args, out);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const IterationLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
