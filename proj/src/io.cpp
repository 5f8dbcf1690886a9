#include "omega/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace omega::io {

namespace {

struct RawTrans {
    State src;
    Letter letter;
    State dst;
    bool acc;
};

struct RawBlock {
    std::optional<Alphabet> sigma;
    int states = -1;
    std::vector<State> initials;
    std::optional<std::string> acceptance;
    std::vector<RawTrans> trans;
    std::optional<std::vector<State>> finals;
    std::optional<Word> label;
};

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected a state number, got '" + tok + "'");
    }
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> lines_of(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int n = 0;
    while (std::getline(in, s)) {
        ++n;
        out.push_back({n, trim(s)});
    }
    return out;
}

RawBlock parse_block(const std::vector<Line>& lines, const std::optional<Alphabet>& inherited) {
    RawBlock b;
    b.sigma = inherited;
    std::vector<std::pair<int, std::vector<std::string>>> pending;
    std::optional<std::string> label_text;
    for (const auto& [num, text] : lines) {
        if (text.empty()) continue;
        if (text[0] == '#') {
            std::string body = trim(text.substr(1));
            if (body.rfind("rep:", 0) == 0) label_text = trim(body.substr(4));
            continue;
        }
        std::string line = text.substr(0, text.find('#'));
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(num) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        auto toks = split(line.substr(colon + 1));
        if (key == "alphabet") {
            try {
                b.sigma = Alphabet(toks);
            } catch (const AlphabetError& e) {
                throw ParseError("line " + std::to_string(num) + ": " + e.what());
            }
        } else if (key == "states") {
            if (toks.size() != 1) throw ParseError("line " + std::to_string(num) + ": expected one state count");
            b.states = parse_int(toks[0], num);
        } else if (key == "initial") {
            if (toks.empty()) throw ParseError("line " + std::to_string(num) + ": missing initial state");
            for (const auto& t : toks) b.initials.push_back(parse_int(t, num));
        } else if (key == "acceptance") {
            if (toks.size() != 1 || (toks[0] != "buchi" && toks[0] != "cobuchi" && toks[0] != "finals"))
                throw ParseError("line " + std::to_string(num) + ": acceptance must be buchi, cobuchi or finals");
            b.acceptance = toks[0];
        } else if (key == "trans") {
            if (toks.size() != 3 && !(toks.size() == 4 && toks[3] == "acc"))
                throw ParseError("line " + std::to_string(num) + ": expected 'trans: s letter t [acc]'");
            pending.emplace_back(num, toks);
        } else if (key == "finals") {
            std::vector<State> fs;
            for (const auto& t : toks) fs.push_back(parse_int(t, num));
            b.finals = fs;
        } else {
            throw ParseError("line " + std::to_string(num) + ": unknown key '" + key + "'");
        }
    }
    if (!b.sigma) throw ParseError("missing alphabet");
    if (b.states <= 0) throw ParseError("missing or zero state count");
    if (b.initials.empty()) throw ParseError("missing initial state");
    for (State s : b.initials)
        if (s >= b.states) throw ParseError("initial state out of range");
    for (const auto& [num, toks] : pending) {
        RawTrans t{parse_int(toks[0], num), 0, parse_int(toks[2], num), toks.size() == 4};
        try {
            t.letter = b.sigma->index(toks[1]);
        } catch (const AlphabetError& e) {
            throw ParseError("line " + std::to_string(num) + ": " + e.what());
        }
        if (t.src >= b.states || t.dst >= b.states)
            throw ParseError("line " + std::to_string(num) + ": state out of range");
        b.trans.push_back(t);
    }
    if (b.finals)
        for (State s : *b.finals)
            if (s >= b.states) throw ParseError("final state out of range");
    if (label_text) {
        try {
            b.label = b.sigma->parse(*label_text);
        } catch (const AlphabetError& e) {
            throw ParseError(std::string("representative label: ") + e.what());
        }
    }
    return b;
}

bool deterministic(const RawBlock& b) {
    if (b.initials.size() != 1) return false;
    std::set<std::pair<State, Letter>> seen;
    for (const auto& t : b.trans)
        if (!seen.insert({t.src, t.letter}).second) return false;
    return true;
}

// Completes a deterministic block; returns the per-transition acc flags.
std::pair<DetTS, std::vector<bool>> complete(const RawBlock& b, bool sink_acc) {
    const int k = b.sigma->size();
    const std::size_t expected = static_cast<std::size_t>(b.states) * k;
    bool partial = b.trans.size() < expected;
    DetTS ts(*b.sigma, b.states + (partial ? 1 : 0), b.initials[0]);
    std::vector<bool> acc(ts.delta.size(), false);
    std::vector<bool> set(ts.delta.size(), false);
    for (const auto& t : b.trans) {
        ts.set(t.src, t.letter, t.dst);
        acc[t.src * k + t.letter] = t.acc;
        set[t.src * k + t.letter] = true;
    }
    if (partial) {
        const State sink = b.states;
        for (std::size_t i = 0; i < ts.delta.size(); ++i)
            if (!set[i]) {
                ts.delta[i] = sink;
                acc[i] = static_cast<State>(i / k) == sink && sink_acc;
            }
    }
    return {ts, acc};
}

Automaton build(const RawBlock& b) {
    Automaton a;
    const std::string acc = b.acceptance.value_or(b.finals ? "finals" : "");
    if (acc.empty()) {
        if (!deterministic(b)) throw ParseError("transition structure is not deterministic");
        a.kind = Kind::Ts;
        a.ts = complete(b, false).first;
        return a;
    }
    if (acc == "finals") {
        if (!deterministic(b)) throw ParseError("DFA is not deterministic");
        a.kind = Kind::Dfa;
        a.dfa = omega::Dfa(complete(b, false).first);
        if (b.finals)
            for (State s : *b.finals) a.dfa.finals[s] = true;
        return a;
    }
    if (b.finals) throw ParseError("finals given for an ω-automaton");
    if (acc == "buchi" && !deterministic(b)) {
        a.kind = Kind::Nba;
        a.nba.sigma = *b.sigma;
        a.nba.n = b.states;
        a.nba.initials = b.initials;
        for (const auto& t : b.trans) a.nba.add(t.src, t.letter, t.dst, t.acc);
        a.nba.normalize();
        return a;
    }
    if (!deterministic(b)) throw ParseError("co-Büchi automaton is not deterministic");
    a.kind = Kind::DetOmega;
    bool cobuchi = acc == "cobuchi";
    auto [ts, flags] = complete(b, cobuchi);
    a.det = omega::DetOmega(ts);
    a.det.acc = flags;
    a.det.polarity = cobuchi ? Polarity::CoBuchi : Polarity::Buchi;
    return a;
}

void emit_header(std::ostringstream& out, const DetTS& ts, bool alphabet) {
    if (alphabet) {
        out << "alphabet:";
        for (const auto& l : ts.sigma.letters()) out << ' ' << l;
        out << '\n';
    }
    out << "states: " << ts.n << '\n' << "initial: " << ts.initial << '\n';
}

void emit_trans(std::ostringstream& out, const DetTS& ts, const std::vector<bool>* acc) {
    for (State s = 0; s < ts.n; ++s)
        for (Letter a = 0; a < ts.k(); ++a) {
            out << "trans: " << s << ' ' << ts.sigma.name(a) << ' ' << ts.next(s, a);
            if (acc && (*acc)[s * ts.k() + a]) out << " acc";
            out << '\n';
        }
}

void emit_dfa_body(std::ostringstream& out, const omega::Dfa& d, bool alphabet) {
    emit_header(out, d.ts, alphabet);
    out << "acceptance: finals\n";
    emit_trans(out, d.ts, nullptr);
    out << "finals:";
    for (State s = 0; s < d.ts.n; ++s)
        if (d.finals[s]) out << ' ' << s;
    out << '\n';
}

}  // namespace

Automaton parse_automaton(const std::string& text) { return build(parse_block(lines_of(text), std::nullopt)); }

omega::DetOmega parse_det_omega(const std::string& text) {
    auto a = parse_automaton(text);
    if (a.kind != Kind::DetOmega) throw ParseError("expected a deterministic Büchi or co-Büchi automaton");
    return a.det;
}

omega::Dfa parse_dfa(const std::string& text) {
    auto a = parse_automaton(text);
    if (a.kind != Kind::Dfa) throw ParseError("expected a DFA");
    return a.dfa;
}

omega::Nba parse_nba(const std::string& text) {
    auto a = parse_automaton(text);
    if (a.kind == Kind::Nba) return a.nba;
    if (a.kind == Kind::DetOmega && a.det.polarity == Polarity::Buchi) return as_nba(a.det);
    throw ParseError("expected a Büchi automaton");
}

bool is_fdfa_text(const std::string& text) {
    for (const auto& l : lines_of(text)) {
        if (l.text.empty() || l.text[0] == '#') continue;
        return l.text == "fdfa";
    }
    return false;
}

Fdfa parse_fdfa(const std::string& text) {
    auto lines = lines_of(text);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < lines.size() && (lines[i].text.empty() || lines[i].text[0] == '#')) ++i;
    };
    skip();
    if (i == lines.size() || lines[i].text != "fdfa") throw ParseError("expected 'fdfa' header");
    ++i;
    Fdfa f;
    skip();
    if (i < lines.size() && lines[i].text.rfind("flavor:", 0) == 0) {
        try {
            f.flavor = parse_flavor(trim(lines[i].text.substr(7)));
        } catch (const PreconditionError& e) {
            throw ParseError("line " + std::to_string(lines[i].number) + ": " + e.what());
        }
        ++i;
    }
    skip();
    if (i == lines.size() || lines[i].text != "leading") throw ParseError("expected 'leading' block");
    ++i;
    // Sections: the leading block, then "progress k" blocks.
    std::vector<std::pair<int, std::vector<Line>>> sections{{-1, {}}};
    for (; i < lines.size(); ++i) {
        const auto& t = lines[i].text;
        if (t.rfind("progress", 0) == 0 && (t.size() == 8 || t[8] == ' ')) {
            auto toks = split(t);
            if (toks.size() != 2) throw ParseError("line " + std::to_string(lines[i].number) + ": expected 'progress <state>'");
            sections.push_back({parse_int(toks[1], lines[i].number), {}});
            continue;
        }
        sections.back().second.push_back(lines[i]);
    }
    RawBlock lead = parse_block(sections[0].second, std::nullopt);
    if (lead.acceptance || lead.finals) throw ParseError("leading block must not carry acceptance");
    Automaton la = build(lead);
    f.leading = la.ts;
    const int declared = lead.states;
    f.progress.assign(f.leading.n, omega::Dfa());
    f.labels.assign(f.leading.n, std::nullopt);
    std::vector<bool> have(f.leading.n, false);
    for (std::size_t s = 1; s < sections.size(); ++s) {
        int q = sections[s].first;
        if (q >= declared) throw ParseError("progress block for unknown leading state " + std::to_string(q));
        if (have[q]) throw ParseError("duplicate progress block " + std::to_string(q));
        RawBlock pb = parse_block(sections[s].second, f.leading.sigma);
        if (*pb.sigma != f.leading.sigma) throw ParseError("progress block over a different alphabet");
        if (pb.acceptance && *pb.acceptance != "finals") throw ParseError("progress block must be a DFA");
        if (!pb.finals) pb.finals = std::vector<State>{};
        Automaton pa = build(pb);
        f.progress[q] = pa.dfa;
        f.labels[q] = pb.label;
        have[q] = true;
    }
    for (int q = 0; q < declared; ++q)
        if (!have[q]) throw ParseError("missing progress block " + std::to_string(q));
    // A completion sink in the leading block gets an empty progress DFA.
    for (int q = declared; q < f.leading.n; ++q) {
        omega::Dfa empty(DetTS(f.leading.sigma, 1, 0));
        f.progress[q] = empty;
    }
    return f;
}

std::string emit(const DetTS& ts) {
    std::ostringstream out;
    emit_header(out, ts, true);
    emit_trans(out, ts, nullptr);
    return out.str();
}

std::string emit(const omega::Dfa& d) {
    std::ostringstream out;
    emit_dfa_body(out, d, true);
    return out.str();
}

std::string emit(const omega::DetOmega& d) {
    std::ostringstream out;
    emit_header(out, d.ts, true);
    out << "acceptance: " << (d.polarity == Polarity::Buchi ? "buchi" : "cobuchi") << '\n';
    emit_trans(out, d.ts, &d.acc);
    return out.str();
}

std::string emit(const omega::Nba& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& l : a.sigma.letters()) out << ' ' << l;
    out << "\nstates: " << a.n << "\ninitial:";
    for (State s : a.initials) out << ' ' << s;
    out << "\nacceptance: buchi\n";
    for (const auto& e : a.trans) {
        out << "trans: " << e.src << ' ' << a.sigma.name(e.letter) << ' ' << e.dst;
        if (e.acc) out << " acc";
        out << '\n';
    }
    return out.str();
}

std::string emit(const Fdfa& f) {
    std::ostringstream out;
    out << "fdfa\n";
    if (f.flavor) out << "flavor: " << flavor_name(*f.flavor) << '\n';
    out << "leading\n";
    emit_header(out, f.leading, true);
    emit_trans(out, f.leading, nullptr);
    for (State q = 0; q < f.leading.n; ++q) {
        out << "progress " << q << '\n';
        if (q < static_cast<State>(f.labels.size()) && f.labels[q])
            out << "# rep: " << f.sigma().render(*f.labels[q]) << '\n';
        emit_dfa_body(out, f.progress[q], false);
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace omega::io
