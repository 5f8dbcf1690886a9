#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "omega/automata.hpp"
#include "omega/fdfa.hpp"

namespace omega::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { Ts, Dfa, DetOmega, Nba };

// Any automaton block. Deterministic blocks missing transitions are completed
// with a fresh rejecting sink; Büchi blocks with several initial states or
// several successors for a letter are read as NBAs.
struct Automaton {
    Kind kind = Kind::Ts;
    DetTS ts;
    omega::Dfa dfa;
    omega::DetOmega det;
    omega::Nba nba;
};

Automaton parse_automaton(const std::string& text);
omega::DetOmega parse_det_omega(const std::string& text);
omega::Dfa parse_dfa(const std::string& text);
omega::Nba parse_nba(const std::string& text);
Fdfa parse_fdfa(const std::string& text);
bool is_fdfa_text(const std::string& text);

std::string emit(const DetTS& ts);
std::string emit(const omega::Dfa& d);
std::string emit(const omega::DetOmega& d);
std::string emit(const omega::Nba& a);
std::string emit(const Fdfa& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace omega::io
