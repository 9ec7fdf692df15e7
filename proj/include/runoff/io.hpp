#pragma once

#include <stdexcept>
#include <string>

#include "runoff/engine.hpp"
#include "runoff/reductions.hpp"

namespace runoff {

// File-content problems: unreadable files, bad syntax, votes that do not fit
// the declared candidates. Distinct from std::invalid_argument, which the
// library throws for semantically bad requests (unknown protocol tag, odd
// cover size, ...). The CLI maps the two onto different exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Protocol tags: plurality, veto, borda, halfapproval, triviality,
// vector:v1,v2,... Throws std::invalid_argument on anything else.
ScoringProtocol parse_protocol_tag(const std::string& tag);
std::string protocol_tag(const ScoringProtocol& protocol);

// Mode tags: single, runoff, revoting.
Mode parse_mode_tag(const std::string& tag);
std::string mode_tag(Mode mode);

// Election text format:
//   # comment lines
//   candidates: p a b c
//   vote [weight=W] [count=N]: p > a > b > c
// Weight and count default to 1 and are omitted when 1 on output;
// parse(serialize(e)) == e.
Election parse_election(const std::string& text);
Election load_election(const std::string& path);
std::string serialize_election(const Election& election);

// Cover-instance files: JSON {"k": int, "sets": [[a,b,c], ...]}.
// load/parse validate the instance (std::invalid_argument on violations).
X3CInstance parse_x3c(const std::string& text);
X3CInstance load_x3c(const std::string& path);
std::string serialize_x3c(const X3CInstance& instance);

// Certificate files: JSON
//   {"mode": tag, "protocol": tag,
//    "plans": [{"weight": W, "initial": [names...],
//               "runoff": [names...] | null}, ...]}
// Ballot names are resolved against the given election.
struct CertificateDoc {
    Mode mode = Mode::Runoff;
    ScoringProtocol protocol;
    Certificate certificate;
};
CertificateDoc parse_certificate(const std::string& text, const Election& election);
CertificateDoc load_certificate(const std::string& path, const Election& election);
std::string serialize_certificate(const Certificate& certificate, const Election& election,
                                  Mode mode, const ScoringProtocol& protocol);

std::string read_file(const std::string& path);             // ParseError if unreadable
void write_file(const std::string& path, const std::string& text);  // runtime_error on failure

}  // namespace runoff
