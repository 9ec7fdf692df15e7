#include "runoff/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace runoff {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_positive(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size() || v < 1) throw ParseError(what + " must be a positive integer: " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(what + " must be a positive integer: " + s);
    }
}

Ballot parse_ballot_names(const std::string& text, const Election& election,
                          const std::string& context) {
    Ballot ballot;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, '>')) {
        const std::string name = trim(item);
        if (name.empty()) throw ParseError(context + ": empty candidate name");
        const int id = election.candidate_by_name(name);
        if (id < 0) throw ParseError(context + ": unknown candidate '" + name + "'");
        ballot.push_back(id);
    }
    if (ballot.empty()) throw ParseError(context + ": empty ballot");
    return ballot;
}

std::string joined_names(const Ballot& ballot, const Election& election, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < ballot.size(); ++i) {
        if (i) out += sep;
        out += election.candidates[ballot[i]].name;
    }
    return out;
}

}  // namespace

ScoringProtocol parse_protocol_tag(const std::string& tag) {
    if (tag == "plurality") return ScoringProtocol::plurality();
    if (tag == "veto") return ScoringProtocol::veto();
    if (tag == "borda") return ScoringProtocol::borda();
    if (tag == "halfapproval") return ScoringProtocol::half_approval();
    if (tag == "triviality") return ScoringProtocol::triviality();
    if (tag.rfind("vector:", 0) == 0) {
        std::vector<long long> entries;
        std::string item;
        std::istringstream in(tag.substr(7));
        while (std::getline(in, item, ',')) {
            try {
                size_t used = 0;
                entries.push_back(std::stoll(trim(item), &used));
                if (used != trim(item).size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad score vector entry '" + item + "' in tag " + tag);
            }
        }
        return ScoringProtocol::from_vector(entries);
    }
    throw std::invalid_argument("unknown protocol tag: " + tag);
}

std::string protocol_tag(const ScoringProtocol& protocol) {
    switch (protocol.kind) {
        case ProtocolKind::Plurality: return "plurality";
        case ProtocolKind::Veto: return "veto";
        case ProtocolKind::Borda: return "borda";
        case ProtocolKind::HalfApproval: return "halfapproval";
        case ProtocolKind::Triviality: return "triviality";
        case ProtocolKind::ExplicitVector: break;
    }
    std::string out = "vector:";
    for (size_t i = 0; i < protocol.explicit_vector.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(protocol.explicit_vector[i]);
    }
    return out;
}

Mode parse_mode_tag(const std::string& tag) {
    if (tag == "single") return Mode::Single;
    if (tag == "runoff") return Mode::Runoff;
    if (tag == "revoting") return Mode::RevotingRunoff;
    throw std::invalid_argument("unknown mode: " + tag + " (expected single, runoff, or revoting)");
}

std::string mode_tag(Mode mode) {
    switch (mode) {
        case Mode::Single: return "single";
        case Mode::Runoff: return "runoff";
        case Mode::RevotingRunoff: return "revoting";
    }
    return "runoff";
}

Election parse_election(const std::string& text) {
    Election election;
    bool have_candidates = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "line " + std::to_string(lineno);

        if (line.rfind("candidates:", 0) == 0) {
            if (have_candidates) throw ParseError(where + ": repeated candidates line");
            const auto names = split_ws(line.substr(11));
            if (names.empty()) throw ParseError(where + ": empty candidates line");
            for (size_t i = 0; i < names.size(); ++i)
                election.candidates.push_back({static_cast<int>(i), names[i]});
            have_candidates = true;
            continue;
        }
        if (line.rfind("vote", 0) == 0) {
            if (!have_candidates) throw ParseError(where + ": vote before candidates line");
            const auto colon = line.find(':');
            if (colon == std::string::npos) throw ParseError(where + ": vote line without ':'");
            WeightedVote vote;
            const auto head = split_ws(line.substr(4, colon - 4));
            for (const auto& opt : head) {
                if (opt.rfind("weight=", 0) == 0)
                    vote.weight = parse_positive(opt.substr(7), where + ": weight");
                else if (opt.rfind("count=", 0) == 0)
                    vote.count = parse_positive(opt.substr(6), where + ": count");
                else
                    throw ParseError(where + ": unknown vote option '" + opt + "'");
            }
            vote.ballot = parse_ballot_names(line.substr(colon + 1), election, where);
            election.votes.push_back(std::move(vote));
            continue;
        }
        throw ParseError(where + ": unrecognized line '" + line + "'");
    }
    if (!have_candidates) throw ParseError("no candidates line");
    try {
        election.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
    return election;
}

std::string serialize_election(const Election& election) {
    std::string out = "candidates:";
    for (const auto& c : election.candidates) out += " " + c.name;
    out += "\n";
    for (const auto& v : election.votes) {
        out += "vote";
        if (v.weight != 1) out += " weight=" + std::to_string(v.weight);
        if (v.count != 1) out += " count=" + std::to_string(v.count);
        out += ": " + joined_names(v.ballot, election, " > ") + "\n";
    }
    return out;
}

X3CInstance parse_x3c(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& err) {
        throw ParseError(std::string("bad cover-instance file: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("sets") ||
        !doc["k"].is_number_integer() || !doc["sets"].is_array())
        throw ParseError("cover-instance file needs integer 'k' and array 'sets'");
    X3CInstance instance;
    instance.k = doc["k"].get<int>();
    for (const auto& entry : doc["sets"]) {
        if (!entry.is_array() || entry.size() != 3 ||
            !std::all_of(entry.begin(), entry.end(),
                         [](const json& v) { return v.is_number_integer(); }))
            throw ParseError("every set must be a list of exactly 3 integers");
        instance.sets.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    }
    instance.validate();
    return instance;
}

std::string serialize_x3c(const X3CInstance& instance) {
    json doc;
    doc["k"] = instance.k;
    doc["sets"] = json::array();
    for (const auto& t : instance.sets) doc["sets"].push_back({t[0], t[1], t[2]});
    return doc.dump(2) + "\n";
}

CertificateDoc parse_certificate(const std::string& text, const Election& election) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& err) {
        throw ParseError(std::string("bad certificate file: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("mode") || !doc.contains("protocol") ||
        !doc.contains("plans") || !doc["plans"].is_array())
        throw ParseError("certificate file needs 'mode', 'protocol', and a 'plans' array");
    CertificateDoc out;
    try {
        out.mode = parse_mode_tag(doc["mode"].get<std::string>());
        out.protocol = parse_protocol_tag(doc["protocol"].get<std::string>());
    } catch (const json::exception& err) {
        throw ParseError(std::string("bad certificate file: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
    for (const auto& entry : doc["plans"]) {
        if (!entry.is_object() || !entry.contains("initial"))
            throw ParseError("every plan needs an 'initial' ballot");
        VotePlan plan;
        if (entry.contains("weight")) {
            if (!entry["weight"].is_number_integer() || entry["weight"].get<long long>() < 1)
                throw ParseError("plan weight must be a positive integer");
            plan.weight = entry["weight"].get<long long>();
        }
        auto read_ballot = [&](const json& arr, const std::string& what) {
            if (!arr.is_array()) throw ParseError(what + " ballot must be a name list");
            Ballot b;
            for (const auto& v : arr) {
                if (!v.is_string()) throw ParseError(what + " ballot must be a name list");
                const int id = election.candidate_by_name(v.get<std::string>());
                if (id < 0)
                    throw ParseError(what + " ballot names unknown candidate '" +
                                     v.get<std::string>() + "'");
                b.push_back(id);
            }
            return b;
        };
        plan.initial = read_ballot(entry["initial"], "initial");
        if (entry.contains("runoff") && !entry["runoff"].is_null())
            plan.runoff = read_ballot(entry["runoff"], "runoff");
        out.certificate.plans.push_back(std::move(plan));
    }
    return out;
}

std::string serialize_certificate(const Certificate& certificate, const Election& election,
                                  Mode mode, const ScoringProtocol& protocol) {
    json doc;
    doc["mode"] = mode_tag(mode);
    doc["protocol"] = protocol_tag(protocol);
    doc["plans"] = json::array();
    for (const auto& plan : certificate.plans) {
        json p;
        p["weight"] = plan.weight;
        p["initial"] = json::array();
        for (int c : plan.initial) p["initial"].push_back(election.candidates[c].name);
        if (plan.runoff) {
            p["runoff"] = json::array();
            for (int c : *plan.runoff) p["runoff"].push_back(election.candidates[c].name);
        } else {
            p["runoff"] = nullptr;
        }
        doc["plans"].push_back(std::move(p));
    }
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("failed writing " + path);
}

Election load_election(const std::string& path) { return parse_election(read_file(path)); }
X3CInstance load_x3c(const std::string& path) { return parse_x3c(read_file(path)); }
CertificateDoc load_certificate(const std::string& path, const Election& election) {
    return parse_certificate(read_file(path), election);
}

}  // namespace runoff
