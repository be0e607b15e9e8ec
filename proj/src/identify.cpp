#include "riordan/identify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

#include "riordan/error.hpp"

namespace riordan {

namespace {

bool valid_id(const std::string& id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<std::vector<Integer>> parse_terms(const std::string& body) {
    std::vector<Integer> terms;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        std::string tok = body.substr(pos, next - pos);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                  tok.end());
        pos = next + 1;
        if (tok.empty()) continue;
        const std::size_t digits_from = tok[0] == '-' ? 1 : 0;
        if (digits_from == tok.size() ||
            !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(digits_from), tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return std::nullopt;
        terms.emplace_back(tok, 10);
    }
    if (terms.empty()) return std::nullopt;
    return terms;
}

}  // namespace

SequenceDb SequenceDb::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open sequence database '" + path.string() + "'");
    return parse(in, path.string());
}

SequenceDb SequenceDb::parse(std::istream& in, std::string source_name) {
    SequenceDb db;
    db.source_ = std::move(source_name);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto space = line.find(' ');
        const std::string id = line.substr(0, space);
        std::optional<std::vector<Integer>> terms;
        if (space != std::string::npos && valid_id(id)) terms = parse_terms(line.substr(space + 1));
        if (!terms) {
            db.warnings_.push_back(db.source_ + ":" + std::to_string(lineno) + ": malformed line skipped");
            continue;
        }
        if (!db.entries_.emplace(id, std::move(*terms)).second)
            db.warnings_.push_back(db.source_ + ":" + std::to_string(lineno) + ": duplicate " + id + " skipped");
    }
    if (db.entries_.empty()) fail(Errc::EmptyDb, "no valid sequences in '" + db.source_ + "'");
    return db;
}

IdentifyResult identify(const SequenceDb& db, const std::vector<Rational>& seq, std::size_t min_match) {
    IdentifyResult result;
    if (min_match == 0) fail(Errc::Usage, "min_match must be positive");
    if (seq.size() < min_match)
        fail(Errc::InsufficientTerms, "query has " + std::to_string(seq.size()) + " terms, min_match is " +
                                          std::to_string(min_match));
    std::vector<Integer> query;
    for (std::size_t i = 0; i < min_match; ++i) {
        if (!seq[i].is_integer()) {
            result.note = "NonIntegral: term " + std::to_string(i) + " is " + seq[i].str();
            return result;
        }
        query.push_back(seq[i].numerator());
    }
    for (const auto& [id, terms] : db.entries()) {
        const auto it = std::search(terms.begin(), terms.end(), query.begin(), query.end());
        if (it != terms.end())
            result.matches.push_back({id, static_cast<std::size_t>(it - terms.begin())});
    }
    return result;
}

}  // namespace riordan
