#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Integer sequences keyed by A-number, read from an OEIS "stripped" dump:
///
///   # comment
///   A000045 ,0,1,1,2,3,5,8,
class SequenceDb {
public:
    static SequenceDb load(const std::filesystem::path& path);
    static SequenceDb parse(std::istream& in, std::string source_name);

    const std::map<std::string, std::vector<Integer>>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::string& source() const noexcept { return source_; }
    /// One message per malformed line that was skipped.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    friend bool operator==(const SequenceDb& a, const SequenceDb& b) { return a.entries_ == b.entries_; }

private:
    std::map<std::string, std::vector<Integer>> entries_;
    std::string source_;
    std::vector<std::string> warnings_;
};

/// Env var naming the default dump location.
inline constexpr const char* kOeisPathEnv = "RIORDAN_OEIS_PATH";

struct SequenceMatch {
    std::string id;
    std::size_t offset = 0;

    friend bool operator==(const SequenceMatch&, const SequenceMatch&) = default;
};

struct IdentifyResult {
    std::vector<SequenceMatch> matches;  // ordered by A-number
    std::optional<std::string> note;
};

/// Entries containing seq[0 .. min_match) contiguously, with the first offset.
/// Non-integral queries return no matches and a NonIntegral note.
IdentifyResult identify(const SequenceDb& db, const std::vector<Rational>& seq, std::size_t min_match = 6);

}  // namespace riordan
