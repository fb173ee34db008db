#ifndef PYRAMID_REPORT_HPP
#define PYRAMID_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pyramid
{

enum class CheckStatus {
    pass,
    fail,
    /// Recorded observation that is neither a pass nor a failure.
    info,
};

std::string to_string(CheckStatus s);

struct CheckEntry {
    std::string identity;
    std::optional<long> n;
    std::optional<long> m;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

/// Outcome of a verification suite: one entry per checked instance.
class CheckReport
{
public:
    void add(CheckEntry e)
    {
        m_entries.push_back(std::move(e));
    }
    /// Adds a pass/fail entry from a boolean.
    void check(std::string identity, std::optional<long> n, std::optional<long> m, bool ok, std::string detail = {});
    void merge(const CheckReport &o);

    const std::vector<CheckEntry> &entries() const
    {
        return m_entries;
    }
    std::size_t failures() const;
    bool passed() const
    {
        return failures() == 0;
    }

private:
    std::vector<CheckEntry> m_entries;
};

} // namespace pyramid

#endif
