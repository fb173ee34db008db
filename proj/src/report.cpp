#include <pyramid/report.hpp>

#include <algorithm>

namespace pyramid
{

std::string to_string(CheckStatus s)
{
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::info:
            return "info";
    }
    return "unknown";
}

void CheckReport::check(std::string identity, std::optional<long> n, std::optional<long> m, bool ok,
                        std::string detail)
{
    m_entries.push_back(
        CheckEntry{std::move(identity), n, m, ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void CheckReport::merge(const CheckReport &o)
{
    m_entries.insert(m_entries.end(), o.m_entries.begin(), o.m_entries.end());
}

std::size_t CheckReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(m_entries.begin(), m_entries.end(),
                                                  [](const CheckEntry &e) { return e.status == CheckStatus::fail; }));
}

} // namespace pyramid
