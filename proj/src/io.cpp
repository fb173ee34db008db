#include <pyramid/io.hpp>

#include <sstream>

#include <json.hpp>

#include <pyramid/errors.hpp>

namespace pyramid
{

using nlohmann::ordered_json;

namespace
{

ordered_json parse_json(std::string_view text)
{
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

std::vector<GaussRat> gauss_array(const ordered_json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
        throw ParseError(std::string("expected an object with array \"") + key + "\"", 0);
    }
    std::vector<GaussRat> out;
    for (const auto &v : j[key]) {
        if (v.is_string()) {
            out.push_back(GaussRat::parse(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            out.emplace_back(BigInt(v.dump()));
        } else {
            throw ParseError(std::string("entries of \"") + key + "\" must be strings", 0);
        }
    }
    return out;
}

template <typename T>
ordered_json string_array(const std::vector<T> &v)
{
    ordered_json a = ordered_json::array();
    for (const auto &x : v) {
        if constexpr (std::is_same_v<T, BigInt>) {
            a.push_back(x.get_str());
        } else {
            a.push_back(x.to_string());
        }
    }
    return a;
}

} // namespace

std::string pyramid_to_json(const PyramidRow &row)
{
    ordered_json j;
    j["n"] = row.n();
    j["entries"] = string_array(row.entries());
    return j.dump() + "\n";
}

std::string pyramid_to_json(const IntRow &row)
{
    ordered_json j;
    j["n"] = row.n;
    j["entries"] = string_array(row.entries);
    return j.dump() + "\n";
}

PyramidRow pyramid_from_json(std::string_view text)
{
    const auto j = parse_json(text);
    auto entries = gauss_array(j, "entries");
    if (entries.empty()) {
        throw ParseError("pyramid row has no entries", 0);
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long>() + 1 != static_cast<long>(entries.size())) {
            throw ParseError("\"n\" does not match the number of entries", 0);
        }
    }
    return PyramidRow(std::move(entries));
}

std::string poly_to_json(const Poly &p)
{
    ordered_json j;
    j["coeffs"] = string_array(p.coeffs());
    return j.dump() + "\n";
}

Poly poly_from_json(std::string_view text)
{
    return Poly(gauss_array(parse_json(text), "coeffs"));
}

namespace
{

template <typename Row, typename F>
std::string csv(const std::vector<Row> &rows, F entries)
{
    std::ostringstream os;
    for (const auto &r : rows) {
        bool first = true;
        for (const auto &x : entries(r)) {
            if (!first) {
                os << ',';
            }
            first = false;
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BigInt>) {
                os << x.get_str();
            } else {
                os << x.to_string();
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string rows_to_csv(const std::vector<PyramidRow> &rows)
{
    return csv(rows, [](const PyramidRow &r) -> const auto & { return r.entries(); });
}

std::string rows_to_csv(const std::vector<IntRow> &rows)
{
    return csv(rows, [](const IntRow &r) -> const auto & { return r.entries; });
}

std::string report_to_json(const CheckReport &report)
{
    ordered_json a = ordered_json::array();
    for (const auto &e : report.entries()) {
        ordered_json j;
        j["identity"] = e.identity;
        j["n"] = e.n ? ordered_json(*e.n) : ordered_json(nullptr);
        j["m"] = e.m ? ordered_json(*e.m) : ordered_json(nullptr);
        j["status"] = to_string(e.status);
        if (!e.detail.empty()) {
            j["detail"] = e.detail;
        }
        a.push_back(std::move(j));
    }
    return a.dump() + "\n";
}

} // namespace pyramid
