#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "iwasawa/elementary_module.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/newform.hpp"

namespace iwasawa {

namespace detail {

inline nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

inline long long get_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<long long>();
}

}  // namespace detail

/// Module spec record:
/// { "p": int, "f": int, "free_rank": int, "mu_exponents": [int],
///   "torsion": [ { "poly": [c0, c1, ..., 1], "beta": int } ] }
/// "f" defaults to 1 when absent; extra fields are ignored.
inline ElementaryModule module_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("module spec must be a JSON object");
    long long p = detail::get_int(j, "p");
    long long f = j.contains("f") ? detail::get_int(j, "f") : 1;
    long long free_rank = j.contains("free_rank") ? detail::get_int(j, "free_rank") : 0;
    std::vector<int> mu;
    if (j.contains("mu_exponents")) {
        if (!j["mu_exponents"].is_array()) throw ParseError("mu_exponents must be an array");
        for (const auto& x : j["mu_exponents"]) {
            if (!x.is_number_integer()) throw ParseError("mu_exponents entries must be integers");
            mu.push_back(x.get<int>());
        }
    }
    std::vector<TorsionPart> parts;
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) throw ParseError("torsion must be an array");
        for (const auto& t : j["torsion"]) {
            if (!t.is_object() || !t.contains("poly") || !t["poly"].is_array())
                throw ParseError("torsion entries must be objects with a poly array");
            std::vector<BigInt> c;
            for (const auto& x : t["poly"]) {
                if (x.is_number_integer())
                    c.emplace_back(x.get<long long>());
                else if (x.is_string())
                    c.push_back(BigInt::from_string(x.get<std::string>()));
                else
                    throw ParseError("poly coefficients must be integers or decimal strings");
            }
            long long beta = detail::get_int(t, "beta");
            parts.emplace_back(DistinguishedPoly(static_cast<std::uint64_t>(p), IntPoly(std::move(c))),
                               static_cast<int>(beta));
        }
    }
    return ElementaryModule(static_cast<std::uint64_t>(p), static_cast<int>(f),
                            static_cast<int>(free_rank), std::move(mu), std::move(parts));
}

inline ElementaryModule load_module_spec(const std::string& path) {
    return module_from_json(detail::parse_file(path));
}

/// Newform record { "label": str, "N": int, "k": int, "M": int }; a file may
/// hold one record or an array. Unknown fields (coefficient data and so on)
/// are preserved by ignoring them.
inline NewformRecord newform_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("newform record must be a JSON object");
    std::string label = j.contains("label") && j["label"].is_string()
                            ? j["label"].get<std::string>()
                            : std::string("unlabeled");
    long long n = detail::get_int(j, "N");
    long long k = detail::get_int(j, "k");
    long long m = detail::get_int(j, "M");
    if (n < 1 || m < 1) throw ParseError("N and M must be positive");
    return NewformRecord(label, static_cast<std::uint64_t>(n), static_cast<int>(k),
                         static_cast<std::uint64_t>(m));
}

inline std::vector<NewformRecord> load_newform_records(const std::string& path) {
    nlohmann::json j = detail::parse_file(path);
    std::vector<NewformRecord> out;
    if (j.is_array())
        for (const auto& x : j) out.push_back(newform_from_json(x));
    else
        out.push_back(newform_from_json(j));
    if (out.empty()) throw ParseError("no newform records in " + path);
    return out;
}

}  // namespace iwasawa
