#pragma once

#include <random>
#include <string>
#include <vector>

#include "ecid/io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(ECID_DATA_DIR) + "/" + name; }

inline ecid::Group a4() { return ecid::group_from_json(ecid::load_json_arg(data_path("A4.json"))); }
inline ecid::Group sl23() { return ecid::group_from_json(ecid::load_json_arg(data_path("SL23.json"))); }
inline ecid::FieldPtr gf25() { return ecid::FiniteField::make(5, 2, std::vector<ecid::u64>{2, 4, 1}); }
inline ecid::FieldPtr gf(ecid::u64 p, unsigned degree = 1) { return ecid::FiniteField::make(p, degree); }

inline std::vector<std::string> a4_listed_digits() {
    return ecid::load_json_arg(data_path("A4_primitives.json")).at("digits").get<std::vector<std::string>>();
}

inline std::vector<ecid::AlgebraElement> sl23_idempotents(const ecid::FieldPtr& f, const ecid::Group& h) {
    std::vector<ecid::AlgebraElement> out;
    for (const char* name : {"sl23_e1.json", "sl23_e2.json", "sl23_e3.json"}) {
        out.push_back(ecid::element_from_json(ecid::load_json_arg(data_path(name)), f, h));
    }
    return out;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eedec1dULL ^ salt); }

}  // namespace fixtures
