#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "swsc/analysis.hpp"
#include "swsc/params.hpp"
#include "swsc/stream.hpp"

namespace swsc {

// Text reports are one key=value pair per line; JSON mirrors the same keys.

inline nlohmann::json to_json(const CoderParams& p) {
    return {{"sigma", p.sigma}, {"lambda", p.lambda}, {"c", p.c},         {"ell", p.ell},
            {"threshold", p.threshold}, {"l_max", p.l_max}, {"width", p.width}, {"delta", delta_for(p.c, p.lambda)}};
}

inline nlohmann::json to_json(const EncodeReport& r) {
    return {{"n", r.n},
            {"payload_bits", r.payload_bits},
            {"literal_count", r.literal_count},
            {"coded_count", r.coded_count},
            {"max_codebook_size", r.max_codebook_size},
            {"ps_touches", r.ps_touches},
            {"ps_touches_max_step", r.ps_touches_max_step},
            {"bits_per_symbol", r.n ? static_cast<double>(r.payload_bits) / static_cast<double>(r.n) : 0.0}};
}

inline nlohmann::json to_json(const DecodeReport& r) {
    return {{"n", r.n},
            {"payload_bits", r.payload_bits},
            {"literal_count", r.literal_count},
            {"coded_count", r.coded_count},
            {"ps_touches", r.ps_touches},
            {"ps_touches_max_step", r.ps_touches_max_step}};
}

inline nlohmann::json to_json(const EntropyStats& s) {
    return {{"n", s.n}, {"distinct", s.distinct}, {"h0", s.h0}};
}

inline nlohmann::json to_json(const BoundCheck& b) {
    const BoundReport& r = b.report;
    return {{"lambda", r.lambda},       {"c", r.c},
            {"n", r.n},                 {"h0", r.h0},
            {"delta", r.delta},         {"main_term", r.main_term},
            {"linear_term", r.linear_term}, {"remainder", r.remainder},
            {"bound", r.bound},         {"measured_bits", r.measured_bits},
            {"slack", r.slack},         {"applicable", b.applicable},
            {"pass", b.pass}};
}

inline nlohmann::json to_json(const MemoryReport& m) {
    return {{"window", m.window},
            {"dictionary", m.dictionary},
            {"codebook", m.codebook},
            {"partial_sums", m.partial_sums},
            {"total", m.total}};
}

/// Writes a flat JSON object as key=value lines, optionally prefixing keys.
inline void write_key_values(std::ostream& os, const nlohmann::json& obj, const std::string& prefix = "") {
    for (const auto& [key, value] : obj.items()) {
        os << prefix << key << '=';
        if (value.is_number_float()) {
            std::ostringstream num;
            num << std::setprecision(10) << value.get<double>();
            os << num.str();
        } else if (value.is_string()) {
            os << value.get<std::string>();
        } else {
            os << value.dump();
        }
        os << '\n';
    }
}

}  // namespace swsc
