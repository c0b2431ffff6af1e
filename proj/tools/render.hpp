#pragma once

#include "sheafreg/betti.hpp"
#include "sheafreg/cohtable.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings, so emitted documents re-parse to the same value.
json int_to_json(const sheafreg::Int& v);

json dim_to_json(const sheafreg::DimRange& v);
std::string dim_to_text(const sheafreg::DimRange& v);

json poly_to_json(const sheafreg::RatPoly& p, const std::string& var);

/// The common output record: command, echoed inputs, results, axioms,
/// version. Identical inputs produce byte-identical JSON.
json record(const std::string& command, json inputs, json results,
            json axioms = json::array());

struct OutputOptions {
    std::string format = "table";
    std::string out_path;
};

/// Writes either the rendered text or the JSON/CSV form of the record.
void emit(const json& rec, const std::string& table_text, const std::string& csv_text,
          const OutputOptions& opts);

/// Macaulay-style diagonal layout: rows are j - i, columns homological.
std::string render_betti(const sheafreg::BettiTable& t);

std::string render_aligned(const std::vector<std::vector<std::string>>& rows);

} // namespace cli
