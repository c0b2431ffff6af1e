#include "render.hpp"

#include <fstream>
#include <iostream>
#include <limits>

namespace cli {

using sheafreg::Int;

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json dim_to_json(const sheafreg::DimRange& v) {
    if (v.exact())
        return int_to_json(v.lo);
    json j;
    j["lo"] = int_to_json(v.lo);
    j["hi"] = v.hi ? int_to_json(*v.hi) : json(nullptr);
    return j;
}

std::string dim_to_text(const sheafreg::DimRange& v) {
    return v.str();
}

json poly_to_json(const sheafreg::RatPoly& p, const std::string& var) {
    json j;
    j["display"] = p.str(var);
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(sheafreg::to_string(p.coeff(i)));
    j["coefficients"] = coeffs;
    j["variable"] = var;
    return j;
}

json record(const std::string& command, json inputs, json results, json axioms) {
    json rec;
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    rec["results"] = std::move(results);
    rec["axioms"] = std::move(axioms);
    rec["version"] = kVersion;
    return rec;
}

void emit(const json& rec, const std::string& table_text, const std::string& csv_text,
          const OutputOptions& opts) {
    std::string body;
    if (opts.format == "json")
        body = rec.dump(2) + "\n";
    else if (opts.format == "csv")
        body = csv_text;
    else
        body = table_text;
    if (opts.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out)
        throw sheafreg::domain_error("cannot open output file " + opts.out_path);
    out << body;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                line += "  ";
            line += row[c];
            line.append(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_betti(const sheafreg::BettiTable& t) {
    if (t.empty())
        return "(empty table)\n";
    int imax = t.max_homological_index();
    int dmin = std::numeric_limits<int>::max();
    int dmax = std::numeric_limits<int>::min();
    for (const auto& [key, v] : t.entries()) {
        dmin = std::min(dmin, key.second - key.first);
        dmax = std::max(dmax, key.second - key.first);
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {""};
    for (int i = 0; i <= imax; ++i)
        header.push_back(std::to_string(i));
    rows.push_back(header);
    for (int d = dmin; d <= dmax; ++d) {
        std::vector<std::string> row = {std::to_string(d) + ":"};
        for (int i = 0; i <= imax; ++i) {
            Int beta = t.entry(i, d + i);
            row.push_back(beta == 0 ? "." : beta.str());
        }
        rows.push_back(row);
    }
    return render_aligned(rows);
}

} // namespace cli
