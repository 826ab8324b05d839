#include "qweyl/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qweyl {

namespace {

using nlohmann::json;

long long int_param(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw UsageError("missing parameter " + name);
    try {
        size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("parameter " + name + " must be an integer, got '" + it->second +
                         "'");
    }
}

std::vector<long long> int_list_param(const ParamMap& params, const std::string& name,
                                      char sep) {
    auto it = params.find(name);
    if (it == params.end()) throw UsageError("missing parameter " + name);
    std::vector<long long> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("parameter " + name + " must be a list of integers, got '" +
                             it->second + "'");
        }
    }
    if (out.empty()) throw UsageError("parameter " + name + " is empty");
    return out;
}

BraidingMatrix super_a11(long long n) {
    if (n <= 2) throw UsageError("super-A11 needs N > 2");
    // [[-1, -z], [-1, -1]] with z = e^{2 pi i / N}.
    auto half = RootOfUnity::from_fraction(1, 2);
    auto minus_z = RootOfUnity::from_fraction(1, 2) * RootOfUnity::from_fraction(1, n);
    return BraidingMatrix(2, {half, minus_z, half, half});
}

BraidingMatrix cartan_matrix_braiding(const std::vector<std::vector<long long>>& c,
                                      const std::vector<long long>& d, long long order) {
    size_t theta = c.size();
    if (order < 1) throw UsageError("q order must be positive");
    if (d.size() != theta) throw UsageError("symmetrizer length must match the rank");
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j)
            if (d[i] * c[i][j] != d[j] * c[j][i])
                throw UsageError("d does not symmetrize C");
    std::vector<RootOfUnity> entries;
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j)
            entries.push_back(RootOfUnity::from_fraction(d[i] * c[i][j], order));
    return BraidingMatrix(theta, std::move(entries));
}

std::vector<std::vector<long long>> parse_cartan_rows(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        rows.emplace_back();
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            try {
                size_t pos = 0;
                rows.back().push_back(std::stoll(cell, &pos));
                if (pos != cell.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw UsageError("bad Cartan matrix cell '" + cell + "'");
            }
        }
    }
    if (rows.empty()) throw UsageError("empty Cartan matrix");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw UsageError("Cartan matrix must be square");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][i] != 2) throw UsageError("Cartan diagonal must be 2");
        for (size_t j = 0; j < rows.size(); ++j)
            if (i != j && rows[i][j] > 0)
                throw UsageError("off-diagonal Cartan entries must be <= 0");
    }
    return rows;
}

}  // namespace

std::vector<std::string> catalog_keys() {
    return {"super-A11",    "super-A11-p", "super-A11-r", "super-A11-t", "super-A11-pt",
            "super-A11-rt", "cartan-A2",   "cartan-B2",   "cartan"};
}

BraidingMatrix catalog_matrix(const std::string& key, const ParamMap& params) {
    if (key == "super-A11") return super_a11(int_param(params, "N"));
    if (key == "super-A11-p") return super_a11(int_param(params, "N")).reflect(0);
    if (key == "super-A11-r") return super_a11(int_param(params, "N")).reflect(1);
    if (key == "super-A11-t") return super_a11(int_param(params, "N")).transpose();
    if (key == "super-A11-pt")
        return super_a11(int_param(params, "N")).reflect(0).transpose();
    if (key == "super-A11-rt")
        return super_a11(int_param(params, "N")).reflect(1).transpose();
    if (key == "cartan-A2")
        return cartan_matrix_braiding({{2, -1}, {-1, 2}}, {1, 1}, int_param(params, "q"));
    if (key == "cartan-B2")
        return cartan_matrix_braiding({{2, -1}, {-2, 2}}, {2, 1}, int_param(params, "q"));
    if (key == "cartan") {
        auto it = params.find("C");
        if (it == params.end()) throw UsageError("catalog 'cartan' needs C=<rows>");
        auto c = parse_cartan_rows(it->second);
        auto d = int_list_param(params, "d", ',');
        return cartan_matrix_braiding(c, d, int_param(params, "q"));
    }
    throw UsageError("unknown catalog key '" + key + "'; known: super-A11[(-p|-r|-t|-pt|-rt)], cartan-A2, cartan-B2, cartan");
}

BraidingMatrix parse_matrix_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("matrix JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("theta") || !doc.contains("entries"))
        throw UsageError("matrix JSON needs fields 'theta' and 'entries'");
    if (!doc["theta"].is_number_integer() || doc["theta"].get<long long>() < 1)
        throw UsageError("field 'theta' must be a positive integer");
    size_t theta = doc["theta"].get<size_t>();
    const json& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != theta)
        throw UsageError("field 'entries' must be an array of " + std::to_string(theta) +
                         " rows");
    std::vector<RootOfUnity> entries;
    for (size_t i = 0; i < theta; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != theta)
            throw UsageError("entries row " + std::to_string(i) + " must have " +
                             std::to_string(theta) + " cells");
        for (size_t j = 0; j < theta; ++j) {
            if (!row[j].is_string())
                throw UsageError("entries[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] must be a string exponent \"a/N\"");
            entries.push_back(RootOfUnity::parse(row[j].get<std::string>()));
        }
    }
    return BraidingMatrix(theta, std::move(entries));
}

std::string matrix_to_json(const BraidingMatrix& q) {
    json rows = json::array();
    for (size_t i = 0; i < q.theta(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < q.theta(); ++j) row.push_back(q.at(i, j).str());
        rows.push_back(row);
    }
    json doc{{"theta", q.theta()}, {"entries", rows}};
    return doc.dump(2);
}

BraidingMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open matrix file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

}  // namespace qweyl
