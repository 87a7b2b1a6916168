#include "splitcone/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace splitcone {

using nlohmann::json;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        bool blank = line.find_first_not_of(" \t,") == std::string::npos;
        if (blank)
            continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

bool numeric_cell(const std::string& s)
{
    bool digit = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digit = true;
        else if (c != ' ' && c != '\t' && c != '-' && c != '+' && c != '.' &&
                 c != '/')
            return false;
    }
    return digit;
}

Rat json_rat(const json& v, const std::string& field)
{
    try {
        if (v.is_string())
            return rat_from_string(v.get<std::string>());
        if (v.is_number_integer())
            return Rat(static_cast<long>(v.get<long long>()));
        if (v.is_object() && v.contains("num") && v.contains("den")) {
            Rat r(static_cast<long>(v["num"].get<long long>()),
                  static_cast<long>(v["den"].get<long long>()));
            r.canonicalize();
            return r;
        }
    } catch (const std::exception& e) {
        throw ParseError("field " + field + ": " + e.what());
    }
    throw ParseError("field " + field + ": expected a rational value");
}

} // namespace

DissimilarityMatrix matrix_from_csv(const std::string& text)
{
    auto rows = csv_rows(text);
    if (!rows.empty()) {
        bool header = false;
        for (const std::string& c : rows[0])
            if (!c.empty() && !numeric_cell(c))
                header = true;
        if (header)
            rows.erase(rows.begin());
    }
    if (rows.empty())
        throw ParseError("CSV matrix: no data rows");

    // Shape inference. Full square and upper-with-diagonal forms have n data
    // rows; the strictly-upper form has n-1 rows of sizes n-1, n-2, ..., 1.
    // A staircase whose leading cells are all "0" reads as upper-with-
    // diagonal, otherwise as strictly-upper.
    int n = static_cast<int>(rows.size());
    {
        const int m = static_cast<int>(rows.size());
        bool staircase = true;
        for (int r = 0; r < m; ++r)
            if (static_cast<int>(rows[r].size()) != m - r)
                staircase = false;
        if (staircase) {
            bool zero_diag = true;
            for (const auto& cells : rows) {
                try {
                    if (rat_from_string(cells.front()) != 0)
                        zero_diag = false;
                } catch (const std::exception&) {
                    zero_diag = false;
                }
            }
            if (!zero_diag)
                n = m + 1;
        }
    }
    DissimilarityMatrix d(n);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        const auto& cells = rows[r];
        // Full row (n cells) or upper-triangular tail (n-r cells starting at
        // the diagonal, or n-r-1 cells strictly above it).
        int col0;
        if (static_cast<int>(cells.size()) == n)
            col0 = 0;
        else if (static_cast<int>(cells.size()) == n - r)
            col0 = r;
        else if (static_cast<int>(cells.size()) == n - r - 1)
            col0 = r + 1;
        else
            throw ParseError("CSV matrix: row " + std::to_string(r + 1) +
                             " has " + std::to_string(cells.size()) + " cells");
        for (int c = col0; c < n; ++c) {
            const std::string& cell = cells[c - col0];
            Rat v;
            try {
                v = rat_from_string(cell);
            } catch (const std::exception&) {
                throw ParseError("CSV matrix: row " + std::to_string(r + 1) +
                                 ", cell '" + cell + "' is not a rational");
            }
            if (c == r) {
                if (v != 0)
                    throw ParseError("CSV matrix: nonzero diagonal at row " +
                                     std::to_string(r + 1));
                continue;
            }
            if (c < r) {
                if (v != d.at(c + 1, r + 1))
                    throw ParseError("CSV matrix: asymmetric at row " +
                                     std::to_string(r + 1));
                continue;
            }
            if (v < 0)
                throw ParseError("CSV matrix: negative entry at row " +
                                 std::to_string(r + 1));
            d.set(r + 1, c + 1, v);
        }
    }
    return d;
}

DissimilarityMatrix matrix_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON matrix: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("JSON matrix: missing integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 1)
        throw ParseError("JSON matrix: n must be >= 1");
    DissimilarityMatrix d(n);
    if (!j.contains("delta") || !j["delta"].is_object())
        throw ParseError("JSON matrix: missing object field 'delta'");
    for (const auto& [key, val] : j["delta"].items()) {
        int i = 0, k = 0;
        char comma = 0;
        std::istringstream ks(key);
        if (!(ks >> i >> comma >> k) || comma != ',' || i < 1 || k < 1 ||
            i > n || k > n || i == k)
            throw ParseError("JSON matrix: bad delta key '" + key + "'");
        d.set(i, k, json_rat(val, "delta[" + key + "]"));
    }
    return d;
}

DissimilarityMatrix load_matrix(const std::string& path)
{
    const std::string text = read_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return matrix_from_json(text);
    return matrix_from_csv(text);
}

SplitSystem system_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON system: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("JSON system: missing integer field 'n'");
    const int n = j["n"].get<int>();
    std::vector<Split> splits;
    if (j.contains("splits")) {
        for (const auto& s : j["splits"]) {
            if (!s.is_array() || s.size() != 2)
                throw ParseError("JSON system: each split must be [lo,hi]");
            splits.push_back(Split{s[0].get<int>(), s[1].get<int>()});
        }
    } else if (j.contains("splits_sets")) {
        for (const auto& s : j["splits_sets"]) {
            if (!s.is_array() || s.size() != 2)
                throw ParseError("JSON system: each entry must be [[a,...],[b,...]]");
            GeneralSplit gs;
            for (const auto& a : s[0])
                gs.side_a.insert(a.get<int>());
            for (const auto& b : s[1])
                gs.side_b.insert(b.get<int>());
            CanonResult cr = canonicalize(gs, n);
            if (!cr.split)
                throw ParseError("JSON system: split is not circular/canonical");
            splits.push_back(*cr.split);
        }
    } else {
        throw ParseError("JSON system: need 'splits' or 'splits_sets'");
    }
    try {
        return make_system(n, std::move(splits));
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON system: ") + e.what());
    }
}

SplitSystem load_system(const std::string& path)
{
    return system_from_json(read_file(path));
}

CRYMatrix cry_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON CRY matrix: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("JSON CRY matrix: missing integer field 'n'");
    const int n = j["n"].get<int>();
    CRYMatrix m(n);
    if (!j.contains("x") || !j["x"].is_array() ||
        static_cast<int>(j["x"].size()) != n)
        throw ParseError("JSON CRY matrix: 'x' must be an n-row array");
    for (int i = 1; i <= n; ++i) {
        const auto& row = j["x"][i - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("JSON CRY matrix: row " + std::to_string(i) +
                             " must have n entries");
        for (int k = 1; k <= n; ++k)
            m.at(i, k) = json_rat(row[k - 1], "x[" + std::to_string(i) + "][" +
                                                  std::to_string(k) + "]");
    }
    return m;
}

CRYMatrix load_cry(const std::string& path)
{
    return cry_from_json(read_file(path));
}

} // namespace splitcone
