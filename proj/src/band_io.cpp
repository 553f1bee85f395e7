#include "hepta/band_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hepta {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "hepta-band-v1";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Rational> parse_band_array(const json& doc, const char* name) {
    if (!doc.contains(name)) throw ParseError(std::string("missing band array \"") + name + "\"");
    const json& arr = doc.at(name);
    if (!arr.is_array()) throw ParseError(std::string("band \"") + name + "\" is not an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& v = arr[i];
        try {
            if (v.is_string()) {
                out.push_back(Rational::parse(v.get<std::string>()));
            } else if (v.is_number_integer()) {
                out.push_back(Rational(v.get<long>()));
            } else {
                throw ParseError("expected a rational string or integer");
            }
        } catch (const ParseError& e) {
            throw ParseError(std::string(name) + "[" + std::to_string(i + 1) + "]: " + e.what());
        }
    }
    return out;
}

}  // namespace

std::string to_string(MatrixKind kind) { return kind == MatrixKind::cyclic ? "cyclic" : "anti"; }

MatrixKind parse_kind(const std::string& text) {
    if (text == "cyclic") return MatrixKind::cyclic;
    if (text == "anti") return MatrixKind::anti;
    throw ParseError("kind must be \"cyclic\" or \"anti\", got \"" + text + "\"");
}

std::size_t loaded_size(const LoadedMatrix& m) {
    return std::visit([](const auto& x) { return x.size(); }, m);
}

MatrixKind loaded_kind(const LoadedMatrix& m) {
    return std::holds_alternative<CyclicHeptaMatrix>(m) ? MatrixKind::cyclic : MatrixKind::anti;
}

const CyclicHeptaMatrix& loaded_core(const LoadedMatrix& m) {
    if (const auto* c = std::get_if<CyclicHeptaMatrix>(&m)) return *c;
    return std::get<AntiCyclicHeptaMatrix>(m).core();
}

DenseMatrix<Rational> loaded_dense(const LoadedMatrix& m) {
    return std::visit([](const auto& x) { return x.to_dense(); }, m);
}

LoadedMatrix parse_band_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid band file: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("band file is not an object");
    if (!doc.contains("format") || !doc["format"].is_string() ||
        doc["format"].get<std::string>() != kFormatTag)
        throw ParseError(std::string("missing or wrong format tag, expected \"") + kFormatTag +
                         "\"");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("missing \"kind\" field");
    const MatrixKind kind = parse_kind(doc["kind"].get<std::string>());
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer \"n\" field");
    const long n_raw = doc["n"].get<long>();
    if (n_raw < 0) throw ParseError("negative n");
    const std::size_t n = static_cast<std::size_t>(n_raw);

    Bands bands;
    bands.diag = parse_band_array(doc, "d");
    bands.super1 = parse_band_array(doc, "a");
    bands.super2 = parse_band_array(doc, "A");
    bands.super3 = parse_band_array(doc, "C");
    bands.sub1 = parse_band_array(doc, "b");
    bands.sub2 = parse_band_array(doc, "B");
    bands.sub3 = parse_band_array(doc, "D");

    CyclicHeptaMatrix core = CyclicHeptaMatrix::from_bands(n, std::move(bands));
    if (kind == MatrixKind::anti) return AntiCyclicHeptaMatrix(std::move(core));
    return core;
}

LoadedMatrix load_band_file(const std::filesystem::path& path) {
    try {
        return parse_band_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string band_file_text(const CyclicHeptaMatrix& core, MatrixKind kind) {
    const auto strings = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const auto& x : v) arr.push_back(x.str());
        return arr;
    };
    json doc;
    doc["format"] = kFormatTag;
    doc["kind"] = to_string(kind);
    doc["n"] = core.size();
    doc["d"] = strings(core.bands().diag);
    doc["a"] = strings(core.bands().super1);
    doc["A"] = strings(core.bands().super2);
    doc["C"] = strings(core.bands().super3);
    doc["b"] = strings(core.bands().sub1);
    doc["B"] = strings(core.bands().sub2);
    doc["D"] = strings(core.bands().sub3);
    return doc.dump(2) + "\n";
}

void save_band_file(const std::filesystem::path& path, const CyclicHeptaMatrix& core,
                    MatrixKind kind) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + path.string() + "\"");
    out << band_file_text(core, kind);
}

std::vector<Rational> load_rhs_file(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::vector<Rational> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty()) continue;
        try {
            out.push_back(Rational::parse(trimmed));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string csv_text(const DenseMatrix<Rational>& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m(i, j).str();
        }
        os << "\n";
    }
    return os.str();
}

void save_csv(const std::filesystem::path& path, const DenseMatrix<Rational>& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + path.string() + "\"");
    out << csv_text(m);
}

DenseMatrix<Rational> parse_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string token;
        while (std::getline(ls, token, ',')) {
            try {
                row.push_back(Rational::parse(token));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(lineno) + ": ragged row of " +
                             std::to_string(row.size()) + " values, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty CSV document");
    DenseMatrix<Rational> m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

DenseMatrix<Rational> load_csv(const std::filesystem::path& path) {
    try {
        return parse_csv_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace hepta
