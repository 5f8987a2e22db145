#include "ncwick/json_io.hpp"

#include <fstream>
#include <limits>

namespace ncwick {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (!j.is_object() || it == j.end()) {
        throw schema_error(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

double require_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) throw schema_error(std::string(what) + " must be a number");
    return j.get<double>();
}

std::size_t require_count(const nlohmann::json& j, const char* what) {
    if (!j.is_number_unsigned()) {
        throw schema_error(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

nlohmann::json trunc_to_json(const TruncationPolicy& t) {
    nlohmann::json j;
    j["max_len"] = t.max_len;
    if (t.max_letter != TruncationPolicy::unbounded_letter) j["max_letter"] = t.max_letter;
    if (t.drop_tol != 0.0) j["drop_tol"] = t.drop_tol;
    return j;
}

TruncationPolicy trunc_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("trunc must be an object");
    TruncationPolicy t;
    t.max_len = require_count(require(j, "max_len"), "max_len");
    if (auto it = j.find("max_letter"); it != j.end() && !it->is_null()) {
        const std::size_t m = require_count(*it, "max_letter");
        if (m == 0 || m > TruncationPolicy::unbounded_letter) {
            throw schema_error("max_letter out of range");
        }
        t.max_letter = static_cast<Word::Letter>(m);
    }
    if (auto it = j.find("drop_tol"); it != j.end() && !it->is_null()) {
        t.drop_tol = require_number(*it, "drop_tol");
        if (t.drop_tol < 0.0) throw schema_error("drop_tol must be >= 0");
    }
    return t;
}

nlohmann::json terms_to_json(const NcSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : s.terms()) {
        nlohmann::json t;
        t["word"] = w.letters();
        t["re"] = c.real();
        t["im"] = c.imag();
        terms.push_back(std::move(t));
    }
    return terms;
}

std::vector<std::pair<Word, Complex>> terms_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw schema_error("terms must be an array");
    std::vector<std::pair<Word, Complex>> out;
    out.reserve(j.size());
    for (const auto& t : j) {
        const nlohmann::json& wj = require(t, "word");
        if (!wj.is_array()) throw schema_error("word must be an array of letters");
        std::vector<Word::Letter> letters;
        letters.reserve(wj.size());
        for (const auto& l : wj) {
            const std::size_t v = require_count(l, "letter");
            if (v == 0 || v > std::numeric_limits<Word::Letter>::max()) {
                throw schema_error("letters must be in [1, 2^32)");
            }
            letters.push_back(static_cast<Word::Letter>(v));
        }
        const double re = require_number(require(t, "re"), "re");
        const double im = require_number(require(t, "im"), "im");
        out.emplace_back(Word(std::move(letters)), Complex{re, im});
    }
    return out;
}

} // namespace

nlohmann::json series_to_json(const NcSeries& s) {
    nlohmann::json j;
    j["trunc"] = trunc_to_json(s.trunc());
    j["terms"] = terms_to_json(s);
    return j;
}

NcSeries series_from_json(const nlohmann::json& j) {
    const TruncationPolicy t = trunc_from_json(require(j, "trunc"));
    return NcSeries::from_terms(terms_from_json(require(j, "terms")), t);
}

nlohmann::json matrix_to_json(const AlgebraMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["trunc"] = trunc_to_json(m.trunc());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            row.push_back(terms_to_json(m.at(i, k)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

AlgebraMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = require_count(require(j, "rows"), "rows");
    const std::size_t cols = require_count(require(j, "cols"), "cols");
    if (rows == 0 || cols == 0) throw schema_error("matrix dimensions must be positive");
    const TruncationPolicy t = trunc_from_json(require(j, "trunc"));
    const nlohmann::json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw schema_error("entries must be an array of `rows` rows");
    }
    AlgebraMatrix m(rows, cols, t);
    for (std::size_t i = 0; i < rows; ++i) {
        const nlohmann::json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw schema_error("each entries row must have `cols` term lists");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m.set(i, k, NcSeries::from_terms(terms_from_json(row[k]), t));
        }
    }
    return m;
}

nlohmann::json system_to_json(const SystemDef& sys) {
    nlohmann::json j;
    j["A"] = matrix_to_json(sys.A);
    j["B"] = matrix_to_json(sys.B);
    j["C"] = matrix_to_json(sys.C);
    j["D"] = matrix_to_json(sys.D);
    return j;
}

SystemDef system_from_json(const nlohmann::json& j) {
    return SystemDef(matrix_from_json(require(j, "A")), matrix_from_json(require(j, "B")),
                     matrix_from_json(require(j, "C")), matrix_from_json(require(j, "D")));
}

nlohmann::json power_series_to_json(const PowerSeriesSpec& phi) {
    nlohmann::json j;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Complex& c : phi.coeffs) {
        coeffs.push_back(nlohmann::json{{"re", c.real()}, {"im", c.imag()}});
    }
    j["coeffs"] = std::move(coeffs);
    if (std::isfinite(phi.radius)) j["radius"] = phi.radius;
    return j;
}

PowerSeriesSpec power_series_from_json(const nlohmann::json& j) {
    PowerSeriesSpec phi;
    const nlohmann::json& coeffs = require(j, "coeffs");
    if (!coeffs.is_array()) throw schema_error("coeffs must be an array");
    for (const auto& c : coeffs) {
        phi.coeffs.emplace_back(require_number(require(c, "re"), "re"),
                                require_number(require(c, "im"), "im"));
    }
    if (auto it = j.find("radius"); it != j.end() && !it->is_null()) {
        phi.radius = require_number(*it, "radius");
        if (!(phi.radius > 0.0)) throw schema_error("radius must be > 0");
    }
    return phi;
}

nlohmann::json matrix_sequence_to_json(const std::vector<AlgebraMatrix>& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : seq) arr.push_back(matrix_to_json(m));
    return nlohmann::json{{"sequence", std::move(arr)}};
}

std::vector<AlgebraMatrix> matrix_sequence_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = require(j, "sequence");
    if (!arr.is_array() || arr.empty()) throw schema_error("sequence must be a nonempty array");
    std::vector<AlgebraMatrix> out;
    out.reserve(arr.size());
    for (const auto& m : arr) out.push_back(matrix_from_json(m));
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    return nlohmann::json::parse(in); // throws nlohmann::json::parse_error
}

void store_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw schema_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace ncwick
