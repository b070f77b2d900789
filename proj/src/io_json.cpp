#include "conal/io_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace conal {

namespace {

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array()) throw InvalidInputError(std::string("system JSON: ") + name +
                                               " must be an array of rows");
    auto rows = static_cast<int>(j.size());
    int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) {
            throw InvalidInputError(std::string("system JSON: ragged matrix ") + name);
        }
        for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array() || j.size() % 2 == 0) {
        throw InvalidInputError(std::string("spectrum JSON: ") + name +
                                " must be an odd-length coefficient array c_{-d}..c_d");
    }
    std::vector<double> c;
    for (const auto& v : j) c.push_back(v.get<double>());
    return LaurentPolynomial(static_cast<int>(j.size() / 2), std::move(c));
}

}  // namespace

nlohmann::json state_space_to_json(const StateSpace& sys) {
    return {{"a", mat_to_json(sys.A)},
            {"b", mat_to_json(sys.B)},
            {"c", mat_to_json(sys.C)},
            {"d", mat_to_json(sys.D)}};
}

StateSpace state_space_from_json(const nlohmann::json& j) {
    return StateSpace(mat_from_json(j.at("a"), "a"), mat_from_json(j.at("b"), "b"),
                      mat_from_json(j.at("c"), "c"), mat_from_json(j.at("d"), "d"));
}

nlohmann::json scalar_spectrum_to_json(const ScalarRationalSpectrum& phi) {
    return {{"num", phi.num.c}, {"den", phi.den.c}};
}

ScalarRationalSpectrum scalar_spectrum_from_json(const nlohmann::json& j) {
    ScalarRationalSpectrum phi;
    phi.num = laurent_from_json(j.at("num"), "num");
    phi.den = laurent_from_json(j.at("den"), "den");
    return phi;
}

std::string sampled_spectrum_to_csv(const SampledSpectrum& phi) {
    std::ostringstream out;
    out.precision(17);
    int d = phi.dim();
    out << "theta";
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out << ",re_" << i << "_" << j << ",im_" << i << "_" << j;
    }
    out << "\n";
    for (int k = 0; k < phi.grid.n; ++k) {
        out << phi.grid.theta(k);
        const CMat& v = phi.values[static_cast<std::size_t>(k)];
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) out << "," << v(i, j).real() << "," << v(i, j).imag();
        }
        out << "\n";
    }
    return out.str();
}

SampledSpectrum sampled_spectrum_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("spectrum CSV: empty input");
    int cols = 1;
    for (char ch : line) cols += ch == ',';
    int d = static_cast<int>(std::lround(std::sqrt((cols - 1) / 2.0)));
    if (cols != 1 + 2 * d * d) throw InvalidInputError("spectrum CSV: bad column count");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (static_cast<int>(row.size()) != cols) {
            throw InvalidInputError("spectrum CSV: row/header column mismatch");
        }
        rows.push_back(std::move(row));
    }
    SampledSpectrum out;
    out.grid.n = static_cast<int>(rows.size());
    if (out.grid.n == 0) throw InvalidInputError("spectrum CSV: no data rows");
    for (const auto& row : rows) {
        CMat v(d, d);
        int idx = 1;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                v(i, j) = Complex(row[idx], row[idx + 1]);
                idx += 2;
            }
        }
        out.values.push_back(std::move(v));
    }
    return out;
}

nlohmann::json distance_result_to_json(const DistanceResult& r) {
    nlohmann::json j = {{"value", r.value},
                        {"M12", r.m12},
                        {"M21", r.m21},
                        {"path", r.path_used == MetricPath::Rational ? "rational" : "grid"},
                        {"peak12", r.peak12},
                        {"peak21", r.peak21}};
    if (!r.finite()) j["value"] = "inf";
    if (!std::isfinite(r.m12)) j["M12"] = "inf";
    if (!std::isfinite(r.m21)) j["M21"] = "inf";
    return j;
}

nlohmann::json norm_result_to_json(const NormResult& r) {
    return {{"value", r.value},
            {"peak_frequency", r.peak_frequency},
            {"method", r.method == NormMethod::Bisection ? "bisection" : "grid"},
            {"interval", {r.lo, r.hi}}};
}

SpectrumInput read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidInputError("empty spectrum file " + path);
    if (text[first] != '{' && text[first] != '[') return sampled_spectrum_from_csv(text);
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("a")) return state_space_from_json(j);
    if (j.contains("num")) return scalar_spectrum_from_json(j);
    throw InvalidInputError("spectrum JSON: expected keys a/b/c/d or num/den in " + path);
}

void write_spectrum_file(const std::string& path, const SpectrumInput& phi) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open " + path);
    if (const auto* s = std::get_if<ScalarRationalSpectrum>(&phi)) {
        out << scalar_spectrum_to_json(*s).dump(2) << "\n";
    } else if (const auto* w = std::get_if<StateSpace>(&phi)) {
        out << state_space_to_json(*w).dump(2) << "\n";
    } else {
        out << sampled_spectrum_to_csv(std::get<SampledSpectrum>(phi));
    }
}

}  // namespace conal
