#include "wschatten/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wschatten/errors.hpp"

namespace wschatten {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

std::size_t positive_dimension(const json& doc, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end()) throw InvalidInput(std::string("missing field \"") + field + "\"");
    if (!it->is_number_integer()) throw InvalidInput(std::string("\"") + field + "\" must be an integer");
    if (it->get<long long>() < 1) throw InvalidInput(std::string("\"") + field + "\" must be >= 1");
    return it->get<std::size_t>();
}

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object()) throw InvalidInput("matrix file must be a JSON object");
    const std::size_t rows = positive_dimension(doc, "rows");
    const std::size_t cols = positive_dimension(doc, "cols");
    const auto data = doc.find("data");
    if (data == doc.end()) throw InvalidInput("missing field \"data\"");
    if (!data->is_array()) throw InvalidInput("\"data\" must be an array of [re, im] pairs");
    if (data->size() != rows * cols) {
        throw InvalidInput("\"data\" has " + std::to_string(data->size()) + " entries, expected rows*cols = " +
                           std::to_string(rows * cols));
    }
    std::vector<Complex> entries;
    entries.reserve(data->size());
    for (std::size_t i = 0; i < data->size(); ++i) {
        const json& z = (*data)[i];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            throw InvalidInput("data[" + std::to_string(i) + "] must be a [re, im] pair of numbers");
        }
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

SingularSpectrum spectrum_from_json(const json& doc) {
    if (!doc.is_array()) throw InvalidInput("spectrum file must be a JSON array of numbers");
    std::vector<double> values;
    values.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number()) throw InvalidInput("spectrum[" + std::to_string(i) + "] is not a number");
        values.push_back(doc[i].get<double>());
    }
    return SingularSpectrum(std::move(values));
}

} // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
    return matrix_from_json(parse_document(text));
}

std::string matrix_to_json(const ComplexMatrix& a) {
    json data = json::array();
    for (const auto& z : a.entries()) data.push_back({z.real(), z.imag()});
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}}.dump();
}

SingularSpectrum parse_spectrum_json(std::string_view text) {
    return spectrum_from_json(parse_document(text));
}

std::string spectrum_to_json(const SingularSpectrum& s) {
    return json(std::vector<double>(s.values().begin(), s.values().end())).dump();
}

OperatorInput parse_operator_json(std::string_view text) {
    const json doc = parse_document(text);
    if (doc.is_object()) return matrix_from_json(doc);
    if (doc.is_array()) return spectrum_from_json(doc);
    throw InvalidInput("input must be a matrix object or a spectrum array");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace wschatten
