#include "pik/json_io.hpp"

#include <json.hpp>

namespace pik {

namespace {

using nlohmann::json;

json coeff_to_json(const Integer& c) {
    // 2^53 bound keeps emitted numbers exactly representable for every consumer.
    static const Integer kMax = Integer(1) << 53;
    if (c <= kMax && c >= -kMax)
        return c.get_si();
    return c.get_str();
}

Integer coeff_from_json(const json& j) {
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw ValidationError("coefficient must be an integer or a decimal string");
}

json ring_to_json(const RingElem& e) {
    json coeffs = json::array();
    for (const Integer& c : e.coeffs())
        coeffs.push_back(coeff_to_json(c));
    return {{"k", e.precision().k}, {"den_exp", e.den_exp()}, {"coeffs", std::move(coeffs)}};
}

RingElem ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("den_exp") || !j.contains("coeffs"))
        throw ValidationError("ring element must be {k, den_exp, coeffs}");
    Precision k(j.at("k").get<int>());
    const auto& raw = j.at("coeffs");
    if (!raw.is_array() || static_cast<long>(raw.size()) != k.coeff_len())
        throw ValidationError("coeffs must have length 2^{k-1}");
    std::vector<Integer> coeffs;
    coeffs.reserve(raw.size());
    for (const auto& c : raw)
        coeffs.push_back(coeff_from_json(c));
    return RingElem(k, j.at("den_exp").get<long>(), std::move(coeffs));
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j)
            row.push_back(ring_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"k", m.precision().k},
            {"rows", m.rows()},
            {"cols", m.cols()},
            {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw ValidationError("matrix must be {k, rows, cols, entries}");
    Precision k(j.at("k").get<int>());
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows)
        throw ValidationError("entries must contain exactly 'rows' rows");
    std::vector<RingElem> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<long>(row.size()) != cols)
            throw ValidationError("each row must contain exactly 'cols' entries");
        for (const auto& cell : row) {
            RingElem e = ring_from_json(cell);
            if (e.precision() != k)
                throw PrecisionMismatch("matrix entry precision differs from matrix header");
            flat.push_back(std::move(e));
        }
    }
    return ExactMatrix(k, rows, cols, std::move(flat));
}

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ValidationError("malformed JSON input");
    return j;
}

} // namespace

std::string ring_to_json_text(const RingElem& e, int indent) {
    return ring_to_json(e).dump(indent);
}

RingElem ring_from_json_text(const std::string& text) {
    return ring_from_json(parse_or_throw(text));
}

std::string matrix_to_json_text(const ExactMatrix& m, int indent) {
    return matrix_to_json(m).dump(indent);
}

ExactMatrix matrix_from_json_text(const std::string& text) {
    return matrix_from_json(parse_or_throw(text));
}

} // namespace pik
