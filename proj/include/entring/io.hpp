#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "entring/states.hpp"

namespace entring {

/// 17 significant digits, enough to round-trip any double exactly.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

inline Eigen::MatrixXd parse_real_matrix(const nlohmann::json& j, int rows, int cols,
                                         const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(rows) + " rows");
    }
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument(std::string(what) + ": expected " +
                                        std::to_string(cols) + " columns");
        }
        for (int k = 0; k < cols; ++k) {
            if (!row[k].is_number()) {
                throw std::invalid_argument(std::string(what) + ": non-numeric entry");
            }
            m(i, k) = row[k].get<double>();
        }
    }
    return m;
}

inline Eigen::Vector3d parse_vector3(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument(std::string(what) + ": expected a 3-vector");
    }
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number()) {
            throw std::invalid_argument(std::string(what) + ": non-numeric entry");
        }
        v(i) = j[i].get<double>();
    }
    return v;
}

}  // namespace detail

/// Reads {"dim": d, "unit_trace": bool, "re": [[..]], "im": [[..]]}.
/// "im" may be omitted for real matrices. Shape errors and a unit_trace
/// flag contradicted by the data both throw.
inline Eigen::MatrixXcd state_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("state: expected a JSON object");
    const auto& dim_field = detail::require_field(j, "dim");
    if (!dim_field.is_number_integer()) {
        throw std::invalid_argument("state: \"dim\" must be an integer");
    }
    const int d = dim_field.get<int>();
    if (d < 2 || d > 16) throw std::invalid_argument("state: dim out of range [2,16]");
    Eigen::MatrixXd re = detail::parse_real_matrix(detail::require_field(j, "re"), d, d, "re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(d, d);
    if (j.contains("im")) im = detail::parse_real_matrix(j["im"], d, d, "im");
    Eigen::MatrixXcd rho(d, d);
    rho.real() = re;
    rho.imag() = im;
    if (j.contains("unit_trace") && j["unit_trace"].is_boolean() &&
        j["unit_trace"].get<bool>()) {
        if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
            throw std::invalid_argument("state: unit_trace flag set but trace differs from 1");
        }
    }
    return rho;
}

inline nlohmann::ordered_json state_to_json(const Eigen::MatrixXcd& rho) {
    const int d = static_cast<int>(rho.rows());
    nlohmann::ordered_json j;
    j["dim"] = d;
    j["unit_trace"] = std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-12;
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (int i = 0; i < d; ++i) {
        nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
        nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
        for (int k = 0; k < d; ++k) {
            re_row.push_back(rho(i, k).real());
            im_row.push_back(rho(i, k).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

/// Reads {"a": [..3], "b": [..3], "C": [[..3]..3]}.
inline FanoForm fano_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("fano: expected a JSON object");
    FanoForm f;
    f.a = detail::parse_vector3(detail::require_field(j, "a"), "a");
    f.b = detail::parse_vector3(detail::require_field(j, "b"), "b");
    f.C = detail::parse_real_matrix(detail::require_field(j, "C"), 3, 3, "C");
    return f;
}

inline nlohmann::ordered_json fano_to_json(const FanoForm& f) {
    nlohmann::ordered_json j;
    j["a"] = {f.a(0), f.a(1), f.a(2)};
    j["b"] = {f.b(0), f.b(1), f.b(2)};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({f.C(i, 0), f.C(i, 1), f.C(i, 2)});
    j["C"] = std::move(rows);
    return j;
}

}  // namespace entring
