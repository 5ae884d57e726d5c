#include "hyperlat/json_io.hpp"

#include "hyperlat/errors.hpp"

namespace hyperlat::jsonio {

namespace {

const Int& double_safe_limit() {
    static const Int limit = [] {
        Int x;
        mpz_ui_pow_ui(x.get_mpz_t(), 2, 53);
        return x;
    }();
    return limit;
}

bool valid_decimal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

nlohmann::json int_json(const Int& x) {
    Int a = abs(x);
    if (a < double_safe_limit()) {
        return nlohmann::json(x.get_si());
    }
    return nlohmann::json(x.get_str());
}

Int json_int(const nlohmann::json& j) {
    if (j.is_number_unsigned()) {
        return Int(std::to_string(j.get<unsigned long long>()));
    }
    if (j.is_number_integer()) {
        return Int(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!valid_decimal(s)) {
            throw input_error("MalformedInput", "not a decimal integer: '" + s + "'");
        }
        return Int(s);
    }
    throw input_error("MalformedInput", "expected an integer (number or decimal string)");
}

nlohmann::json vec_json(const IntVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const Int& x : v) {
        out.push_back(int_json(x));
    }
    return out;
}

IntVec json_vec(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw input_error("MalformedInput", "expected an array of integers");
    }
    IntVec out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(json_int(e));
    }
    return out;
}

nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(int_json(m.at(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix json_matrix(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw input_error("MalformedInput", "expected a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array()) {
        throw input_error("MalformedInput", "expected rows to be arrays");
    }
    const std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw input_error("MalformedInput", "ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(i, c) = json_int(j[i][c]);
        }
    }
    return m;
}

nlohmann::json poly_json(const IntPolynomial& p) {
    return nlohmann::json{{"coeffs", vec_json(p.coeffs())}};
}

IntPolynomial json_poly(const nlohmann::json& j) {
    return IntPolynomial(json_vec(field(j, "coeffs")));
}

nlohmann::json lattice_json(const Lattice& l) {
    return nlohmann::json{
        {"label", l.label},
        {"rank", l.rank()},
        {"gram", matrix_json(l.gram)},
    };
}

Lattice json_lattice(const nlohmann::json& j) {
    const std::string label = string_field(j, "label");
    IntMatrix gram = json_matrix(field(j, "gram"));
    Int rank = json_int(field(j, "rank"));
    if (rank != static_cast<long>(gram.rows())) {
        throw input_error("MalformedInput",
                          "declared rank " + rank.get_str() + " does not match the Gram matrix");
    }
    return make_lattice(label, gram);
}

nlohmann::json isometry_json(const Isometry& f) {
    return nlohmann::json{{"lattice", f.owner}, {"matrix", matrix_json(f.matrix)}};
}

Isometry json_isometry(const nlohmann::json& j, const Lattice& owner) {
    const std::string label = string_field(j, "lattice");
    if (label != owner.label) {
        throw input_error("OwnerMismatch",
                          "isometry declares lattice '" + label + "', expected '" + owner.label + "'");
    }
    return verify_isometry(owner, json_matrix(field(j, "matrix")));
}

nlohmann::json embedding_json(const Embedding& e) {
    return nlohmann::json{{"lattice", e.ambient.label}, {"basis", matrix_json(e.basis)}};
}

Embedding json_embedding(const nlohmann::json& j, const Lattice& ambient) {
    const std::string label = string_field(j, "lattice");
    if (label != ambient.label) {
        throw input_error("OwnerMismatch",
                          "embedding declares lattice '" + label + "', expected '" + ambient.label + "'");
    }
    return make_embedding(ambient, json_matrix(field(j, "basis")));
}

nlohmann::json report_json(const FactorReport& r) {
    nlohmann::json cyc = nlohmann::json::array();
    for (const auto& [n, mult] : r.cyclotomic) {
        cyc.push_back(nlohmann::json{{"n", n}, {"mult", mult}});
    }
    nlohmann::json salem;
    if (r.salem) {
        salem = nlohmann::json{{"coeffs", vec_json(r.salem->first.coeffs())},
                               {"mult", r.salem->second}};
    } else {
        salem = nullptr;
    }
    return nlohmann::json{
        {"input", poly_json(r.input)},       {"cyclotomic", std::move(cyc)},
        {"salem", std::move(salem)},         {"residual", poly_json(r.residual)},
        {"degree", r.degree},                {"flags", r.flags},
    };
}

FactorReport json_report(const nlohmann::json& j) {
    FactorReport r;
    r.input = json_poly(field(j, "input"));
    const nlohmann::json& cyc = field(j, "cyclotomic");
    if (!cyc.is_array()) {
        throw input_error("MalformedInput", "'cyclotomic' must be an array");
    }
    for (const auto& e : cyc) {
        Int n = json_int(field(e, "n"));
        Int mult = json_int(field(e, "mult"));
        r.cyclotomic.emplace_back(n.get_ui(), mult.get_si());
    }
    const nlohmann::json& salem = field(j, "salem");
    if (!salem.is_null()) {
        IntPolynomial sp(json_vec(field(salem, "coeffs")));
        Int mult = json_int(field(salem, "mult"));
        r.salem = std::make_pair(sp, mult.get_si());
    }
    r.residual = json_poly(field(j, "residual"));
    r.degree = json_int(field(j, "degree")).get_si();
    const nlohmann::json& flags = field(j, "flags");
    if (!flags.is_array()) {
        throw input_error("MalformedInput", "'flags' must be an array");
    }
    for (const auto& f : flags) {
        if (!f.is_string()) {
            throw input_error("MalformedInput", "'flags' entries must be strings");
        }
        r.flags.push_back(f.get<std::string>());
    }
    return r;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) {
        throw input_error("MalformedInput", std::string("expected an object with key '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw input_error("MalformedInput", std::string("missing key '") + key + "'");
    }
    return *it;
}

std::string string_field(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = field(j, key);
    if (!v.is_string()) {
        throw input_error("MalformedInput", std::string("key '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace hyperlat::jsonio
