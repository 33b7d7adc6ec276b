#include "dirichlet/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dirichlet/errors.hpp"

namespace dirichlet {

using nlohmann::json;

DirichletPolynomial polynomial_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw precondition_error(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw precondition_error("polynomial JSON: expected {\"coeffs\": [...]}");
    std::vector<std::uint64_t> idx;
    std::vector<Complex> coef;
    for (const auto& item : j["coeffs"]) {
        if (!item.contains("n")) throw precondition_error("polynomial JSON: entry without n");
        if (!item["n"].is_number_integer() || item["n"].get<long long>() < 1)
            throw precondition_error("polynomial JSON: indices must be integers >= 1");
        const std::uint64_t n = item["n"].get<std::uint64_t>();
        if (!idx.empty() && n <= idx.back())
            throw precondition_error("polynomial JSON: indices must be strictly increasing");
        const double re = item.value("re", 0.0);
        const double im = item.value("im", 0.0);
        if (re != 0.0 || im != 0.0) {
            idx.push_back(n);
            coef.emplace_back(re, im);
        }
    }
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

std::string polynomial_to_json(const DirichletPolynomial& f) {
    JsonWriter w;
    w.begin_object().begin_array("coeffs");
    for (std::size_t i = 0; i < f.size(); ++i) {
        w.begin_object()
            .field("n", static_cast<std::uint64_t>(f.indices()[i]))
            .field("re", f.coefficients()[i].real())
            .field("im", f.coefficients()[i].imag())
            .end_object();
    }
    w.end_array().end_object();
    return w.str();
}

WeightMeasure measure_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw precondition_error(std::string("measure JSON: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "alpha") {
        if (!j.contains("alpha")) throw precondition_error("measure JSON: alpha kind needs alpha");
        return WeightMeasure::alpha_density(j["alpha"].get<double>());
    }
    if (kind == "power") {
        if (!j.contains("beta")) throw precondition_error("measure JSON: power kind needs beta");
        return WeightMeasure::power(j["beta"].get<double>());
    }
    if (kind == "tilde") {
        if (!j.contains("p") || !j.contains("t"))
            throw precondition_error("measure JSON: tilde kind needs p and t");
        WeightMeasure base = j.contains("alpha")
                                 ? WeightMeasure::alpha_density(j["alpha"].get<double>())
                                 : WeightMeasure::power(j.value("beta", 0.0));
        return WeightMeasure::tilde(std::move(base), j["p"].get<double>(), j["t"].get<double>());
    }
    throw precondition_error("measure JSON: kind must be alpha, power, or tilde");
}

std::string measure_to_json(const WeightMeasure& mu) {
    JsonWriter w;
    w.begin_object();
    switch (mu.kind()) {
    case WeightMeasure::Kind::Alpha:
        w.field("kind", "alpha").field("alpha", mu.alpha());
        break;
    case WeightMeasure::Kind::Power:
        w.field("kind", "power").field("beta", mu.beta());
        break;
    case WeightMeasure::Kind::Tilde:
        w.field("kind", "tilde");
        if (mu.base().kind() == WeightMeasure::Kind::Alpha)
            w.field("alpha", mu.base().alpha());
        else
            w.field("beta", mu.base().beta());
        w.field("p", mu.tilde_p()).field("t", mu.tilde_t());
        break;
    }
    w.end_object();
    return w.str();
}

std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot open " + path + " for writing");
    out << text;
}

// --- JsonWriter ------------------------------------------------------------

void JsonWriter::separator() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
    if (!k.empty()) key(k);
    separator();
    out_ += '[';
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separator();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separator();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    out_ += '"';
    for (char c : v) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default: out_ += c;
        }
    }
    out_ += '"';
    need_comma_ = true;
    return *this;
}

} // namespace dirichlet
