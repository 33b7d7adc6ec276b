#pragma once

#include <string>

#include "dirichlet/measures.hpp"
#include "dirichlet/polynomial.hpp"

namespace dirichlet {

// Polynomial wire format:
//   {"coeffs": [{"n": <int>, "re": <float>, "im": <float>}, ...]}
// indices strictly increasing; duplicates and n < 1 are rejected.
DirichletPolynomial polynomial_from_json(const std::string& text);
std::string polynomial_to_json(const DirichletPolynomial& f);

// Measure descriptor:
//   {"kind": "alpha"|"power"|"tilde", "alpha": <float>, "beta": <float>,
//    "p": <float>, "t": <float>}
// tilde uses alpha when present (else beta) as its base.
WeightMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const WeightMeasure& mu);

std::string read_file_or_stdin(const std::string& path); // "-" reads stdin
void write_file(const std::string& path, const std::string& text);

// Minimal JSON writer for payloads: doubles go out with 17 significant
// digits so re-parsing is lossless.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key = "");
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& field(const std::string& k, double v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, std::uint64_t v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, int v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, bool v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, const std::string& v) { return key(k).value(v); }
    JsonWriter& field(const std::string& k, const char* v) { return key(k).value(std::string(v)); }
    std::string str() const { return out_; }

private:
    void separator();
    std::string out_;
    bool need_comma_ = false;
};

} // namespace dirichlet
