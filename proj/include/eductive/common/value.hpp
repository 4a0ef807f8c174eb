#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "eductive/common/bytes.hpp"

namespace eductive {

/// Runtime value. The language evaluator only ever produces the first three
/// alternatives; strings and lists exist for procedural demand payloads
/// (feature vectors, serialized artifacts) that flow through the same store.
class Value {
public:
    using List = std::vector<Value>;

    Value() : rep_(int64_t{0}) {}
    Value(int64_t v) : rep_(v) {}
    Value(double v) : rep_(v) {}
    Value(bool v) : rep_(v) {}
    Value(std::string v) : rep_(std::move(v)) {}
    Value(const char* v) : rep_(std::string(v)) {}
    Value(List v) : rep_(std::move(v)) {}

    bool is_int() const { return std::holds_alternative<int64_t>(rep_); }
    bool is_float() const { return std::holds_alternative<double>(rep_); }
    bool is_bool() const { return std::holds_alternative<bool>(rep_); }
    bool is_string() const { return std::holds_alternative<std::string>(rep_); }
    bool is_list() const { return std::holds_alternative<List>(rep_); }
    bool is_numeric() const { return is_int() || is_float(); }

    int64_t as_int() const { return std::get<int64_t>(rep_); }
    double as_float() const { return std::get<double>(rep_); }
    bool as_bool() const { return std::get<bool>(rep_); }
    const std::string& as_string() const { return std::get<std::string>(rep_); }
    const List& as_list() const { return std::get<List>(rep_); }

    /// Numeric read with int-to-float promotion.
    double numeric() const { return is_int() ? static_cast<double>(as_int()) : as_float(); }

    bool operator==(const Value& other) const { return rep_ == other.rep_; }

    /// Tagged big-endian encoding; the hash input for demand signatures.
    void encode(ByteWriter& w) const;
    static Value decode(ByteReader& r);

    Bytes encoded() const {
        ByteWriter w;
        encode(w);
        return w.take();
    }

    /// Stable text form: decimal integers, shortest round-trippable floats,
    /// true/false, quoted strings, bracketed lists.
    std::string to_text() const;

    /// Inverse of to_text for the scalar forms used by CLI demand specs.
    static Value parse_scalar(std::string_view text);

private:
    std::variant<int64_t, double, bool, std::string, List> rep_;
};

/// Renders a double with the shortest representation that round-trips.
std::string float_to_text(double v);

}  // namespace eductive
