#include "eductive/common/value.hpp"

#include <charconv>
#include <cstdio>

namespace eductive {

namespace {
constexpr uint8_t kTagInt = 0x01;
constexpr uint8_t kTagFloat = 0x02;
constexpr uint8_t kTagBool = 0x03;
constexpr uint8_t kTagString = 0x04;
constexpr uint8_t kTagList = 0x05;
}  // namespace

void Value::encode(ByteWriter& w) const {
    if (is_int()) {
        w.u8(kTagInt);
        w.i64(as_int());
    } else if (is_float()) {
        w.u8(kTagFloat);
        w.f64(as_float());
    } else if (is_bool()) {
        w.u8(kTagBool);
        w.u8(as_bool() ? 1 : 0);
    } else if (is_string()) {
        w.u8(kTagString);
        w.str(as_string());
    } else {
        const List& xs = as_list();
        w.u8(kTagList);
        w.u32(static_cast<uint32_t>(xs.size()));
        for (const Value& x : xs) x.encode(w);
    }
}

Value Value::decode(ByteReader& r) {
    switch (r.u8()) {
        case kTagInt:
            return Value(r.i64());
        case kTagFloat:
            return Value(r.f64());
        case kTagBool:
            return Value(r.u8() != 0);
        case kTagString:
            return Value(r.str());
        case kTagList: {
            uint32_t n = r.u32();
            List xs;
            xs.reserve(n);
            for (uint32_t i = 0; i < n; ++i) xs.push_back(decode(r));
            return Value(std::move(xs));
        }
        default:
            throw FormatError("unknown value tag");
    }
}

std::string float_to_text(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    // Keep floats visually distinct from integers.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string Value::to_text() const {
    if (is_int()) return std::to_string(as_int());
    if (is_float()) return float_to_text(as_float());
    if (is_bool()) return as_bool() ? "true" : "false";
    if (is_string()) {
        std::string out = "\"";
        for (char c : as_string()) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        return out;
    }
    std::string out = "[";
    const List& xs = as_list();
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i].to_text();
    }
    out += "]";
    return out;
}

Value Value::parse_scalar(std::string_view text) {
    if (text == "true") return Value(true);
    if (text == "false") return Value(false);
    if (text.find_first_of(".eE") != std::string_view::npos &&
        text.find_first_not_of("+-.0123456789eE") == std::string_view::npos) {
        double d{};
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec == std::errc{} && p == text.data() + text.size()) return Value(d);
    }
    int64_t i{};
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (ec == std::errc{} && p == text.data() + text.size()) return Value(i);
    throw FormatError("not a scalar value: " + std::string(text));
}

}  // namespace eductive
