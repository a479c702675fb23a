#include "locver/bytes.hpp"

namespace locver {

void put_varint(Bytes& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

Bytes varint(std::uint64_t v) {
    Bytes out;
    put_varint(out, v);
    return out;
}

void put_length_prefixed(Bytes& out, const Bytes& s) {
    put_varint(out, s.size());
    out.insert(out.end(), s.begin(), s.end());
}

void put_byte(Bytes& out, std::uint8_t b) { out.push_back(b); }

std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (std::uint8_t c : b) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 0xf]);
    }
    return s;
}

static int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::optional<Bytes> from_hex(const std::string& s) {
    if (s.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        int hi = hex_digit(s[i]);
        int lo = hex_digit(s[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

std::uint64_t byte_string_value(const Bytes& b) {
    std::uint64_t v = 0;
    for (std::uint8_t c : b) {
        if (v > (UINT64_MAX >> 8)) return UINT64_MAX;
        v = (v << 8) | c;
    }
    return v;
}

int bit_length(std::uint64_t v) {
    if (v == 0) return 1;
    int bits = 0;
    while (v != 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

std::optional<std::uint64_t> BytesReader::read_varint() {
    if (!ok_) return std::nullopt;
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
        if (pos_ >= data_->size() || shift > 63) {
            ok_ = false;
            return std::nullopt;
        }
        std::uint8_t b = (*data_)[pos_++];
        v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
        if ((b & 0x80) == 0) break;
        shift += 7;
    }
    return v;
}

std::optional<std::uint8_t> BytesReader::read_byte() {
    if (!ok_ || pos_ >= data_->size()) {
        ok_ = false;
        return std::nullopt;
    }
    return (*data_)[pos_++];
}

std::optional<Bytes> BytesReader::read_bytes(std::size_t count) {
    if (!ok_ || data_->size() - pos_ < count) {
        ok_ = false;
        return std::nullopt;
    }
    Bytes out(data_->begin() + static_cast<std::ptrdiff_t>(pos_),
              data_->begin() + static_cast<std::ptrdiff_t>(pos_ + count));
    pos_ += count;
    return out;
}

std::optional<Bytes> BytesReader::read_length_prefixed() {
    auto len = read_varint();
    if (!len) return std::nullopt;
    if (*len > data_->size()) {  // cheap guard before the checked read
        ok_ = false;
        return std::nullopt;
    }
    return read_bytes(static_cast<std::size_t>(*len));
}

}  // namespace locver
