#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locver {

// Bit-strings are byte sequences. Structured certificates serialize into these
// with canonical encodings, so equality of encoded objects is bit-equality.
using Bytes = std::vector<std::uint8_t>;

void put_varint(Bytes& out, std::uint64_t v);
Bytes varint(std::uint64_t v);
void put_length_prefixed(Bytes& out, const Bytes& s);
void put_byte(Bytes& out, std::uint8_t b);

std::string to_hex(const Bytes& b);
std::optional<Bytes> from_hex(const std::string& s);

// Big-endian integer value of a byte string; empty string reads as 0.
// Values that do not fit in 64 bits saturate to UINT64_MAX.
std::uint64_t byte_string_value(const Bytes& b);

// Bit-length of the canonical binary encoding of v (no leading zeros, |0| = 1).
int bit_length(std::uint64_t v);

// Sequential decoder over a byte string. All reads are checked; a failed read
// returns nullopt and leaves the reader in a failed state.
class BytesReader {
  public:
    explicit BytesReader(const Bytes& data) : data_(&data) {}

    std::optional<std::uint64_t> read_varint();
    std::optional<std::uint8_t> read_byte();
    std::optional<Bytes> read_bytes(std::size_t count);
    std::optional<Bytes> read_length_prefixed();

    bool at_end() const { return ok_ && pos_ == data_->size(); }
    bool failed() const { return !ok_; }
    std::size_t remaining() const { return ok_ ? data_->size() - pos_ : 0; }

  private:
    const Bytes* data_;
    std::size_t pos_ = 0;
    bool ok_ = true;
};

}  // namespace locver
