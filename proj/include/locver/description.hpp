#pragma once

#include <optional>
#include <vector>

#include "locver/config.hpp"

namespace locver {

// A claimed picture of a configuration: an m x m boolean adjacency matrix and
// one input entry per claimed node. Valid matrices are symmetric with a zero
// diagonal; anything else does not read as a description.
struct GraphDescription {
    int m = 0;
    std::vector<std::vector<char>> matrix;  // m x m, 0/1
    std::vector<Bytes> data;

    bool operator==(const GraphDescription& other) const {
        return m == other.m && matrix == other.matrix && data == other.data;
    }
    bool edge(int i, int j) const {
        return matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
    }
    std::vector<int> row_neighbors(int i) const;  // 0-based positions j with edge(i,j)
};

// Encoding: varint m, ceil(m^2/8) matrix bytes row-major MSB-first, then m
// length-prefixed data entries.
void put_description(Bytes& out, const GraphDescription& d);
Bytes encode_description(const GraphDescription& d);

// Reads and validates a description; nullopt when the bytes do not parse or
// the matrix is not symmetric with zero diagonal. Claimed sizes are capped at
// max_m to keep adversarial payloads cheap.
std::optional<GraphDescription> read_description(BytesReader& in, int max_m = 64);

// The description of a configuration under the given vertex order
// (order[pos] = node).
GraphDescription describe(const Configuration& config, const std::vector<int>& order);

// Decodes into a configuration; nullopt when the claimed graph is not
// connected (descriptions of non-configurations fail every membership test).
std::optional<Configuration> description_to_config(const GraphDescription& d);

}  // namespace locver
