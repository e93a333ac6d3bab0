#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/partition.hpp"

namespace trgraph {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the edge-list format: first line "n m", then m lines "u v".
/// Duplicate edges are an error, not silently merged.
Graph parse_edge_list(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Emits "n m" then edges as "u v" with u < v, sorted lexicographically,
/// LF line endings. Byte-stable for golden tests.
std::string format_edge_list(const Graph& g);

/// Partition file format: k lines, line i holds the vertex ids of block i
/// sorted ascending, space-separated.
OrderedPartition parse_partition(const std::string& text);
OrderedPartition load_partition_file(const std::string& path);
std::string format_partition(const OrderedPartition& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace trgraph
