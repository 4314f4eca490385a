#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lowaccess/reduced_code.hpp"

namespace lowaccess {

/// Real encoding matrix M = [I | B] kept implicitly: only the coded
/// columns B are materialized, the identity block is the systematic
/// layout. Column j holds the combination coefficients applied to one
/// batch of m data values.
struct EncodingMatrix {
    std::size_t m = 0;
    std::vector<std::vector<double>> columns;

    /// Columns are the signed representations of the kept codewords, in
    /// canonical (sorted) order.
    static EncodingMatrix from_reduced(const ReducedCode& reduced);
};

/// Identifies which encoding a plan or storage was built from, so that
/// mismatched pairs fail loudly instead of combining garbage.
struct StorageStamp {
    unsigned p = 0;
    std::size_t m = 0;
    std::size_t columns = 0;
    std::uint64_t column_hash = 0;

    friend bool operator==(const StorageStamp&, const StorageStamp&) = default;
};

StorageStamp stamp_of(const EncodingMatrix& matrix, unsigned p);

/// Simulated node array: t batches, each holding m systematic values
/// followed by the coded combinations. Read-only after encoding. The
/// all-ones aggregate (sum of the data) is computed at encoding time but
/// only exposed as an extra node when a shifted or universal query asks
/// for it; it is excluded from node_count().
class StorageSystem {
  public:
    static StorageSystem encode(std::span<const double> data, const ReducedCode& reduced);
    static StorageSystem encode_with_matrix(std::span<const double> data,
                                            const EncodingMatrix& matrix, StorageStamp stamp);

    std::size_t data_length() const { return k_; }
    std::size_t padded_length() const { return t_ * m_; }
    std::size_t batch_count() const { return t_; }
    std::size_t batch_length() const { return m_; }
    std::size_t coded_columns() const { return columns_; }

    /// t * (m + columns), excluding the aggregate node.
    std::size_t node_count() const { return nodes_.size(); }
    double node(std::size_t index) const;

    std::size_t systematic_node(std::size_t batch, std::size_t coordinate) const;
    std::size_t coded_node(std::size_t batch, std::size_t column) const;

    std::size_t ones_node_index() const { return nodes_.size(); }
    double ones_node_value() const { return ones_sum_; }

    const StorageStamp& stamp() const { return stamp_; }
    const std::vector<double>& nodes() const { return nodes_; }

  private:
    StorageSystem() = default;

    unsigned p_ = 0;
    std::size_t k_ = 0;  // original data length
    std::size_t t_ = 0;
    std::size_t m_ = 0;
    std::size_t columns_ = 0;
    std::vector<double> nodes_;
    double ones_sum_ = 0.0;
    StorageStamp stamp_;
};

}  // namespace lowaccess
