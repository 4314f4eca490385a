#include "lowaccess/storage.hpp"

#include "lowaccess/errors.hpp"
#include "lowaccess/r_representation.hpp"

namespace lowaccess {

EncodingMatrix EncodingMatrix::from_reduced(const ReducedCode& reduced) {
    const RRepresentation rep = RRepresentation::for_modulus(reduced.parent().modulus());
    EncodingMatrix matrix;
    matrix.m = reduced.parent().length();
    matrix.columns.reserve(reduced.kept_size());
    for (const FpVector& word : reduced.kept()) {
        std::vector<double> column(matrix.m);
        for (std::size_t j = 0; j < matrix.m; ++j) {
            column[j] = static_cast<double>(rep.forward(word[j]));
        }
        matrix.columns.push_back(std::move(column));
    }
    return matrix;
}

StorageStamp stamp_of(const EncodingMatrix& matrix, unsigned p) {
    // FNV-1a over the column coefficients, enough to tell encodings apart.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(matrix.m);
    for (const std::vector<double>& column : matrix.columns) {
        for (double c : column) {
            std::uint64_t bits;
            static_assert(sizeof(bits) == sizeof(c));
            __builtin_memcpy(&bits, &c, sizeof(bits));
            mix(bits);
        }
    }
    return StorageStamp{p, matrix.m, matrix.columns.size(), h};
}

StorageSystem StorageSystem::encode(std::span<const double> data, const ReducedCode& reduced) {
    const EncodingMatrix matrix = EncodingMatrix::from_reduced(reduced);
    return encode_with_matrix(data, matrix, stamp_of(matrix, reduced.parent().modulus()));
}

StorageSystem StorageSystem::encode_with_matrix(std::span<const double> data,
                                                const EncodingMatrix& matrix, StorageStamp stamp) {
    if (data.empty()) throw DimensionError("cannot encode empty data");
    if (matrix.m == 0) throw DimensionError("encoding matrix has zero batch length");
    for (const std::vector<double>& column : matrix.columns) {
        if (column.size() != matrix.m) {
            throw DimensionError("encoding matrix column length mismatch");
        }
    }

    StorageSystem s;
    s.p_ = stamp.p;
    s.k_ = data.size();
    s.m_ = matrix.m;
    s.t_ = (data.size() + matrix.m - 1) / matrix.m;  // zero-padded tail batch
    s.columns_ = matrix.columns.size();
    s.stamp_ = stamp;
    s.nodes_.assign(s.t_ * (s.m_ + s.columns_), 0.0);

    for (std::size_t batch = 0; batch < s.t_; ++batch) {
        const std::size_t base = batch * (s.m_ + s.columns_);
        for (std::size_t j = 0; j < s.m_; ++j) {
            const std::size_t src = batch * s.m_ + j;
            const double value = src < data.size() ? data[src] : 0.0;
            s.nodes_[base + j] = value;
            s.ones_sum_ += value;
        }
        for (std::size_t col = 0; col < s.columns_; ++col) {
            double acc = 0.0;
            for (std::size_t j = 0; j < s.m_; ++j) {
                acc += matrix.columns[col][j] * s.nodes_[base + j];
            }
            s.nodes_[base + s.m_ + col] = acc;
        }
    }
    return s;
}

double StorageSystem::node(std::size_t index) const {
    if (index == ones_node_index()) return ones_sum_;
    if (index >= nodes_.size()) throw DimensionError("node index out of range");
    return nodes_[index];
}

std::size_t StorageSystem::systematic_node(std::size_t batch, std::size_t coordinate) const {
    if (batch >= t_ || coordinate >= m_) throw DimensionError("systematic node out of range");
    return batch * (m_ + columns_) + coordinate;
}

std::size_t StorageSystem::coded_node(std::size_t batch, std::size_t column) const {
    if (batch >= t_ || column >= columns_) throw DimensionError("coded node out of range");
    return batch * (m_ + columns_) + m_ + column;
}

}  // namespace lowaccess
