#pragma once

#include <vector>

#include "odlin/mat.hpp"

namespace odlin {

struct DataPoint {
    Rat datum;    // only the relative order of data is semantically meaningful
    RatVec value; // length = dimension, never all-zero
};

// Finitely supported map from an ordered data domain to rational d-tuples.
// Points are kept in strictly increasing datum order and the support is
// exactly the listed data.
class DataVector {
public:
    explicit DataVector(std::size_t dimension) : dim_(dimension) {}
    DataVector(std::size_t dimension, std::vector<DataPoint> points);

    // Sums duplicate data and drops zero values instead of rejecting them.
    static DataVector normalized(std::size_t dimension, std::vector<DataPoint> points);

    std::size_t dimension() const { return dim_; }
    const std::vector<DataPoint>& points() const { return pts_; }
    std::size_t support_size() const { return pts_.size(); }
    bool is_zero() const { return pts_.empty(); }
    bool is_integral() const;

    friend bool operator==(const DataVector& a, const DataVector& b) {
        return a.dim_ == b.dim_ && a.pts_.size() == b.pts_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.pts_.size(); ++i)
                       if (a.pts_[i].datum != b.pts_[i].datum || a.pts_[i].value != b.pts_[i].value)
                           return false;
                   return true;
               }();
    }

private:
    std::size_t dim_;
    std::vector<DataPoint> pts_;
};

// Problem instance: a target data vector and a nonempty generator set, all
// integral and of shared dimension.
struct Instance {
    std::size_t dimension;
    DataVector target;
    std::vector<DataVector> generators;

    Instance(std::size_t dim, DataVector tgt, std::vector<DataVector> gens);
};

// Matrix encoding of an instance: one d x |supp| matrix per data vector.
struct MatrixInstance {
    std::size_t dimension;
    RatMat target;
    std::vector<RatMat> generators;

    MatrixInstance(std::size_t dim, RatMat tgt, std::vector<RatMat> gens);
};

// d x |supp(v)| matrix whose j-th column is the value at the j-th smallest
// support datum.
RatMat to_matrix(const DataVector& v);

// All 0-extensions of m with column dimension <= c_max, deduplicated.
std::vector<RatMat> zero_extensions_up_to(const RatMat& m, std::size_t c_max);

// Componentwise sum of all support values.
RatVec undata(const DataVector& v);
RatVec undata(const RatMat& m);

// Deduplicated set of nonzero support values.
std::vector<RatVec> compon(const DataVector& v);
std::vector<RatVec> compon(const RatMat& m);

MatrixInstance instance_to_matrix_problem(const Instance& inst);

// Inverse encoding with canonical data values 1, 2, 3, ...; order-isomorphic
// to any instance that produced the matrices.
Instance matrix_problem_to_instance(const MatrixInstance& mi);

// 0-extension of to_matrix(v) with column i placed at slot placement[i].
// The placement must be strictly increasing into [0, slot_count).
RatMat shift_embed(const DataVector& v, const std::vector<std::size_t>& placement,
                   std::size_t slot_count);
RatMat place_columns(const RatMat& m, const std::vector<std::size_t>& placement,
                     std::size_t slot_count);

// Reads a d x c matrix back as a data vector over data 1..c (zero columns
// dropped). Used to express placement-shift invariance.
DataVector matrix_to_data_vector(const RatMat& m);

}  // namespace odlin
