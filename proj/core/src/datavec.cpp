#include "odlin/datavec.hpp"

#include <algorithm>
#include <map>

namespace odlin {

DataVector::DataVector(std::size_t dimension, std::vector<DataPoint> points)
    : dim_(dimension), pts_(std::move(points)) {
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (pts_[i].value.size() != dim_)
            throw input_error("data vector value has wrong dimension");
        if (pts_[i].value.is_zero())
            throw input_error("data vector lists a zero value; support must be exact");
        if (i > 0 && !(pts_[i - 1].datum < pts_[i].datum))
            throw input_error("data vector points must be in strictly increasing datum order");
    }
}

DataVector DataVector::normalized(std::size_t dimension, std::vector<DataPoint> points) {
    std::map<Rat, RatVec> acc;
    for (auto& p : points) {
        auto it = acc.find(p.datum);
        if (it == acc.end())
            acc.emplace(p.datum, p.value);
        else
            it->second += p.value;
    }
    std::vector<DataPoint> out;
    for (auto& [datum, value] : acc)
        if (!value.is_zero()) out.push_back({datum, value});
    return DataVector(dimension, std::move(out));
}

bool DataVector::is_integral() const {
    for (const auto& p : pts_)
        if (!p.value.is_integral()) return false;
    return true;
}

Instance::Instance(std::size_t dim, DataVector tgt, std::vector<DataVector> gens)
    : dimension(dim), target(std::move(tgt)), generators(std::move(gens)) {
    if (generators.empty()) throw input_error("instance needs at least one generator");
    if (target.dimension() != dimension || !target.is_integral())
        throw input_error("instance target must be integral and of the stated dimension");
    for (const auto& g : generators)
        if (g.dimension() != dimension || !g.is_integral())
            throw input_error("instance generators must be integral and of the stated dimension");
}

MatrixInstance::MatrixInstance(std::size_t dim, RatMat tgt, std::vector<RatMat> gens)
    : dimension(dim), target(std::move(tgt)), generators(std::move(gens)) {
    if (target.rows() != dimension) throw input_error("target matrix row dimension mismatch");
    for (const auto& g : generators) {
        if (g.rows() != dimension) throw input_error("generator matrix row dimension mismatch");
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g.col(j).is_zero())
                throw input_error("generator matrix has a zero column");
    }
}

RatMat to_matrix(const DataVector& v) {
    RatMat m(v.dimension(), v.support_size());
    for (std::size_t j = 0; j < v.support_size(); ++j) m.set_col(j, v.points()[j].value);
    return m;
}

namespace {

void extensions_rec(const RatMat& m, std::size_t c_total, std::size_t next_col,
                    std::vector<std::size_t>& placement, std::vector<RatMat>& out) {
    if (placement.size() == m.cols()) {
        out.push_back(place_columns(m, placement, c_total));
        return;
    }
    std::size_t need = m.cols() - placement.size();
    for (std::size_t p = next_col; p + need <= c_total; ++p) {
        placement.push_back(p);
        extensions_rec(m, c_total, p + 1, placement, out);
        placement.pop_back();
    }
}

}  // namespace

std::vector<RatMat> zero_extensions_up_to(const RatMat& m, std::size_t c_max) {
    if (c_max < m.cols()) throw input_error("zero_extensions_up_to: c_max below column count");
    std::vector<RatMat> out;
    for (std::size_t c = m.cols(); c <= c_max; ++c) {
        std::vector<std::size_t> placement;
        extensions_rec(m, c, 0, placement, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RatVec undata(const DataVector& v) {
    RatVec s(v.dimension());
    for (const auto& p : v.points()) s += p.value;
    return s;
}

RatVec undata(const RatMat& m) {
    RatVec s(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.col(j);
    return s;
}

std::vector<RatVec> compon(const DataVector& v) {
    std::vector<RatVec> out;
    for (const auto& p : v.points()) out.push_back(p.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RatVec> compon(const RatMat& m) {
    std::vector<RatVec> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.col(j).is_zero()) out.push_back(m.col(j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MatrixInstance instance_to_matrix_problem(const Instance& inst) {
    std::vector<RatMat> gens;
    gens.reserve(inst.generators.size());
    for (const auto& g : inst.generators) gens.push_back(to_matrix(g));
    return MatrixInstance(inst.dimension, to_matrix(inst.target), std::move(gens));
}

Instance matrix_problem_to_instance(const MatrixInstance& mi) {
    auto mat_to_dv = [](const RatMat& m) {
        std::vector<DataPoint> pts;
        for (std::size_t j = 0; j < m.cols(); ++j)
            pts.push_back({Rat(static_cast<long>(j + 1)), m.col(j)});
        return DataVector(m.rows(), std::move(pts));
    };
    std::vector<DataVector> gens;
    for (const auto& g : mi.generators) gens.push_back(mat_to_dv(g));
    return Instance(mi.dimension, mat_to_dv(mi.target), std::move(gens));
}

RatMat place_columns(const RatMat& m, const std::vector<std::size_t>& placement,
                     std::size_t slot_count) {
    if (placement.size() != m.cols())
        throw input_error("placement arity does not match column count");
    for (std::size_t i = 0; i < placement.size(); ++i) {
        if (placement[i] >= slot_count) throw input_error("placement slot out of range");
        if (i > 0 && placement[i - 1] >= placement[i])
            throw input_error("placement must be strictly increasing");
    }
    RatMat out(m.rows(), slot_count);
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(placement[j], m.col(j));
    return out;
}

RatMat shift_embed(const DataVector& v, const std::vector<std::size_t>& placement,
                   std::size_t slot_count) {
    return place_columns(to_matrix(v), placement, slot_count);
}

DataVector matrix_to_data_vector(const RatMat& m) {
    std::vector<DataPoint> pts;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.col(j).is_zero()) pts.push_back({Rat(static_cast<long>(j + 1)), m.col(j)});
    return DataVector(m.rows(), std::move(pts));
}

}  // namespace odlin
