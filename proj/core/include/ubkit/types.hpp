// Core value types: system shapes, pure states, state sets, subspace bases.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ubkit {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Ordered list of local dimensions (d_1,...,d_K), party 1 first.
/// Multipartite shapes require every d_k >= 2; a unipartite shape allows d_1 >= 1.
class SystemShape {
public:
    explicit SystemShape(std::vector<int> dims);
    static SystemShape qubits(int count);

    int parties() const { return static_cast<int>(dims_.size()); }
    int local_dim(int party) const;
    int total_dim() const { return total_; }
    /// Product of the local dimensions after `party` (party 1, index 0, is most significant).
    int stride(int party) const;
    const std::vector<int>& dims() const { return dims_; }

    /// Flat index of a multi-index, row-major with party 0 most significant.
    int flat_index(const std::vector<int>& digits) const;
    /// Digit of `flat` belonging to `party`.
    int digit(int flat, int party) const;
    /// Flat index over the remaining parties once `party` is removed, preserving order.
    int rest_index(int flat, int party) const;

    bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }
    bool operator!=(const SystemShape& other) const { return !(*this == other); }
    std::string to_string() const;  // e.g. "2x2x3"

private:
    std::vector<int> dims_;
    int total_ = 1;
};

/// Unit-norm state vector on a SystemShape.
/// Amplitude index convention: j = sum_k j_k * stride(k).
class PureState {
public:
    PureState(SystemShape shape, Vec amplitudes, std::string label = "");
    /// Rescales `amplitudes` to unit norm before constructing.
    static PureState normalized(SystemShape shape, Vec amplitudes, std::string label = "");

    const SystemShape& shape() const { return shape_; }
    const Vec& amplitudes() const { return amplitudes_; }
    const std::string& label() const { return label_; }
    PureState with_label(std::string label) const;

private:
    SystemShape shape_;
    Vec amplitudes_;
    std::string label_;
};

/// |<a|b>|.
double fidelity(const PureState& a, const PureState& b);

/// Ordered collection of states sharing one shape. Labels are unique; empty
/// labels are filled in as "s<index>".
class StateSet {
public:
    StateSet(SystemShape shape, std::vector<PureState> members, std::string name = "");

    const SystemShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(members_.size()); }
    const PureState& at(int index) const;
    const std::vector<PureState>& members() const { return members_; }
    const std::string& name() const { return name_; }

    /// d x m matrix whose columns are the member amplitudes.
    Mat member_matrix() const;
    /// Members at `indices`, in the given order.
    StateSet subset(const std::vector<int>& indices) const;
    /// All members except `index`.
    StateSet without(int index) const;

private:
    SystemShape shape_;
    std::vector<PureState> members_;
    std::string name_;
};

/// Orthonormal basis of a subspace (columns of `basis()`), possibly empty.
class SubspaceBasis {
public:
    SubspaceBasis(SystemShape shape, Mat orthonormal_columns);

    const SystemShape& shape() const { return shape_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const { return basis_; }
    /// d x d projector onto the subspace.
    Mat projector() const;

private:
    SystemShape shape_;
    Mat basis_;
};

}  // namespace ubkit
