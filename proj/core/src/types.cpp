#include "ubkit/types.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ubkit {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("SystemShape: need at least one party");
    }
    for (int d : dims_) {
        if (d < 1) {
            throw std::invalid_argument("SystemShape: local dimensions must be positive");
        }
        if (dims_.size() > 1 && d < 2) {
            throw std::invalid_argument(
                "SystemShape: multipartite shapes require every local dimension >= 2");
        }
    }
    for (int d : dims_) {
        total_ *= d;
    }
}

SystemShape SystemShape::qubits(int count) {
    return SystemShape(std::vector<int>(static_cast<std::size_t>(count), 2));
}

int SystemShape::local_dim(int party) const {
    if (party < 0 || party >= parties()) {
        throw std::invalid_argument("SystemShape: party index out of range");
    }
    return dims_[static_cast<std::size_t>(party)];
}

int SystemShape::stride(int party) const {
    int s = 1;
    for (int k = party + 1; k < parties(); ++k) {
        s *= dims_[static_cast<std::size_t>(k)];
    }
    return s;
}

int SystemShape::flat_index(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != parties()) {
        throw std::invalid_argument("SystemShape: digit count does not match party count");
    }
    int j = 0;
    for (int k = 0; k < parties(); ++k) {
        int dk = digits[static_cast<std::size_t>(k)];
        if (dk < 0 || dk >= local_dim(k)) {
            throw std::invalid_argument("SystemShape: digit out of range");
        }
        j += dk * stride(k);
    }
    return j;
}

int SystemShape::digit(int flat, int party) const {
    return (flat / stride(party)) % local_dim(party);
}

int SystemShape::rest_index(int flat, int party) const {
    const int s = stride(party);
    const int high = flat / (s * local_dim(party));
    const int low = flat % s;
    return high * s + low;
}

std::string SystemShape::to_string() const {
    std::ostringstream out;
    for (int k = 0; k < parties(); ++k) {
        if (k > 0) out << "x";
        out << local_dim(k);
    }
    return out.str();
}

namespace {
constexpr double kNormTolerance = 1e-12;
}

PureState::PureState(SystemShape shape, Vec amplitudes, std::string label)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)), label_(std::move(label)) {
    if (amplitudes_.size() != shape_.total_dim()) {
        throw std::invalid_argument("PureState: amplitude length does not match shape " +
                                    shape_.to_string());
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("PureState: amplitudes are not unit norm (|norm-1| = " +
                                    std::to_string(std::abs(norm - 1.0)) + ")");
    }
}

PureState PureState::normalized(SystemShape shape, Vec amplitudes, std::string label) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("PureState: cannot normalize the zero vector");
    }
    return PureState(std::move(shape), amplitudes / norm, std::move(label));
}

PureState PureState::with_label(std::string label) const {
    return PureState(shape_, amplitudes_, std::move(label));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.shape() != b.shape()) {
        throw std::invalid_argument("fidelity: shape mismatch");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes()));
}

StateSet::StateSet(SystemShape shape, std::vector<PureState> members, std::string name)
    : shape_(std::move(shape)), members_(std::move(members)), name_(std::move(name)) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].shape() != shape_) {
            throw std::invalid_argument("StateSet: member " + std::to_string(i + 1) +
                                        " does not match shape " + shape_.to_string());
        }
        if (members_[i].label().empty()) {
            members_[i] = members_[i].with_label("s" + std::to_string(i + 1));
        }
        if (!seen.insert(members_[i].label()).second) {
            throw std::invalid_argument("StateSet: duplicate label '" + members_[i].label() + "'");
        }
    }
}

const PureState& StateSet::at(int index) const {
    if (index < 0 || index >= size()) {
        throw std::invalid_argument("StateSet: member index out of range");
    }
    return members_[static_cast<std::size_t>(index)];
}

Mat StateSet::member_matrix() const {
    Mat m(shape_.total_dim(), size());
    for (int i = 0; i < size(); ++i) {
        m.col(i) = members_[static_cast<std::size_t>(i)].amplitudes();
    }
    return m;
}

StateSet StateSet::subset(const std::vector<int>& indices) const {
    std::vector<PureState> picked;
    picked.reserve(indices.size());
    for (int i : indices) {
        picked.push_back(at(i));
    }
    return StateSet(shape_, std::move(picked), name_);
}

StateSet StateSet::without(int index) const {
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i) {
        if (i != index) keep.push_back(i);
    }
    if (static_cast<int>(keep.size()) == size()) {
        throw std::invalid_argument("StateSet: member index out of range");
    }
    return subset(keep);
}

SubspaceBasis::SubspaceBasis(SystemShape shape, Mat orthonormal_columns)
    : shape_(std::move(shape)), basis_(std::move(orthonormal_columns)) {
    if (basis_.size() > 0 && basis_.rows() != shape_.total_dim()) {
        throw std::invalid_argument("SubspaceBasis: row count does not match shape");
    }
    if (basis_.rows() == 0) {
        basis_.resize(shape_.total_dim(), 0);
    }
    const Mat gram = basis_.adjoint() * basis_;
    const Mat eye = Mat::Identity(gram.rows(), gram.cols());
    if (gram.size() > 0 && (gram - eye).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("SubspaceBasis: columns are not orthonormal");
    }
}

Mat SubspaceBasis::projector() const {
    if (dim() == 0) {
        return Mat::Zero(shape_.total_dim(), shape_.total_dim());
    }
    return basis_ * basis_.adjoint();
}

}  // namespace ubkit
