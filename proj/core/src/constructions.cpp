#include "ubkit/constructions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ubkit/linalg.hpp"

namespace ubkit {

cplx ExtendedComplex::value() const {
    if (infinite_) {
        throw std::invalid_argument("ExtendedComplex: infinity has no finite value");
    }
    return value_;
}

std::string format_complex(cplx value) {
    auto format_real = [](double x) {
        std::ostringstream out;
        if (x == static_cast<long long>(x) && std::abs(x) < 1e15) {
            out << static_cast<long long>(x);
        } else {
            out.precision(12);
            out << x;
        }
        return out.str();
    };
    if (value.imag() == 0.0) {
        return format_real(value.real());
    }
    std::string out;
    if (value.real() != 0.0) {
        out += format_real(value.real());
        if (value.imag() > 0.0) out += "+";
    }
    out += format_real(value.imag()) + "i";
    return out;
}

std::string ExtendedComplex::to_string() const {
    return infinite_ ? "inf" : format_complex(value_);
}

std::string format_tuple(const IndexTuple& tuple) {
    std::string out;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k > 0) out += ",";
        out += tuple[k].to_string();
    }
    return out;
}

PureState vandermonde_local(int d, const ExtendedComplex& x) {
    if (d < 1) {
        throw std::invalid_argument("vandermonde_local: dimension must be >= 1");
    }
    const SystemShape shape({d});
    Vec amps = Vec::Zero(d);
    if (x.is_infinite()) {
        amps(d - 1) = 1.0;
        return PureState(shape, std::move(amps));
    }
    cplx power = 1.0;
    for (int j = 0; j < d; ++j) {
        amps(j) = power;
        power *= x.value();
    }
    return PureState::normalized(shape, std::move(amps));
}

PureState vandermonde_product(const SystemShape& shape, const IndexTuple& lambda) {
    if (static_cast<int>(lambda.size()) != shape.parties()) {
        throw std::invalid_argument("vandermonde_product: tuple length must equal party count");
    }
    std::vector<Vec> factors;
    factors.reserve(lambda.size());
    for (int k = 0; k < shape.parties(); ++k) {
        factors.push_back(
            vandermonde_local(shape.local_dim(k), lambda[static_cast<std::size_t>(k)])
                .amplitudes());
    }
    return tensor_product(shape, factors, "psi(" + format_tuple(lambda) + ")");
}

StateSet minimal_gupb(const SystemShape& shape, const std::vector<IndexTuple>& index_set) {
    const int n = lower_bound_N(shape);
    if (static_cast<int>(index_set.size()) != n) {
        throw std::invalid_argument("minimal_gupb: index set must have exactly N = " +
                                    std::to_string(n) + " tuples, got " +
                                    std::to_string(index_set.size()));
    }
    for (const auto& tuple : index_set) {
        if (static_cast<int>(tuple.size()) != shape.parties()) {
            throw std::invalid_argument("minimal_gupb: tuple length must equal party count");
        }
    }
    for (int k = 0; k < shape.parties(); ++k) {
        for (std::size_t m = 0; m < index_set.size(); ++m) {
            for (std::size_t p = m + 1; p < index_set.size(); ++p) {
                const auto& a = index_set[m][static_cast<std::size_t>(k)];
                const auto& b = index_set[p][static_cast<std::size_t>(k)];
                if (a == b) {
                    throw std::invalid_argument(
                        "minimal_gupb: index set is not entrywise distinct: party " +
                        std::to_string(k + 1) + " repeats value " + a.to_string() +
                        " in tuples " + std::to_string(m + 1) + " and " + std::to_string(p + 1));
                }
            }
        }
    }
    std::vector<PureState> members;
    members.reserve(index_set.size());
    for (const auto& tuple : index_set) {
        members.push_back(vandermonde_product(shape, tuple));
    }
    return StateSet(shape, std::move(members), "minimal-gupb");
}

std::vector<IndexTuple> default_index_set(const SystemShape& shape) {
    const int n = lower_bound_N(shape);
    std::vector<IndexTuple> tuples;
    tuples.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n - 1; ++j) {
        tuples.emplace_back(shape.parties(),
                            ExtendedComplex::finite(static_cast<double>(j)));
    }
    tuples.emplace_back(shape.parties(), ExtendedComplex::infinity());
    return tuples;
}

PureState global_vandermonde_state(const SystemShape& shape, cplx x) {
    const int d = shape.total_dim();
    Vec amps(d);
    cplx power = 1.0;
    for (int j = 0; j < d; ++j) {
        amps(j) = power;
        power *= x;
    }
    return PureState::normalized(shape, std::move(amps), "Psi(" + format_complex(x) + ")");
}

StateSet theorem2_basis(const SystemShape& shape, const std::vector<cplx>& points) {
    const int d = shape.total_dim();
    if (static_cast<int>(points.size()) != d) {
        throw std::invalid_argument("theorem2_basis: need exactly d = " + std::to_string(d) +
                                    " pairwise distinct complex numbers, got " +
                                    std::to_string(points.size()));
    }
    constexpr double kCollisionTol = 1e-12;
    for (int k = 0; k < shape.parties(); ++k) {
        const int power = shape.stride(k);
        for (int m = 0; m < d; ++m) {
            for (int n = m + 1; n < d; ++n) {
                const cplx pm = std::pow(points[static_cast<std::size_t>(m)], power);
                const cplx pn = std::pow(points[static_cast<std::size_t>(n)], power);
                if (std::abs(pm - pn) <= kCollisionTol) {
                    throw std::invalid_argument(
                        "theorem2_basis: power collision violates the pairwise-distinct "
                        "precondition: x" + std::to_string(m + 1) + "^" + std::to_string(power) +
                        " = x" + std::to_string(n + 1) + "^" + std::to_string(power) +
                        " at party " + std::to_string(k + 1));
                }
            }
        }
    }
    std::vector<PureState> members;
    members.reserve(points.size());
    for (const cplx& x : points) {
        members.push_back(global_vandermonde_state(shape, x));
    }
    return StateSet(shape, std::move(members), "theorem2-basis");
}

std::vector<cplx> default_theorem2_points(const SystemShape& shape) {
    std::vector<cplx> points;
    points.reserve(static_cast<std::size_t>(shape.total_dim()));
    for (int j = 1; j <= shape.total_dim(); ++j) {
        points.emplace_back(static_cast<double>(j), 0.0);
    }
    return points;
}

PureState max_entangled_state(int d, int m, int n) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled_state: d must be >= 2");
    }
    if (m < 0 || m >= d || n < 0 || n >= d) {
        throw std::invalid_argument("max_entangled_state: indices (m,n) out of range 0..d-1");
    }
    const SystemShape shape({d, d});
    Vec amps = Vec::Zero(d * d);
    const double theta = 2.0 * std::numbers::pi / d;
    for (int k = 0; k < d; ++k) {
        const cplx omega_kn = std::polar(1.0, theta * k * n);
        amps(k * d + (k + m) % d) = omega_kn;
    }
    return PureState::normalized(shape, std::move(amps),
                                 "Phi(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

StateSet cross_set(int d) {
    if (d < 2) {
        throw std::invalid_argument("cross_set: d must be >= 2");
    }
    std::vector<PureState> members;
    for (int m = 0; m < d; ++m) {
        members.push_back(max_entangled_state(d, m, 0));
    }
    for (int n = 1; n < d; ++n) {
        members.push_back(max_entangled_state(d, 0, n));
    }
    return StateSet(SystemShape({d, d}), std::move(members), "cross-set");
}

StateSet fourier_pair_set(int d) {
    if (d < 2) {
        throw std::invalid_argument("fourier_pair_set: d must be >= 2");
    }
    const SystemShape shape({d, d});
    const double theta = 2.0 * std::numbers::pi / d;
    std::vector<PureState> members;
    for (int m = 0; m < d; ++m) {
        Vec local = Vec::Zero(d);
        local(m) = 1.0;
        members.push_back(
            tensor_product(shape, {local, local}, "diag(" + std::to_string(m) + ")"));
    }
    for (int m = 0; m < d; ++m) {
        Vec left(d), right(d);
        for (int k = 0; k < d; ++k) {
            left(k) = std::polar(1.0, theta * k * m);
            right(k) = std::polar(1.0, -theta * k * m);  // Fourier index d-m mod d
        }
        left /= std::sqrt(static_cast<double>(d));
        right /= std::sqrt(static_cast<double>(d));
        members.push_back(
            tensor_product(shape, {left, right}, "fourier(" + std::to_string(m) + ")"));
    }
    return StateSet(shape, std::move(members), "fourier-pairs");
}

StateSet ghz_triple(int parties, const std::string& bits) {
    if (parties < 2) {
        throw std::invalid_argument("ghz_triple: need at least two parties");
    }
    if (static_cast<int>(bits.size()) != parties) {
        throw std::invalid_argument("ghz_triple: bitstring length must equal the party count");
    }
    bool all_zero = true, all_one = true;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("ghz_triple: bitstring must contain only 0 and 1");
        }
        all_zero = all_zero && c == '0';
        all_one = all_one && c == '1';
    }
    if (all_zero || all_one) {
        throw std::invalid_argument(
            "ghz_triple: bitstring must satisfy x != 0^K,1^K (got \"" + bits + "\")");
    }
    const SystemShape shape = SystemShape::qubits(parties);
    const int d = shape.total_dim();
    int x_index = 0;
    for (int k = 0; k < parties; ++k) {
        x_index = 2 * x_index + (bits[static_cast<std::size_t>(k)] == '1' ? 1 : 0);
    }
    Vec x_amps = Vec::Zero(d);
    x_amps(x_index) = 1.0;
    Vec plus = Vec::Zero(d), minus = Vec::Zero(d);
    plus(0) = plus(d - 1) = 1.0 / std::sqrt(2.0);
    minus(0) = 1.0 / std::sqrt(2.0);
    minus(d - 1) = -1.0 / std::sqrt(2.0);
    std::vector<PureState> members;
    members.emplace_back(shape, std::move(x_amps), "x=" + bits);
    members.emplace_back(shape, std::move(plus), "ghz+");
    members.emplace_back(shape, std::move(minus), "ghz-");
    return StateSet(shape, std::move(members), "ghz-triple");
}

StateSet example2_basis() {
    const SystemShape shape({2, 2});
    const double s = 1.0 / std::sqrt(2.0);
    const Vec zero = (Vec(2) << 1.0, 0.0).finished();
    const Vec one = (Vec(2) << 0.0, 1.0).finished();
    const Vec plus = (Vec(2) << s, s).finished();
    const Vec i_plus = (Vec(2) << s, cplx(0.0, s)).finished();
    const Vec i_minus = (Vec(2) << s, cplx(0.0, -s)).finished();
    std::vector<PureState> members;
    members.push_back(tensor_product(shape, {zero, zero}, "Psi1"));
    members.push_back(tensor_product(shape, {one, one}, "Psi2"));
    members.push_back(tensor_product(shape, {plus, plus}, "Psi3"));
    members.push_back(tensor_product(shape, {i_plus, i_minus}, "Psi4"));
    return StateSet(shape, std::move(members), "example2");
}

}  // namespace ubkit
