// Explicit state families: Vandermonde local/product states, minimal GUPBs,
// the tight global Vandermonde basis, maximally entangled sets, the orthogonal
// GHZ triple, and the 2x2 product basis with an entangled reciprocal.

#pragma once

#include <string>
#include <vector>

#include "ubkit/types.hpp"

namespace ubkit {

/// A complex parameter or the distinguished point at infinity. Equality is
/// exact; infinity is distinct from every finite value.
class ExtendedComplex {
public:
    ExtendedComplex() : infinite_(false), value_(0.0) {}
    static ExtendedComplex finite(cplx value) { return ExtendedComplex(false, value); }
    static ExtendedComplex infinity() { return ExtendedComplex(true, 0.0); }

    bool is_infinite() const { return infinite_; }
    cplx value() const;

    bool operator==(const ExtendedComplex& other) const {
        return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
    }
    bool operator!=(const ExtendedComplex& other) const { return !(*this == other); }
    std::string to_string() const;  // "inf", "2", "1+2i", ...

private:
    ExtendedComplex(bool infinite, cplx value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    cplx value_;
};

/// One parameter per party.
using IndexTuple = std::vector<ExtendedComplex>;

std::string format_complex(cplx value);
std::string format_tuple(const IndexTuple& tuple);

/// phi(x) with amplitudes proportional to (1, x, ..., x^{d-1}); phi(inf) = |d-1>.
PureState vandermonde_local(int d, const ExtendedComplex& x);

/// psi(lambda) = phi_1(lambda_1) x ... x phi_K(lambda_K).
PureState vandermonde_product(const SystemShape& shape, const IndexTuple& lambda);

/// N product states psi(lambda) for an entrywise-distinct index set of
/// cardinality N = lower_bound_N(shape). Throws (naming the offending party
/// and pair) when the entrywise-distinctness precondition fails.
StateSet minimal_gupb(const SystemShape& shape, const std::vector<IndexTuple>& index_set);

/// Diagonal tuples (0,...,0), (1,...,1), ..., (N-2,...,N-2), (inf,...,inf).
std::vector<IndexTuple> default_index_set(const SystemShape& shape);

/// Psi(x) with amplitudes proportional to (1, x, ..., x^{d-1}) on the full
/// space; equal to vandermonde_product at the per-party powers of x.
PureState global_vandermonde_state(const SystemShape& shape, cplx x);

/// The d states Psi(x_m). Requires the per-party powers of the points to be
/// pairwise distinct: x_m^{stride(k)} != x_n^{stride(k)} for every party k,
/// checked with collision tolerance 1e-12.
StateSet theorem2_basis(const SystemShape& shape, const std::vector<cplx>& points);

/// 1, 2, ..., d. Positive reals keep every power map injective, so the
/// collision-freeness precondition of theorem2_basis holds for free.
std::vector<cplx> default_theorem2_points(const SystemShape& shape);

/// Phi_{m,n} = 1/sqrt(d) sum_k w^{kn} |k>|k+m mod d> on (d,d), w = exp(2 pi i / d).
PureState max_entangled_state(int d, int m, int n);

/// The 2d-1 states Phi_{m,n} with m*n = 0, ordered (m,0) for m = 0..d-1 then
/// (0,n) for n = 1..d-1.
StateSet cross_set(int d);

/// The 2d product states {|m>|m>} followed by the Fourier pairs
/// {|m~> x |(d-m mod d)~>}, where |m~> = 1/sqrt(d) sum_k w^{km} |k>.
/// Any 2d-1 of them span the same subspace as cross_set(d).
StateSet fourier_pair_set(int d);

/// {|x>, (|0...0> + |1...1>)/sqrt(2), (|0...0> - |1...1>)/sqrt(2)} on K qubits.
/// `bits` must differ from the all-zeros and all-ones strings.
StateSet ghz_triple(int parties, const std::string& bits);

/// {|00>, |11>, |++>, |i+>|i->}: a 2x2 product basis whose reciprocal basis
/// is entangled.
StateSet example2_basis();

}  // namespace ubkit
