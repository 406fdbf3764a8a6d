#include <doctest.h>

#include <cmath>
#include <ubkit/certifiers.hpp>
#include <ubkit/constructions.hpp>
#include <ubkit/linalg.hpp>
#include <ubkit/rng.hpp>

#include "support.hpp"

using namespace ubkit;
using namespace ubtest;

TEST_SUITE_BEGIN("constructions");

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ExtendedComplex fin(double re, double im = 0.0) {
    return ExtendedComplex::finite(cplx(re, im));
}

}  // namespace

TEST_CASE("vandermonde local states") {
    CHECK((vandermonde_local(2, fin(0)).amplitudes() - vec({1, 0})).norm() < 1e-15);
    CHECK((vandermonde_local(2, fin(1)).amplitudes() - vec({kInvSqrt2, kInvSqrt2})).norm() <
          1e-15);
    CHECK((vandermonde_local(3, ExtendedComplex::infinity()).amplitudes() - vec({0, 0, 1}))
              .norm() < 1e-15);
    CHECK_THROWS_AS(vandermonde_local(0, fin(1)), std::invalid_argument);
}

TEST_CASE("large parameters concentrate on the top level") {
    // |<d-1|phi(x)>|^2 = |x|^{2(d-1)} / sum |x|^{2j} >= 1 - 1/|x|^2 for |x| > 1.
    RandomStream rng(21, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 5);
        const double radius = 1.1 + 8.0 * rng.uniform();
        const cplx x = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform());
        const PureState phi = vandermonde_local(d, ExtendedComplex::finite(x));
        const double top = std::norm(phi.amplitudes()(d - 1));
        CHECK(top >= 1.0 - 1.0 / (radius * radius) - 1e-12);
    }
}

TEST_CASE("distinct parameters give a full local basis") {
    RandomStream rng(22, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.next_u64() % 4);
        std::vector<PureState> states;
        for (int i = 0; i < d - 1; ++i) {
            states.push_back(vandermonde_local(
                d, ExtendedComplex::finite(rng.complex_gaussian())).with_label(
                "v" + std::to_string(i)));
        }
        states.push_back(vandermonde_local(d, ExtendedComplex::infinity()).with_label("vinf"));
        CHECK(numeric_rank(StateSet(SystemShape({d}), states)) == d);
    }
}

TEST_CASE("vandermonde product states") {
    const SystemShape two({2, 2});
    CHECK((vandermonde_product(two, {fin(0), fin(0)}).amplitudes() - vec({1, 0, 0, 0})).norm() <
          1e-15);
    CHECK((vandermonde_product(two, {fin(1), fin(1)}).amplitudes() -
           vec({0.5, 0.5, 0.5, 0.5}))
              .norm() < 1e-15);
    const IndexTuple infinities = {ExtendedComplex::infinity(), ExtendedComplex::infinity()};
    CHECK((vandermonde_product(two, infinities).amplitudes() - vec({0, 0, 0, 1})).norm() <
          1e-15);
    CHECK_THROWS_AS(vandermonde_product(two, {fin(0)}), std::invalid_argument);
}

TEST_CASE("minimal gupb construction and preconditions") {
    const SystemShape two({2, 2});
    const StateSet example1 = minimal_gupb(two, default_index_set(two));
    REQUIRE(example1.size() == 3);
    CHECK(fidelity(example1.at(0), state(two, {1, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(fidelity(example1.at(1), state(two, {1, 1, 1, 1})) == doctest::Approx(1.0));
    CHECK(fidelity(example1.at(2), state(two, {0, 0, 0, 1})) == doctest::Approx(1.0));

    const SystemShape three({2, 2, 2});
    const std::vector<IndexTuple> diag = {{fin(0), fin(0), fin(0)},
                                          {fin(1), fin(1), fin(1)},
                                          {fin(2), fin(2), fin(2)},
                                          {ExtendedComplex::infinity(),
                                           ExtendedComplex::infinity(),
                                           ExtendedComplex::infinity()}};
    const StateSet gupb3 = minimal_gupb(three, diag);
    CHECK(gupb3.size() == 4);
    CHECK(lemma2_counting_check(gupb3));

    CHECK_THROWS_WITH_AS(
        minimal_gupb(two, {{fin(0), fin(0)},
                           {fin(0), fin(1)},
                           {ExtendedComplex::infinity(), ExtendedComplex::infinity()}}),
        doctest::Contains("entrywise distinct"), std::invalid_argument);
    CHECK_THROWS_AS(minimal_gupb(two, {{fin(0), fin(0)}, {fin(1), fin(1)}}),
                    std::invalid_argument);
}

TEST_CASE("default index sets") {
    const auto tuples22 = default_index_set(SystemShape({2, 2}));
    REQUIRE(tuples22.size() == 3);
    CHECK(tuples22[0][0] == fin(0));
    CHECK(tuples22[1][1] == fin(1));
    CHECK(tuples22[2][0].is_infinite());
    CHECK(default_index_set(SystemShape({3, 3})).size() == 5);
    const auto unipartite = default_index_set(SystemShape({2}));
    REQUIRE(unipartite.size() == 2);
    CHECK(unipartite[1][0].is_infinite());
}

TEST_CASE("global vandermonde state agrees with the product form") {
    const SystemShape two({2, 2});
    CHECK((global_vandermonde_state(two, 0.0).amplitudes() - vec({1, 0, 0, 0})).norm() < 1e-15);
    CHECK((global_vandermonde_state(two, 1.0).amplitudes() - vec({0.5, 0.5, 0.5, 0.5})).norm() <
          1e-15);

    // Flat form on (2,3) at x = 2: amplitudes 2^j / sqrt(1365), and the same
    // state assembled as phi_1(8) x phi_2(2).
    const SystemShape six({2, 3});
    const double norm = std::sqrt(1365.0);
    Vec expected(6);
    for (int j = 0; j < 6; ++j) expected(j) = std::pow(2.0, j) / norm;
    const PureState flat = global_vandermonde_state(six, 2.0);
    CHECK((flat.amplitudes() - expected).norm() < 1e-12);
    const PureState product = vandermonde_product(six, {fin(8), fin(2)});
    CHECK((flat.amplitudes() - product.amplitudes()).norm() < 1e-12);

    RandomStream rng(23, 0);
    const std::vector<SystemShape> shapes = {SystemShape({2, 2}), SystemShape({2, 3}),
                                             SystemShape({2, 2, 2}), SystemShape({3, 4}),
                                             SystemShape({2, 2, 6})};
    for (const SystemShape& shape : shapes) {
        for (int trial = 0; trial < 8; ++trial) {
            const cplx x = std::polar(3.0 * rng.uniform(),
                                      2.0 * std::numbers::pi * rng.uniform());
            IndexTuple lambda;
            for (int k = 0; k < shape.parties(); ++k) {
                lambda.push_back(ExtendedComplex::finite(
                    std::pow(x, shape.stride(k))));
            }
            const PureState a = global_vandermonde_state(shape, x);
            const PureState b = vandermonde_product(shape, lambda);
            CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-10);
        }
    }
}

TEST_CASE("theorem2 basis and its collision precondition") {
    const SystemShape two({2, 2});
    const StateSet basis = theorem2_basis(two, {1, 2, 3, 4});
    // Oracle: the Vandermonde determinant prod_{m<n} (x_n - x_m) of (1,2,3,4).
    const double points[] = {1, 2, 3, 4};
    double det = 1.0;
    for (int m = 0; m < 4; ++m) {
        for (int n = m + 1; n < 4; ++n) det *= points[n] - points[m];
    }
    CHECK(det == doctest::Approx(12.0));
    CHECK(numeric_rank(basis) == 4);

    CHECK_THROWS_WITH_AS(theorem2_basis(two, {1, -1, 2, 3}), doctest::Contains("collision"),
                         std::invalid_argument);
    CHECK_THROWS_AS(theorem2_basis(two, {1, 2, 3}), std::invalid_argument);

    const StateSet unipartite = theorem2_basis(SystemShape({2}), {0, 1});
    CHECK(fidelity(unipartite.at(0), basis_state(SystemShape({2}), 0)) == doctest::Approx(1.0));
    CHECK(fidelity(unipartite.at(1), state(SystemShape({2}), {1, 1})) == doctest::Approx(1.0));
}

TEST_CASE("default theorem2 points") {
    CHECK(default_theorem2_points(SystemShape({2, 2})) ==
          std::vector<cplx>{1.0, 2.0, 3.0, 4.0});
    CHECK(default_theorem2_points(SystemShape({2, 3})).size() == 6);
    CHECK(default_theorem2_points(SystemShape({3, 3})).size() == 9);
}

TEST_CASE("canonical maximally entangled states") {
    const SystemShape two({2, 2});
    CHECK(fidelity(max_entangled_state(2, 0, 0), state(two, {1, 0, 0, 1})) ==
          doctest::Approx(1.0));
    CHECK(fidelity(max_entangled_state(2, 1, 0), state(two, {0, 1, 1, 0})) ==
          doctest::Approx(1.0));
    CHECK(fidelity(max_entangled_state(2, 0, 1), state(two, {1, 0, 0, -1})) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(max_entangled_state(2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_entangled_state(2, 0, -1), std::invalid_argument);

    for (int d = 2; d <= 4; ++d) {
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                const auto sv = schmidt_values(max_entangled_state(d, m, n), 0);
                for (double s : sv) {
                    CHECK(std::abs(s - 1.0 / std::sqrt(static_cast<double>(d))) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("cross set has 2d-1 independent members") {
    for (int d = 2; d <= 5; ++d) {
        const StateSet cross = cross_set(d);
        CHECK(cross.size() == 2 * d - 1);
        CHECK(numeric_rank(cross) == 2 * d - 1);
    }
    CHECK(cross_set(2).size() == lower_bound_N(SystemShape({2, 2})));
    // Fixed ordering: (m,0) ascending, then (0,n).
    const StateSet cross2 = cross_set(2);
    CHECK(cross2.at(0).label() == "Phi(0,0)");
    CHECK(cross2.at(1).label() == "Phi(1,0)");
    CHECK(cross2.at(2).label() == "Phi(0,1)");
}

TEST_CASE("fourier pair set") {
    const SystemShape two({2, 2});
    const StateSet pairs = fourier_pair_set(2);
    REQUIRE(pairs.size() == 4);
    CHECK(fidelity(pairs.at(0), state(two, {1, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(fidelity(pairs.at(1), state(two, {0, 0, 0, 1})) == doctest::Approx(1.0));
    CHECK(fidelity(pairs.at(2), state(two, {1, 1, 1, 1})) == doctest::Approx(1.0));
    CHECK(fidelity(pairs.at(3), state(two, {1, -1, -1, 1})) == doctest::Approx(1.0));

    // |++> + |--> is proportional to |00> + |11>, which collapses one dimension.
    const Vec combined = pairs.at(2).amplitudes() + pairs.at(3).amplitudes();
    CHECK((combined - vec({1, 0, 0, 1})).norm() < 1e-12);
    CHECK(numeric_rank(pairs) == 3);

    const StateSet pairs3 = fourier_pair_set(3);
    CHECK(pairs3.size() == 6);
    for (const PureState& member : pairs3.members()) {
        CHECK(is_product_state(member));
    }
}

TEST_CASE("ghz triple") {
    const SystemShape two({2, 2});
    const StateSet t = ghz_triple(2, "01");
    REQUIRE(t.size() == 3);
    CHECK(fidelity(t.at(0), basis_state(two, 1)) == doctest::Approx(1.0));
    CHECK(fidelity(t.at(1), state(two, {1, 0, 0, 1})) == doctest::Approx(1.0));
    CHECK(fidelity(t.at(2), state(two, {1, 0, 0, -1})) == doctest::Approx(1.0));

    const SystemShape three({2, 2, 2});
    const StateSet t3 = ghz_triple(3, "010");
    CHECK(fidelity(t3.at(0), basis_state(three, 2)) == doctest::Approx(1.0));
    CHECK(fidelity(t3.at(1), state(three, {1, 0, 0, 0, 0, 0, 0, 1})) == doctest::Approx(1.0));

    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            CHECK(std::abs(inner_product(t3.at(i), t3.at(j))) < 1e-15);
        }
    }

    CHECK_THROWS_WITH_AS(ghz_triple(2, "11"), doctest::Contains("0^K,1^K"),
                         std::invalid_argument);
    CHECK_THROWS_AS(ghz_triple(2, "000"), std::invalid_argument);
    CHECK_THROWS_AS(ghz_triple(2, "0a"), std::invalid_argument);
}

TEST_CASE("example 2 basis") {
    const StateSet set = example2_basis();
    REQUIRE(set.size() == 4);
    const Vec psi4 = vec({0.5, cplx(0, -0.5), cplx(0, 0.5), 0.5});
    CHECK((set.at(3).amplitudes() - psi4).norm() < 1e-15);
    CHECK(numeric_rank(set) == 4);
    for (const PureState& member : set.members()) {
        CHECK(is_product_state(member));
    }
}

TEST_CASE("random entrywise-distinct index sets give counting-certified GUPBs") {
    RandomStream rng(24, 0);
    const std::vector<SystemShape> shapes = {SystemShape({2, 2}), SystemShape({2, 3}),
                                             SystemShape({2, 2, 2})};
    for (const SystemShape& shape : shapes) {
        const int n = lower_bound_N(shape);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<IndexTuple> tuples(static_cast<std::size_t>(n),
                                           IndexTuple(static_cast<std::size_t>(shape.parties())));
            for (int k = 0; k < shape.parties(); ++k) {
                for (int j = 0; j < n; ++j) {
                    tuples[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                        ExtendedComplex::finite(rng.complex_gaussian());
                }
            }
            const StateSet gupb = minimal_gupb(shape, tuples);
            CHECK(gupb.size() == n);
            CHECK(lemma2_counting_check(gupb));
        }
    }
}

TEST_SUITE_END();
