#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcensus/algebra.hpp"
#include "qcensus/sampling.hpp"

using namespace qcensus;

namespace {

// Test-local determinant oracle: full permutation expansion of the regular
// representation, independent of the cofactor path inside reduced_norm.
WElem det_by_permutations(const std::array<std::array<WElem, 3>, 3>& M, int n) {
    struct Perm {
        int p[3];
        int sign;
    };
    static const Perm perms[6] = {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1},
                                  {{0, 2, 1}, -1}, {{2, 1, 0}, -1}, {{1, 0, 2}, -1}};
    WElem det = WElem::zero(n);
    for (const Perm& s : perms) {
        WElem term = M[0][s.p[0]] * M[1][s.p[1]] * M[2][s.p[2]];
        det = s.sign > 0 ? det + term : det - term;
    }
    return det;
}

}  // namespace

TEST_CASE("pi cubes to the central uniformizer 2") {
    for (int r : {1, 2}) {
        AlgebraConfig cfg = AlgebraConfig::make(r, 6);
        DElem pi = DElem::pi(cfg);
        DElem two = DElem::one(cfg) + DElem::one(cfg);
        CHECK(pi * (pi * pi) == two);
        CHECK((pi * pi) * pi == two);
    }
}

TEST_CASE("the twist relation w * pi = pi * w^(2^r)") {
    for (int r : {1, 2}) {
        AlgebraConfig cfg = AlgebraConfig::make(r, 6);
        WElem w = WElem::w(cfg.precision);
        DElem dw = DElem::from_w(w, cfg);
        DElem pi = DElem::pi(cfg);
        DElem lhs = dw * pi;
        DElem rhs = pi * DElem::from_w(frobenius(w, r), cfg);
        CHECK(lhs == rhs);
        // coordinates: (0, w^(2^r), 0)
        CHECK(lhs.coord(0).is_zero());
        CHECK(lhs.coord(1) == frobenius(w, r));
        CHECK(lhs.coord(2).is_zero());
    }
}

TEST_CASE("unit law and relation coherence across pi powers") {
    for (int r : {1, 2}) {
        AlgebraConfig cfg = AlgebraConfig::make(r, 6);
        std::mt19937_64 rng(3);
        for (int t = 0; t < 100; ++t) {
            DElem y = sample_d(rng, cfg);
            CHECK(DElem::one(cfg) * y == y);
            CHECK(y * DElem::one(cfg) == y);
        }
        // (w * pi) * pi^2 == pi * w^(2^r) * pi^2 expanded either way
        WElem w = WElem::w(cfg.precision);
        DElem pi2 = DElem::pi_power(2, cfg);
        DElem a = (DElem::from_w(w, cfg) * DElem::pi(cfg)) * pi2;
        DElem b = (DElem::pi(cfg) * DElem::from_w(frobenius(w, r), cfg)) * pi2;
        CHECK(a == b);
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg), z = sample_d(rng, cfg);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
    }
}

TEST_CASE("config mismatch is an error") {
    AlgebraConfig c1 = AlgebraConfig::make(1, 6);
    AlgebraConfig c2 = AlgebraConfig::make(2, 6);
    CHECK_THROWS_AS(DElem::pi(c1) * DElem::pi(c2), ConfigMismatch);
}

TEST_CASE("valuation") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    DElem two = DElem::one(cfg) + DElem::one(cfg);
    CHECK(two.valuation() == 3);
    CHECK(DElem::pi(cfg).valuation() == 1);
    CHECK(DElem::from_w(WElem::w(cfg.precision), cfg).valuation() == 0);
    CHECK(DElem::zero(cfg).valuation() == 3 * cfg.precision);

    std::mt19937_64 rng(37);
    int checked = 0;
    while (checked < 1000) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg);
        int vx = x.valuation(), vy = y.valuation();
        if (vx + vy >= 3 * cfg.precision - 2) continue;  // not precision-safe
        CHECK((x * y).valuation() == vx + vy);
        ++checked;
    }
}

TEST_CASE("inverse of units") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    CHECK(DElem::one(cfg).inverse() == DElem::one(cfg));
    WElem w = WElem::w(cfg.precision);
    CHECK(DElem::from_w(w, cfg).inverse() == DElem::from_w(w.pow(6), cfg));
    CHECK_THROWS_AS(DElem::pi(cfg).inverse(), NonUnitError);

    // 1 + pi inverts to the alternating geometric series
    DElem one_plus_pi = DElem::one(cfg) + DElem::pi(cfg);
    DElem series = DElem::zero(cfg);
    DElem term = DElem::one(cfg);
    for (int j = 0; j < 3 * cfg.precision + 3; ++j) {
        series = (j % 2 == 0) ? series + term : series - term;
        term = term * DElem::pi(cfg);
    }
    DElem inv = one_plus_pi.inverse();
    CHECK(inv == series);
    CHECK(one_plus_pi * inv == DElem::one(cfg));
    CHECK(inv * one_plus_pi == DElem::one(cfg));

    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        DElem x = sample_d_unit(rng, cfg);
        DElem xi = x.inverse();
        CHECK(x * xi == DElem::one(cfg));
        CHECK(xi * x == DElem::one(cfg));
    }
}

TEST_CASE("reduced trace") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 8);
    int n = cfg.precision;
    CHECK(DElem::one(cfg).reduced_trace().value() == 3);
    CHECK(DElem::pi(cfg).reduced_trace().is_zero());
    CHECK(DElem::pi_power(2, cfg).reduced_trace().is_zero());

    // on W the reduced trace is the Galois trace
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        WElem a = sample_w(rng, n);
        CHECK(DElem::from_w(a, cfg).reduced_trace() == norm_trace(a).second);
    }

    // symmetry trd(xy) = trd(yx)
    for (int t = 0; t < 1000; ++t) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg);
        CHECK((x * y).reduced_trace() == (y * x).reduced_trace());
    }
}

TEST_CASE("reduced norm") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 8);
    int n = cfg.precision;
    CHECK(DElem::one(cfg).reduced_norm().value() == 1);
    CHECK(DElem::pi(cfg).reduced_norm().value() == 2);

    // on W the reduced norm is the Galois norm; for w itself it is w^7 = 1
    CHECK(DElem::from_w(WElem::w(n), cfg).reduced_norm().value() == 1);
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; ++t) {
        WElem a = sample_w(rng, n);
        CHECK(DElem::from_w(a, cfg).reduced_norm() == norm_trace(a).first);
    }

    // against the permutation-expansion determinant oracle
    for (int t = 0; t < 200; ++t) {
        DElem x = sample_d(rng, cfg);
        WElem det = det_by_permutations(x.regular_matrix(), n);
        CHECK(det.raw(1) == 0);
        CHECK(det.raw(2) == 0);
        CHECK(x.reduced_norm() == det.coord(0));
    }

    // multiplicativity
    for (int t = 0; t < 1000; ++t) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg);
        CHECK((x * y).reduced_norm() == x.reduced_norm() * y.reduced_norm());
    }

    // the 2-adic valuation of the norm equals the m_D-adic valuation
    int checked = 0;
    while (checked < 200) {
        DElem x = sample_d(rng, cfg);
        if (x.valuation() >= 6) continue;
        CHECK(x.reduced_norm().v2() == x.valuation());
        ++checked;
    }
}

TEST_CASE("lie bracket") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        DElem x = sample_d(rng, cfg);
        CHECK(lie_bracket(x, x).is_zero());
    }

    // [w, pi] = w*pi - pi*w with pi-coordinate w^2 - w (r_param = 1)
    WElem w = WElem::w(cfg.precision);
    DElem dw = DElem::from_w(w, cfg);
    DElem pi = DElem::pi(cfg);
    DElem br = lie_bracket(dw, pi);
    CHECK(br == dw * pi - pi * dw);
    CHECK(br.coord(0).is_zero());
    CHECK(br.coord(1) == frobenius(w, 1) - w);
    CHECK(br.coord(2).is_zero());

    for (int t = 0; t < 200; ++t) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg), z = sample_d(rng, cfg);
        CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
        DElem jacobi = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                       lie_bracket(z, lie_bracket(x, y));
        CHECK(jacobi.is_zero());
        CHECK(lie_bracket(x, y).reduced_trace().is_zero());
        CHECK(in_sl1(lie_bracket(x, y)));
    }
}

TEST_CASE("sl1 membership") {
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    CHECK(in_sl1(DElem::pi(cfg)));
    CHECK_FALSE(in_sl1(DElem::one(cfg)));
}
