#pragma once

#include <cstdint>
#include <random>

#include "qcensus/algebra.hpp"
#include "qcensus/unramified.hpp"

namespace qcensus {

// Seeded element generators for the property suites.

template <class URBG>
WElem sample_w(URBG& rng, int precision) {
    std::uint32_t m = TruncatedInt::mask(precision);
    return WElem::from_bits(static_cast<std::uint32_t>(rng()) & m,
                            static_cast<std::uint32_t>(rng()) & m,
                            static_cast<std::uint32_t>(rng()) & m, precision);
}

template <class URBG>
WElem sample_w_unit(URBG& rng, int precision) {
    for (;;) {
        WElem a = sample_w(rng, precision);
        if (a.is_unit()) return a;
    }
}

template <class URBG>
DElem sample_d(URBG& rng, const AlgebraConfig& cfg) {
    return DElem({sample_w(rng, cfg.precision), sample_w(rng, cfg.precision),
                  sample_w(rng, cfg.precision)},
                 &cfg);
}

template <class URBG>
DElem sample_d_unit(URBG& rng, const AlgebraConfig& cfg) {
    for (;;) {
        DElem x = sample_d(rng, cfg);
        if (x.is_unit()) return x;
    }
}

}  // namespace qcensus
