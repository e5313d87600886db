// Arithmetic in the valuation ring of the degree-9 cyclic division algebra
// D = Q_2[w, pi] with pi^3 = 2 and w a lifted 7th root of unity.

#include <cstdio>

#include "qcensus/algebra.hpp"
#include "qcensus/unramified.hpp"

using namespace qcensus;

int main() {
    const int precision = 8;
    LiftedCubic f = hensel_lift_cubic(precision);
    std::printf("lifted cubic: %s\n", f.to_string().c_str());

    AlgebraConfig cfg = AlgebraConfig::make(1, precision);
    DElem pi = DElem::pi(cfg);
    DElem w = DElem::from_w(WElem::w(precision), cfg);

    std::printf("pi^3              = %s\n", (pi * pi * pi).to_string().c_str());
    std::printf("w * pi            = %s\n", (w * pi).to_string().c_str());
    std::printf("Nrd(pi)           = %s\n", pi.reduced_norm().to_string().c_str());
    std::printf("trd(pi)           = %s\n", pi.reduced_trace().to_string().c_str());
    std::printf("Nrd(w)            = %s\n", w.reduced_norm().to_string().c_str());
    std::printf("trd(w)            = %s\n", w.reduced_trace().to_string().c_str());
    std::printf("[w, pi]           = %s\n", lie_bracket(w, pi).to_string().c_str());
    std::printf("trd([w, pi]) == 0: %s\n", in_sl1(lie_bracket(w, pi)) ? "yes" : "no");

    DElem u = DElem::one(cfg) + pi;
    std::printf("(1 + pi)^-1       = %s\n", u.inverse().to_string().c_str());
    std::printf("v(2) = %d, v(pi) = %d, v(w) = %d\n",
                (DElem::one(cfg) + DElem::one(cfg)).valuation(), pi.valuation(), w.valuation());
    return 0;
}
