#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qcensus/algebra.hpp"
#include "qcensus/checks.hpp"
#include "qcensus/errors.hpp"

namespace qcensus {

// Canonical representative of a coset of U_k in U_1, identified by its packed
// digit encoding. The zero encoding is the identity.
struct CosetElement {
    std::uint64_t enc = 0;
    friend bool operator==(CosetElement a, CosetElement b) { return a.enc == b.enc; }
    friend bool operator!=(CosetElement a, CosetElement b) { return a.enc != b.enc; }
    friend bool operator<(CosetElement a, CosetElement b) { return a.enc < b.enc; }
};

// The finite 2-group U_1/U_k for the unit filtration U_i = (1 + m_D^i) modulo
// the center. A canonical coset representative x = c0 + pi*c1 + pi^2*c2 has
// the Z2-coordinate of c0's 1-component pinned to exactly 1; coordinate j is
// then carried modulo 2^ceil((k-j)/3). The free bits pack into one integer key,
// and every key is the encoding of exactly one group element, so the group
// order is 2^bits = 8^(k-1) / 2^(ceil(k/3)-1).
class QuotientContext {
  public:
    explicit QuotientContext(int k, int r_param = 1) : k_(k) {
        if (k < 2 || k > 13) throw DomainError("QuotientContext: k out of supported range");
        cfg_ = AlgebraConfig::make(r_param, (k + 2) / 3 + 2);
        for (int j = 0; j < 3; ++j) e_[j] = (k - j + 2) / 3;

        const int widths[8] = {e_[0] - 1, e_[0] - 1, e_[1], e_[1], e_[1], e_[2], e_[2], e_[2]};
        int at = 0;
        for (int f = 0; f < 8; ++f) {
            shift_[f] = at;
            fmask_[f] = (1ull << widths[f]) - 1ull;
            at += widths[f];
        }
        bits_ = at;

        layer_mask_.assign(k_ + 1, 0);
        for (int m = 1; m < k_; ++m) {
            int j = m % 3, t = m / 3;
            std::uint64_t mask = 0;
            if (j == 0) {
                mask |= 1ull << (shift_[0] + t - 1);
                mask |= 1ull << (shift_[1] + t - 1);
            } else {
                int base = j == 1 ? 2 : 5;
                for (int c = 0; c < 3; ++c) mask |= 1ull << (shift_[base + c] + t);
            }
            layer_mask_[m] = mask;
        }

        build_generators();
        if (k_ <= 8) verify_generator_closure();
    }

    QuotientContext(const QuotientContext&) = delete;
    QuotientContext& operator=(const QuotientContext&) = delete;

    int k() const { return k_; }
    int r_param() const { return cfg_.r_param; }
    int precision() const { return cfg_.precision; }
    const AlgebraConfig& config() const { return cfg_; }
    int bits() const { return bits_; }
    int order_log2() const { return bits_; }
    std::uint64_t order() const { return 1ull << bits_; }

    CosetElement identity() const { return {0}; }

    // ---- encoding <-> algebra ----

    DElem decode(CosetElement g) const {
        const int n = cfg_.precision;
        std::uint64_t e = g.enc;
        auto field = [&](int f) -> std::uint32_t {
            return static_cast<std::uint32_t>((e >> shift_[f]) & fmask_[f]);
        };
        WElem c0 = WElem::from_bits(1u, field(0) << 1, field(1) << 1, n);
        WElem c1 = WElem::from_bits(field(2), field(3), field(4), n);
        WElem c2 = WElem::from_bits(field(5), field(6), field(7), n);
        return DElem({c0, c1, c2}, &cfg_);
    }

    // Multiplies by the unique central unit in 1 + 2Z2 that pins the constant
    // term's 1-component to 1, then truncates modulo m_D^k. Exact on cosets:
    // two inputs agree iff they differ by a central unit times 1 + m_D^k.
    CosetElement canonicalize(const DElem& x) const {
        if (!x.config().same_as(cfg_))
            throw ConfigMismatch("canonicalize: element from a different config");
        std::uint32_t a0 = x.coord(0).raw(0);
        if ((a0 & 1u) == 0 || (x.coord(0).raw(1) & 1u) || (x.coord(0).raw(2) & 1u))
            throw DomainError("canonicalize: element is not in 1 + m_D");
        std::uint32_t u = TruncatedInt::inverse_odd(a0, cfg_.precision);
        std::uint64_t enc = 0;
        // c0 w-coordinates are even; store their halves.
        enc |= ((static_cast<std::uint64_t>(x.coord(0).raw(1) * u) >> 1) & fmask_[0]) << shift_[0];
        enc |= ((static_cast<std::uint64_t>(x.coord(0).raw(2) * u) >> 1) & fmask_[1]) << shift_[1];
        for (int c = 0; c < 3; ++c)
            enc |= (static_cast<std::uint64_t>(x.coord(1).raw(c) * u) & fmask_[2 + c])
                   << shift_[2 + c];
        for (int c = 0; c < 3; ++c)
            enc |= (static_cast<std::uint64_t>(x.coord(2).raw(c) * u) & fmask_[5 + c])
                   << shift_[5 + c];
        return {enc};
    }

    // ---- group operations ----

    CosetElement mul(CosetElement a, CosetElement b) const {
        return canonicalize(decode(a) * decode(b));
    }
    CosetElement square(CosetElement a) const {
        DElem x = decode(a);
        return canonicalize(x * x);
    }
    CosetElement inv(CosetElement a) const { return canonicalize(decode(a).inverse()); }

    struct ConjPair {
        DElem g, ginv;
    };
    ConjPair make_conj_pair(CosetElement g) const {
        DElem d = decode(g);
        return {d, d.inverse()};
    }
    CosetElement conj(CosetElement x, const ConjPair& p) const {
        return canonicalize(p.ginv * decode(x) * p.g);
    }
    CosetElement conj(CosetElement x, CosetElement g) const { return conj(x, make_conj_pair(g)); }

    // Layer index i with g in U_i \ U_{i+1}; k for the identity. Reads the
    // canonical encoding directly, so it is constant on cosets.
    int layer_of(CosetElement g) const {
        for (int m = 1; m < k_; ++m)
            if (g.enc & layer_mask_[m]) return m;
        return k_;
    }

    // F8 digit of the canonical representative at the given layer. Layers
    // divisible by 3 always carry a zero 1-component.
    F8 digit_at_layer(CosetElement g, int m) const {
        int j = m % 3, t = m / 3;
        auto bit = [&](int f, int b) -> std::uint8_t {
            return static_cast<std::uint8_t>((g.enc >> (shift_[f] + b)) & 1u);
        };
        if (j == 0)
            return F8(static_cast<std::uint8_t>((bit(0, t - 1) << 1) | (bit(1, t - 1) << 2)));
        int base = j == 1 ? 2 : 5;
        return F8(static_cast<std::uint8_t>(bit(base, t) | (bit(base + 1, t) << 1) |
                                            (bit(base + 2, t) << 2)));
    }

    // Digit values available at a layer: 8 for layers not divisible by 3,
    // 4 (zero 1-component) for the rest.
    std::vector<F8> layer_digits(int m) const {
        std::vector<F8> out;
        if (m % 3 == 0) {
            for (std::uint8_t b : {0, 2, 4, 6}) out.push_back(F8(b));
        } else {
            for (std::uint8_t b = 0; b < 8; ++b) out.push_back(F8(b));
        }
        return out;
    }
    int layer_size_log2(int m) const { return m % 3 == 0 ? 2 : 3; }

    // Least 2-power m with g^m = identity, by repeated squaring.
    std::uint64_t element_order(CosetElement g) const {
        std::uint64_t order = 1;
        CosetElement s = g;
        for (int guard = 0; guard < 64; ++guard) {
            if (s.enc == 0) return order;
            s = square(s);
            order *= 2;
        }
        throw InternalCheckFailure("element_order: squaring chain did not terminate");
    }

    // 1 + teichmuller(c) * pi^j for nonzero c and j in {1,2,3}; generates the
    // whole group (closure-verified at construction for k <= 8).
    const std::vector<CosetElement>& generators() const { return generators_; }
    const std::vector<ConjPair>& generator_conj_pairs() const { return gen_pairs_; }

    // All canonical elements of U_i/U_k in increasing encoding order.
    std::vector<CosetElement> enumerate_subquotient(int i) const {
        if (i < 1 || i > k_) throw DomainError("enumerate_subquotient: layer out of range");
        int log2n = subquotient_order_log2(i);
        if (log2n > 24)
            throw InfeasibleError("enumerate_subquotient: subquotient too large to materialize",
                                  (8ull << log2n));
        std::vector<std::uint64_t> encs{0};
        for (int m = i; m < k_; ++m) {
            std::vector<std::uint64_t> digits = layer_digit_patterns(m);
            std::vector<std::uint64_t> next;
            next.reserve(encs.size() * digits.size());
            for (std::uint64_t base : encs)
                for (std::uint64_t d : digits) next.push_back(base | d);
            encs.swap(next);
        }
        std::sort(encs.begin(), encs.end());
        std::vector<CosetElement> out(encs.size());
        for (std::size_t t = 0; t < encs.size(); ++t) out[t] = {encs[t]};
        return out;
    }

    int subquotient_order_log2(int i) const {
        int s = 0;
        for (int m = i; m < k_; ++m) s += layer_size_log2(m);
        return s;
    }

    // ---- structural verification ----

    CheckReport structure_checks(int workers = 1) const;
    struct IndexTwoSubgroups {
        int frattini_dim = 0;
        std::uint64_t g2_order = 0;
        std::vector<std::uint32_t> coset_vec;    // per encoding: F2^m coordinates mod G2
        std::vector<std::uint32_t> functionals;  // the 2^m - 1 nonzero functionals
        std::size_t count() const { return functionals.size(); }
        bool contains(std::size_t which, CosetElement g) const {
            return (std::popcount(functionals[which] & coset_vec[g.enc]) & 1) == 0;
        }
    };
    IndexTwoSubgroups index2_subgroups() const;

  private:
    // bit patterns a single layer digit can contribute to an encoding
    std::vector<std::uint64_t> layer_digit_patterns(int m) const {
        std::vector<std::uint64_t> out;
        int j = m % 3, t = m / 3;
        if (j == 0) {
            for (std::uint64_t b1 : {0u, 1u})
                for (std::uint64_t b2 : {0u, 1u})
                    out.push_back((b1 << (shift_[0] + t - 1)) | (b2 << (shift_[1] + t - 1)));
        } else {
            int base = j == 1 ? 2 : 5;
            for (std::uint64_t d = 0; d < 8; ++d)
                out.push_back(((d & 1) << (shift_[base] + t)) |
                              (((d >> 1) & 1) << (shift_[base + 1] + t)) |
                              (((d >> 2) & 1) << (shift_[base + 2] + t)));
        }
        return out;
    }

    void build_generators() {
        generators_.clear();
        for (int j = 1; j <= 3; ++j) {
            DElem pj = DElem::pi_power(j, cfg_);
            for (std::uint8_t c = 1; c < 8; ++c) {
                DElem g = DElem::one(cfg_) + DElem::from_w(cfg_.teich[c], cfg_) * pj;
                generators_.push_back(canonicalize(g));
            }
        }
        gen_pairs_.clear();
        for (CosetElement g : generators_) gen_pairs_.push_back(make_conj_pair(g));
    }

    // Exhaustive closure of the generator set under multiplication must fill
    // the whole encoding space.
    void verify_generator_closure() const {
        std::vector<bool> seen(order(), false);
        seen[0] = true;
        std::vector<std::uint64_t> queue{0};
        std::uint64_t found = 1;
        std::vector<DElem> gens;
        for (CosetElement g : generators_) gens.push_back(decode(g));
        while (!queue.empty()) {
            std::uint64_t e = queue.back();
            queue.pop_back();
            DElem x = decode({e});
            for (const DElem& g : gens) {
                CosetElement f = canonicalize(x * g);
                if (!seen[f.enc]) {
                    seen[f.enc] = true;
                    ++found;
                    queue.push_back(f.enc);
                }
            }
        }
        if (found != order())
            throw InternalCheckFailure("QuotientContext: generators do not generate the group");
    }

    int k_;
    int bits_ = 0;
    AlgebraConfig cfg_;
    int e_[3] = {};
    int shift_[8] = {};
    std::uint64_t fmask_[8] = {};
    std::vector<std::uint64_t> layer_mask_;
    std::vector<CosetElement> generators_;
    std::vector<ConjPair> gen_pairs_;
};

// Natural truncation homomorphism U_1/U_k -> U_1/U_j for j <= k: reduce each
// coordinate to the coarser modulus. Canonical forms map to canonical forms.
inline CosetElement truncate_coset(const QuotientContext& from, const QuotientContext& to,
                                   CosetElement g) {
    if (to.k() > from.k()) throw DomainError("truncate_coset: target is finer than source");
    if (to.r_param() != from.r_param()) throw ConfigMismatch("truncate_coset: r_param differs");
    DElem x = from.decode(g);
    const AlgebraConfig& cfg = to.config();
    int n = cfg.precision;
    auto shrink = [&](const WElem& a) {
        return WElem::from_bits(a.raw(0) & TruncatedInt::mask(n), a.raw(1) & TruncatedInt::mask(n),
                                a.raw(2) & TruncatedInt::mask(n), n);
    };
    DElem y({shrink(x.coord(0)), shrink(x.coord(1)), shrink(x.coord(2))}, &cfg);
    return to.canonicalize(y);
}

// ---------------------------------------------------------------------------
// structure_checks: the layer orders, commutator filtration, squaring maps
// between deep layers, the order of w in the residue tower, and the order of
// pi's class modulo the center.
// ---------------------------------------------------------------------------

inline CheckReport QuotientContext::structure_checks(int workers) const {
    CheckReport rep;

    // (a) pi's class modulo the center has multiplicative order 3:
    // pi^3 = 2 is central, while conjugation by pi and pi^2 moves w.
    {
        DElem w = DElem::from_w(WElem::w(cfg_.precision), cfg_);
        DElem pi = DElem::pi(cfg_);
        DElem pi2 = DElem::pi_power(2, cfg_);
        DElem pi3 = DElem::pi_power(3, cfg_);
        DElem two = DElem::one(cfg_) + DElem::one(cfg_);
        WElem alpha_w = frobenius(WElem::w(cfg_.precision), cfg_.twist[1]);
        WElem alpha2_w = frobenius(WElem::w(cfg_.precision), cfg_.twist[2]);
        bool twist_holds = (w * pi == pi * DElem::from_w(alpha_w, cfg_)) &&
                           (w * pi2 == pi2 * DElem::from_w(alpha2_w, cfg_));
        bool moves_w = alpha_w != WElem::w(cfg_.precision) && alpha2_w != WElem::w(cfg_.precision);
        bool cube_central = (pi3 == two);
        rep.add("pi-class-order-3", twist_holds && moves_w && cube_central,
                "pi^3 = 2 central; conjugation by pi, pi^2 moves w");
    }

    // (c) w has order 7 modulo 1 + m_D: the residues of w^j are pairwise
    // distinct for j = 0..6 and w^7 = 1 exactly.
    {
        WElem w = WElem::w(cfg_.precision);
        bool distinct = true;
        std::array<bool, 8> seen{};
        WElem p = WElem::one(cfg_.precision);
        for (int j = 0; j < 7; ++j) {
            std::uint8_t r = p.residue().bits();
            if (r == 0 || seen[r]) distinct = false;
            seen[r] = true;
            p = p * w;
        }
        bool returns = (p == WElem::one(cfg_.precision));
        rep.add("w-order-7-mod-m", distinct && returns, "w, w^2, ..., w^7 = 1 distinct mod 1 + m_D");
    }

    // layer orders: exhaustive histogram of layer_of over the whole group.
    if (bits_ <= 26) {
        std::vector<std::uint64_t> hist(k_ + 1, 0);
        for (std::uint64_t e = 0; e < order(); ++e) ++hist[layer_of({e})];
        bool ok = hist[k_] == 1;
        std::uint64_t expect_tail = 1;  // |U_m/U_k| for m descending
        for (int m = k_ - 1; m >= 1; --m) {
            std::uint64_t layer = 1ull << layer_size_log2(m);
            std::uint64_t expected = (layer - 1) * expect_tail;
            if (hist[m] != expected) ok = false;
            expect_tail *= layer;
        }
        rep.add("layer-orders", ok,
                "per-layer counts match 8 per layer (4 when the layer index is divisible by 3)");
    }

    // (b) commutator filtration [U_i, U_j] <= U_{i+j}. Exhaustive over all
    // pairs for k <= 6, sampled otherwise. The raw valuation of xy - yx lower
    // bounds the commutator's layer, so the check is conservative-exact.
    {
        bool ok = true;
        std::string detail;
        if (k_ <= 6) {
            std::vector<DElem> all;
            std::vector<int> lay;
            all.reserve(order());
            lay.reserve(order());
            for (std::uint64_t e = 0; e < order(); ++e) {
                all.push_back(decode({e}));
                lay.push_back(layer_of({e}));
            }
            std::atomic<bool> fail{false};
            std::atomic<std::uint64_t> bad_pair{0};
            int nw = std::max(1, workers);
            std::vector<std::thread> pool;
            std::atomic<std::uint64_t> cursor{1};
            // xy - yx is antisymmetric, so pairs with x < y cover everything;
            // the identity (encoding 0) commutes with all.
            auto work = [&] {
                while (true) {
                    std::uint64_t x = cursor.fetch_add(1);
                    if (x >= order() || fail.load(std::memory_order_relaxed)) return;
                    for (std::uint64_t y = x + 1; y < order(); ++y) {
                        DElem d = all[x] * all[y] - all[y] * all[x];
                        int bound = std::min(lay[x] + lay[y], k_);
                        if (d.valuation() < bound) {
                            fail = true;
                            bad_pair = (x << 32) | y;
                            return;
                        }
                    }
                }
            };
            for (int t = 0; t < nw; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
            ok = !fail;
            if (!ok)
                detail = "counterexample pair encodings: x=" +
                         std::to_string(bad_pair >> 32) + " y=" +
                         std::to_string(bad_pair & 0xffffffffu);
            else
                detail = "exhaustive over all pairs";
        } else {
            std::mt19937_64 rng(0x5eed5eedULL);
            for (int t = 0; t < 200000 && ok; ++t) {
                std::uint64_t x = rng() & (order() - 1), y = rng() & (order() - 1);
                DElem dx = decode({x}), dy = decode({y});
                DElem d = dx * dy - dy * dx;
                int bound = std::min(layer_of({x}) + layer_of({y}), k_);
                if (d.valuation() < bound) {
                    ok = false;
                    detail = "counterexample pair encodings: x=" + std::to_string(x) +
                             " y=" + std::to_string(y);
                }
            }
            if (ok) detail = "200000 sampled pairs";
        }
        rep.add("commutator-filtration", ok, detail);
    }

    // (d) squaring maps U_i/U_{i+1} onto U_{i+3}/U_{i+4} bijectively for
    // 3 < i < k-3: the images of the layer digits are distinct and nonzero.
    for (int i = 4; i < k_ - 3; ++i) {
        bool ok = true;
        std::array<bool, 8> seen{};
        int nonzero = 0;
        for (F8 c : layer_digits(i)) {
            if (c.is_zero()) continue;
            // layer representative with right-basis digit exactly c at layer i
            DElem x = DElem::one(cfg_) +
                      DElem::pi_power(i, cfg_) * DElem::from_w(cfg_.teich[c.bits()], cfg_);
            CosetElement g = canonicalize(x);
            if (layer_of(g) != i || digit_at_layer(g, i) != c) ok = false;
            CosetElement s = square(g);
            if (layer_of(s) != i + 3) ok = false;
            std::uint8_t img = digit_at_layer(s, i + 3).bits();
            if (img == 0 || seen[img]) ok = false;
            seen[img] = true;
            ++nonzero;
        }
        rep.add("squaring-bijection-layer-" + std::to_string(i) + "-to-" + std::to_string(i + 3),
                ok, std::to_string(nonzero) + " nonzero digits map bijectively");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// index2_subgroups: G2 = [G,G] G^2 by closure, then the index-2 subgroups are
// the kernels of the nonzero functionals on the elementary abelian G/G2.
// ---------------------------------------------------------------------------

inline QuotientContext::IndexTwoSubgroups QuotientContext::index2_subgroups() const {
    if (k_ > 6)
        throw InfeasibleError("index2_subgroups: full closure only supported for k <= 6",
                              order() * 16);
    const std::uint64_t n = order();

    // seeds: squares and pairwise commutators of the group generators
    std::vector<std::uint64_t> seeds;
    auto push_seed = [&](CosetElement g) {
        if (g.enc != 0) seeds.push_back(g.enc);
    };
    for (CosetElement g : generators_) push_seed(square(g));
    for (CosetElement g : generators_)
        for (CosetElement h : generators_) {
            CosetElement gh = mul(g, h), hg = mul(h, g);
            if (gh == hg) continue;
            push_seed(mul(inv(hg), gh));
        }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<bool> member(n, false);
    std::vector<std::uint64_t> members;
    auto close = [&] {
        member.assign(n, false);
        member[0] = true;
        members.assign(1, 0);
        std::vector<std::uint64_t> queue{0};
        while (!queue.empty()) {
            std::uint64_t e = queue.back();
            queue.pop_back();
            for (std::uint64_t s : seeds) {
                CosetElement f = mul({e}, {s});
                if (!member[f.enc]) {
                    member[f.enc] = true;
                    members.push_back(f.enc);
                    queue.push_back(f.enc);
                }
            }
        }
    };
    close();
    // normal closure under conjugation by the group generators
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t e : std::vector<std::uint64_t>(members)) {
            for (const ConjPair& p : gen_pairs_) {
                CosetElement y = conj({e}, p);
                if (!member[y.enc]) {
                    seeds.push_back(y.enc);
                    changed = true;
                }
            }
        }
        if (changed) close();
    }

    IndexTwoSubgroups out;
    out.g2_order = members.size();

    // label the G2-cosets; scanning encodings upward keeps labels canonical
    std::vector<std::uint32_t> coset_id(n, ~0u);
    std::uint32_t next = 0;
    std::vector<std::uint64_t> coset_rep;
    for (std::uint64_t e = 0; e < n; ++e) {
        if (coset_id[e] != ~0u) continue;
        for (std::uint64_t h : members) coset_id[mul({e}, {h}).enc] = next;
        coset_rep.push_back(e);
        ++next;
    }

    // F2-coordinates on the quotient: grow a basis from the generator images
    std::vector<std::uint32_t> vec(next, ~0u);
    vec[coset_id[0]] = 0;
    std::vector<std::uint64_t> span{0};
    int dim = 0;
    for (CosetElement g : generators_) {
        std::uint32_t cg = coset_id[g.enc];
        if (vec[cg] != ~0u) continue;
        std::vector<std::uint64_t> grown;
        for (std::uint64_t s : span) {
            std::uint64_t t = mul({s}, g).enc;
            vec[coset_id[t]] = vec[coset_id[s]] | (1u << dim);
            grown.push_back(t);
        }
        span.insert(span.end(), grown.begin(), grown.end());
        ++dim;
    }
    for (std::uint32_t c = 0; c < next; ++c)
        if (vec[c] == ~0u)
            throw InternalCheckFailure("index2_subgroups: generators do not span G/G2");

    out.frattini_dim = dim;
    out.coset_vec.resize(n);
    for (std::uint64_t e = 0; e < n; ++e) out.coset_vec[e] = vec[coset_id[e]];
    for (std::uint32_t phi = 1; phi < (1u << dim); ++phi) out.functionals.push_back(phi);
    return out;
}

}  // namespace qcensus
