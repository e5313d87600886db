#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qcensus/checks.hpp"
#include "qcensus/errors.hpp"
#include "qcensus/quotient.hpp"

namespace qcensus {

// Exact orbit partition of a conjugation-closed element set. class_id is dense
// over the target (the whole group when `elements` is empty, indexed by
// encoding); class identifiers increase with the smallest encoding in the
// orbit, which is also the stored representative.
struct ClassPartition {
    std::vector<std::uint64_t> elements;  // sorted; empty = full group
    std::vector<std::uint32_t> class_id;
    std::vector<std::uint64_t> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint8_t> real_flags;

    std::size_t size() const { return class_id.size(); }
    std::size_t num_classes() const { return reps.size(); }
    std::uint64_t num_real() const {
        std::uint64_t r = 0;
        for (std::uint8_t f : real_flags) r += f;
        return r;
    }

    std::size_t index_of(std::uint64_t enc) const {
        if (elements.empty()) {
            if (enc >= class_id.size()) throw DomainError("ClassPartition: encoding out of range");
            return static_cast<std::size_t>(enc);
        }
        auto it = std::lower_bound(elements.begin(), elements.end(), enc);
        if (it == elements.end() || *it != enc)
            throw DomainError("ClassPartition: element outside the partitioned set");
        return static_cast<std::size_t>(it - elements.begin());
    }
};

namespace detail {

// Lock-free union-find with union-by-minimum: the final forest is determined
// by the edge set alone, so any worker schedule produces the same partition,
// and every root is the least element of its component.
class MinUnionFind {
  public:
    explicit MinUnionFind(std::uint64_t n) : n_(n), parent_(new std::atomic<std::uint32_t>[n]) {
        for (std::uint64_t i = 0; i < n; ++i)
            parent_[i].store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
    }

    std::uint32_t find(std::uint32_t x) {
        while (true) {
            std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
            if (p == x) return x;
            std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
            if (gp == p) return p;
            parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
            x = gp;
        }
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        while (true) {
            std::uint32_t ra = find(a), rb = find(b);
            if (ra == rb) return;
            std::uint32_t hi = std::max(ra, rb), lo = std::min(ra, rb);
            std::uint32_t expect = hi;
            if (parent_[hi].compare_exchange_strong(expect, lo, std::memory_order_relaxed)) return;
        }
    }

    std::uint64_t size() const { return n_; }

  private:
    std::uint64_t n_;
    std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
};

}  // namespace detail

// Orbit partition under conjugation by `acting`. Empty `target` means the
// whole group. The single-worker path is the reference breadth-first search
// over a dense visited table; the multi-worker path unions the same
// conjugation edges with a deterministic min-rooted union-find, so reports are
// identical for every worker count.
inline ClassPartition conjugacy_partition(const QuotientContext& ctx,
                                          std::vector<CosetElement> target,
                                          const std::vector<CosetElement>& acting,
                                          int workers = 1) {
    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    ClassPartition part;
    std::vector<QuotientContext::ConjPair> pairs;
    pairs.reserve(acting.size());
    for (CosetElement g : acting) pairs.push_back(ctx.make_conj_pair(g));

    const bool full = target.empty();
    std::uint64_t n;
    if (full) {
        n = ctx.order();
    } else {
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        part.elements.reserve(target.size());
        for (CosetElement g : target) part.elements.push_back(g.enc);
        n = part.elements.size();
    }
    part.class_id.assign(n, kUnassigned);

    auto enc_at = [&](std::uint64_t idx) -> std::uint64_t {
        return full ? idx : part.elements[idx];
    };

    if (full && workers > 1) {
        detail::MinUnionFind uf(n);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (n + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::uint64_t e = lo; e < hi; ++e)
                    for (const auto& p : pairs)
                        uf.unite(static_cast<std::uint32_t>(e),
                                 static_cast<std::uint32_t>(ctx.conj({e}, p).enc));
            });
        }
        for (auto& th : pool) th.join();
        std::uint32_t next = 0;
        for (std::uint64_t e = 0; e < n; ++e) {
            std::uint32_t r = uf.find(static_cast<std::uint32_t>(e));
            if (r == e) {
                part.class_id[e] = next++;
                part.reps.push_back(e);
            } else {
                part.class_id[e] = part.class_id[r];  // roots are component minima
            }
        }
    } else {
        std::uint32_t next = 0;
        std::vector<std::uint64_t> queue;
        for (std::uint64_t seed = 0; seed < n; ++seed) {
            if (part.class_id[seed] != kUnassigned) continue;
            std::uint32_t cid = next++;
            part.class_id[seed] = cid;
            part.reps.push_back(enc_at(seed));
            queue.assign(1, seed);
            while (!queue.empty()) {
                std::uint64_t idx = queue.back();
                queue.pop_back();
                CosetElement x{enc_at(idx)};
                for (const auto& p : pairs) {
                    std::uint64_t fidx = part.index_of(ctx.conj(x, p).enc);
                    if (part.class_id[fidx] == kUnassigned) {
                        part.class_id[fidx] = cid;
                        queue.push_back(fidx);
                    }
                }
            }
        }
    }

    part.sizes.assign(part.reps.size(), 0);
    for (std::uint32_t cid : part.class_id) ++part.sizes[cid];

    part.real_flags.assign(part.reps.size(), 0);
    for (std::size_t c = 0; c < part.reps.size(); ++c) {
        CosetElement invrep = ctx.inv({part.reps[c]});
        part.real_flags[c] = (part.class_id[part.index_of(invrep.enc)] == c) ? 1 : 0;
    }
    return part;
}

struct RealCountSummary {
    std::uint64_t total_classes = 0;
    std::uint64_t real_classes = 0;
    std::map<int, std::uint64_t> real_by_layer;  // keyed by the representative's layer
};

// Counts classes and real classes; when the partition covers a full group the
// parity congruence total = real (mod 2) is enforced as a hard check, since a
// violation can only come from broken arithmetic.
inline RealCountSummary real_class_count(const QuotientContext& ctx, const ClassPartition& part,
                                         bool full_group = false) {
    RealCountSummary s;
    s.total_classes = part.num_classes();
    for (std::size_t c = 0; c < part.num_classes(); ++c) {
        if (!part.real_flags[c]) continue;
        ++s.real_classes;
        ++s.real_by_layer[ctx.layer_of({part.reps[c]})];
    }
    if (full_group && ((s.total_classes ^ s.real_classes) & 1))
        throw InternalCheckFailure("real_class_count: k(G) and r(G) have different parity");
    return s;
}

// ---------------------------------------------------------------------------
// low-order scan: stream the whole group, classify every element's order as
// 1, 2, 4 or >4 by at most two squarings.
// ---------------------------------------------------------------------------

struct LowOrderScan {
    std::uint64_t order_le2 = 0;                     // identity included
    std::map<int, std::uint64_t> involutions_by_layer;
    std::vector<std::uint64_t> order4;               // sorted encodings
};

inline LowOrderScan scan_low_orders(const QuotientContext& ctx, int workers = 1) {
    const std::uint64_t n = ctx.order();
    int nw = std::max(1, workers);
    std::vector<LowOrderScan> local(nw);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n + nw - 1) / nw;
    for (int t = 0; t < nw; ++t) {
        std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
        pool.emplace_back([&, t, lo, hi] {
            LowOrderScan& out = local[t];
            for (std::uint64_t e = lo; e < hi; ++e) {
                CosetElement g{e};
                CosetElement s1 = ctx.square(g);
                if (s1.enc == 0) {
                    ++out.order_le2;
                    if (e != 0) ++out.involutions_by_layer[ctx.layer_of(g)];
                    continue;
                }
                if (ctx.square(s1).enc == 0) out.order4.push_back(e);
            }
        });
    }
    for (auto& th : pool) th.join();
    LowOrderScan merged;
    for (const auto& l : local) {
        merged.order_le2 += l.order_le2;
        for (auto [layer, cnt] : l.involutions_by_layer) merged.involutions_by_layer[layer] += cnt;
        merged.order4.insert(merged.order4.end(), l.order4.begin(), l.order4.end());
    }
    std::sort(merged.order4.begin(), merged.order4.end());
    return merged;
}

struct Order4ScanResult {
    std::vector<std::uint64_t> real_class_reps;  // expected empty for k >= 10
    std::uint64_t candidate_count = 0;
    std::uint64_t real_element_count = 0;
    LowOrderScan scan;
};

// Finds all real elements of order exactly 4: stream-classify orders, then
// partition the order-4 candidates under conjugation and keep the classes that
// contain their own inverses.
inline Order4ScanResult order4_real_scan(const QuotientContext& ctx, int workers = 1) {
    if (ctx.k() < 8) throw DomainError("order4_real_scan: requires k >= 8");
    if (ctx.bits() > 30)
        throw InfeasibleError("order4_real_scan: group too large to stream",
                              ctx.order() / 4);
    Order4ScanResult res;
    res.scan = scan_low_orders(ctx, workers);
    res.candidate_count = res.scan.order4.size();

    std::vector<CosetElement> target;
    target.reserve(res.scan.order4.size());
    for (std::uint64_t e : res.scan.order4) target.push_back({e});
    if (!target.empty()) {
        ClassPartition part = conjugacy_partition(ctx, target, ctx.generators(), 1);
        for (std::size_t c = 0; c < part.num_classes(); ++c)
            if (part.real_flags[c]) {
                res.real_class_reps.push_back(part.reps[c]);
                res.real_element_count += part.sizes[c];
            }
    }
    return res;
}

// ---------------------------------------------------------------------------
// censuses
// ---------------------------------------------------------------------------

struct CensusTimings {
    double build_ms = 0, partition_ms = 0, analyze_ms = 0, total_ms = 0;
};

struct CensusReport {
    int k = 0;
    int r_param = 1;
    int order_log2 = 0;
    std::optional<std::uint64_t> num_classes;       // exhaustive mode only
    std::optional<std::uint64_t> num_real_classes;  // absent if fast mode found real order-4
    std::map<int, std::uint64_t> real_by_layer;
    std::optional<std::uint64_t> involution_classes;
    std::uint64_t order4_real_count = 0;
    std::string mode;  // "exhaustive" or "fast"
    std::array<std::uint32_t, 3> lift_coeffs{};
    int lift_precision = 0;
    CensusTimings timings;
};

// Census content comparison; timings and labels excluded.
inline bool counts_equal(const CensusReport& a, const CensusReport& b) {
    return a.order_log2 == b.order_log2 && a.num_classes == b.num_classes &&
           a.num_real_classes == b.num_real_classes && a.real_by_layer == b.real_by_layer &&
           a.involution_classes == b.involution_classes &&
           a.order4_real_count == b.order4_real_count;
}
inline bool content_equal(const CensusReport& a, const CensusReport& b) {
    return counts_equal(a, b) && a.k == b.k && a.r_param == b.r_param && a.mode == b.mode &&
           a.lift_coeffs == b.lift_coeffs && a.lift_precision == b.lift_precision;
}

// Fast and exhaustive reports agree when every field the fast route computes
// matches the exhaustive one.
inline bool census_modes_agree(const CensusReport& exhaustive, const CensusReport& fast) {
    return exhaustive.order_log2 == fast.order_log2 &&
           exhaustive.num_real_classes == fast.num_real_classes &&
           exhaustive.real_by_layer == fast.real_by_layer &&
           exhaustive.involution_classes == fast.involution_classes &&
           exhaustive.order4_real_count == fast.order4_real_count;
}

enum class CensusMode { Exhaustive, Fast };

namespace detail {

inline void fill_lift_metadata(const QuotientContext& ctx, CensusReport& rep) {
    LiftedCubic f = hensel_lift_cubic(ctx.precision());
    for (int i = 0; i < 3; ++i) rep.lift_coeffs[i] = f.c[i].value();
    rep.lift_precision = ctx.precision();
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace detail

// Derives the per-class statistics of an exhaustive partition.
inline CensusReport report_from_partition(const QuotientContext& ctx, const ClassPartition& part) {
    CensusReport rep;
    rep.k = ctx.k();
    rep.r_param = ctx.r_param();
    rep.order_log2 = ctx.order_log2();
    rep.mode = "exhaustive";
    detail::fill_lift_metadata(ctx, rep);

    RealCountSummary rc = real_class_count(ctx, part, /*full_group=*/true);
    rep.num_classes = rc.total_classes;
    rep.num_real_classes = rc.real_classes;
    rep.real_by_layer = rc.real_by_layer;

    std::uint64_t involutions = 0, order4_real = 0;
    for (std::size_t c = 0; c < part.num_classes(); ++c) {
        std::uint64_t ord = ctx.element_order({part.reps[c]});
        if (ord == 2 && part.real_flags[c]) ++involutions;
        if (ord == 4 && part.real_flags[c]) order4_real += part.sizes[c];
    }
    rep.involution_classes = involutions;
    rep.order4_real_count = order4_real;
    return rep;
}

// Exhaustive census: partition the whole group and read every statistic off
// the partition. Dense class ids take 4 * 2^bits bytes.
inline CensusReport full_census_exhaustive(const QuotientContext& ctx, int workers = 1,
                                           ClassPartition* out_partition = nullptr) {
    if (ctx.k() > 10)
        throw InfeasibleError("exhaustive census supports k <= 10; class table would need " +
                                  std::to_string((4ull << ctx.bits()) >> 20) + " MiB",
                              4ull << ctx.bits());
    auto t0 = std::chrono::steady_clock::now();
    ClassPartition part = conjugacy_partition(ctx, {}, ctx.generators(), workers);
    double partition_ms = detail::ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    CensusReport rep = report_from_partition(ctx, part);
    rep.timings.partition_ms = partition_ms;
    rep.timings.analyze_ms = detail::ms_since(t1);
    rep.timings.total_ms = detail::ms_since(t0);
    if (out_partition) *out_partition = std::move(part);
    return rep;
}

// Fast census: real classes of order <= 2 all live in U_{k-3}/U_k and are
// counted by one tiny partition; a real class of any higher 2-power order
// would yield a real class of order 4 via the power map, so an empty order-4
// scan pins the real-class count without partitioning the group.
inline CensusReport full_census_fast(const QuotientContext& ctx, int workers = 1) {
    if (ctx.k() < 8) throw DomainError("fast census requires k >= 8");
    if (ctx.bits() > 30)
        throw InfeasibleError("fast census: group too large to stream", ctx.order() / 4);
    auto t0 = std::chrono::steady_clock::now();

    Order4ScanResult scan = order4_real_scan(ctx, workers);
    double partition_ms = detail::ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    // every element of order <= 2 must lie in U_{k-3}
    for (auto [layer, cnt] : scan.scan.involutions_by_layer)
        if (layer < ctx.k() - 3)
            throw InternalCheckFailure("fast census: involution below U_{k-3} at layer " +
                                       std::to_string(layer));
    std::uint64_t expect_le2 = 1ull << ctx.subquotient_order_log2(ctx.k() - 3);
    if (scan.scan.order_le2 != expect_le2)
        throw InternalCheckFailure("fast census: order <= 2 census does not fill U_{k-3}");

    ClassPartition central =
        conjugacy_partition(ctx, ctx.enumerate_subquotient(ctx.k() - 3), ctx.generators(), 1);
    RealCountSummary rc = real_class_count(ctx, central, /*full_group=*/false);
    if (rc.real_classes != rc.total_classes)
        throw InternalCheckFailure("fast census: a class of an involution is not real");

    CensusReport rep;
    rep.k = ctx.k();
    rep.r_param = ctx.r_param();
    rep.order_log2 = ctx.order_log2();
    rep.mode = "fast";
    detail::fill_lift_metadata(ctx, rep);
    rep.real_by_layer = rc.real_by_layer;
    rep.involution_classes = rc.total_classes - 1;
    rep.order4_real_count = scan.real_element_count;
    if (scan.real_element_count == 0)
        rep.num_real_classes = rc.total_classes;
    else
        rep.num_real_classes = std::nullopt;  // only a lower bound is known
    rep.timings.partition_ms = partition_ms;
    rep.timings.analyze_ms = detail::ms_since(t1);
    rep.timings.total_ms = detail::ms_since(t0);
    return rep;
}

inline CensusReport full_census(const QuotientContext& ctx, CensusMode mode, int workers = 1,
                                ClassPartition* out_partition = nullptr) {
    return mode == CensusMode::Exhaustive ? full_census_exhaustive(ctx, workers, out_partition)
                                          : full_census_fast(ctx, workers);
}

// ---------------------------------------------------------------------------
// centralizers
// ---------------------------------------------------------------------------

// Elements y of U_j/U_k with [x, y] in U_n, by exhaustive scan. The raw
// valuation of xy - yx lower bounds the commutator's layer and short-circuits
// almost every test; the exact coset commutator decides the rest.
inline std::vector<CosetElement> centralizer(const QuotientContext& ctx, CosetElement x,
                                             int acting_layer, int modulus_layer) {
    int i = ctx.layer_of(x);
    if (i < 1 || i >= ctx.k()) throw DomainError("centralizer: x must be nontrivial");
    if (acting_layer < 1) throw DomainError("centralizer: acting layer must be >= 1");
    if (modulus_layer < 1 || modulus_layer > ctx.k())
        throw DomainError("centralizer: modulus layer out of range");

    DElem dx = ctx.decode(x);
    std::vector<CosetElement> out;
    for (CosetElement y : ctx.enumerate_subquotient(acting_layer)) {
        DElem dy = ctx.decode(y);
        DElem diff = dx * dy - dy * dx;
        bool commutes = diff.valuation() >= modulus_layer;
        if (!commutes && !diff.is_zero()) {
            CosetElement t1 = ctx.mul(x, y), t2 = ctx.mul(y, x);
            commutes = (t1 == t2) || ctx.layer_of(ctx.mul(ctx.inv(t2), t1)) >= modulus_layer;
        }
        if (commutes) out.push_back(y);
    }
    return out;
}

// |U_1 : C(x) U_m| where C(x) is the exact centralizer of x in U_1/U_k and
// U_m enters through the truncation map: cosets of U_m are truncation fibers,
// so |C(x) U_m| = #distinct truncations * |U_m/U_k|.
inline std::uint64_t centralizer_product_index(const QuotientContext& ctx, CosetElement x,
                                               int m) {
    std::vector<CosetElement> cent = centralizer(ctx, x, 1, ctx.k());
    QuotientContext coarse(m, ctx.r_param());
    std::vector<std::uint64_t> truncs;
    truncs.reserve(cent.size());
    for (CosetElement y : cent) truncs.push_back(truncate_coset(ctx, coarse, y).enc);
    std::sort(truncs.begin(), truncs.end());
    truncs.erase(std::unique(truncs.begin(), truncs.end()), truncs.end());
    std::uint64_t product_size = truncs.size() << ctx.subquotient_order_log2(m);
    return ctx.order() / product_size;
}

// Double inclusion C_{U_1}(x mod U_n) = C_{U_1}(x) U_{n-i} with i = layer(x):
// the left side is an explicit scan, the right side is tested through
// truncation-fiber membership plus a size count.
inline CheckItem centralizer_transfer_check(const QuotientContext& ctx, CosetElement x, int n) {
    int i = ctx.layer_of(x);
    int m = n - i;
    CheckItem item;
    item.name = "centralizer-transfer-layer" + std::to_string(i) + "-mod" + std::to_string(n);
    std::vector<CosetElement> lhs = centralizer(ctx, x, 1, n);
    std::vector<CosetElement> cent = centralizer(ctx, x, 1, ctx.k());
    QuotientContext coarse(m, ctx.r_param());
    std::vector<std::uint64_t> truncs;
    truncs.reserve(cent.size());
    for (CosetElement y : cent) truncs.push_back(truncate_coset(ctx, coarse, y).enc);
    std::sort(truncs.begin(), truncs.end());
    truncs.erase(std::unique(truncs.begin(), truncs.end()), truncs.end());

    bool contained = true;
    for (CosetElement y : lhs)
        if (!std::binary_search(truncs.begin(), truncs.end(),
                                truncate_coset(ctx, coarse, y).enc)) {
            contained = false;
            break;
        }
    std::uint64_t rhs_size = truncs.size() << ctx.subquotient_order_log2(m);
    item.pass = contained && lhs.size() == rhs_size;
    item.details = "|lhs| = " + std::to_string(lhs.size()) +
                   ", |C(x) U_" + std::to_string(m) + "| = " + std::to_string(rhs_size);
    return item;
}

// ---------------------------------------------------------------------------
// index-2 subgroup checks and quotient monotonicity
// ---------------------------------------------------------------------------

// For every index-2 subgroup H of G: the class counts of H and of the
// complement G \ H have equal parity, and the complement carries at most r(H)
// real G-classes. Exhaustive closure limits this to k <= 6.
inline CheckReport parity_and_bound_checks(const QuotientContext& ctx) {
    CheckReport rep;
    auto fam = ctx.index2_subgroups();
    rep.add("index2-count-is-2^m-1",
            fam.count() + 1 == (1ull << fam.frattini_dim),
            "frattini dimension m = " + std::to_string(fam.frattini_dim) + ", " +
                std::to_string(fam.count()) + " subgroups");

    for (std::size_t s = 0; s < fam.count(); ++s) {
        std::vector<CosetElement> inside, outside;
        for (std::uint64_t e = 0; e < ctx.order(); ++e)
            (fam.contains(s, {e}) ? inside : outside).push_back({e});

        bool half = inside.size() * 2 == ctx.order();
        ClassPartition ph = conjugacy_partition(ctx, inside, inside, 1);
        ClassPartition pc = conjugacy_partition(ctx, outside, ctx.generators(), 1);
        RealCountSummary rh = real_class_count(ctx, ph);
        RealCountSummary rc = real_class_count(ctx, pc);

        bool parity_ok = ((ph.num_classes() ^ pc.num_classes()) & 1) == 0;
        bool bound_ok = rc.real_classes <= rh.real_classes;
        std::string tag = "H#" + std::to_string(s);
        rep.add("index2-order-" + tag, half, "|G|/|H| = 2");
        rep.add("complement-parity-" + tag, parity_ok,
                "k(H) = " + std::to_string(ph.num_classes()) +
                    ", k_G(G\\H) = " + std::to_string(pc.num_classes()));
        rep.add("complement-real-bound-" + tag, bound_ok,
                "r_G(G\\H) = " + std::to_string(rc.real_classes) +
                    " <= r(H) = " + std::to_string(rh.real_classes));
    }
    return rep;
}

// r(U_1/U_j) <= r(U_1/U_k) for j <= k: the coarser group is a quotient of the
// finer one, so its real-class count cannot exceed the finer count.
inline CheckReport real_monotonicity_check(int r_param, int k_min, int k_max, int workers = 1) {
    CheckReport rep;
    std::vector<std::uint64_t> rvals;
    for (int k = k_min; k <= k_max; ++k) {
        QuotientContext ctx(k, r_param);
        CensusReport cr = full_census_exhaustive(ctx, workers);
        rvals.push_back(*cr.num_real_classes);
        rep.add("class-real-parity-k" + std::to_string(k),
                ((*cr.num_classes ^ *cr.num_real_classes) & 1) == 0,
                "k(G) = " + std::to_string(*cr.num_classes) +
                    ", r(G) = " + std::to_string(*cr.num_real_classes));
    }
    for (std::size_t a = 0; a + 1 < rvals.size(); ++a)
        for (std::size_t b = a + 1; b < rvals.size(); ++b)
            rep.add("real-count-monotone-k" + std::to_string(k_min + a) + "-k" +
                        std::to_string(k_min + b),
                    rvals[a] <= rvals[b],
                    std::to_string(rvals[a]) + " <= " + std::to_string(rvals[b]));
    return rep;
}

}  // namespace qcensus
