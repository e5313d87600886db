#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qcensus/census.hpp"
#include "qcensus/quotient.hpp"

namespace qcensus {

inline std::string lift_polynomial_text(const CensusReport& r) {
    return "x^3 + " + std::to_string(r.lift_coeffs[2]) + "*x^2 + " +
           std::to_string(r.lift_coeffs[1]) + "*x + " + std::to_string(r.lift_coeffs[0]) +
           " mod 2^" + std::to_string(r.lift_precision);
}

// Stable JSON schema: the fields {k, r_param, order_log2, num_classes,
// num_real_classes, real_by_layer, order4_real_count, mode, lift_polynomial,
// timings} are always present; counts a mode does not compute are null.
inline nlohmann::ordered_json report_to_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["r_param"] = r.r_param;
    j["order_log2"] = r.order_log2;
    if (r.num_classes)
        j["num_classes"] = *r.num_classes;
    else
        j["num_classes"] = nullptr;
    if (r.num_real_classes)
        j["num_real_classes"] = *r.num_real_classes;
    else
        j["num_real_classes"] = nullptr;
    nlohmann::ordered_json layers = nlohmann::ordered_json::object();
    for (auto [layer, cnt] : r.real_by_layer) layers[std::to_string(layer)] = cnt;
    j["real_by_layer"] = layers;
    if (r.involution_classes)
        j["involution_classes"] = *r.involution_classes;
    else
        j["involution_classes"] = nullptr;
    j["order4_real_count"] = r.order4_real_count;
    j["mode"] = r.mode;
    j["lift_polynomial"] = {{"coeffs", {r.lift_coeffs[0], r.lift_coeffs[1], r.lift_coeffs[2]}},
                            {"precision", r.lift_precision},
                            {"text", lift_polynomial_text(r)}};
    j["timings"] = {{"build_ms", r.timings.build_ms},
                    {"partition_ms", r.timings.partition_ms},
                    {"analyze_ms", r.timings.analyze_ms},
                    {"total_ms", r.timings.total_ms}};
    return j;
}

inline std::string csv_header() {
    return "k,r_param,order_log2,num_classes,num_real_classes,real_by_layer,"
           "order4_real_count,mode,lift_polynomial,timings,involution_classes";
}

inline std::string report_to_csv_row(const CensusReport& r) {
    std::ostringstream os;
    os << r.k << ',' << r.r_param << ',' << r.order_log2 << ',';
    if (r.num_classes) os << *r.num_classes;
    os << ',';
    if (r.num_real_classes) os << *r.num_real_classes;
    os << ',';
    bool first = true;
    for (auto [layer, cnt] : r.real_by_layer) {
        if (!first) os << '|';
        os << layer << ':' << cnt;
        first = false;
    }
    os << ',' << r.order4_real_count << ',' << r.mode << ',' << lift_polynomial_text(r) << ',';
    os << "total=" << r.timings.total_ms << "ms;partition=" << r.timings.partition_ms << "ms";
    os << ',';
    if (r.involution_classes) os << *r.involution_classes;
    return os.str();
}

inline std::string report_to_text(const CensusReport& r) {
    std::ostringstream os;
    os << "census k=" << r.k << " r_param=" << r.r_param << " mode=" << r.mode << "\n";
    os << "  group order: 2^" << r.order_log2 << "\n";
    os << "  classes:      "
       << (r.num_classes ? std::to_string(*r.num_classes) : std::string("n/a")) << "\n";
    os << "  real classes: "
       << (r.num_real_classes ? std::to_string(*r.num_real_classes) : std::string("n/a")) << "\n";
    os << "  real by layer:";
    for (auto [layer, cnt] : r.real_by_layer) os << ' ' << layer << ':' << cnt;
    os << "\n";
    os << "  involution classes: "
       << (r.involution_classes ? std::to_string(*r.involution_classes) : std::string("n/a"))
       << "\n";
    os << "  real elements of order 4: " << r.order4_real_count << "\n";
    os << "  lift: " << lift_polynomial_text(r) << "\n";
    os << "  time: " << r.timings.total_ms << " ms (partition " << r.timings.partition_ms
       << " ms)\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// class-id cache files. Versioned header pins the group, the twist parameter
// and the lifted cubic, so stale or foreign caches are detected and ignored.
// Layout (little endian): magic "QCCACHE1", u32 version, u32 k, u32 r_param,
// u32 precision, u32 cubic c0,c1,c2, u64 count, u64 fnv1a(payload), payload.
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t fnv1a(const std::uint32_t* data, std::uint64_t count) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t v = data[i];
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

template <class T>
void put_le(std::ostream& os, T v) {
    for (std::size_t b = 0; b < sizeof(T); ++b)
        os.put(static_cast<char>((v >> (8 * b)) & 0xffu));
}

template <class T>
bool get_le(std::istream& is, T& v) {
    v = 0;
    for (std::size_t b = 0; b < sizeof(T); ++b) {
        int c = is.get();
        if (c == EOF) return false;
        v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * b);
    }
    return true;
}

}  // namespace detail

inline constexpr char kCacheMagic[8] = {'Q', 'C', 'C', 'A', 'C', 'H', 'E', '1'};

inline std::string cache_file_name(const QuotientContext& ctx) {
    return "census_k" + std::to_string(ctx.k()) + "_r" + std::to_string(ctx.r_param()) +
           "_exhaustive.qcc";
}

inline bool write_cache(const std::filesystem::path& path, const QuotientContext& ctx,
                        const std::vector<std::uint32_t>& class_id) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write(kCacheMagic, 8);
    detail::put_le<std::uint32_t>(os, 1);
    detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(ctx.k()));
    detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(ctx.r_param()));
    detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(ctx.precision()));
    LiftedCubic f = hensel_lift_cubic(ctx.precision());
    for (int i = 0; i < 3; ++i) detail::put_le<std::uint32_t>(os, f.c[i].value());
    detail::put_le<std::uint64_t>(os, class_id.size());
    detail::put_le<std::uint64_t>(os, detail::fnv1a(class_id.data(), class_id.size()));
    for (std::uint32_t v : class_id) detail::put_le<std::uint32_t>(os, v);
    return static_cast<bool>(os);
}

// Returns the class-id array, or nullopt (with a reason) when the file is
// absent, foreign, or corrupted. Callers recompute on nullopt.
inline std::optional<std::vector<std::uint32_t>> read_cache(const std::filesystem::path& path,
                                                            const QuotientContext& ctx,
                                                            std::string* why = nullptr) {
    auto reject = [&](const std::string& msg) -> std::optional<std::vector<std::uint32_t>> {
        if (why) *why = msg;
        return std::nullopt;
    };
    std::ifstream is(path, std::ios::binary);
    if (!is) return reject("no cache file");
    char magic[8];
    is.read(magic, 8);
    if (!is || !std::equal(magic, magic + 8, kCacheMagic)) return reject("bad magic");
    std::uint32_t version, k, r, prec, c0, c1, c2;
    std::uint64_t count, checksum;
    if (!detail::get_le(is, version) || !detail::get_le(is, k) || !detail::get_le(is, r) ||
        !detail::get_le(is, prec) || !detail::get_le(is, c0) || !detail::get_le(is, c1) ||
        !detail::get_le(is, c2) || !detail::get_le(is, count) || !detail::get_le(is, checksum))
        return reject("truncated header");
    if (version != 1) return reject("unsupported version");
    if (k != static_cast<std::uint32_t>(ctx.k()) ||
        r != static_cast<std::uint32_t>(ctx.r_param()) ||
        prec != static_cast<std::uint32_t>(ctx.precision()))
        return reject("cache built for a different group configuration");
    LiftedCubic f = hensel_lift_cubic(ctx.precision());
    if (c0 != f.c[0].value() || c1 != f.c[1].value() || c2 != f.c[2].value())
        return reject("cache built with a different lifted cubic");
    if (count != ctx.order()) return reject("cache element count mismatch");
    std::vector<std::uint32_t> class_id(count);
    for (std::uint64_t i = 0; i < count; ++i)
        if (!detail::get_le(is, class_id[i])) return reject("truncated payload");
    if (detail::fnv1a(class_id.data(), count) != checksum) return reject("checksum mismatch");
    return class_id;
}

// Rebuilds the census report from a cached class-id array; bitwise identical
// content to a fresh exhaustive run (timings excluded).
inline CensusReport report_from_class_ids(const QuotientContext& ctx,
                                          std::vector<std::uint32_t> class_id) {
    ClassPartition part;
    part.class_id = std::move(class_id);
    std::uint32_t nc = 0;
    for (std::uint32_t c : part.class_id) nc = std::max(nc, c + 1);
    part.reps.assign(nc, ~0ull);
    part.sizes.assign(nc, 0);
    for (std::uint64_t e = 0; e < part.class_id.size(); ++e) {
        std::uint32_t c = part.class_id[e];
        if (part.reps[c] == ~0ull) part.reps[c] = e;  // ascending scan hits the minimum first
        ++part.sizes[c];
    }
    part.real_flags.assign(nc, 0);
    for (std::uint32_t c = 0; c < nc; ++c) {
        CosetElement invrep = ctx.inv({part.reps[c]});
        part.real_flags[c] = part.class_id[invrep.enc] == c ? 1 : 0;
    }
    return report_from_partition(ctx, part);
}

}  // namespace qcensus
