// Census of a small quotient U_1/U_6 and the layer census behind the
// 25-real-class count.

#include <cstdio>

#include "qcensus/census.hpp"
#include "qcensus/report.hpp"

using namespace qcensus;

int main() {
    QuotientContext ctx(6);
    CensusReport rep = full_census_exhaustive(ctx);
    std::printf("%s\n", report_to_text(rep).c_str());

    QuotientContext ctx7(7);
    ClassPartition part =
        conjugacy_partition(ctx7, ctx7.enumerate_subquotient(4), ctx7.generators());
    RealCountSummary rc = real_class_count(ctx7, part);
    std::printf("U_4/U_7 under conjugation by U_1: %llu classes, %llu real\n",
                (unsigned long long)rc.total_classes, (unsigned long long)rc.real_classes);
    for (auto [layer, count] : rc.real_by_layer)
        std::printf("  layer %d: %llu classes\n", layer, (unsigned long long)count);
    return 0;
}
