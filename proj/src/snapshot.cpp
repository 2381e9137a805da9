#include "citeswing/snapshot.hpp"

namespace citeswing {

SnapshotAnalysis analyze_snapshot(const Snapshot& snapshot)
{
    SnapshotAnalysis a;
    a.label = snapshot.label;
    a.t = snapshot.t;
    a.core = core_metrics(snapshot.records);
    a.case_label = classify_case(snapshot.records, a.core);

    if (a.core.h == 0) {
        a.swing_undefined_reason = "h=0: no swing metrics";
    } else if (a.core.e_sq == 0) {
        a.swing_undefined_reason = "e_sq=0: no swing metrics";
    } else {
        a.swing = swing_metrics(a.core);
    }
    return a;
}

} // namespace citeswing
