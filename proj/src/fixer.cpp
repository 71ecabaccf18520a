#include "barrc/fixer.hpp"

#include <algorithm>
#include <stdexcept>

namespace barrc {

namespace {

bool same_edit(const FixEdit& a, const FixEdit& b) {
    return a.begin == b.begin && a.end == b.end && a.replacement == b.replacement;
}

bool collide(const FixEdit& a, const FixEdit& b) {
    if (same_edit(a, b)) return false;
    if (a.begin == b.begin) return true;
    return a.begin < b.end && b.begin < a.end;
}

bool edit_less(const FixEdit& a, const FixEdit& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
}

}  // namespace

FixPlan plan_fixes(const std::vector<Diagnostic>& diagnostics) {
    FixPlan plan;
    std::vector<const Diagnostic*> order;
    for (const auto& d : diagnostics) {
        if (!d.suppressed && d.fix_available()) order.push_back(&d);
    }
    std::stable_sort(order.begin(), order.end(), [](const Diagnostic* a, const Diagnostic* b) {
        return diagnostic_less(*a, *b);
    });
    for (const Diagnostic* d : order) {
        bool clash = false;
        for (const auto& e : d->fix) {
            for (const auto& taken : plan.edits) clash = clash || collide(e, taken);
        }
        if (clash) {
            Diagnostic s;
            s.rule = ToolRule::FixSkipped;
            s.path = d->path;
            s.span = d->span;
            s.message = "fix for [" + d->rule.str() + "] skipped: it overlaps another fix";
            s.severity = Severity::Advisory;
            plan.skipped.push_back(std::move(s));
            continue;
        }
        for (const auto& e : d->fix) {
            bool dup = false;
            for (const auto& taken : plan.edits) dup = dup || same_edit(e, taken);
            if (!dup) plan.edits.push_back(e);
        }
    }
    std::sort(plan.edits.begin(), plan.edits.end(), edit_less);
    return plan;
}

std::string apply_fixes(std::string_view bytes, const std::vector<FixEdit>& edits) {
    std::string out;
    out.reserve(bytes.size());
    std::size_t at = 0;
    for (const auto& e : edits) {
        if (e.begin > e.end || e.end > bytes.size()) throw std::out_of_range("fix edit outside the file");
        if (e.begin < at) throw std::invalid_argument("fix edits overlap or are unsorted");
        out.append(bytes.substr(at, e.begin - at));
        out.append(e.replacement);
        at = e.end;
    }
    out.append(bytes.substr(at));
    return out;
}

FixResult fix_file(const SourceFile& file, const Config& config, int max_rounds) {
    FixResult r;
    r.bytes = file.bytes();
    for (int round = 0; round < max_rounds; ++round) {
        auto result = run_all({SourceFile(file.path(), r.bytes)}, config, 1);
        FixPlan plan = plan_fixes(result.files.front().diagnostics);
        r.skipped = plan.skipped;
        if (plan.edits.empty()) break;
        std::string next = apply_fixes(r.bytes, plan.edits);
        if (next == r.bytes) break;
        r.bytes = std::move(next);
        ++r.rounds;
    }
    return r;
}

}  // namespace barrc
