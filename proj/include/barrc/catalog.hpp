#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "barrc/diagnostic.hpp"
#include "barrc/guideline_id.hpp"

namespace barrc {

enum class GuidelineKind { Directive, Rule };
enum class Enforceability { Automatic, Heuristic, Manual };
enum class Topic { Subset, Style };
enum class MisraRelation { ExactMatch, NonExactMatch, Related, None, NotApplicable };
enum class MisraCategory { Mandatory, Required, Advisory };

struct MisraRef {
    bool is_directive = false;
    int major = 0;
    int minor = 0;
    MisraCategory category = MisraCategory::Required;

    /// "Dir 4.6" or "Rule 15.6".
    std::string str() const;
    bool same_guideline(const MisraRef& o) const {
        return is_directive == o.is_directive && major == o.major && minor == o.minor;
    }
};

struct GuidelineDescriptor {
    GuidelineId id;
    GuidelineKind kind = GuidelineKind::Rule;
    bool starred = false;
    bool bug_killing = false;
    std::string headline;
    Enforceability enforceability = Enforceability::Automatic;
    bool single_tu = true;
    bool decidable = true;
    Topic topic = Topic::Style;
    MisraRelation misra_relation = MisraRelation::NotApplicable;
    std::vector<MisraRef> related_misra;
    bool fixable = false;
    std::string quantity_param;  // empty when the guideline has no tunable quantity
    bool default_enabled = true;
};

enum class Coverage { Mostly, Partially };

struct CrosswalkEntry {
    MisraRef misra;
    Coverage coverage = Coverage::Mostly;
    std::vector<GuidelineId> provided_by;
    /// Provided by either guideline rather than all of them.
    bool any_of = false;
};

enum class GapCategory {
    UndefinedUnspecified,
    ImplementationDefined,
    Readability,
    Verifiability,
    DeveloperConfusion,
    RuntimeBehavior,
};

std::string_view gap_category_key(GapCategory c);

struct GapEntry {
    MisraRef misra;
    GapCategory category = GapCategory::UndefinedUnspecified;
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Catalog {
public:
    const std::vector<GuidelineDescriptor>& guidelines() const { return guidelines_; }
    const std::vector<CrosswalkEntry>& crosswalk() const { return crosswalk_; }
    const std::vector<GapEntry>& gaps() const { return gaps_; }

    const GuidelineDescriptor* find(GuidelineId id) const;
    const GuidelineDescriptor& at(GuidelineId id) const;

    /// Builds the embedded tables and checks their integrity; throws CatalogError on failure.
    static Catalog load();

private:
    std::vector<GuidelineDescriptor> guidelines_;
    std::vector<CrosswalkEntry> crosswalk_;
    std::vector<GapEntry> gaps_;
};

/// The process-wide catalog, loaded once.
const Catalog& catalog();

/// Error for Rules, Advisory for Directives, heuristics, and the advisory-by-design rules.
Severity default_severity(const GuidelineDescriptor& g);

enum class GotoPolicy { Forbid, ForwardOnly };
enum class ProjectionStatus { Covered, Degraded, Unassessed };

std::string_view projection_status_name(ProjectionStatus s);

struct ProjectionRow {
    const CrosswalkEntry* entry = nullptr;
    ProjectionStatus status = ProjectionStatus::Unassessed;
};

struct MisraProjection {
    std::vector<ProjectionRow> rows;  // crosswalk order, always 41 rows
};

MisraProjection misra_projection(const std::set<GuidelineId>& enabled, const std::set<GuidelineId>& violated,
                                 GotoPolicy goto_policy = GotoPolicy::Forbid);

}  // namespace barrc
