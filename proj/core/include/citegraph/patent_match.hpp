#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citegraph/collections.hpp"

namespace citegraph {

enum class PatentRefKind { InCollection, OthersPatent, NotAPatent };

struct PatentRefMatch {
    PatentRefKind kind = PatentRefKind::NotAPatent;
    // InCollection: the member id. OthersPatent: a full id when the
    // reference carried a region code, otherwise empty (unresolvable).
    std::optional<PublicationId> id;
    std::string collection;  // owning collection for InCollection
};

// Matches patent references of journal papers against the Technology
// collections. Kind codes are ignored; identifying numbers shorter than
// 4 digits are not patents. References lacking a region code match any
// member with the same serial digits, highest-priority collection first.
class PatentRefMatcher {
public:
    explicit PatentRefMatcher(const CollectionRegistry& registry);

    PatentRefMatch match(std::string_view text) const;

private:
    struct Entry {
        int priority;
        std::string collection;
        PublicationId id;
    };
    // serial digits -> candidate members ordered by priority.
    std::unordered_map<std::string, std::vector<Entry>> by_serial_;
};

// Convenience wrapper; prefer constructing a matcher once when many
// references must be checked.
PatentRefMatch parse_patent_reference(std::string_view text,
                                      const CollectionRegistry& registry);

}  // namespace citegraph
