#include "citegraph/patent_match.hpp"

#include <algorithm>

namespace citegraph {

PatentRefMatcher::PatentRefMatcher(const CollectionRegistry& registry) {
    for (const auto& collection : registry.side(Side::Technology)) {
        for (const auto& id : collection.members) {
            const std::string serial(std::string_view(id.value).substr(2));
            by_serial_[serial].push_back({collection.priority, collection.name, id});
        }
    }
    for (auto& [serial, entries] : by_serial_) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.priority != b.priority ? a.priority < b.priority
                                            : a.id.value < b.id.value;
        });
    }
}

PatentRefMatch PatentRefMatcher::match(std::string_view text) const {
    const auto parts = parse_patent_number(text);
    if (!parts || parts->serial.size() < 4) {
        return {PatentRefKind::NotAPatent, std::nullopt, {}};
    }

    auto it = by_serial_.find(parts->serial);
    if (it != by_serial_.end()) {
        for (const auto& entry : it->second) {
            if (parts->region.empty() || patent_region(entry.id) == parts->region) {
                return {PatentRefKind::InCollection, entry.id, entry.collection};
            }
        }
    }

    if (!parts->region.empty()) {
        return {PatentRefKind::OthersPatent,
                PublicationId{PubKind::Patent, parts->region + parts->serial},
                {}};
    }
    // Without a region code the reference cannot be keyed.
    return {PatentRefKind::OthersPatent, std::nullopt, {}};
}

PatentRefMatch parse_patent_reference(std::string_view text,
                                      const CollectionRegistry& registry) {
    return PatentRefMatcher(registry).match(text);
}

}  // namespace citegraph
