#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "citegraph/ids.hpp"

namespace citegraph {

enum class Side { Science, Technology };

inline constexpr std::string_view kOthersLabel = "Others";

struct Collection {
    std::string name;
    Side side{Side::Science};
    int priority = 0;  // lower = checked first
    std::unordered_set<PublicationId> members;
};

// Prioritized collections per side. Classification is deterministic: a
// publication belongs to the highest-priority collection containing it.
class CollectionRegistry {
public:
    void add(Collection collection);

    // Name of the owning collection, or "Others". Journal ids are only
    // checked against Science collections, patents against Technology.
    std::string_view classify(const PublicationId& id) const;

    const std::vector<Collection>& side(Side s) const;
    const Collection* find(std::string_view name) const;

    // Collection labels per side in priority order (without "Others").
    std::vector<std::string> labels(Side s) const;

    // Loads `<name>.ids` membership files from a directory; one id per
    // line, side taken from the trailing "-S"/"-T" of the name. The
    // canonical keyword families order G, NT, (2D+TMO+TMD) first.
    static CollectionRegistry load_directory(const std::filesystem::path& dir);

private:
    std::vector<Collection> science_;
    std::vector<Collection> technology_;
    std::vector<Collection>& side_mutable(Side s);
};

// Pairwise intersection counts between the collections of one side.
struct OverlapMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> counts;  // diagonal left as 0, rendered "-"
};

OverlapMatrix overlap_matrix(const CollectionRegistry& registry, Side side);

}  // namespace citegraph
