#include "citegraph/collections.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "citegraph/errors.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

void CollectionRegistry::add(Collection collection) {
    auto& list = side_mutable(collection.side);
    for (const auto& existing : list) {
        if (existing.priority == collection.priority) {
            throw ConfigError("duplicate collection priority " +
                              std::to_string(collection.priority) + " on one side");
        }
        if (existing.name == collection.name) {
            throw ConfigError("duplicate collection name: " + collection.name);
        }
    }
    list.push_back(std::move(collection));
    std::sort(list.begin(), list.end(),
              [](const Collection& a, const Collection& b) { return a.priority < b.priority; });
}

std::string_view CollectionRegistry::classify(const PublicationId& id) const {
    const auto& list = id.kind == PubKind::Journal ? science_ : technology_;
    for (const auto& c : list) {
        if (c.members.contains(id)) return c.name;
    }
    return kOthersLabel;
}

const std::vector<Collection>& CollectionRegistry::side(Side s) const {
    return s == Side::Science ? science_ : technology_;
}

std::vector<Collection>& CollectionRegistry::side_mutable(Side s) {
    return s == Side::Science ? science_ : technology_;
}

const Collection* CollectionRegistry::find(std::string_view name) const {
    for (const auto* list : {&science_, &technology_}) {
        for (const auto& c : *list) {
            if (c.name == name) return &c;
        }
    }
    return nullptr;
}

std::vector<std::string> CollectionRegistry::labels(Side s) const {
    std::vector<std::string> out;
    for (const auto& c : side(s)) out.push_back(c.name);
    return out;
}

namespace {

// G before NT before the combined 2D-materials family; anything else after.
int canonical_rank(std::string_view stem) {
    if (stem.starts_with("G-")) return 0;
    if (stem.starts_with("NT-")) return 1;
    if (stem.starts_with("(2D+TMO+TMD)-") || stem.starts_with("2DM-")) return 2;
    return 3;
}

}  // namespace

CollectionRegistry CollectionRegistry::load_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw DataError("collections directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ids") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
        const auto ra = canonical_rank(a.stem().string());
        const auto rb = canonical_rank(b.stem().string());
        return ra != rb ? ra < rb : a.stem().string() < b.stem().string();
    });

    CollectionRegistry registry;
    std::map<Side, int> next_priority;
    for (const auto& file : files) {
        const std::string name = file.stem().string();
        Side side;
        if (name.ends_with("-S")) {
            side = Side::Science;
        } else if (name.ends_with("-T")) {
            side = Side::Technology;
        } else {
            throw DataError("collection file name must end in -S or -T: " + file.string());
        }

        Collection c;
        c.name = name;
        c.side = side;
        c.priority = next_priority[side]++;

        std::ifstream in(file);
        if (!in) throw DataError("cannot read collection file: " + file.string());
        std::string line;
        while (std::getline(in, line)) {
            const auto t = trim(line);
            if (t.empty() || t.front() == '#') continue;
            if (side == Side::Science) {
                if (auto id = make_journal_id(t)) c.members.insert(std::move(*id));
            } else {
                if (auto id = make_patent_id(t)) c.members.insert(std::move(*id));
            }
        }
        registry.add(std::move(c));
    }
    return registry;
}

OverlapMatrix overlap_matrix(const CollectionRegistry& registry, Side side) {
    const auto& list = registry.side(side);
    OverlapMatrix m;
    m.names.reserve(list.size());
    for (const auto& c : list) m.names.push_back(c.name);
    m.counts.assign(list.size(), std::vector<std::size_t>(list.size(), 0));
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            const auto& small = list[i].members.size() <= list[j].members.size()
                                    ? list[i].members
                                    : list[j].members;
            const auto& large = &small == &list[i].members ? list[j].members : list[i].members;
            std::size_t n = 0;
            for (const auto& id : small) n += large.contains(id) ? 1 : 0;
            m.counts[i][j] = m.counts[j][i] = n;
        }
    }
    return m;
}

}  // namespace citegraph
