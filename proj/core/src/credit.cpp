#include "citegraph/credit.hpp"

#include <algorithm>
#include <unordered_map>

#include "citegraph/errors.hpp"
#include "citegraph/region_gazetteer.hpp"

namespace citegraph {

CreditVector author_credit(const JournalRecord& paper, const CitationGraph& graph,
                           const Corpus& corpus) {
    if (paper.authors.empty()) {
        throw DataError("cannot allocate credit for authorless paper " + paper.id.value);
    }

    // Distinct normalized names; credit follows identity, not position.
    std::vector<std::string> names;
    for (const auto& a : paper.authors) {
        if (std::find(names.begin(), names.end(), a.name) == names.end()) {
            names.push_back(a.name);
        }
    }
    const std::size_t m = names.size();

    CreditVector out;
    out.paper = paper.id;

    const auto self = graph.node_of(paper.id);
    std::vector<CitationGraph::Node> citers;
    if (self) {
        for (const auto& e : graph.in(*self)) {
            if (e.kind == EdgeKind::PaperCitesPaper) citers.push_back(e.other);
        }
    }
    if (citers.empty()) {
        for (const auto& name : names) {
            out.shares.emplace_back(name, 1.0 / static_cast<double>(m));
        }
        return out;
    }

    // Co-cited strength: how many citers cite each member of the
    // co-cited set (the union of the citers' references; the target is
    // in it by construction).
    std::unordered_map<CitationGraph::Node, std::uint32_t> strength;
    for (const auto citer : citers) {
        for (const auto& e : graph.out(citer)) {
            if (e.kind == EdgeKind::PaperCitesPaper) ++strength[e.other];
        }
    }

    std::vector<double> weight(m, 0.0);
    for (const auto& [d, c_d] : strength) {
        const JournalRecord* rec = d == *self ? &paper : corpus.journal(graph.id_of(d));
        std::vector<std::size_t> coauthors;  // indexes of target authors on d
        if (rec) {
            for (std::size_t i = 0; i < m; ++i) {
                for (const auto& a : rec->authors) {
                    if (a.name == names[i]) {
                        coauthors.push_back(i);
                        break;
                    }
                }
            }
        }
        const double c = static_cast<double>(c_d);
        if (coauthors.empty()) {
            for (std::size_t i = 0; i < m; ++i) weight[i] += c / static_cast<double>(m);
        } else {
            for (const auto i : coauthors) {
                weight[i] += c / static_cast<double>(coauthors.size());
            }
        }
    }

    double total = 0.0;
    for (double w : weight) total += w;
    for (std::size_t i = 0; i < m; ++i) {
        const double share = total > 0.0 ? weight[i] / total : 1.0 / static_cast<double>(m);
        out.shares.emplace_back(names[i], share);
    }
    return out;
}

double RegionCredit::total() const {
    double t = 0.0;
    for (const auto& [region, years] : totals) {
        for (const auto& [year, v] : years) t += v;
    }
    return t;
}

double RegionCredit::total_for(const std::string& region) const {
    auto it = totals.find(region);
    if (it == totals.end()) return 0.0;
    double t = 0.0;
    for (const auto& [year, v] : it->second) t += v;
    return t;
}

RegionCredit region_credit(const Corpus& corpus, const std::vector<CreditVector>& credits,
                           YearWindow window) {
    RegionCredit out;
    for (const auto& credit : credits) {
        const JournalRecord* rec = corpus.journal(credit.paper);
        if (!rec || !window.contains(rec->year)) continue;
        ++out.papers_credited;
        for (const auto& [name, share] : credit.shares) {
            const Author* author = nullptr;
            for (const auto& a : rec->authors) {
                if (a.name == name) {
                    author = &a;
                    break;
                }
            }
            if (!author || author->affiliations.empty()) {
                out.totals[std::string(kUnknownRegion)][rec->year] += share;
                continue;
            }
            const double per_affiliation =
                share / static_cast<double>(author->affiliations.size());
            for (const auto& aff : author->affiliations) {
                out.totals[aff.region][rec->year] += per_affiliation;
            }
        }
    }
    return out;
}

}  // namespace citegraph
