#include "citegraph/region_gazetteer.hpp"

#include <cctype>
#include <unordered_map>

#include "citegraph/util.hpp"

namespace citegraph {

namespace {

const std::unordered_map<std::string, std::string>& gazetteer() {
    static const std::unordered_map<std::string, std::string> table = {
        {"peoples r china", "CN"}, {"china", "CN"}, {"pr china", "CN"},
        {"taiwan", "TW"}, {"hong kong", "HK"}, {"macau", "MO"},
        {"usa", "US"}, {"united states", "US"}, {"united states of america", "US"},
        {"south korea", "KR"}, {"korea", "KR"}, {"republic of korea", "KR"},
        {"north korea", "KP"},
        {"japan", "JP"}, {"india", "IN"}, {"iran", "IR"},
        {"singapore", "SG"}, {"malaysia", "MY"}, {"thailand", "TH"},
        {"vietnam", "VN"}, {"indonesia", "ID"}, {"philippines", "PH"},
        {"australia", "AU"}, {"new zealand", "NZ"},
        {"england", "GB"}, {"scotland", "GB"}, {"wales", "GB"},
        {"north ireland", "GB"}, {"northern ireland", "GB"},
        {"united kingdom", "GB"}, {"uk", "GB"},
        {"germany", "DE"}, {"france", "FR"}, {"italy", "IT"}, {"spain", "ES"},
        {"portugal", "PT"}, {"netherlands", "NL"}, {"belgium", "BE"},
        {"switzerland", "CH"}, {"austria", "AT"}, {"sweden", "SE"},
        {"norway", "NO"}, {"denmark", "DK"}, {"finland", "FI"},
        {"ireland", "IE"}, {"poland", "PL"}, {"czech republic", "CZ"},
        {"czechia", "CZ"}, {"slovakia", "SK"}, {"hungary", "HU"},
        {"romania", "RO"}, {"bulgaria", "BG"}, {"greece", "GR"},
        {"turkey", "TR"}, {"russia", "RU"}, {"ukraine", "UA"},
        {"israel", "IL"}, {"saudi arabia", "SA"}, {"united arab emirates", "AE"},
        {"egypt", "EG"}, {"south africa", "ZA"}, {"nigeria", "NG"},
        {"brazil", "BR"}, {"argentina", "AR"}, {"chile", "CL"},
        {"mexico", "MX"}, {"colombia", "CO"}, {"canada", "CA"},
        {"pakistan", "PK"}, {"bangladesh", "BD"}, {"sri lanka", "LK"},
        {"europe", "EP"}, {"european patent office", "EP"},
        {"wipo", "WO"}, {"world intellectual property organization", "WO"},
    };
    return table;
}

std::string clean_token(std::string_view token) {
    std::string s;
    s.reserve(token.size());
    for (char c : token) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || std::isspace(u)) s.push_back(static_cast<char>(std::tolower(u)));
    }
    // Drop leading zip-code fragments such as "637371 Singapore".
    std::string out = collapse_spaces(s);
    while (!out.empty() && std::isdigit(static_cast<unsigned char>(out.front()))) {
        const size_t sp = out.find(' ');
        if (sp == std::string::npos) return {};
        out.erase(0, sp + 1);
    }
    return out;
}

}  // namespace

std::string region_from_country_name(std::string_view name) {
    const std::string key = clean_token(name);
    if (key.empty()) return std::string(kUnknownRegion);
    auto it = gazetteer().find(key);
    if (it != gazetteer().end()) return it->second;
    return std::string(kUnknownRegion);
}

std::string region_from_affiliation(std::string_view raw_affiliation) {
    const std::string_view raw = trim(raw_affiliation);
    if (raw.empty()) return std::string(kUnknownRegion);
    const size_t comma = raw.rfind(',');
    const std::string_view last =
        comma == std::string_view::npos ? raw : raw.substr(comma + 1);
    return region_from_country_name(last);
}

}  // namespace citegraph
