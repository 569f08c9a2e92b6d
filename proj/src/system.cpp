#include "hexa/system.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hexa/coding.hpp"
#include "hexa/engine.hpp"

#ifndef HEXA_DATA_DIR
#define HEXA_DATA_DIR "data"
#endif

namespace hexa {

int System::act(D6 g, int label) const {
    if (g.reflected) label = reflect[label];
    for (int i = 0; i < g.rotation; ++i) label = rotate[label];
    return label;
}

int System::index_of(const TileLabel& t) const {
    for (int i = 0; i < size(); ++i)
        if (alphabet[i] == t) return i;
    return -1;
}

std::string System::label_name(int label) const {
    if (label < 0 || label >= size()) throw std::out_of_range("label index out of range");
    const auto& t = alphabet[label];
    std::string s = base_names[t.base] + ":" + std::to_string(t.orientation);
    if (chiral) s += t.chirality ? ":-" : ":+";
    return s;
}

int System::parse_label(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
        if (label_name(i) == s) return i;
    std::string msg = "unknown label '" + s + "' for " + name + "; valid labels:";
    for (int i = 0; i < size(); ++i) msg += " " + label_name(i);
    throw std::invalid_argument(msg);
}

std::vector<int> System::seeds() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (child[i][0] == i) out.push_back(i);
    return out;
}

std::vector<std::string> System::seed_names() const {
    std::vector<std::string> out;
    for (int s : seeds()) out.push_back(label_name(s));
    return out;
}

nlohmann::json to_json(const System& s) {
    using nlohmann::json;
    json alphabet = json::array();
    for (int i = 0; i < s.size(); ++i) {
        const auto& t = s.alphabet[i];
        alphabet.push_back({{"name", s.label_name(i)},
                            {"base", t.base},
                            {"orientation", t.orientation},
                            {"chirality", t.chirality}});
    }
    json rule = json::object();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < 7; ++j) row.push_back({kChild[j].a, kChild[j].b, s.label_name(s.child[i][j])});
        rule[s.label_name(i)] = row;
    }
    json sector = json::array();
    for (int j = 0; j < kSectorSize; ++j) sector.push_back(kChild[j]);
    json codes = json::array();
    for (const auto& c : s.edge_code) codes.push_back(c);
    return {{"name", s.name},
            {"chiral", s.chiral},
            {"base_names", s.base_names},
            {"preferred_base", s.preferred},
            {"alphabet", alphabet},
            {"pseudo_rule", rule},
            {"sector_positions", sector},
            {"d6", {{"rotation", s.rotate}, {"reflection", s.reflect}}},
            {"factors", {{"halfhex", s.halfhex}, {"arrowed", s.arrowed}, {"llama", s.llama}}},
            {"decoration", {{"edge_code", codes}}}};
}

System system_from_json(const nlohmann::json& j) {
    System s;
    s.name = j.at("name").get<std::string>();
    s.chiral = j.at("chiral").get<bool>();
    s.base_names = j.at("base_names").get<std::vector<std::string>>();
    s.preferred = j.at("preferred_base").get<int>();
    for (const auto& a : j.at("alphabet"))
        s.alphabet.push_back({a.at("base").get<int>(), a.at("orientation").get<int>(), a.at("chirality").get<int>()});
    s.orbit = static_cast<int>(s.alphabet.size() / s.base_names.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < s.size(); ++i) idx[s.label_name(i)] = i;
    const auto& rule = j.at("pseudo_rule");
    s.child.resize(s.size());
    for (int i = 0; i < s.size(); ++i) {
        const auto& row = rule.at(s.label_name(i));
        if (row.size() != 7) throw std::invalid_argument("pseudo_rule row must have 7 entries");
        for (int k = 0; k < 7; ++k) {
            Point off{row[k][0].get<std::int64_t>(), row[k][1].get<std::int64_t>()};
            int ci = child_index(off);
            if (ci < 0) throw std::invalid_argument("pseudo_rule offset outside the 7-cell supertile");
            auto it = idx.find(row[k][2].get<std::string>());
            if (it == idx.end()) throw std::invalid_argument("pseudo_rule names unknown label " + row[k][2].get<std::string>());
            s.child[i][ci] = it->second;
        }
    }
    auto sector = j.at("sector_positions").get<std::vector<Point>>();
    for (int k = 0; k < kSectorSize; ++k)
        if (sector.at(k) != kChild[k]) throw std::invalid_argument("unsupported sector positions");
    s.rotate = j.at("d6").at("rotation").get<std::vector<int>>();
    s.reflect = j.at("d6").at("reflection").get<std::vector<int>>();
    s.halfhex = j.at("factors").at("halfhex").get<std::vector<int>>();
    s.arrowed = j.at("factors").at("arrowed").get<std::vector<int>>();
    s.llama = j.at("factors").at("llama").get<std::vector<int>>();
    for (const auto& c : j.at("decoration").at("edge_code")) s.edge_code.push_back(c.get<std::array<int, 6>>());
    return s;
}

namespace {

std::vector<std::string> base_names_for(const std::string& name, int bases) {
    if (name == "halfhex") return {"h"};
    if (name == "arrowed") return {"a"};
    std::vector<std::string> out;
    if (name == "taylor") {
        // discovery order from the self-reproducing type, which is called C
        const std::string letters = "CABDEFG";
        for (int i = 0; i < bases; ++i) out.emplace_back(1, letters.at(i));
    } else {
        for (int i = 0; i < bases; ++i) out.push_back(std::to_string(i + 1));
    }
    return out;
}

void assign_edge_codes(System& s) {
    auto pairs = legal_pairs(s, 6);
    s.edge_code.assign(s.size(), {-1, -1, -1, -1, -1, -1});
    for (int k = 0; k < 3; ++k) {
        // bipartite components: node l is the left side, n + l the right side
        const int n = s.size();
        std::vector<int> parent(2 * n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [l, r, d] : pairs)
            if (d == k) parent[find(l)] = find(n + r);
        std::map<int, int> ids;
        for (int x = 0; x < 2 * n; ++x) {
            int id = ids.emplace(find(x), static_cast<int>(ids.size())).first->second;
            if (x < n)
                s.edge_code[x][k] = id;
            else
                s.edge_code[x - n][k + 3] = id;
        }
    }
}

}  // namespace

System generate_system(const std::string& name) {
    auto spec = coding::spec_for(name);
    auto aut = coding::build_automaton(spec);
    const int n = static_cast<int>(aut.output.size());
    const bool chiral = spec.red != coding::RedCoding::none;

    std::vector<int> ori(n), chi(n);
    for (int c = 0; c < n; ++c) {
        const auto& d = aut.output[c];
        ori[c] = spec.blue ? d.l + 3 * (1 - d.beta) : d.l;
        chi[c] = chiral ? (d.beta ^ d.rho) : 0;
    }

    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int x) {
        while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
        return x;
    };
    for (int c = 0; c < n; ++c) {
        orbit[find(c)] = find(aut.rotate[c]);
        orbit[find(c)] = find(aut.reflect[c]);
    }
    std::map<int, int> rep;  // orbit root -> class with orientation 0, chirality 0
    for (int c = 0; c < n; ++c)
        if (ori[c] == 0 && chi[c] == 0 && !rep.emplace(find(c), c).second)
            throw std::runtime_error("generate_system: orbit representative not unique");

    int seed_root = -1;
    for (int c = 0; c < n; ++c)
        if (aut.child[c][0] == c) {
            if (seed_root >= 0 && seed_root != find(c)) throw std::runtime_error("generate_system: seeds in several orbits");
            seed_root = find(c);
        }

    std::map<int, int> base_of;
    std::queue<int> todo;
    base_of[seed_root] = 0;
    todo.push(rep.at(seed_root));
    while (!todo.empty()) {
        int c = todo.front();
        todo.pop();
        for (int j = 0; j < 7; ++j) {
            int root = find(aut.child[c][j]);
            if (base_of.emplace(root, static_cast<int>(base_of.size())).second) todo.push(rep.at(root));
        }
    }
    const int bases = static_cast<int>(base_of.size());
    if (n % bases) throw std::runtime_error("generate_system: orbits of unequal size");
    const int per = n / bases;

    System s;
    s.name = name;
    s.chiral = chiral;
    s.orbit = per;
    s.preferred = name == "taylor" ? 2 : 0;
    s.base_names = base_names_for(name, bases);
    auto base_index = [&](int k) {
        // letters for Taylor are assigned so that the preferred type is C
        if (name != "taylor") return k;
        const std::string letters = "CABDEFG";
        return letters.at(k) - 'A';
    };
    if (name == "taylor") {
        std::vector<std::string> sorted(bases);
        for (int k = 0; k < bases; ++k) sorted[base_index(k)] = s.base_names[k];
        s.base_names = sorted;
    }

    std::vector<int> idx(n, -1);
    std::vector<int> cls_of(n, -1);
    for (int c = 0; c < n; ++c) {
        int b = base_index(base_of.at(find(c)));
        int within = chiral ? llama_index(ori[c], chi[c]) : ori[c];
        int i = b * per + within;
        if (within >= per || cls_of[i] >= 0) throw std::runtime_error("generate_system: label collision");
        idx[c] = i;
        cls_of[i] = c;
    }
    s.alphabet.resize(n);
    s.child.resize(n);
    s.rotate.resize(n);
    s.reflect.resize(n);
    s.halfhex.resize(n);
    s.arrowed.resize(n);
    s.llama.resize(n);
    for (int i = 0; i < n; ++i) {
        int c = cls_of[i];
        s.alphabet[i] = {i / per, ori[c], chi[c]};
        for (int j = 0; j < 7; ++j) s.child[i][j] = idx[aut.child[c][j]];
        s.rotate[i] = idx[aut.rotate[c]];
        s.reflect[i] = idx[aut.reflect[c]];
        s.halfhex[i] = aut.output[c].l;
        s.arrowed[i] = spec.blue ? ori[c] : -1;
        s.llama[i] = chiral ? llama_index(ori[c], chi[c]) : -1;
    }
    assign_edge_codes(s);
    return s;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("HEXA_DATA")) return env;
    return HEXA_DATA_DIR;
}

System load_system_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open rule table " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed rule table " + file.string() + ": " + e.what());
    }
    return system_from_json(j);
}

const System& load_system(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, System> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    bool known = false;
    for (const auto& n : kSystemNames) known = known || n == name;
    if (!known) throw std::invalid_argument("unknown system: " + name);
    return cache.emplace(name, load_system_file(data_dir() / (name + ".json"))).first->second;
}

}  // namespace hexa
