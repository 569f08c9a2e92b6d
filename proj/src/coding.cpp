#include "hexa/coding.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace hexa::coding {

int type_of(Z2 y) {
    int v = std::min(v2(y.a), v2(y.b));
    if (v >= 64) return -1;
    int ba = digit(y.a, v), bb = digit(y.b, v);
    if (ba == 0) return 0;
    return bb == 1 ? 1 : 2;
}

int blue_bit(Z2 y, int l) {
    Z2 r = rot(y, -l);
    return digit(r.b, v2(r.a));
}

int red_bit(Z2 y, int l, RedCoding rc) {
    if (rc == RedCoding::none) return 0;
    Z2 r = rot(y, -l);
    int g = v2(r.a + 2 * r.b);
    return digit(rc == RedCoding::taylor ? r.b : 3 * r.b, g);
}

Spec spec_for(const std::string& system) {
    if (system == "halfhex") return {system, false, RedCoding::none};
    if (system == "arrowed") return {system, true, RedCoding::none};
    if (system == "taylor") return {system, true, RedCoding::taylor};
    if (system == "penrose") return {system, true, RedCoding::penrose};
    throw std::invalid_argument("unknown system: " + system);
}

namespace {

struct Coder {
    Spec spec;

    std::uint64_t feats(Z2 y) const {
        std::uint64_t f = 0;
        for (int l = 0; l < 3; ++l) {
            f = (f << 1) | static_cast<std::uint64_t>(spec.blue ? blue_bit(y, l) : 0);
            f = (f << 1) | static_cast<std::uint64_t>(red_bit(y, l, spec.red));
        }
        return f;
    }

    // decorations on the radius-1 ball plus the type of the centre
    std::uint64_t state(Z2 y) const {
        int t = type_of(y);
        if (t < 0) throw std::runtime_error("coding: point without type");
        std::uint64_t s = static_cast<std::uint64_t>(t);
        for (Point o : kChild) s = (s << 6) | feats(y + lift(o));
        return s;
    }

    Deco output(Z2 y) const {
        Deco d;
        d.l = type_of(y);
        if (spec.blue) d.beta = blue_bit(y, d.l);
        d.rho = red_bit(y, d.l, spec.red);
        return d;
    }
};

Z2 child_point(Z2 y, int i) { return Z2{2 * y.a, 2 * y.b} + lift(kChild[i]); }

}  // namespace

Automaton build_automaton(const Spec& spec, std::uint64_t seed, int samples) {
    Coder coder{spec};
    std::mt19937_64 rng(seed);

    std::unordered_map<std::uint64_t, int> index;
    std::vector<Z2> rep;
    std::vector<Deco> out;
    std::vector<std::array<int, 7>> trans;
    std::vector<Z2> todo;

    auto intern = [&](Z2 y) {
        std::uint64_t s = coder.state(y);
        auto [it, fresh] = index.emplace(s, static_cast<int>(rep.size()));
        if (fresh) {
            rep.push_back(y);
            out.push_back(coder.output(y));
            trans.push_back({-1, -1, -1, -1, -1, -1, -1});
            todo.push_back(y);
        }
        return it->second;
    };

    for (int n = 0; n < samples; ++n) {
        Z2 y{rng(), rng()};
        for (int r = 0; r < 6; ++r) {
            intern(rot(y, r));
            intern(rot(mirror(y), r));
        }
    }
    // closure under children and under the D6 action on representatives
    while (!todo.empty()) {
        Z2 y = todo.back();
        todo.pop_back();
        int q = index.at(coder.state(y));
        for (int i = 0; i < 7; ++i) {
            int c = intern(child_point(y, i));
            if (trans[q][i] >= 0 && trans[q][i] != c)
                throw std::runtime_error("coding: nondeterministic transition");
            trans[q][i] = c;
        }
        intern(rot60(y));
        intern(mirror(y));
    }

    // Moore refinement starting from the output partition
    const std::size_t n = rep.size();
    std::vector<int> cls(n);
    {
        std::map<Deco, int> ids;
        for (std::size_t q = 0; q < n; ++q) cls[q] = ids.emplace(out[q], static_cast<int>(ids.size())).first->second;
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::array<int, 8>, int> ids;
        std::vector<int> next(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::array<int, 8> sig{};
            sig[0] = cls[q];
            for (int i = 0; i < 7; ++i) sig[i + 1] = cls[trans[q][i]];
            next[q] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
        }
        cls.swap(next);
        if (ids.size() == count) break;
        count = ids.size();
    }

    Automaton a;
    a.output.assign(count, {});
    a.child.assign(count, {});
    a.rotate.assign(count, -1);
    a.reflect.assign(count, -1);
    auto set_once = [](int& slot, int v, const char* what) {
        if (slot >= 0 && slot != v) throw std::runtime_error(std::string("coding: ") + what + " not a function on classes");
        slot = v;
    };
    for (std::size_t q = 0; q < n; ++q) {
        int c = cls[q];
        a.output[c] = out[q];
        for (int i = 0; i < 7; ++i) a.child[c][i] = cls[trans[q][i]];
        set_once(a.rotate[c], cls[index.at(coder.state(rot60(rep[q])))], "rotation");
        set_once(a.reflect[c], cls[index.at(coder.state(mirror(rep[q])))], "reflection");
    }
    return a;
}

}  // namespace hexa::coding
