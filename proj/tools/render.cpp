#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

#include "hexa/derive.hpp"
#include "hexa/system.hpp"

namespace hexa::render {

namespace {

const double kSqrt3 = std::sqrt(3.0);

const System* system_of(const std::string& name) {
    for (const auto& n : kSystemNames)
        if (n == name) return &load_system(name);
    return nullptr;
}

std::string label_key(const std::string& system, int l) {
    if (const System* s = system_of(system)) return s->label_name(l);
    return std::to_string(l);
}

int label_count(const std::string& system) {
    if (const System* s = system_of(system)) return s->size();
    if (system == kParity) return 2;
    if (system == kLlama) return 12;
    return 0;
}

struct Deco {
    int orientation = -1;  // arrow direction, -1 none
    int diagonal = -1;     // corners diagonal and diagonal + 3
    int chirality = -1;
};

Deco decoration(const std::string& system, int l) {
    Deco d;
    if (const System* s = system_of(system)) {
        const auto& t = s->alphabet.at(l);
        d.diagonal = s->halfhex[l];
        if (system != "halfhex") d.orientation = t.orientation;
        if (s->chiral) d.chirality = t.chirality;
    } else if (system == kLlama) {
        d.orientation = l / 2;
        d.diagonal = d.orientation % 3;
        d.chirality = l % 2;
    }
    return d;
}

std::string hsl(int hue, int sat, int light) {
    return "hsl(" + std::to_string(hue) + "," + std::to_string(sat) + "%," + std::to_string(light) + "%)";
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct XY {
    double x, y;
};

// y grows downwards in SVG
XY centre_of(Point p) { return {1.5 * static_cast<double>(p.a), -kSqrt3 * (0.5 * static_cast<double>(p.a) + static_cast<double>(p.b))}; }
XY corner(XY c, int k, double r = 1) {
    double t = M_PI / 3 * k;
    return {c.x + r * std::cos(t), c.y - r * std::sin(t)};
}

}  // namespace

RenderSpec default_spec(const std::string& system) {
    RenderSpec s;
    if (system == kParity) {
        s.fill = {{0, "#ffffff"}, {1, "#9a9a9a"}};
        return s;
    }
    if (system == kLlama) {
        for (int l = 0; l < 12; ++l) s.fill[l] = hsl(60 * (l / 2), 55, l % 2 ? 45 : 75);
        return s;
    }
    if (const System* sys = system_of(system)) {
        int bases = static_cast<int>(sys->base_names.size());
        for (int l = 0; l < sys->size(); ++l) {
            const auto& t = sys->alphabet[l];
            int hue = bases > 1 ? 360 * t.base / bases : 120 * sys->halfhex[l];
            s.fill[l] = hsl(hue, 55, sys->chiral && t.chirality ? 45 : 75);
        }
    }
    return s;
}

RenderSpec spec_from_json(const nlohmann::json& j, const std::string& system) {
    if (!j.is_object()) throw std::invalid_argument("style: expected an object");
    RenderSpec s = j.contains("fill") ? RenderSpec{} : default_spec(system);
    if (j.contains("scale")) s.scale = j.at("scale").get<double>();
    if (!(s.scale > 0)) throw std::invalid_argument("style: scale must be positive");
    s.arrows = j.value("arrows", s.arrows);
    s.diagonals = j.value("diagonals", s.diagonals);
    s.markers = j.value("markers", s.markers);
    if (j.contains("viewport")) s.viewport = j.at("viewport").get<std::array<double, 4>>();
    if (j.contains("fill")) {
        int n = label_count(system);
        for (const auto& [k, v] : j.at("fill").items()) {
            int l = -1;
            for (int i = 0; i < n && l < 0; ++i)
                if (label_key(system, i) == k) l = i;
            if (l < 0) {
                std::size_t used = 0;
                try {
                    l = std::stoi(k, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != k.size()) throw std::invalid_argument("style: unknown label '" + k + "'");
            }
            s.fill[l] = v.get<std::string>();
        }
    }
    return s;
}

std::string render(const Patch& patch, const RenderSpec& spec) {
    auto pts = patch.sorted_points();
    for (Point p : pts)
        if (!spec.fill.count(patch.at(p)))
            throw MissingStyle("no style for label " + label_key(patch.system, patch.at(p)));

    double x0, y0, w, h;
    if (spec.viewport) {
        std::tie(x0, y0, w, h) = std::tuple((*spec.viewport)[0], (*spec.viewport)[1], (*spec.viewport)[2], (*spec.viewport)[3]);
    } else if (pts.empty()) {
        x0 = y0 = 0;
        w = h = 1;
    } else {
        double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
        for (Point p : pts) {
            XY c = centre_of(p);
            lo_x = std::min(lo_x, c.x - 1);
            hi_x = std::max(hi_x, c.x + 1);
            lo_y = std::min(lo_y, c.y - kSqrt3 / 2);
            hi_y = std::max(hi_y, c.y + kSqrt3 / 2);
        }
        x0 = lo_x - 0.5;
        y0 = lo_y - 0.5;
        w = hi_x - lo_x + 1;
        h = hi_y - lo_y + 1;
    }
    const double k = spec.scale;
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w * k) << "\" height=\""
      << num(h * k) << "\" viewBox=\"" << num(x0 * k) << " " << num(y0 * k) << " " << num(w * k) << " "
      << num(h * k) << "\">\n";
    o << "<g stroke=\"#000000\" stroke-width=\"" << num(0.04 * k) << "\" stroke-linejoin=\"round\">\n";
    for (Point p : pts) {
        XY c = centre_of(p);
        o << "<polygon points=\"";
        for (int i = 0; i < 6; ++i) {
            XY q = corner(c, i);
            o << (i ? " " : "") << num(q.x * k) << "," << num(q.y * k);
        }
        o << "\" fill=\"" << spec.fill.at(patch.at(p)) << "\"/>\n";
    }
    o << "</g>\n";
    o << "<g stroke-linecap=\"round\">\n";
    for (Point p : pts) {
        Deco d = decoration(patch.system, patch.at(p));
        XY c = centre_of(p);
        if (spec.diagonals && d.diagonal >= 0) {
            XY a = corner(c, d.diagonal), b = corner(c, d.diagonal + 3);
            o << "<line x1=\"" << num(a.x * k) << "\" y1=\"" << num(a.y * k) << "\" x2=\"" << num(b.x * k)
              << "\" y2=\"" << num(b.y * k) << "\" stroke=\"#c0392b\" stroke-width=\"" << num(0.06 * k) << "\"/>\n";
        }
        if (spec.arrows && d.orientation >= 0) {
            XY tip = corner(c, d.orientation, 0.8), tail = corner(c, d.orientation + 3, 0.6);
            XY l = corner(tip, d.orientation + 2, 0.25), r = corner(tip, d.orientation + 4, 0.25);
            o << "<path d=\"M" << num(tail.x * k) << "," << num(tail.y * k) << " L" << num(tip.x * k) << ","
              << num(tip.y * k) << " M" << num(l.x * k) << "," << num(l.y * k) << " L" << num(tip.x * k) << ","
              << num(tip.y * k) << " L" << num(r.x * k) << "," << num(r.y * k)
              << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << num(0.08 * k) << "\"/>\n";
        }
        if (spec.markers && d.chirality >= 0) {
            o << "<circle cx=\"" << num(c.x * k) << "\" cy=\"" << num(c.y * k) << "\" r=\"" << num(0.12 * k)
              << "\" fill=\"" << (d.chirality ? "#000000" : "#ffffff") << "\" stroke=\"#000000\" stroke-width=\""
              << num(0.03 * k) << "\"/>\n";
        }
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace hexa::render
