#include "stokescluster/polygon.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

#include "stokescluster/error.hpp"

namespace sc {

namespace {

bool is_perimeter_pair(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return v - u == 1 || v - u == n - 1;
}

// Normalized diagonals cross iff exactly one endpoint of one lies strictly
// between the endpoints of the other.
bool diagonals_cross(const std::pair<int, int>& d, const std::pair<int, int>& e) {
    if (d.first == e.first || d.first == e.second || d.second == e.first ||
        d.second == e.second)
        return false;
    auto inside = [&](int w) { return d.first < w && w < d.second; };
    return inside(e.first) != inside(e.second);
}

std::string generation_name(const std::string& base, int generation) {
    if (generation == 0) return base;
    return base + "_t" + std::to_string(generation);
}

} // namespace

std::string Triangulation::label_name(int slot) const {
    if (slot == 1) return boundary_base;
    const DiagonalData& d = diagonal(slot);
    return generation_name(d.base, d.generation);
}

VarId Triangulation::label_var(int slot) const {
    return VarRegistry::instance().intern(label_name(slot));
}

VarId Triangulation::boundary_var() const {
    return VarRegistry::instance().intern(boundary_base);
}

const Triangulation::DiagonalData& Triangulation::diagonal(int slot) const {
    for (const auto& d : diagonals)
        if (d.slot == slot) return d;
    throw NotADiagonal("no slot " + std::to_string(slot));
}

std::optional<int> Triangulation::slot_of(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& d : diagonals)
        if (d.a == a && d.b == b) return d.slot;
    return std::nullopt;
}

bool Triangulation::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a == b) return false;
    if (is_perimeter_pair(a, b, side_count())) return true;
    return slot_of(a, b).has_value();
}

std::vector<int> Triangulation::slots_at(int vertex) const {
    std::vector<int> out;
    for (const auto& d : diagonals)
        if (d.a == vertex || d.b == vertex) out.push_back(d.slot);
    std::sort(out.begin(), out.end());
    return out;
}

void Triangulation::validate() const {
    if (K < 1) throw Error("triangulation: K must be positive");
    const int n = side_count();
    if (static_cast<int>(diagonals.size()) != 2 * K - 1)
        throw Error("triangulation: expected " + std::to_string(2 * K - 1) + " diagonals");
    std::vector<int> slots;
    for (const auto& d : diagonals) {
        if (!(1 <= d.a && d.a < d.b && d.b <= n))
            throw NotADiagonal("endpoints out of range");
        if (is_perimeter_pair(d.a, d.b, n))
            throw NotADiagonal("perimeter side used as diagonal");
        if (d.slot < 2 || d.slot > 2 * K)
            throw Error("triangulation: slot out of range");
        slots.push_back(d.slot);
        std::pair<int, int> o = d.orientation;
        bool forward = o.first == d.a && o.second == d.b;
        bool backward = o.first == d.b && o.second == d.a;
        if (!forward && !backward)
            throw OrientationInvalid("orientation endpoints mismatch");
        if (d.base.empty()) throw Error("triangulation: empty label");
    }
    std::sort(slots.begin(), slots.end());
    for (int i = 0; i < static_cast<int>(slots.size()); ++i)
        if (slots[i] != i + 2)
            throw Error("triangulation: slots must cover 2..2K once each");
    for (size_t i = 0; i < diagonals.size(); ++i)
        for (size_t j = i + 1; j < diagonals.size(); ++j) {
            const auto& p = diagonals[i];
            const auto& q = diagonals[j];
            if (p.a == q.a && p.b == q.b)
                throw Error("triangulation: repeated diagonal");
            if (diagonals_cross({p.a, p.b}, {q.a, q.b}))
                throw Error("triangulation: crossing diagonals");
        }
}

Triangulation fan_triangulation(int K) {
    Triangulation t;
    t.K = K;
    const int apex = 2 * K + 2;
    for (int j = 2; j <= 2 * K; ++j) {
        Triangulation::DiagonalData d;
        d.a = j;
        d.b = apex;
        d.slot = j;
        d.base = "y" + std::to_string(j);
        d.generation = 0;
        d.orientation = (j % 2 == 0) ? std::make_pair(apex, j) : std::make_pair(j, apex);
        t.diagonals.push_back(d);
    }
    t.validate();
    return t;
}

Triangulation make_triangulation(int K, const std::vector<std::array<int, 3>>& diags) {
    Triangulation t;
    t.K = K;
    for (const auto& row : diags) {
        Triangulation::DiagonalData d;
        d.a = std::min(row[0], row[1]);
        d.b = std::max(row[0], row[1]);
        d.slot = row[2];
        d.base = "y" + std::to_string(d.slot);
        d.generation = 0;
        d.orientation = {d.a, d.b};
        t.diagonals.push_back(d);
    }
    std::sort(t.diagonals.begin(), t.diagonals.end(),
              [](const auto& p, const auto& q) { return p.slot < q.slot; });
    t.validate();
    return t;
}

std::vector<std::array<int, 3>> triangles_of(const Triangulation& t) {
    // In a maximal non-crossing set, a triple with all three edges present is
    // always a face.
    const int n = t.side_count();
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (!t.has_edge(a, b)) continue;
            for (int c = b + 1; c <= n; ++c)
                if (t.has_edge(b, c) && t.has_edge(a, c))
                    out.push_back({a, b, c});
        }
    return out;
}

namespace {

// Sorted corners of the quadrilateral obtained by removing the slot diagonal.
std::array<int, 4> flip_quad(const Triangulation& t, int slot) {
    const auto& d = t.diagonal(slot);
    std::vector<int> apexes;
    for (int w = 1; w <= t.side_count(); ++w) {
        if (w == d.a || w == d.b) continue;
        if (t.has_edge(d.a, w) && t.has_edge(d.b, w)) apexes.push_back(w);
    }
    if (apexes.size() != 2)
        throw Error("triangulation: diagonal not shared by two triangles");
    std::array<int, 4> quad{d.a, d.b, apexes[0], apexes[1]};
    std::sort(quad.begin(), quad.end());
    return quad;
}

} // namespace

Triangulation flip(const Triangulation& t, int slot) {
    if (slot < 2 || slot > 2 * t.K)
        throw NotADiagonal("slot " + std::to_string(slot) + " is not a diagonal slot");
    std::array<int, 4> quad = flip_quad(t, slot);
    const auto& old = t.diagonal(slot);
    std::vector<int> other;
    for (int w : quad)
        if (w != old.a && w != old.b) other.push_back(w);
    Triangulation r = t;
    for (auto& d : r.diagonals)
        if (d.slot == slot) {
            d.a = std::min(other[0], other[1]);
            d.b = std::max(other[0], other[1]);
            d.generation += 1;
            d.orientation = {d.a, d.b};
        }
    r.validate();
    return r;
}

int classify_flip(const Triangulation& t, int slot) {
    if (slot < 2 || slot > 2 * t.K)
        throw NotADiagonal("slot " + std::to_string(slot) + " is not a diagonal slot");
    std::array<int, 4> quad = flip_quad(t, slot);
    int perimeter = 0;
    for (int i = 0; i < 4; ++i)
        if (is_perimeter_pair(quad[i], quad[(i + 1) % 4], t.side_count())) ++perimeter;
    return 4 - perimeter;
}

Quiver quiver_of(const Triangulation& t) {
    Quiver q(2 * t.K);
    auto carrier = [&](int u, int v) -> int {
        if (u > v) std::swap(u, v);
        if (u == 1 && v == 2) return 1;
        auto s = t.slot_of(u, v);
        return s ? *s : 0;
    };
    for (const auto& tri : triangles_of(t)) {
        // Counterclockwise boundary of a face listed with increasing corners.
        std::array<std::pair<int, int>, 3> edges{
            std::make_pair(tri[0], tri[1]), std::make_pair(tri[1], tri[2]),
            std::make_pair(tri[2], tri[0])};
        for (int i = 0; i < 3; ++i) {
            int ce = carrier(edges[i].first, edges[i].second);
            int cf = carrier(edges[(i + 1) % 3].first, edges[(i + 1) % 3].second);
            if (ce > 0 && cf > 0) q.add_arrow(cf - 1, ce - 1);
        }
    }
    for (int j = 1; j < 2 * t.K; ++j) {
        q.set(0, j, -q.at(0, j));
    }
    return q;
}

std::vector<RationalFunction> x_variables(const Triangulation& t) {
    const int n = t.side_count();
    auto yvar = [&](int slot) { return RationalFunction::variable(t.label_var(slot)); };
    std::vector<RationalFunction> xs;
    xs.reserve(n);
    RationalFunction running = RationalFunction::variable(t.boundary_var());
    xs.push_back(running);
    for (int l = 2; l <= n - 1; ++l) {
        for (int slot : t.slots_at(l)) {
            if (l % 2 == 0)
                running = running / yvar(slot);
            else
                running = running * yvar(slot);
        }
        xs.push_back(running);
    }
    RationalFunction last = RationalFunction::variable(t.boundary_var());
    for (int slot : t.slots_at(1)) last = last / yvar(slot);
    xs.push_back(last);
    return xs;
}

std::string triangulation_to_json(const Triangulation& t) {
    using nlohmann::ordered_json;
    std::vector<const Triangulation::DiagonalData*> order;
    for (const auto& d : t.diagonals) order.push_back(&d);
    std::sort(order.begin(), order.end(), [](const auto* p, const auto* q) {
        return std::make_pair(p->a, p->b) < std::make_pair(q->a, q->b);
    });
    ordered_json j;
    j["K"] = t.K;
    ordered_json diags = ordered_json::array();
    ordered_json labels = ordered_json::object();
    ordered_json orients = ordered_json::object();
    for (const auto* d : order) {
        diags.push_back({d->a, d->b});
        std::string key = std::to_string(d->a) + "-" + std::to_string(d->b);
        labels[key] = generation_name(d->base, d->generation);
        orients[key] = {d->orientation.first, d->orientation.second};
    }
    j["diagonals"] = diags;
    j["labels"] = labels;
    j["orientations"] = orients;
    j["distinguished_edge"] = {1, 2};
    return j.dump(2);
}

namespace {

// Slot index is the first run of digits in the label; the generation is a
// trailing "_t<k>" suffix.
void parse_label(const std::string& name, int& slot, std::string& base, int& generation) {
    size_t i = 0;
    while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (i == name.size())
        throw Error("triangulation: label '" + name + "' has no slot digits");
    slot = std::stoi(name.substr(i, j - i));
    base = name;
    generation = 0;
    size_t tpos = name.rfind("_t");
    if (tpos != std::string::npos && tpos + 2 < name.size()) {
        bool digits = true;
        for (size_t k = tpos + 2; k < name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
        if (digits) {
            base = name.substr(0, tpos);
            generation = std::stoi(name.substr(tpos + 2));
        }
    }
}

} // namespace

Triangulation triangulation_from_json(const std::string& text) {
    using nlohmann::ordered_json;
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("triangulation: bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("K") || !j.contains("diagonals") ||
        !j.contains("labels") || !j.contains("orientations"))
        throw Error("triangulation: missing required fields");
    Triangulation t;
    t.K = j["K"].get<int>();
    if (j.contains("distinguished_edge")) {
        auto e = j["distinguished_edge"].get<std::vector<int>>();
        if (e != std::vector<int>{1, 2})
            throw Error("triangulation: distinguished edge must be [1, 2]");
    }
    for (const auto& row : j["diagonals"]) {
        auto ends = row.get<std::vector<int>>();
        if (ends.size() != 2) throw Error("triangulation: diagonal needs two endpoints");
        Triangulation::DiagonalData d;
        d.a = std::min(ends[0], ends[1]);
        d.b = std::max(ends[0], ends[1]);
        std::string key = std::to_string(d.a) + "-" + std::to_string(d.b);
        if (!j["labels"].contains(key))
            throw Error("triangulation: missing label for " + key);
        parse_label(j["labels"][key].get<std::string>(), d.slot, d.base, d.generation);
        if (!j["orientations"].contains(key))
            throw Error("triangulation: missing orientation for " + key);
        auto o = j["orientations"][key].get<std::vector<int>>();
        if (o.size() != 2) throw OrientationInvalid("orientation needs two endpoints");
        d.orientation = {o[0], o[1]};
        t.diagonals.push_back(d);
    }
    std::sort(t.diagonals.begin(), t.diagonals.end(),
              [](const auto& p, const auto& q) { return p.slot < q.slot; });
    t.validate();
    return t;
}

} // namespace sc
